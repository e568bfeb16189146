// Copyright 2026 The gt-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtforge/tex/segments.hpp"

#include <unordered_set>

namespace gtforge::tex {

namespace {

// Environments that are not plain body text. Starred variants match too.
const std::unordered_set<std::string>& excluded_environments() {
  static const std::unordered_set<std::string> set = {
      "table", "tabular", "figure", "equation", "align",
      "eqnarray", "displaymath", "verbatim", "alltt", "lstlisting",
      "Verbatim", "thebibliography",
  };
  return set;
}

// Paragraph-level or preamble commands: flush the current segment and skip
// the command together with its arguments.
const std::unordered_set<std::string>& breaking_commands() {
  static const std::unordered_set<std::string> set = {
      "documentclass", "documentstyle", "usepackage", "input", "include",
      "includegraphics", "part", "chapter", "section", "subsection",
      "subsubsection", "paragraph", "subparagraph", "title", "author",
      "date", "maketitle", "tableofcontents", "listoffigures",
      "listoftables", "appendix", "bibliography", "bibliographystyle",
      "caption", "item", "bibitem", "newcommand", "renewcommand",
      "providecommand", "newenvironment", "def", "let", "setlength",
      "setcounter", "pagestyle", "thispagestyle", "newpage", "clearpage",
      "cleardoublepage", "pagebreak", "linebreak", "nolinebreak", "bigskip",
      "medskip", "smallskip", "tabularnewline", "hline", "keywords",
  };
  return set;
}

// Invisible inline commands: contribute nothing, the gap they leave ends the
// current word but not the segment.
const std::unordered_set<std::string>& silent_commands() {
  static const std::unordered_set<std::string> set = {
      "label", "footnote", "footnotemark", "footnotetext", "index",
      "nocite", "thanks", "vspace", "hspace", "vskip", "hskip", "vfill",
      "hfill", "smallskipamount", "noindent", "indent", "ignorespaces",
      "relax", "protect", "centering", "raggedright", "raggedleft",
      "em", "bf", "it", "rm", "sf", "tt", "sc", "sl", "normalfont",
      "tiny", "scriptsize", "footnotesize", "small", "normalsize", "large",
      "Large", "LARGE", "huge", "Huge", "baselineskip", "parindent",
      "parskip", "\\", ",", ";", ":", "!", " ", "\t", "\n", "quad", "qquad",
      "linewidth", "textwidth", "columnwidth",
  };
  return set;
}

const std::unordered_set<std::string>& reference_commands() {
  static const std::unordered_set<std::string> set = {
      "ref", "eqref", "pageref", "autoref", "cref", "Cref",
      "vref", "Vref", "fref", "secref", "figref",
  };
  return set;
}

bool is_citation_command(const std::string& name) {
  return name.rfind("cite", 0) == 0 || name.rfind("Cite", 0) == 0 ||
         (name.size() > 4 && name.compare(name.size() - 4, 4, "cite") == 0);
}

std::string strip_star(std::string name) {
  if (!name.empty() && name.back() == '*') name.pop_back();
  return name;
}

class Extractor {
 public:
  explicit Extractor(const DocumentTree& tree) : tree_(tree) {}

  std::vector<PlainSegment> run() {
    const TexNode* body = find_document_env(tree_.root);
    if (body == nullptr) return {};
    walk_children(*body, /*flush_around=*/false);
    flush();
    return std::move(segments_);
  }

 private:
  const TexNode* find_document_env(const TexNode& node) const {
    if (node.kind == TexNode::Kind::Environment && node.name == "document") {
      return &node;
    }
    for (const TexNode& child : node.children) {
      if (const TexNode* hit = find_document_env(child)) return hit;
    }
    return nullptr;
  }

  void add_piece(SegmentPiece::Kind kind, ByteSpan span) {
    SegmentPiece piece;
    piece.kind = kind;
    piece.span = span;
    piece.text.assign(slice(tree_.source, span));
    current_.pieces.push_back(std::move(piece));
  }

  void flush() {
    if (!current_.pieces.empty()) {
      segments_.push_back(std::move(current_));
      current_ = {};
    }
  }

  void walk_children(const TexNode& node, bool flush_around) {
    if (flush_around) flush();
    for (const TexNode& child : node.children) visit(child);
    if (flush_around) flush();
  }

  void visit(const TexNode& node) {
    switch (node.kind) {
      case TexNode::Kind::PlainText:
        add_piece(SegmentPiece::Kind::Text, node.span);
        break;
      case TexNode::Kind::Comment:
        break;  // retained in the tree, never part of ground truth
      case TexNode::Kind::InlineMath:
        add_piece(SegmentPiece::Kind::InlineMathTag, node.span);
        break;
      case TexNode::Kind::DisplayMath:
        flush();
        break;
      case TexNode::Kind::Group:
        // Inline groups ({\em word}) flow through the current segment.
        walk_children(node, /*flush_around=*/false);
        break;
      case TexNode::Kind::Environment:
        if (excluded_environments().contains(strip_star(node.name))) {
          flush();
        } else {
          walk_children(node, /*flush_around=*/true);
        }
        break;
      case TexNode::Kind::CommandCall:
        visit_command(node);
        break;
      case TexNode::Kind::Root:
        walk_children(node, /*flush_around=*/false);
        break;
    }
  }

  void visit_command(const TexNode& node) {
    if (silent_commands().contains(node.name)) return;
    if (breaking_commands().contains(strip_star(node.name))) {
      flush();
      return;
    }
    if (is_citation_command(node.name) && node.name != "nocite") {
      add_piece(SegmentPiece::Kind::CitationTag, node.span);
      return;
    }
    if (reference_commands().contains(node.name)) {
      add_piece(SegmentPiece::Kind::ReferenceTag, node.span);
      return;
    }
    // Anything else rides along verbatim as part of the surrounding word.
    add_piece(SegmentPiece::Kind::Atom, node.span);
  }

  const DocumentTree& tree_;
  std::vector<PlainSegment> segments_;
  PlainSegment current_;
};

}  // namespace

std::vector<PlainSegment> extract_plain_segments(const DocumentTree& tree) {
  return Extractor(tree).run();
}

}  // namespace gtforge::tex
