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

#include "gtforge/tex/tree.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace gtforge::tex {

namespace {

// Environments whose body is taken verbatim: braces, $ and % inside carry
// no structure and must not trip the checker.
bool is_verbatim_env(std::string_view name) {
  return name == "verbatim" || name == "verbatim*" || name == "alltt" ||
         name == "lstlisting" || name == "Verbatim";
}

std::string describe(TreeError::Kind kind, std::size_t offset,
                     const std::string& expected, const std::string& found) {
  std::ostringstream os;
  switch (kind) {
    case TreeError::Kind::UnbalancedBrace:
      os << "unbalanced brace at byte " << offset;
      break;
    case TreeError::Kind::UnmatchedMathDelim:
      os << "unmatched math delimiter at byte " << offset;
      break;
    case TreeError::Kind::EnvMismatch:
      os << "\\end{" << found << "} at byte " << offset << " does not close \\begin{"
         << expected << "}";
      break;
    case TreeError::Kind::UnclosedEnv:
      os << "\\begin{" << found << "} at byte " << offset << " is never closed";
      break;
  }
  return os.str();
}

struct Frame {
  TexNode node;
  std::size_t open_offset = 0;  // offset of {, $, $$ or \begin
};

class TreeBuilder {
 public:
  TreeBuilder(std::string_view source, const std::vector<TexToken>& tokens)
      : source_(source), tokens_(tokens) {
    Frame root;
    root.node.kind = TexNode::Kind::Root;
    root.node.span = {0, source.size()};
    stack_.push_back(std::move(root));
  }

  TexNode build() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const TexToken& tok = tokens_[i];
      switch (tok.kind) {
        case TexToken::Kind::Text:
        case TexToken::Kind::Whitespace:
          extend_text(tok.span);
          break;
        case TexToken::Kind::Comment:
          flush_text();
          add_leaf(TexNode::Kind::Comment, tok.span);
          break;
        case TexToken::Kind::Command:
          flush_text();
          add_command(tok);
          break;
        case TexToken::Kind::BraceOpen:
          flush_text();
          open(TexNode::Kind::Group, tok.span.begin, tok.span.begin + 1);
          break;
        case TexToken::Kind::BraceClose:
          flush_text();
          close_brace(tok);
          break;
        case TexToken::Kind::MathDelim:
          flush_text();
          toggle_math(tok);
          break;
        case TexToken::Kind::EnvBegin:
          flush_text();
          if (is_verbatim_env(tok.env_name)) {
            consume_verbatim(i, tok);
          } else {
            open(TexNode::Kind::Environment, tok.span.begin, tok.span.end, tok.env_name);
          }
          break;
        case TexToken::Kind::EnvEnd:
          flush_text();
          close_env(tok);
          break;
      }
    }
    flush_text();
    if (stack_.size() > 1) report_unclosed(stack_.back());
    TexNode root = std::move(stack_.front().node);
    fold_arguments(root);
    return root;
  }

 private:
  void extend_text(ByteSpan span) {
    if (pending_text_ && pending_text_->end == span.begin) {
      pending_text_->end = span.end;
    } else {
      flush_text();
      pending_text_ = span;
    }
  }

  void flush_text() {
    if (pending_text_) {
      add_leaf(TexNode::Kind::PlainText, *pending_text_);
      pending_text_.reset();
    }
  }

  void add_leaf(TexNode::Kind kind, ByteSpan span, std::string name = {}) {
    TexNode node;
    node.kind = kind;
    node.span = span;
    node.name = std::move(name);
    stack_.back().node.children.push_back(std::move(node));
  }

  void add_command(const TexToken& tok) {
    std::string name(tok.lexeme.size() > 1 ? tok.lexeme.substr(1) : tok.lexeme);
    // \verb|...| keeps only the command word as the node name.
    const bool verb_with_body =
        name.rfind("verb", 0) == 0 && name.size() > 4 &&
        !((name[4] >= 'a' && name[4] <= 'z') || (name[4] >= 'A' && name[4] <= 'Z'));
    if (verb_with_body) name = "verb";
    add_leaf(TexNode::Kind::CommandCall, tok.span, std::move(name));
  }

  void open(TexNode::Kind kind, std::size_t offset, std::size_t content_begin,
            std::string name = {}) {
    Frame frame;
    frame.node.kind = kind;
    frame.node.name = std::move(name);
    frame.node.span = {offset, content_begin};
    frame.open_offset = offset;
    stack_.push_back(std::move(frame));
  }

  void pop_into_parent(std::size_t end) {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    frame.node.span.end = end;
    stack_.back().node.children.push_back(std::move(frame.node));
  }

  void close_brace(const TexToken& tok) {
    if (stack_.back().node.kind != TexNode::Kind::Group) {
      throw TreeError(TreeError::Kind::UnbalancedBrace, tok.span.begin);
    }
    pop_into_parent(tok.span.end);
  }

  void toggle_math(const TexToken& tok) {
    const bool display = tok.lexeme.size() == 2;
    const TexNode::Kind kind =
        display ? TexNode::Kind::DisplayMath : TexNode::Kind::InlineMath;
    const TexNode::Kind top = stack_.back().node.kind;
    if (top == kind) {
      pop_into_parent(tok.span.end);
    } else if (top == TexNode::Kind::InlineMath || top == TexNode::Kind::DisplayMath) {
      // $$ while inside $...$ (or vice versa) cannot pair.
      throw TreeError(TreeError::Kind::UnmatchedMathDelim, tok.span.begin);
    } else {
      open(kind, tok.span.begin, tok.span.end);
    }
  }

  void close_env(const TexToken& tok) {
    const Frame& top = stack_.back();
    switch (top.node.kind) {
      case TexNode::Kind::Environment:
        if (top.node.name != tok.env_name) {
          throw TreeError(TreeError::Kind::EnvMismatch, tok.span.begin, top.node.name,
                          tok.env_name);
        }
        pop_into_parent(tok.span.end);
        return;
      case TexNode::Kind::Group:
        throw TreeError(TreeError::Kind::UnbalancedBrace, top.open_offset);
      case TexNode::Kind::InlineMath:
      case TexNode::Kind::DisplayMath:
        throw TreeError(TreeError::Kind::UnmatchedMathDelim, top.open_offset);
      default:
        // \end with no open environment at all.
        throw TreeError(TreeError::Kind::EnvMismatch, tok.span.begin, "", tok.env_name);
    }
  }

  void report_unclosed(const Frame& top) {
    switch (top.node.kind) {
      case TexNode::Kind::Group:
        throw TreeError(TreeError::Kind::UnbalancedBrace, top.open_offset);
      case TexNode::Kind::InlineMath:
      case TexNode::Kind::DisplayMath:
        throw TreeError(TreeError::Kind::UnmatchedMathDelim, top.open_offset);
      case TexNode::Kind::Environment:
        throw TreeError(TreeError::Kind::UnclosedEnv, top.open_offset, "", top.node.name);
      default:
        throw Error("internal: non-root frame of unexpected kind");
    }
  }

  // Swallows everything up to the matching \end as one opaque text child.
  void consume_verbatim(std::size_t& index, const TexToken& begin_tok) {
    for (std::size_t j = index + 1; j < tokens_.size(); ++j) {
      if (tokens_[j].kind == TexToken::Kind::EnvEnd &&
          tokens_[j].env_name == begin_tok.env_name) {
        TexNode env;
        env.kind = TexNode::Kind::Environment;
        env.name = begin_tok.env_name;
        env.span = {begin_tok.span.begin, tokens_[j].span.end};
        if (begin_tok.span.end < tokens_[j].span.begin) {
          TexNode body;
          body.kind = TexNode::Kind::PlainText;
          body.span = {begin_tok.span.end, tokens_[j].span.begin};
          env.children.push_back(std::move(body));
        }
        stack_.back().node.children.push_back(std::move(env));
        index = j;
        return;
      }
    }
    throw TreeError(TreeError::Kind::UnclosedEnv, begin_tok.span.begin, "",
                    begin_tok.env_name);
  }

  // Attaches brace groups and [...] options that immediately follow a command
  // name as argument children, extending the command span over them.
  void fold_arguments(TexNode& node) {
    for (TexNode& child : node.children) fold_arguments(child);
    if (node.children.empty()) return;

    std::vector<TexNode> folded;
    folded.reserve(node.children.size());
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      TexNode& child = node.children[i];
      if (child.kind != TexNode::Kind::CommandCall) {
        folded.push_back(std::move(child));
        continue;
      }
      TexNode call = std::move(child);
      bool more = true;
      while (more && i + 1 < node.children.size()) {
        TexNode& next = node.children[i + 1];
        if (next.span.begin != call.span.end) break;
        switch (next.kind) {
          case TexNode::Kind::Group:
            call.span.end = next.span.end;
            call.children.push_back(std::move(next));
            ++i;
            break;
          case TexNode::Kind::PlainText: {
            if (!take_bracket_args(call, next)) more = false;
            if (next.span.empty()) ++i;  // option group consumed the whole text node
            break;
          }
          default:
            more = false;
            break;
        }
      }
      folded.push_back(std::move(call));
    }
    node.children = std::move(folded);
  }

  // Consumes one or more [...] prefixes of `text` into `call`. The matching
  // bracket must sit within the same plain-text node. Returns false when no
  // further arguments can follow.
  bool take_bracket_args(TexNode& call, TexNode& text) {
    while (!text.span.empty() && source_[text.span.begin] == '[' &&
           text.span.begin == call.span.end) {
      int depth = 0;
      std::size_t close = std::string::npos;
      for (std::size_t p = text.span.begin; p < text.span.end; ++p) {
        if (source_[p] == '[') ++depth;
        if (source_[p] == ']' && --depth == 0) {
          close = p;
          break;
        }
      }
      if (close == std::string::npos) return false;
      TexNode opt;
      opt.kind = TexNode::Kind::Group;
      opt.span = {text.span.begin, close + 1};
      if (opt.span.size() > 2) {
        TexNode body;
        body.kind = TexNode::Kind::PlainText;
        body.span = {opt.span.begin + 1, opt.span.end - 1};
        opt.children.push_back(std::move(body));
      }
      call.span.end = opt.span.end;
      call.children.push_back(std::move(opt));
      text.span.begin = close + 1;
    }
    // Arguments continue only when the option group consumed the entire node
    // (the next sibling might be an adjacent brace group).
    return text.span.empty();
  }

  std::string_view source_;
  const std::vector<TexToken>& tokens_;
  std::vector<Frame> stack_;
  std::optional<ByteSpan> pending_text_;
};

void check_node(const DocumentTree& tree, const TexNode& node) {
  if (node.span.begin > node.span.end || node.span.end > tree.source.size()) {
    throw Error("node span out of range");
  }
  std::size_t cursor = node.span.begin;
  for (const TexNode& child : node.children) {
    if (!node.span.contains(child.span)) throw Error("child span escapes parent");
    if (child.span.begin < cursor) throw Error("sibling spans overlap or unordered");
    cursor = child.span.end;
    check_node(tree, child);
  }
}

}  // namespace

TreeError::TreeError(Kind kind, std::size_t offset, std::string expected,
                     std::string found)
    : Error(describe(kind, offset, expected, found)),
      kind(kind),
      offset(offset),
      expected(std::move(expected)),
      found(std::move(found)) {}

DocumentTree build_tree(std::string_view source, const std::vector<TexToken>& tokens) {
  DocumentTree tree;
  tree.source.assign(source);
  TreeBuilder builder(tree.source, tokens);
  tree.root = builder.build();
  return tree;
}

DocumentTree parse_document(std::string source) {
  DocumentTree tree;
  tree.source = std::move(source);
  const std::vector<TexToken> tokens = tokenize(tree.source);
  TreeBuilder builder(tree.source, tokens);
  tree.root = builder.build();
  return tree;
}

void check_tree_invariants(const DocumentTree& tree) {
  if (tree.root.kind != TexNode::Kind::Root) throw Error("root kind");
  if (tree.root.span.begin != 0 || tree.root.span.end != tree.source.size()) {
    throw Error("root span must cover the source");
  }
  check_node(tree, tree.root);
}

}  // namespace gtforge::tex
