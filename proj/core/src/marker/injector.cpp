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

#include "gtforge/marker/injector.hpp"

#include <algorithm>

namespace gtforge::marker {

namespace {

std::string substitute_name(std::string templ, const std::string& name) {
  const std::string placeholder = "{name}";
  const std::size_t pos = templ.find(placeholder);
  if (pos == std::string::npos) {
    throw Error("marker template is missing the {name} placeholder: " + templ);
  }
  templ.replace(pos, placeholder.size(), name);
  return templ;
}

SgtElement::Type tag_type(tex::SegmentPiece::Kind kind) {
  switch (kind) {
    case tex::SegmentPiece::Kind::InlineMathTag:
      return SgtElement::Type::InlineMath;
    case tex::SegmentPiece::Kind::CitationTag:
      return SgtElement::Type::Citation;
    case tex::SegmentPiece::Kind::ReferenceTag:
      return SgtElement::Type::Reference;
    default:
      throw Error("not a tag piece");
  }
}

// Word accumulator: glues contiguous byte runs into one element.
class WordBuilder {
 public:
  explicit WordBuilder(std::vector<SgtElement>& out) : out_(out) {}

  void add(std::string_view bytes, std::size_t offset) {
    if (!open_ || end_ != offset) close();
    if (!open_) {
      begin_ = offset;
      open_ = true;
    }
    text_.append(bytes);
    end_ = offset + bytes.size();
  }

  void close() {
    if (open_ && !text_.empty()) {
      SgtElement e;
      e.etype = SgtElement::Type::Word;
      e.raw_tex = std::move(text_);
      e.source_span = {begin_, end_};
      out_.push_back(std::move(e));
    }
    text_.clear();
    open_ = false;
  }

 private:
  std::vector<SgtElement>& out_;
  std::string text_;
  std::size_t begin_ = 0, end_ = 0;
  bool open_ = false;
};

// Insertion point in the original source; `order` breaks offset ties so that
// the preamble comes first and end markers precede adjacent start markers.
struct Insertion {
  std::size_t offset;
  int order;
  std::string text;
};

bool at_code_point_boundary(std::string_view source, std::size_t offset) {
  if (offset >= source.size()) return true;
  return (static_cast<unsigned char>(source[offset]) & 0xC0) != 0x80;
}

std::size_t preamble_offset(std::string_view source) {
  for (const char* directive : {"\\documentclass", "\\documentstyle"}) {
    const std::size_t pos = source.find(directive);
    if (pos == std::string_view::npos) continue;
    const std::size_t nl = source.find('\n', pos);
    return (nl == std::string_view::npos) ? source.size() : nl + 1;
  }
  return 0;
}

}  // namespace

const char* to_string(SgtElement::Type t) {
  switch (t) {
    case SgtElement::Type::Word:
      return "word";
    case SgtElement::Type::InlineMath:
      return "inline_math";
    case SgtElement::Type::Citation:
      return "citation";
    case SgtElement::Type::Reference:
      return "reference";
  }
  return "word";
}

const char* to_string(SgtElement::HyphenPart p) {
  switch (p) {
    case SgtElement::HyphenPart::None:
      return "none";
    case SgtElement::HyphenPart::First:
      return "first";
    case SgtElement::HyphenPart::Second:
      return "second";
  }
  return "none";
}

std::string MarkerSyntax::start_marker(std::size_t mark_id) const {
  return substitute_name(start_template, "s" + std::to_string(mark_id));
}

std::string MarkerSyntax::end_marker(std::size_t mark_id) const {
  return substitute_name(end_template, "e" + std::to_string(mark_id));
}

std::vector<SgtElement> split_elements(const tex::PlainSegment& segment) {
  std::vector<SgtElement> out;
  WordBuilder word(out);
  for (const tex::SegmentPiece& piece : segment.pieces) {
    if (piece.is_tag()) {
      word.close();
      SgtElement e;
      e.etype = tag_type(piece.kind);
      e.raw_tex = piece.text;
      e.source_span = piece.span;
      out.push_back(std::move(e));
      continue;
    }
    if (piece.kind == tex::SegmentPiece::Kind::Atom) {
      word.add(piece.text, piece.span.begin);
      continue;
    }
    // Text piece: split on whitespace runs, keeping offsets.
    std::size_t i = 0;
    const std::string& t = piece.text;
    while (i < t.size()) {
      if (is_ascii_space(t[i])) {
        word.close();
        while (i < t.size() && is_ascii_space(t[i])) ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < t.size() && !is_ascii_space(t[i])) ++i;
      word.add(std::string_view(t).substr(start, i - start), piece.span.begin + start);
    }
  }
  word.close();
  return out;
}

std::vector<SgtElement> number_elements(const std::vector<tex::PlainSegment>& segments) {
  std::vector<SgtElement> all;
  for (const tex::PlainSegment& segment : segments) {
    std::vector<SgtElement> part = split_elements(segment);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  for (std::size_t k = 0; k < all.size(); ++k) all[k].mark_id = k;
  return all;
}

MarkedSource inject_markers(std::string_view source, std::vector<SgtElement> elements,
                            const MarkerSyntax& syntax) {
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const ByteSpan span = elements[k].source_span;
    if (span.end > source.size() || span.begin > span.end) {
      throw Error("element span out of range");
    }
    if (k > 0 && span.begin < elements[k - 1].source_span.end) {
      throw Error("overlapping or unsorted element spans");
    }
    if (!at_code_point_boundary(source, span.begin) ||
        !at_code_point_boundary(source, span.end)) {
      throw Error("element span splits a UTF-8 code point");
    }
    elements[k].mark_id = k;
  }

  std::vector<Insertion> insertions;
  insertions.reserve(elements.size() * 2 + 1);
  insertions.push_back({preamble_offset(source), 0, syntax.preamble + "\n"});
  for (const SgtElement& e : elements) {
    insertions.push_back({e.source_span.begin, 2, syntax.start_marker(e.mark_id)});
    insertions.push_back({e.source_span.end, 1, syntax.end_marker(e.mark_id)});
  }
  std::stable_sort(insertions.begin(), insertions.end(),
                   [](const Insertion& a, const Insertion& b) {
                     return a.offset != b.offset ? a.offset < b.offset
                                                 : a.order < b.order;
                   });

  MarkedSource marked;
  marked.marker_syntax = syntax;
  marked.element_table = std::move(elements);
  marked.text.reserve(source.size() + insertions.size() * 16);
  std::size_t src_pos = 0;
  for (const Insertion& ins : insertions) {
    marked.text.append(source.substr(src_pos, ins.offset - src_pos));
    marked.injected.push_back({marked.text.size(), marked.text.size() + ins.text.size()});
    marked.text.append(ins.text);
    src_pos = ins.offset;
  }
  marked.text.append(source.substr(src_pos));
  return marked;
}

std::string strip_markers(const MarkedSource& marked) {
  std::string out;
  out.reserve(marked.text.size());
  std::size_t pos = 0;
  for (const ByteSpan& span : marked.injected) {
    out.append(marked.text, pos, span.begin - pos);
    pos = span.end;
  }
  out.append(marked.text, pos, marked.text.size() - pos);
  return out;
}

}  // namespace gtforge::marker
