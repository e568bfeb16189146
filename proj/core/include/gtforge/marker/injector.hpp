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

#ifndef GTFORGE_MARKER_INJECTOR_HPP_
#define GTFORGE_MARKER_INJECTOR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"
#include "gtforge/tex/segments.hpp"

namespace gtforge::marker {

// A ground-truth element: one whitespace-delimited word, or one inline
// math / citation / reference command taken whole.
struct SgtElement {
  enum class Type { Word, InlineMath, Citation, Reference };
  enum class HyphenPart { None, First, Second };

  std::size_t mark_id = 0;  // source order; assigned at injection
  Type etype = Type::Word;
  std::string raw_tex;
  ByteSpan source_span;
  HyphenPart hyphen_part = HyphenPart::None;  // filled by box building
};

const char* to_string(SgtElement::Type t);
const char* to_string(SgtElement::HyphenPart p);

// Command templates with a {name} placeholder; the position-recording
// package can be swapped by configuration.
struct MarkerSyntax {
  std::string start_template = R"(\tikzmark{{name}})";
  std::string end_template = R"(\tikzmark{{name}})";
  std::string preamble = R"(\usepackage{tikz}\usetikzlibrary{tikzmark})";

  std::string start_marker(std::size_t mark_id) const;
  std::string end_marker(std::size_t mark_id) const;
};

struct MarkedSource {
  std::string text;  // original source plus injected marker commands
  std::vector<SgtElement> element_table;
  MarkerSyntax marker_syntax;
  std::vector<ByteSpan> injected;  // spans within `text` added by injection
};

// Splits a segment into elements: text pieces break on whitespace runs, tag
// pieces become single elements, atoms glue to adjacent bytes. Elements come
// back in source order with mark_id unset.
std::vector<SgtElement> split_elements(const tex::PlainSegment& segment);

// Flattens per-segment element lists and assigns gapless mark ids 0..N-1.
std::vector<SgtElement> number_elements(const std::vector<tex::PlainSegment>& segments);

// Inserts a start marker named s<k> immediately before element k and an end
// marker e<k> immediately after, plus one preamble line; all other bytes are
// unchanged. Throws Error on overlapping or unsorted element spans.
MarkedSource inject_markers(std::string_view source, std::vector<SgtElement> elements,
                            const MarkerSyntax& syntax = {});

// Exact inverse of inject_markers.
std::string strip_markers(const MarkedSource& marked);

}  // namespace gtforge::marker

#endif  // GTFORGE_MARKER_INJECTOR_HPP_
