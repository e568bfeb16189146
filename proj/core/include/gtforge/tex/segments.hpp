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

#ifndef GTFORGE_TEX_SEGMENTS_HPP_
#define GTFORGE_TEX_SEGMENTS_HPP_

#include <string>
#include <vector>

#include "gtforge/common.hpp"
#include "gtforge/tex/tree.hpp"

namespace gtforge::tex {

// One item of a plain-text segment. Text pieces may be split on whitespace;
// Atom pieces are opaque TeX (formatting commands and the like) that glue to
// whatever they touch; the tag kinds mark inline math, citation and
// reference commands that interleave with running text.
struct SegmentPiece {
  enum class Kind { Text, Atom, InlineMathTag, CitationTag, ReferenceTag };

  Kind kind = Kind::Text;
  ByteSpan span;     // into the tree source; text == source bytes at span
  std::string text;  // exact raw slice

  bool is_tag() const {
    return kind == Kind::InlineMathTag || kind == Kind::CitationTag ||
           kind == Kind::ReferenceTag;
  }
};

// A maximal run of body text between structural breaks (excluded
// environments, display math, sectioning commands, paragraph-level markup).
struct PlainSegment {
  std::vector<SegmentPiece> pieces;
};

// Returns segments from plain-text regions: body text inside the document
// environment, outside tables/figures/display math/verbatim and outside
// caption/footnote arguments. Documents without a document environment
// yield an empty list.
std::vector<PlainSegment> extract_plain_segments(const DocumentTree& tree);

}  // namespace gtforge::tex

#endif  // GTFORGE_TEX_SEGMENTS_HPP_
