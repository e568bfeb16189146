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

#ifndef GTFORGE_ALIGN_PAGE_HPP_
#define GTFORGE_ALIGN_PAGE_HPP_

#include <string>
#include <vector>

#include "gtforge/align/assign.hpp"
#include "gtforge/align/edit_script.hpp"

namespace gtforge::align {

// Page-level texts: element texts joined with single spaces in mark order
// (empty contributions collapse), plus the character alignment between them.
struct PageAlignment {
  std::string sgt_text;
  std::string ocr_text;
  EditScript chars;

  // Per element: code-point ranges of its contribution to the page texts.
  struct Placement {
    std::size_t sgt_begin = 0, sgt_end = 0;
    std::size_t ocr_begin = 0, ocr_end = 0;
  };
  std::vector<Placement> placements;  // parallel to the element list
};

PageAlignment align_page(const std::vector<AlignedElement>& elements);

struct SentenceOptions {
  // Terminal tokens that do not end a sentence.
  std::vector<std::string> abbreviation_blocklist = {
      "al.", "Fig.", "Eq.", "Sec.", "vs.", "e.g.", "i.e.", "cf.", "No.",
  };
};

struct ElementTag {
  marker::SgtElement::Type etype = marker::SgtElement::Type::Word;
  marker::SgtElement::HyphenPart hyphen_part = marker::SgtElement::HyphenPart::None;
};

struct AlignedSentence {
  std::string article_id;
  int page = 1;
  int sentence_index = 0;
  std::string sgt_text;
  std::string ocr_text;
  std::vector<ElementTag> element_types;       // one per SGT element (parts count)
  std::vector<std::size_t> element_positions;  // indices into the page element list
  EditScript edit;                             // sentence-level character script
};

// Cuts an aligned page into sentences. A boundary falls after an element
// whose SGT text ends in '.', '!' or '?' when the next element starts with
// an uppercase letter or a digit, unless the terminal token is blocklisted.
// The OCR side is cut at the corresponding aligned character positions.
std::vector<AlignedSentence> segment_sentences(
    const std::vector<AlignedElement>& elements, const PageAlignment& page,
    const SentenceOptions& options, const std::string& article_id, int page_no);

// Sentinel characters replacing non-word elements in the "fixed" view.
struct SentinelMap {
  std::string math = "$";
  std::string citation = "@";
  std::string reference = "#";
};

class SentinelCollisionError : public Error {
 public:
  explicit SentinelCollisionError(const std::string& what) : Error(what) {}
};

// Throws SentinelCollisionError when a sentinel character occurs inside the
// plain-word sample; run this once over a corpus sample at configuration
// time before trusting the fixed view.
void check_sentinel_collision(const std::vector<std::string>& word_sample,
                              const SentinelMap& map);

// Replaces each inline math / citation / reference element by its sentinel
// on both sides of the pair, using the element alignment. OCR contributions
// that are empty stay empty (the element was not detected at all).
std::pair<std::string, std::string> sentinelize(
    const AlignedSentence& sentence, const std::vector<AlignedElement>& page_elements,
    const SentinelMap& map = {});

}  // namespace gtforge::align

#endif  // GTFORGE_ALIGN_PAGE_HPP_
