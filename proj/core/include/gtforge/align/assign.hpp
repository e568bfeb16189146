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

#ifndef GTFORGE_ALIGN_ASSIGN_HPP_
#define GTFORGE_ALIGN_ASSIGN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gtforge/geom/sgt_boxes.hpp"
#include "gtforge/ocr/tsv.hpp"

namespace gtforge::align {

// Intersection area over union area; 0 when disjoint or when the union is
// degenerate.
double iou(const Box& a, const Box& b);

// One OCR word maps to at most one SGT box: the overlapping box with the
// largest IOU, ties broken by smaller mark_id (then First before Second).
// Words overlapping no box stay unassigned. All inputs are one page.
std::vector<std::optional<std::size_t>> assign_ocr_to_sgt(
    const std::vector<geom::SgtBox>& sgt, const std::vector<ocr::OcrWord>& words);

// A ground-truth element with its merged OCR counterpart. Hyphen-split
// elements appear as two entries; the Second part carries an empty SGT text
// so the raw word is not duplicated in page text.
struct AlignedElement {
  std::size_t mark_id = 0;
  marker::SgtElement::Type etype = marker::SgtElement::Type::Word;
  marker::SgtElement::HyphenPart hyphen_part = marker::SgtElement::HyphenPart::None;
  std::string sgt_text;
  std::string ocr_text;  // assigned words joined with single spaces
  std::vector<ocr::OcrWord> contributing_ocr;  // sorted by increasing x0
  double max_iou = 0.0;
};

// Orders the words assigned to one SGT box by increasing horizontal
// position and joins their texts with single spaces.
AlignedElement merge_assigned(const geom::SgtBox& sgt_box, std::string_view sgt_text,
                              std::vector<ocr::OcrWord> assigned, double max_iou = 0.0);

// Runs merge_assigned over every box of a page, in (mark_id, part) order.
std::vector<AlignedElement> collect_aligned_elements(
    const std::vector<geom::SgtBox>& boxes,
    const std::vector<marker::SgtElement>& elements,
    const std::vector<ocr::OcrWord>& words,
    const std::vector<std::optional<std::size_t>>& assignment);

}  // namespace gtforge::align

#endif  // GTFORGE_ALIGN_ASSIGN_HPP_
