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

#include "gtforge/align/assign.hpp"

#include <algorithm>

namespace gtforge::align {

namespace {

double intersection_area(const Box& a, const Box& b) {
  const double w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  const double h = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  return (w > 0 && h > 0) ? w * h : 0.0;
}

// True when `lhs` is a strictly better assignment target than `rhs`.
bool better_candidate(double lhs_iou, const geom::SgtBox& lhs, double rhs_iou,
                      const geom::SgtBox& rhs) {
  if (lhs_iou != rhs_iou) return lhs_iou > rhs_iou;
  if (lhs.mark_id != rhs.mark_id) return lhs.mark_id < rhs.mark_id;
  return static_cast<int>(lhs.part) < static_cast<int>(rhs.part);
}

}  // namespace

double iou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0) return 0.0;
  return inter / uni;
}

std::vector<std::optional<std::size_t>> assign_ocr_to_sgt(
    const std::vector<geom::SgtBox>& sgt, const std::vector<ocr::OcrWord>& words) {
  std::vector<std::optional<std::size_t>> assignment(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::optional<std::size_t> best;
    double best_iou = 0.0;
    for (std::size_t s = 0; s < sgt.size(); ++s) {
      if (intersection_area(words[w].bbox_px, sgt[s].bbox_px) <= 0) continue;
      const double candidate = iou(words[w].bbox_px, sgt[s].bbox_px);
      if (!best ||
          better_candidate(candidate, sgt[s], best_iou, sgt[*best])) {
        best = s;
        best_iou = candidate;
      }
    }
    assignment[w] = best;
  }
  return assignment;
}

AlignedElement merge_assigned(const geom::SgtBox& sgt_box, std::string_view sgt_text,
                              std::vector<ocr::OcrWord> assigned, double max_iou) {
  std::sort(assigned.begin(), assigned.end(),
            [](const ocr::OcrWord& a, const ocr::OcrWord& b) {
              if (a.bbox_px.x0 != b.bbox_px.x0) return a.bbox_px.x0 < b.bbox_px.x0;
              if (a.bbox_px.y0 != b.bbox_px.y0) return a.bbox_px.y0 < b.bbox_px.y0;
              return a.word_index < b.word_index;
            });
  AlignedElement out;
  out.mark_id = sgt_box.mark_id;
  out.hyphen_part = sgt_box.part;
  out.sgt_text.assign(sgt_text);
  for (const ocr::OcrWord& w : assigned) {
    if (!out.ocr_text.empty()) out.ocr_text.push_back(' ');
    out.ocr_text += w.text;
  }
  out.contributing_ocr = std::move(assigned);
  out.max_iou = max_iou;
  return out;
}

std::vector<AlignedElement> collect_aligned_elements(
    const std::vector<geom::SgtBox>& boxes,
    const std::vector<marker::SgtElement>& elements,
    const std::vector<ocr::OcrWord>& words,
    const std::vector<std::optional<std::size_t>>& assignment) {
  std::vector<AlignedElement> out;
  out.reserve(boxes.size());
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const geom::SgtBox& box = boxes[b];
    std::vector<ocr::OcrWord> assigned;
    double max_iou = 0.0;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (assignment[w] == b) {
        assigned.push_back(words[w]);
        max_iou = std::max(max_iou, iou(words[w].bbox_px, box.bbox_px));
      }
    }
    const marker::SgtElement& element = elements[box.element_index];
    // The raw word stays with the First part of a hyphen split.
    const bool second = box.part == marker::SgtElement::HyphenPart::Second;
    AlignedElement merged = merge_assigned(
        box, second ? std::string_view{} : std::string_view(element.raw_tex),
        std::move(assigned), max_iou);
    merged.etype = element.etype;
    out.push_back(std::move(merged));
  }
  return out;
}

}  // namespace gtforge::align
