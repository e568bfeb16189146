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

#ifndef GTFORGE_GEOM_SGT_BOXES_HPP_
#define GTFORGE_GEOM_SGT_BOXES_HPP_

#include <vector>

#include "gtforge/geom/aux_records.hpp"
#include "gtforge/marker/injector.hpp"
#include "gtforge/ocr/tsv.hpp"

namespace gtforge::geom {

struct PageGeometry {
  int page = 1;
  int width_px = 0;
  int height_px = 0;
  int dpi = 300;
  double font_height_pt = 11.0;  // assumed element height above the baseline
};

// Ground-truth element box in page-pixel coordinates, origin top-left.
struct SgtBox {
  std::size_t element_index = 0;  // into the element table
  std::size_t mark_id = 0;
  marker::SgtElement::HyphenPart part = marker::SgtElement::HyphenPart::None;
  int page = 1;
  Box bbox_px;
};

struct BoxBuildResult {
  std::vector<SgtBox> boxes;  // ordered by (mark_id, part)
  std::size_t hyphen_splits = 0;
  std::size_t dropped_multipage = 0;   // start/end marks on different pages
  std::size_t dropped_unpaired = 0;    // missing start or end record
  std::size_t dropped_no_line = 0;     // hyphen split without an OCR line
  std::size_t dropped_no_geometry = 0; // page without geometry info
  std::size_t warnings = 0;
};

// Pixel conversion helpers; rounding mode is round-half-up.
long px_from_pt_x(double x_pt, const PageGeometry& geom);
long px_from_pt_y(double y_pt, const PageGeometry& geom);  // includes y flip

// Pairs s<k>/e<k> records, applies the fixed-font-height box rule, splits
// hyphenated elements against OCR line extents, and drops elements spanning
// multiple pages. OCR pages provide the per-page line extents.
BoxBuildResult build_sgt_boxes(const std::vector<MarkRecord>& records,
                               const std::vector<marker::SgtElement>& elements,
                               const std::vector<PageGeometry>& pages,
                               const std::vector<ocr::OcrPage>& ocr_pages);

}  // namespace gtforge::geom

#endif  // GTFORGE_GEOM_SGT_BOXES_HPP_
