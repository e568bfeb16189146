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

#include "gtforge/geom/sgt_boxes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <unordered_map>

namespace gtforge::geom {

namespace {

// Baselines within half a point are the same text line.
constexpr double kBaselineTolerancePt = 0.5;

std::optional<std::size_t> mark_index(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  std::size_t value = 0;
  const char* end = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(name.data() + 1, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

const PageGeometry* find_geometry(const std::vector<PageGeometry>& pages, int page) {
  for (const PageGeometry& g : pages) {
    if (g.page == page) return &g;
  }
  return nullptr;
}

const ocr::OcrPage* find_ocr_page(const std::vector<ocr::OcrPage>& pages, int page) {
  for (const ocr::OcrPage& p : pages) {
    if (p.page == page) return &p;
  }
  return nullptr;
}

// OCR line whose vertical interval contains the baseline; nearest line
// center wins when several do.
const ocr::LineExtent* line_at_baseline(const ocr::OcrPage* page, double baseline_px) {
  if (page == nullptr) return nullptr;
  const ocr::LineExtent* best = nullptr;
  double best_dist = std::numeric_limits<double>::max();
  for (const ocr::LineExtent& line : page->lines) {
    if (baseline_px < line.bbox_px.y0 || baseline_px > line.bbox_px.y1) continue;
    const double center = (line.bbox_px.y0 + line.bbox_px.y1) / 2.0;
    const double dist = std::abs(center - baseline_px);
    if (dist < best_dist) {
      best_dist = dist;
      best = &line;
    }
  }
  return best;
}

Box baseline_box(double x0_pt, double x1_pt, double y_pt, const PageGeometry& geom) {
  const double lo = std::min(x0_pt, x1_pt);
  const double hi = std::max(x0_pt, x1_pt);
  Box box;
  box.x0 = static_cast<double>(px_from_pt_x(lo, geom));
  box.x1 = static_cast<double>(px_from_pt_x(hi, geom));
  box.y0 = static_cast<double>(px_from_pt_y(y_pt + geom.font_height_pt, geom));
  box.y1 = static_cast<double>(px_from_pt_y(y_pt, geom));
  return box;
}

}  // namespace

long px_from_pt_x(double x_pt, const PageGeometry& geom) {
  return round_half_up(pt_to_px(x_pt, geom.dpi));
}

long px_from_pt_y(double y_pt, const PageGeometry& geom) {
  return round_half_up(geom.height_px - pt_to_px(y_pt, geom.dpi));
}

BoxBuildResult build_sgt_boxes(const std::vector<MarkRecord>& records,
                               const std::vector<marker::SgtElement>& elements,
                               const std::vector<PageGeometry>& pages,
                               const std::vector<ocr::OcrPage>& ocr_pages) {
  using HyphenPart = marker::SgtElement::HyphenPart;

  BoxBuildResult out;
  std::unordered_map<std::size_t, const MarkRecord*> starts, ends;
  for (const MarkRecord& r : records) {
    if (const auto k = mark_index(r.name, 's')) {
      if (!starts.emplace(*k, &r).second) ++out.warnings;
    } else if (const auto k = mark_index(r.name, 'e')) {
      if (!ends.emplace(*k, &r).second) ++out.warnings;
    }
  }

  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    const std::size_t k = elements[idx].mark_id;
    const auto s_it = starts.find(k);
    const auto e_it = ends.find(k);
    if (s_it == starts.end() || e_it == ends.end()) {
      ++out.dropped_unpaired;
      ++out.warnings;
      continue;
    }
    const MarkRecord& s = *s_it->second;
    const MarkRecord& e = *e_it->second;

    if (s.page != e.page) {
      // Alignment operates page-by-page; cross-page elements are ignored.
      ++out.dropped_multipage;
      continue;
    }
    const PageGeometry* geom = find_geometry(pages, s.page);
    if (geom == nullptr) {
      ++out.dropped_no_geometry;
      ++out.warnings;
      continue;
    }

    if (std::abs(s.y_pt - e.y_pt) < kBaselineTolerancePt) {
      SgtBox box;
      box.element_index = idx;
      box.mark_id = k;
      box.part = HyphenPart::None;
      box.page = s.page;
      box.bbox_px = baseline_box(s.x_pt, e.x_pt, s.y_pt, *geom);
      out.boxes.push_back(box);
      continue;
    }

    // Different baselines on one page: the element wrapped, so it is split
    // into two part-words whose outer bounds come from the OCR line extents.
    const ocr::OcrPage* ocr_page = find_ocr_page(ocr_pages, s.page);
    const double start_baseline =
        geom->height_px - pt_to_px(s.y_pt, geom->dpi);
    const double end_baseline = geom->height_px - pt_to_px(e.y_pt, geom->dpi);
    const ocr::LineExtent* start_line = line_at_baseline(ocr_page, start_baseline);
    const ocr::LineExtent* end_line = line_at_baseline(ocr_page, end_baseline);
    if (start_line == nullptr || end_line == nullptr) {
      ++out.dropped_no_line;
      ++out.warnings;
      continue;
    }

    SgtBox first;
    first.element_index = idx;
    first.mark_id = k;
    first.part = HyphenPart::First;
    first.page = s.page;
    first.bbox_px = baseline_box(s.x_pt, s.x_pt, s.y_pt, *geom);
    first.bbox_px.x1 = std::max(first.bbox_px.x0, start_line->bbox_px.x1);

    SgtBox second;
    second.element_index = idx;
    second.mark_id = k;
    second.part = HyphenPart::Second;
    second.page = e.page;
    second.bbox_px = baseline_box(e.x_pt, e.x_pt, e.y_pt, *geom);
    second.bbox_px.x0 = std::min(second.bbox_px.x1, end_line->bbox_px.x0);

    out.boxes.push_back(first);
    out.boxes.push_back(second);
    ++out.hyphen_splits;
  }
  return out;
}

}  // namespace gtforge::geom
