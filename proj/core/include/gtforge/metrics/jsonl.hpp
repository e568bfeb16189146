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

#ifndef GTFORGE_METRICS_JSONL_HPP_
#define GTFORGE_METRICS_JSONL_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"
#include "gtforge/metrics/stats.hpp"

namespace gtforge::metrics {

// One aligned sentence pair of the emitted dataset. Serializes to a single
// JSON line with keys in fixed order: article_id, page, sentence_index, sgt,
// ocr, element_types, hyphen_flags, ops, cer.
struct DatasetRecord {
  std::string article_id;
  int page = 1;
  int sentence_index = 0;
  std::string sgt;
  std::string ocr;
  std::vector<std::string> element_types;  // word|inline_math|citation|reference
  std::vector<std::string> hyphen_flags;   // none|first|second, parallel
  OpCounts ops;
  double cer = 0;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

std::string record_to_json_line(const DatasetRecord& record);
DatasetRecord record_from_json_line(std::string_view line);  // throws Error

// One record per line, UTF-8, LF endings, no trailing whitespace.
void emit_jsonl(const std::vector<DatasetRecord>& records, std::ostream& sink);
std::vector<DatasetRecord> parse_jsonl(std::istream& source);

}  // namespace gtforge::metrics

#endif  // GTFORGE_METRICS_JSONL_HPP_
