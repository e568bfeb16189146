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

#ifndef GTFORGE_OCR_TSV_HPP_
#define GTFORGE_OCR_TSV_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::ocr {

struct OcrWord {
  std::string text;
  Box bbox_px;
  double confidence = 0;  // engine range [-1, 100]
  int page = 1, block = 0, paragraph = 0, line = 0, word_index = 0;
};

struct LineExtent {
  int block = 0, paragraph = 0, line = 0;
  Box bbox_px;
};

struct OcrPage {
  int page = 1;
  std::vector<OcrWord> words;
  std::vector<LineExtent> lines;
};

class MalformedTsvError : public Error {
 public:
  MalformedTsvError(std::size_t line_no, const std::string& detail);
  std::size_t line_no;
};

// Parses the engine's 12-column TSV (level, page_num, block_num, par_num,
// line_num, word_num, left, top, width, height, conf, text; one header row).
// Level-5 rows become words with bbox (left, top, left+width, top+height),
// level-4 rows become line extents. Level-5 rows with conf == -1 or
// whitespace-only text are skipped. Throws MalformedTsvError on a wrong
// column count or a non-numeric numeric field.
OcrPage parse_tsv(std::string_view tsv_text);

// Serializes retained words back to level-5 rows (testing aid; re-parsing
// recovers text, bbox and confidence).
std::string words_to_tsv(const OcrPage& page);

}  // namespace gtforge::ocr

#endif  // GTFORGE_OCR_TSV_HPP_
