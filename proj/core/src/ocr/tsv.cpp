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

#include "gtforge/ocr/tsv.hpp"

#include <charconv>
#include <sstream>

namespace gtforge::ocr {

namespace {

constexpr int kColumns = 12;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

int parse_int(std::string_view field, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw MalformedTsvError(line_no, "non-numeric field '" + std::string(field) + "'");
  }
  return value;
}

double parse_conf(std::string_view field, std::size_t line_no) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw MalformedTsvError(line_no, "non-numeric confidence '" + std::string(field) + "'");
  }
  return value;
}

bool whitespace_only(std::string_view s) {
  for (char c : s) {
    if (!is_ascii_space(c)) return false;
  }
  return true;
}

}  // namespace

MalformedTsvError::MalformedTsvError(std::size_t line_no, const std::string& detail)
    : Error("malformed TSV at line " + std::to_string(line_no) + ": " + detail),
      line_no(line_no) {}

OcrPage parse_tsv(std::string_view tsv_text) {
  OcrPage out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool page_set = false;

  while (pos < tsv_text.size()) {
    std::size_t nl = tsv_text.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv_text.size();
    std::string_view line = tsv_text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) continue;  // header
    if (line.empty()) continue;

    const std::vector<std::string_view> f = split_tabs(line);
    if (f.size() != kColumns) {
      throw MalformedTsvError(line_no,
                              "expected 12 columns, got " + std::to_string(f.size()));
    }
    const int level = parse_int(f[0], line_no);
    const int page = parse_int(f[1], line_no);
    const int block = parse_int(f[2], line_no);
    const int par = parse_int(f[3], line_no);
    const int line_num = parse_int(f[4], line_no);
    const int word_num = parse_int(f[5], line_no);
    const double left = parse_int(f[6], line_no);
    const double top = parse_int(f[7], line_no);
    const double width = parse_int(f[8], line_no);
    const double height = parse_int(f[9], line_no);
    const double conf = parse_conf(f[10], line_no);
    const std::string_view text = f[11];

    if (!page_set) {
      out.page = page;
      page_set = true;
    }
    const Box bbox{left, top, left + width, top + height};
    if (level == 4) {
      out.lines.push_back({block, par, line_num, bbox});
    } else if (level == 5) {
      if (conf == -1.0 || whitespace_only(text)) continue;
      OcrWord w;
      w.text.assign(text);
      w.bbox_px = bbox;
      w.confidence = conf;
      w.page = page;
      w.block = block;
      w.paragraph = par;
      w.line = line_num;
      w.word_index = word_num;
      out.words.push_back(std::move(w));
    }
  }
  return out;
}

std::string words_to_tsv(const OcrPage& page) {
  std::ostringstream os;
  os << "level\tpage_num\tblock_num\tpar_num\tline_num\tword_num\tleft\ttop\twidth\t"
        "height\tconf\ttext\n";
  for (const OcrWord& w : page.words) {
    os << "5\t" << w.page << '\t' << w.block << '\t' << w.paragraph << '\t' << w.line
       << '\t' << w.word_index << '\t' << static_cast<long>(w.bbox_px.x0) << '\t'
       << static_cast<long>(w.bbox_px.y0) << '\t'
       << static_cast<long>(w.bbox_px.x1 - w.bbox_px.x0) << '\t'
       << static_cast<long>(w.bbox_px.y1 - w.bbox_px.y0) << '\t' << w.confidence
       << '\t' << w.text << '\n';
  }
  return os.str();
}

}  // namespace gtforge::ocr
