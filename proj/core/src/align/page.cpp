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

#include "gtforge/align/page.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "gtforge/common.hpp"

namespace gtforge::align {

namespace {

// Appends `text` to the page string with a single separating space, keeping
// track of code-point offsets. Returns the [begin, end) range of `text`.
std::pair<std::size_t, std::size_t> append_joined(std::string& page, std::size_t& cp_len,
                                                  const std::string& text) {
  if (text.empty()) return {cp_len, cp_len};
  if (!page.empty()) {
    page.push_back(' ');
    ++cp_len;
  }
  const std::size_t begin = cp_len;
  page += text;
  cp_len += decode_utf8(text).size();
  return {begin, cp_len};
}

bool ends_with_terminal(const std::string& text) {
  if (text.empty()) return false;
  const char c = text.back();
  return c == '.' || c == '!' || c == '?';
}

bool starts_upper_or_digit(const std::string& text) {
  if (text.empty()) return false;
  const unsigned char c = static_cast<unsigned char>(text.front());
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool in_blocklist(const std::string& token, const SentenceOptions& options) {
  return std::find(options.abbreviation_blocklist.begin(),
                   options.abbreviation_blocklist.end(),
                   token) != options.abbreviation_blocklist.end();
}

std::string slice_cp(const std::string& text, std::size_t cp_begin, std::size_t cp_end) {
  const std::u32string cps = decode_utf8(text);
  std::string out;
  for (std::size_t i = cp_begin; i < cp_end && i < cps.size(); ++i) {
    out += encode_utf8(cps[i]);
  }
  return out;
}

}  // namespace

PageAlignment align_page(const std::vector<AlignedElement>& elements) {
  PageAlignment page;
  page.placements.reserve(elements.size());
  std::size_t sgt_len = 0, ocr_len = 0;
  for (const AlignedElement& e : elements) {
    PageAlignment::Placement p;
    std::tie(p.sgt_begin, p.sgt_end) = append_joined(page.sgt_text, sgt_len, e.sgt_text);
    std::tie(p.ocr_begin, p.ocr_end) = append_joined(page.ocr_text, ocr_len, e.ocr_text);
    page.placements.push_back(p);
  }
  page.chars = edit_script(page.sgt_text, page.ocr_text);
  return page;
}

std::vector<AlignedSentence> segment_sentences(
    const std::vector<AlignedElement>& elements, const PageAlignment& page,
    const SentenceOptions& options, const std::string& article_id, int page_no) {
  std::vector<AlignedSentence> sentences;
  if (elements.empty()) return sentences;

  // Boundary decisions look at SGT texts only; empty texts (undetected or
  // Second hyphen parts) are transparent when peeking at the next element.
  std::vector<std::size_t> boundaries;  // index of the LAST element of a sentence
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!ends_with_terminal(elements[i].sgt_text)) continue;
    if (in_blocklist(elements[i].sgt_text, options)) continue;
    std::size_t next = i + 1;
    // A hyphen Second part belongs to the word that ended the sentence.
    std::size_t boundary = i;
    while (next < elements.size() && elements[next].mark_id == elements[i].mark_id) {
      boundary = next;
      ++next;
    }
    while (next < elements.size() && elements[next].sgt_text.empty()) ++next;
    if (next >= elements.size()) continue;
    if (starts_upper_or_digit(elements[next].sgt_text)) boundaries.push_back(boundary);
  }
  boundaries.push_back(elements.size() - 1);

  std::size_t first = 0;
  int index = 0;
  for (const std::size_t last : boundaries) {
    if (last < first) continue;
    AlignedSentence s;
    s.article_id = article_id;
    s.page = page_no;
    s.sentence_index = index++;

    // SGT range of the sentence in page code points; elements with empty
    // SGT text still belong to the sentence record.
    std::size_t sgt_begin = std::string::npos, sgt_end = 0;
    for (std::size_t i = first; i <= last; ++i) {
      s.element_positions.push_back(i);
      s.element_types.push_back({elements[i].etype, elements[i].hyphen_part});
      const auto& p = page.placements[i];
      if (p.sgt_begin == p.sgt_end) continue;  // empty contribution
      if (sgt_begin == std::string::npos) sgt_begin = p.sgt_begin;
      sgt_end = p.sgt_end;
    }
    if (sgt_begin == std::string::npos) sgt_begin = sgt_end = 0;

    s.sgt_text = slice_cp(page.sgt_text, sgt_begin, sgt_end);
    const TargetRange ocr = project_target_range(page.chars, sgt_begin, sgt_end);
    s.ocr_text = slice_cp(page.ocr_text, ocr.begin, ocr.end);
    s.edit = edit_script(s.sgt_text, s.ocr_text);
    sentences.push_back(std::move(s));
    first = last + 1;
  }
  return sentences;
}

void check_sentinel_collision(const std::vector<std::string>& word_sample,
                              const SentinelMap& map) {
  for (const std::string& sentinel : {map.math, map.citation, map.reference}) {
    for (const std::string& word : word_sample) {
      if (word.find(sentinel) != std::string::npos) {
        throw SentinelCollisionError("sentinel '" + sentinel +
                                     "' occurs in plain text sample word '" + word +
                                     "'");
      }
    }
  }
}

std::pair<std::string, std::string> sentinelize(
    const AlignedSentence& sentence, const std::vector<AlignedElement>& page_elements,
    const SentinelMap& map) {
  std::string fixed_sgt, fixed_ocr;
  const auto append = [](std::string& out, const std::string& piece) {
    if (piece.empty()) return;
    if (!out.empty()) out.push_back(' ');
    out += piece;
  };
  for (const std::size_t pos : sentence.element_positions) {
    const AlignedElement& e = page_elements[pos];
    const std::string* sentinel = nullptr;
    switch (e.etype) {
      case marker::SgtElement::Type::InlineMath:
        sentinel = &map.math;
        break;
      case marker::SgtElement::Type::Citation:
        sentinel = &map.citation;
        break;
      case marker::SgtElement::Type::Reference:
        sentinel = &map.reference;
        break;
      case marker::SgtElement::Type::Word:
        break;
    }
    if (sentinel == nullptr) {
      append(fixed_sgt, e.sgt_text);
      append(fixed_ocr, e.ocr_text);
    } else {
      if (!e.sgt_text.empty()) append(fixed_sgt, *sentinel);
      if (!e.ocr_text.empty()) append(fixed_ocr, *sentinel);
    }
  }
  return {fixed_sgt, fixed_ocr};
}

}  // namespace gtforge::align
