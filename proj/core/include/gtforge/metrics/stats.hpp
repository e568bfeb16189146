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

#ifndef GTFORGE_METRICS_STATS_HPP_
#define GTFORGE_METRICS_STATS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "gtforge/align/edit_script.hpp"

namespace gtforge::metrics {

struct OpCounts {
  std::uint64_t match = 0;
  std::uint64_t replace = 0;
  std::uint64_t del = 0;
  std::uint64_t insert = 0;

  std::uint64_t non_match() const { return replace + del + insert; }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Shares of the non-match operations, in percent; they sum to 100 whenever
// any non-match operation exists.
struct OpShares {
  double replace_pct = 0;
  double delete_pct = 0;
  double insert_pct = 0;
};

// Accumulates edit-operation counts, character and word confusion and corpus
// totals from sentence-level edit scripts. Shards merge associatively:
// merge(stats(S1), stats(S2)) == stats(S1 then S2).
class CorpusStats {
 public:
  void add_sentence(const align::EditScript& script);
  void note_page(const std::string& article_id, int page);
  void merge(const CorpusStats& other);

  const OpCounts& ops() const { return ops_; }
  OpShares shares() const;

  // Aligned code-point pairs keyed by (sgt, ocr); Match ops land on the
  // diagonal, Replace ops off it.
  const std::map<std::pair<std::string, std::string>, std::uint64_t>& char_confusion()
      const {
    return char_confusion_;
  }
  // Aligned (sgt word, ocr slice) pairs; the emitter keeps only pairs whose
  // SGT word ranks in the top K by frequency.
  const std::map<std::pair<std::string, std::string>, std::uint64_t>& word_confusion()
      const {
    return word_confusion_;
  }
  const std::map<std::string, std::uint64_t>& sgt_word_frequency() const {
    return sgt_word_frequency_;
  }

  std::uint64_t sentences() const { return sentences_; }
  std::uint64_t character_pairs() const { return character_pairs_; }
  std::size_t pages() const { return pages_.size(); }

 private:
  OpCounts ops_;
  std::map<std::pair<std::string, std::string>, std::uint64_t> char_confusion_;
  std::map<std::pair<std::string, std::string>, std::uint64_t> word_confusion_;
  std::map<std::string, std::uint64_t> sgt_word_frequency_;
  std::set<std::pair<std::string, int>> pages_;
  std::uint64_t sentences_ = 0;
  std::uint64_t character_pairs_ = 0;
};

// CSV with header sgt,ocr,count, sorted by count descending then
// lexicographically.
std::string char_confusion_csv(const CorpusStats& stats);
std::string word_confusion_csv(const CorpusStats& stats, std::size_t top_k = 1000);

// Human-readable totals and op shares.
std::string stats_summary_text(const CorpusStats& stats);

}  // namespace gtforge::metrics

#endif  // GTFORGE_METRICS_STATS_HPP_
