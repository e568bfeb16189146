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

#include "gtforge/metrics/stats.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::metrics {

namespace {

// RFC 4180 style quoting; confusion keys can contain commas and quotes.
std::string csv_field(const std::string& value) {
  const bool needs_quote =
      value.find_first_of(",\"\n\r") != std::string::npos || value.empty();
  if (!needs_quote) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

using PairCount = std::pair<std::pair<std::string, std::string>, std::uint64_t>;

std::vector<PairCount> sorted_by_count(
    const std::map<std::pair<std::string, std::string>, std::uint64_t>& counts) {
  std::vector<PairCount> rows(counts.begin(), counts.end());
  std::sort(rows.begin(), rows.end(), [](const PairCount& a, const PairCount& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return rows;
}

std::string format_pct(double v) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

void CorpusStats::add_sentence(const align::EditScript& script) {
  ++sentences_;
  character_pairs_ += script.ops.size();

  std::u32string source, target;
  for (const align::EditOp& op : script.ops) {
    switch (op.kind) {
      case align::EditOp::Kind::Match:
        ++ops_.match;
        ++char_confusion_[{encode_utf8(op.a), encode_utf8(op.a)}];
        source.push_back(op.a);
        target.push_back(op.b);
        break;
      case align::EditOp::Kind::Replace:
        ++ops_.replace;
        ++char_confusion_[{encode_utf8(op.a), encode_utf8(op.b)}];
        source.push_back(op.a);
        target.push_back(op.b);
        break;
      case align::EditOp::Kind::Delete:
        ++ops_.del;
        source.push_back(op.a);
        break;
      case align::EditOp::Kind::Insert:
        ++ops_.insert;
        target.push_back(op.b);
        break;
    }
  }

  // Word pairs: each whitespace-delimited source word against the target
  // slice its characters align to.
  std::size_t i = 0;
  while (i < source.size()) {
    while (i < source.size() && source[i] == U' ') ++i;
    const std::size_t begin = i;
    while (i < source.size() && source[i] != U' ') ++i;
    if (i == begin) continue;
    std::string sgt_word;
    for (std::size_t k = begin; k < i; ++k) sgt_word += encode_utf8(source[k]);
    const align::TargetRange range = project_target_range(script, begin, i);
    std::string ocr_word;
    for (std::size_t k = range.begin; k < range.end && k < target.size(); ++k) {
      ocr_word += encode_utf8(target[k]);
    }
    ++sgt_word_frequency_[sgt_word];
    ++word_confusion_[{std::move(sgt_word), std::move(ocr_word)}];
  }
}

void CorpusStats::note_page(const std::string& article_id, int page) {
  pages_.insert({article_id, page});
}

void CorpusStats::merge(const CorpusStats& other) {
  ops_.match += other.ops_.match;
  ops_.replace += other.ops_.replace;
  ops_.del += other.ops_.del;
  ops_.insert += other.ops_.insert;
  for (const auto& [key, count] : other.char_confusion_) char_confusion_[key] += count;
  for (const auto& [key, count] : other.word_confusion_) word_confusion_[key] += count;
  for (const auto& [key, count] : other.sgt_word_frequency_) {
    sgt_word_frequency_[key] += count;
  }
  pages_.insert(other.pages_.begin(), other.pages_.end());
  sentences_ += other.sentences_;
  character_pairs_ += other.character_pairs_;
}

OpShares CorpusStats::shares() const {
  OpShares shares;
  const std::uint64_t total = ops_.non_match();
  if (total == 0) return shares;
  shares.replace_pct = 100.0 * static_cast<double>(ops_.replace) / total;
  shares.delete_pct = 100.0 * static_cast<double>(ops_.del) / total;
  shares.insert_pct = 100.0 * static_cast<double>(ops_.insert) / total;
  return shares;
}

std::string char_confusion_csv(const CorpusStats& stats) {
  std::ostringstream os;
  os << "sgt,ocr,count\n";
  for (const PairCount& row : sorted_by_count(stats.char_confusion())) {
    os << csv_field(row.first.first) << ',' << csv_field(row.first.second) << ','
       << row.second << '\n';
  }
  return os.str();
}

std::string word_confusion_csv(const CorpusStats& stats, std::size_t top_k) {
  // Keep only pairs whose SGT word is among the top_k most frequent.
  std::vector<std::pair<std::string, std::uint64_t>> words(
      stats.sgt_word_frequency().begin(), stats.sgt_word_frequency().end());
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (words.size() > top_k) words.resize(top_k);
  std::set<std::string> kept;
  for (const auto& [word, count] : words) kept.insert(word);

  std::ostringstream os;
  os << "sgt,ocr,count\n";
  for (const PairCount& row : sorted_by_count(stats.word_confusion())) {
    if (!kept.contains(row.first.first)) continue;
    os << csv_field(row.first.first) << ',' << csv_field(row.first.second) << ','
       << row.second << '\n';
  }
  return os.str();
}

std::string stats_summary_text(const CorpusStats& stats) {
  const OpCounts& ops = stats.ops();
  const OpShares shares = stats.shares();
  std::ostringstream os;
  os << "pages:            " << stats.pages() << '\n';
  os << "sentences:        " << stats.sentences() << '\n';
  os << "character pairs:  " << stats.character_pairs() << '\n';
  os << "edit operations:  match=" << ops.match << " replace=" << ops.replace
     << " delete=" << ops.del << " insert=" << ops.insert << '\n';
  if (ops.non_match() > 0) {
    os << "non-match shares: replace=" << format_pct(shares.replace_pct)
       << "% delete=" << format_pct(shares.delete_pct)
       << "% insert=" << format_pct(shares.insert_pct) << "%\n";
  } else {
    os << "non-match shares: none\n";
  }
  return os.str();
}

}  // namespace gtforge::metrics
