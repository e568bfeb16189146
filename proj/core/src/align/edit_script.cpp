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

#include "gtforge/align/edit_script.hpp"

#include <algorithm>
#include <cstdint>

#include "gtforge/common.hpp"

namespace gtforge::align {

namespace {

// Generic two-row Levenshtein distance over any comparable sequence.
template <typename Seq>
std::size_t distance_two_row(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[m];
}

}  // namespace

EditScript edit_script_u32(const std::u32string& source, const std::u32string& target) {
  const std::size_t n = source.size(), m = target.size();

  // Full matrix so the backtrace can apply the pinned tie-breaking order.
  std::vector<std::uint32_t> d((n + 1) * (m + 1));
  const auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return d[i * (m + 1) + j];
  };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t sub =
          at(i - 1, j - 1) + (source[i - 1] == target[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  EditScript script;
  script.distance = at(n, m);
  script.ops.reserve(std::max(n, m));
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    // Preference at equal cost: Match > Replace > Delete > Insert.
    if (i > 0 && j > 0 && source[i - 1] == target[j - 1] &&
        at(i, j) == at(i - 1, j - 1)) {
      script.ops.push_back({EditOp::Kind::Match, source[i - 1], source[i - 1]});
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      script.ops.push_back({EditOp::Kind::Replace, source[i - 1], target[j - 1]});
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      script.ops.push_back({EditOp::Kind::Delete, source[i - 1], 0});
      --i;
    } else {
      script.ops.push_back({EditOp::Kind::Insert, 0, target[j - 1]});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

EditScript edit_script(std::string_view source, std::string_view target) {
  return edit_script_u32(decode_utf8(source), decode_utf8(target));
}

std::size_t edit_distance_u32(const std::u32string& a, const std::u32string& b) {
  return distance_two_row(a, b);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return distance_two_row(decode_utf8(a), decode_utf8(b));
}

std::size_t word_edit_distance(std::string_view a, std::string_view b) {
  const std::vector<std::string_view> ta = split_whitespace(a);
  const std::vector<std::string_view> tb = split_whitespace(b);
  return distance_two_row(ta, tb);
}

std::string apply_script(const EditScript& script, std::string_view source) {
  const std::u32string src = decode_utf8(source);
  std::u32string out;
  std::size_t i = 0;
  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditOp::Kind::Match:
        if (i >= src.size() || src[i] != op.a) throw Error("script does not match source");
        out.push_back(src[i++]);
        break;
      case EditOp::Kind::Replace:
        if (i >= src.size() || src[i] != op.a) throw Error("script does not match source");
        out.push_back(op.b);
        ++i;
        break;
      case EditOp::Kind::Delete:
        if (i >= src.size() || src[i] != op.a) throw Error("script does not match source");
        ++i;
        break;
      case EditOp::Kind::Insert:
        out.push_back(op.b);
        break;
    }
  }
  if (i != src.size()) throw Error("script does not consume the whole source");
  std::string bytes;
  for (char32_t cp : out) bytes += encode_utf8(cp);
  return bytes;
}

TargetRange project_target_range(const EditScript& script, std::size_t src_begin,
                                 std::size_t src_end) {
  TargetRange range;
  std::size_t i = 0, j = 0;
  bool begin_found = false;
  for (const EditOp& op : script.ops) {
    if (!begin_found && i >= src_begin) {
      range.begin = j;
      begin_found = true;
    }
    const bool consumes_source = op.kind != EditOp::Kind::Insert;
    if (consumes_source && i >= src_end) break;
    if (consumes_source) ++i;
    if (op.kind != EditOp::Kind::Delete) ++j;
  }
  if (!begin_found) range.begin = j;
  range.end = std::max(j, range.begin);
  return range;
}

}  // namespace gtforge::align
