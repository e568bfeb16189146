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

#ifndef GTFORGE_ALIGN_EDIT_SCRIPT_HPP_
#define GTFORGE_ALIGN_EDIT_SCRIPT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gtforge::align {

// One character-level alignment operation. `a` is the source code point
// (Match/Replace/Delete), `b` the target code point (Replace/Insert);
// Match carries the shared code point in both.
struct EditOp {
  enum class Kind { Match, Replace, Delete, Insert };
  Kind kind = Kind::Match;
  char32_t a = 0;
  char32_t b = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
  std::vector<EditOp> ops;
  std::size_t distance = 0;  // count of non-Match ops; minimal (Levenshtein)
};

// Minimal unit-cost script with a deterministic backtrace: at equal cost the
// preference is Match > Replace > Delete > Insert. Operates on code points.
EditScript edit_script(std::string_view source, std::string_view target);
EditScript edit_script_u32(const std::u32string& source, const std::u32string& target);

// Distance-only fast paths (two-row DP); agree with edit_script().distance.
std::size_t edit_distance(std::string_view a, std::string_view b);
std::size_t edit_distance_u32(const std::u32string& a, const std::u32string& b);

// Distance over whitespace-delimited tokens.
std::size_t word_edit_distance(std::string_view a, std::string_view b);

// Replays the script against its source; throws if the ops do not apply.
std::string apply_script(const EditScript& script, std::string_view source);

// Projects a half-open source code-point range onto the target through the
// script. The begin cut is lazy (target inserts at the boundary fall inside
// the range) and the end cut is greedy (boundary inserts are kept as well),
// so adjacent ranges separated by one source character never overlap.
struct TargetRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};
TargetRange project_target_range(const EditScript& script, std::size_t src_begin,
                                 std::size_t src_end);

}  // namespace gtforge::align

#endif  // GTFORGE_ALIGN_EDIT_SCRIPT_HPP_
