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

#include "gtforge/metrics/rates.hpp"

#include <algorithm>

#include "gtforge/align/edit_script.hpp"
#include "gtforge/common.hpp"

namespace gtforge::metrics {

double cer(std::string_view reference, std::string_view hypothesis) {
  const std::u32string ref = decode_utf8(reference);
  const std::u32string hyp = decode_utf8(hypothesis);
  const std::size_t denom = std::max<std::size_t>(1, ref.size());
  return static_cast<double>(align::edit_distance_u32(ref, hyp)) /
         static_cast<double>(denom);
}

double wer(std::string_view reference, std::string_view hypothesis) {
  const std::size_t ref_words = split_whitespace(reference).size();
  const std::size_t denom = std::max<std::size_t>(1, ref_words);
  return static_cast<double>(align::word_edit_distance(reference, hypothesis)) /
         static_cast<double>(denom);
}

}  // namespace gtforge::metrics
