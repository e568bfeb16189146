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

#ifndef GTFORGE_METRICS_RATES_HPP_
#define GTFORGE_METRICS_RATES_HPP_

#include <string_view>

namespace gtforge::metrics {

// Character error rate: character-level edit distance over
// max(1, reference length). cer("", "") == 0; cer("ab", "") == 1.
double cer(std::string_view reference, std::string_view hypothesis);

// Word error rate over whitespace-delimited tokens.
double wer(std::string_view reference, std::string_view hypothesis);

}  // namespace gtforge::metrics

#endif  // GTFORGE_METRICS_RATES_HPP_
