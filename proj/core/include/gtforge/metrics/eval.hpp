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

#ifndef GTFORGE_METRICS_EVAL_HPP_
#define GTFORGE_METRICS_EVAL_HPP_

#include <string>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::metrics {

enum class MetricKind { Cer, Wer };

struct EvalTriple {
  std::string reference;
  std::string before_text;
  std::string after_text;
};

// Before/after error-rate statistics over a set of text triples. All values
// are percentages; <I> is the arithmetic mean of per-instance relative
// improvements 100*(B-A)/B.
struct EvalReport {
  double mean_before = 0;       // <B>
  double mean_after = 0;        // <A>
  double mean_improvement = 0;  // <I>
  double percent_improved = 0;  // share of instances with A < B, strictly
  std::size_t n_instances = 0;
  // Instances with B == 0 and A > 0: relative improvement is undefined, so
  // they count as not improved and are excluded from the <I> mean.
  std::size_t undefined_improvement = 0;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("eval_report requires at least one triple") {}
};

EvalReport eval_report(const std::vector<EvalTriple>& triples, MetricKind metric);

}  // namespace gtforge::metrics

#endif  // GTFORGE_METRICS_EVAL_HPP_
