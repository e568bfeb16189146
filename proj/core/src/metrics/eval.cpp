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

#include "gtforge/metrics/eval.hpp"

#include "gtforge/metrics/rates.hpp"

namespace gtforge::metrics {

EvalReport eval_report(const std::vector<EvalTriple>& triples, MetricKind metric) {
  if (triples.empty()) throw EmptyInputError();

  const auto rate = metric == MetricKind::Cer ? cer : wer;
  EvalReport report;
  report.n_instances = triples.size();
  double sum_before = 0, sum_after = 0, sum_improvement = 0;
  std::size_t improved = 0, with_improvement_defined = 0;

  for (const EvalTriple& t : triples) {
    const double before = rate(t.reference, t.before_text);
    const double after = rate(t.reference, t.after_text);
    sum_before += before;
    sum_after += after;
    if (after < before) ++improved;

    if (before > 0) {
      sum_improvement += 100.0 * (before - after) / before;
      ++with_improvement_defined;
    } else if (after == 0) {
      // 0 -> 0: no error before or after, improvement 0 by definition.
      ++with_improvement_defined;
    } else {
      ++report.undefined_improvement;
    }
  }

  const double n = static_cast<double>(triples.size());
  report.mean_before = 100.0 * sum_before / n;
  report.mean_after = 100.0 * sum_after / n;
  report.mean_improvement = with_improvement_defined > 0
                                ? sum_improvement / with_improvement_defined
                                : 0.0;
  report.percent_improved = 100.0 * static_cast<double>(improved) / n;
  return report;
}

}  // namespace gtforge::metrics
