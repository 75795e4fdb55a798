// Copyright 2026 The tempdrt Authors.
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

// Side-by-side construction and evaluation of one text under both
// strategies, checked against the trace-level oracle.

#ifndef TEMPDRT_COMPARE_H_
#define TEMPDRT_COMPARE_H_

#include <optional>
#include <string>
#include <vector>

#include "tempdrt/construct.h"
#include "tempdrt/drs.h"
#include "tempdrt/eval.h"
#include "tempdrt/model.h"

namespace tempdrt {

struct CompareOptions {
  ConstructionOptions construction;
  EvalConfig eval;
};

struct StrategyOutcome {
  Strategy strategy = Strategy::kSplit;
  std::optional<std::string> error;  // construction failed
  Drs drs;
  EvalResult result;
};

struct ComparisonReport {
  std::string text;
  std::vector<StrategyOutcome> outcomes;  // baseline, then split
  // Unset when the text is not a single quantified sentence the oracle
  // covers.
  std::optional<bool> oracle;

  const StrategyOutcome &Get(Strategy strategy) const;
};

// Parse errors propagate; construction errors are recorded per strategy.
ComparisonReport CompareStrategies(const std::string &text,
                                   const TemporalModel &model,
                                   const CompareOptions &options = {});

// The oracle verdict for a text, if it has one.
std::optional<bool> OracleVerdict(const std::string &text,
                                  const TemporalModel &model,
                                  const Rational &often_threshold);

// Renderings, verdicts, witnesses and counterexamples.
std::string FormatReport(const ComparisonReport &report,
                         const TemporalModel &model);

}  // namespace tempdrt

#endif  // TEMPDRT_COMPARE_H_
