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

#include "tempdrt/compare.h"

#include <sstream>

#include "tempdrt/errors.h"
#include "tempdrt/fragment.h"
#include "tempdrt/oracle.h"
#include "tempdrt/render.h"

namespace tempdrt {

namespace {

const char *Verdict(bool b) { return b ? "TRUE" : "FALSE"; }

}  // namespace

const StrategyOutcome &ComparisonReport::Get(Strategy strategy) const {
  for (const StrategyOutcome &o : outcomes) {
    if (o.strategy == strategy) return o;
  }
  throw Error(std::string("no outcome for ") + StrategyName(strategy));
}

std::optional<bool> OracleVerdict(const std::string &text,
                                  const TemporalModel &model,
                                  const Rational &often_threshold) {
  ParsedDiscourse d = ResolvePronouns(ParseText(text));
  if (d.sentences.size() != 1 || !d.sentences[0].quantified()) {
    return std::nullopt;
  }
  auto query = QueryFor(d.sentences[0], often_threshold);
  if (!query) return std::nullopt;
  return OracleQuantify(query->quantifier, query->sub, query->main, query->tc,
                        model);
}

ComparisonReport CompareStrategies(const std::string &text,
                                   const TemporalModel &model,
                                   const CompareOptions &options) {
  ComparisonReport report;
  report.text = text;
  ParsedDiscourse d = ResolvePronouns(ParseText(text));
  for (Strategy s : {Strategy::kBaseline, Strategy::kSplit}) {
    StrategyOutcome o;
    o.strategy = s;
    try {
      o.drs = Construct(s, d, options.construction);
      o.result = Evaluate(o.drs, model, options.eval);
    } catch (const ConstructionError &e) {
      o.error = e.what();
    }
    report.outcomes.push_back(std::move(o));
  }
  report.oracle =
      OracleVerdict(text, model, options.construction.often_threshold);
  return report;
}

std::string FormatReport(const ComparisonReport &report,
                         const TemporalModel &model) {
  std::ostringstream out;
  out << "text: " << report.text << "\n";
  for (const StrategyOutcome &o : report.outcomes) {
    out << "\n== " << StrategyName(o.strategy) << " ==\n";
    if (o.error) {
      out << "construction error: " << *o.error << "\n";
      continue;
    }
    out << RenderBox(o.drs);
    out << "verdict: " << Verdict(o.result.truth) << "\n";
    if (o.result.truth) {
      out << "witness: " << FormatAssignment(o.result.witness, model) << "\n";
    } else if (o.result.counterexample) {
      out << "counterexample: "
          << FormatAssignment(*o.result.counterexample, model) << "\n";
    }
  }
  out << "\n== summary ==\n";
  for (const StrategyOutcome &o : report.outcomes) {
    out << StrategyName(o.strategy) << ": "
        << (o.error ? "ERROR" : Verdict(o.result.truth)) << "\n";
  }
  out << "oracle: " << (report.oracle ? Verdict(*report.oracle) : "n/a")
      << "\n";
  return out.str();
}

}  // namespace tempdrt
