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

// Model checking DRSs against finite interval event models.
//
// A DRS is true in a model iff its top box has an embedding: a sort-respecting
// assignment of its universe that verifies every condition. Time markers range
// over all subintervals of the timeline unless a "t = loc(e)" condition pins
// them; the utterance point maps to [now, now].
//
// Two kinds of state have no model entity of their own and get a derived
// trace instead: the state described by a complex-state condition spans the
// whole timeline, and the result state of "s: perf(e)" runs from just after
// e ends to the end of the timeline.
//
// Top-level time markers that occur in no atomic top-level condition (the
// "r0" of quantified sentences, which only inner boxes mention) are fixed by
// context to the whole timeline rather than chosen existentially.

#ifndef TEMPDRT_EVAL_H_
#define TEMPDRT_EVAL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempdrt/drs.h"
#include "tempdrt/interval.h"
#include "tempdrt/model.h"

namespace tempdrt {

struct EvalConfig {
  // Width of the "just before" window: a ≼ b iff b starts within `delta`
  // points after a ends. 1 is strict adjacency.
  int delta = 1;
};

struct Value {
  enum class Kind { kIndividual, kEventuality, kDerivedState, kInterval };
  Kind kind = Kind::kInterval;
  int index = -1;     // individual or eventuality index
  Interval interval;  // trace of eventualities, extent of times

  bool operator==(const Value &) const = default;
};

using Assignment = std::map<Marker, Value>;

struct EvalResult {
  bool truth = false;
  // A top-level embedding when true.
  Assignment witness;
  // When false: an antecedent embedding that could not be extended to the
  // consequent, if a duplex condition was the obstacle.
  std::optional<Assignment> counterexample;
};

// Truth of one condition under an assignment covering its free markers.
// Throws EvalError on an unassigned marker.
bool VerifyCondition(const Condition &c, const Assignment &f,
                     const TemporalModel &m, const EvalConfig &config = {});

// All extensions of `base` to the universe of `drs` that verify its
// conditions.
std::vector<Assignment> EnumerateEmbeddings(const Drs &drs,
                                            const Assignment &base,
                                            const TemporalModel &m,
                                            const EvalConfig &config = {});

// every: each antecedent embedding extends to the consequent. often(θ): the
// extending fraction exceeds θ. Both are true when the antecedent has no
// embedding.
bool EvaluateDuplex(const Duplex &dx, const Assignment &f,
                    const TemporalModel &m, const EvalConfig &config = {});

EvalResult Evaluate(const Drs &drs, const TemporalModel &m,
                    const EvalConfig &config = {});

// "x = john, e1 = p1 phone(john) [10,12], t = [10,12]", in marker order.
std::string FormatAssignment(const Assignment &f, const TemporalModel &m);

}  // namespace tempdrt

#endif  // TEMPDRT_EVAL_H_
