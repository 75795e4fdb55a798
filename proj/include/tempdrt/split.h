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

// Split-reference-time DRS construction.
//
// The single reference time of the Hinrichs/Partee analysis is replaced by
// three mechanisms:
//
//   location time  Each main-clause eventuality gets a time t' locating it
//                  (events: e ⊆ t'; states: s ○ t'). Past tense adds t' < n;
//                  present tense locates at n.
//   Rpt            Narrative progression. Events follow the current Rpt,
//                  states include it. Rpt assignments are bookkeeping and
//                  play no part in evaluation.
//   perf           The perfect describes the consequent state s of an event
//                  e, with e ⊃⊂ s.
//
// A temporal clause contributes its event time t = loc(e), which the
// connective relates to the main clause's location time (see TcRelation).
// Quantified sentences become a complex state whose description is the
// duplex condition; the subordinate markers live in the antecedent and the
// main-clause markers, location time included, in the consequent.

#ifndef TEMPDRT_SPLIT_H_
#define TEMPDRT_SPLIT_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tempdrt/construct.h"
#include "tempdrt/drs.h"
#include "tempdrt/fragment.h"

namespace tempdrt {

// How a connective relates the subordinate event time t to the main
// location time t'.
//
//   before                       t' < t
//   after                        t < t'
//   when  event sub, event main  t ≼ t'   (t' starts shortly after t)
//         event sub, state main  t ⊆ t', and the state includes t'
//         state sub, event main  t' ⊆ t
//         state sub, state main  t' ○ t
//
// "whenever" relates times like "when".
struct TcSchema {
  Connective connective = Connective::kWhen;
  Aspect sub_aspect = Aspect::kEvent;
  Aspect main_aspect = Aspect::kEvent;
  Rel rel = Rel::kPrecedes;
  bool main_first = false;  // t' is the left operand
  // The main state is located by t' ⊆ s' instead of s' ○ t'.
  bool state_includes_location = false;

  TemporalRelation Instantiate(const Marker &sub_time,
                               const Marker &main_location) const;
};

TcSchema TcRelation(Connective connective, Aspect sub_aspect,
                    Aspect main_aspect);

struct Nucleus {
  Marker culmination_event;
  Marker consequent_state;
  TemporalRelation abut_condition;  // culmination ⊃⊂ consequent state
};

struct PerfResult {
  Nucleus nucleus;
  // Universe {e, s}; conditions: the description of e, e ⊃⊂ s, s: perf(e).
  // Tense conditions on s are left to the caller.
  Drs drs;
};

// Throws ConstructionError unless `clause` is a perfect of an event verb.
PerfResult ApplyPerf(const Clause &clause, const std::vector<Marker> &args,
                     const std::string &event_hint = "e",
                     const std::string &state_hint = "s");

using ArgResolver = std::function<std::vector<Marker>(const Clause &)>;

// The subordinate event time the first clause is anchored to.
struct ScopeAnchor {
  TcSchema schema;  // main_aspect is taken from the first clause
  Marker sub_time;
};

// Appends a sequence of clauses to a duplex consequent. The first clause is
// located by the anchor; each later event follows the previous one
// (e_k < e_k+1, with Rpt := e_k recorded in between) and each later state
// includes it. No tense conditions are added inside quantified scope.
Drs NarrativeInScope(const std::vector<Clause> &clauses, Drs consequent,
                     const ArgResolver &args,
                     const std::optional<ScopeAnchor> &anchor = std::nullopt);

Drs BuildSplit(const ParsedDiscourse &discourse,
               const ConstructionOptions &options = {});

}  // namespace tempdrt

#endif  // TEMPDRT_SPLIT_H_
