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

// Reference-time DRS construction in the Hinrichs/Partee style.
//
// Narrative clauses are interpreted against a current reference time r. An
// event is included in r; once r holds an event, the next event first moves
// r to a fresh time just after it (r ≼ r'). A state includes r and leaves it
// in place. The discourse-initial sentence introduces r0 before n.
//
// Quantified sentences split the box. The subordinate eventuality e1 and the
// updated reference time r1 both land in the antecedent:
//
//   when, whenever   e1 ≼ r1
//   before           r1 < e1
//   after            e1 < r1
//
// and the main clause is interpreted against r1 in the consequent. With
// "before" and "after" this lets the duplex quantify over every time r1
// before (after) e1, which is the known defect of this analysis; it is
// reproduced here on purpose.

#ifndef TEMPDRT_BASELINE_H_
#define TEMPDRT_BASELINE_H_

#include "tempdrt/construct.h"
#include "tempdrt/drs.h"
#include "tempdrt/fragment.h"

namespace tempdrt {

struct BaselineState {
  Marker current_reference_time;
  Drs drs;  // the box receiving conditions
  // True once an event has been placed in the current reference time.
  bool reference_used = false;
  Marker last_event;             // most recent event placed, if any
  int next_reference_index = 1;  // display numbering of reference times
};

// Adds a fresh time r' with r ≼ r' (and r' < n when `past`), declares it in
// st->drs and makes it current. Throws ConstructionError unless
// `after_event` is an event marker.
Marker AdvanceReferenceTime(BaselineState *st, const Marker &after_event,
                            bool past);

// Throws ConstructionError for present-tense clauses outside quantified
// sentences, for the perfect, and for nested temporal constructions.
Drs BuildBaseline(const ParsedDiscourse &discourse,
                  const ConstructionOptions &options = {});

// The DRS of one quantified sentence on its own. Throws ConstructionError if
// the sentence has no temporal clause.
Drs BuildQuantifiedBaseline(const Sentence &sentence,
                            const ConstructionOptions &options = {});

}  // namespace tempdrt

#endif  // TEMPDRT_BASELINE_H_
