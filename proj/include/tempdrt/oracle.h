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

// Reference truth conditions for quantified temporal sentences, computed
// directly on eventuality traces without building a DRS.
//
// A sentence "Q, when/before/after S, M" is true iff Q-many subordinate
// eventualities e have some main eventuality e' with (e, e') in the
// connective's temporal relation. The relation tables below are the
// closed forms of the location-time conditions used by the split
// construction:
//
//   before  event main: e' ends before e starts
//           state main: e' starts before e starts
//   after   event main: e' starts after e ends
//           state main: e' ends after e ends
//   when    event sub, event main: e' starts after e ends
//           event sub, state main: e lies within e'
//           state sub, event main: e' lies within e
//           state sub, state main: always

#ifndef TEMPDRT_ORACLE_H_
#define TEMPDRT_ORACLE_H_

#include <optional>
#include <string>
#include <vector>

#include "tempdrt/drs.h"
#include "tempdrt/fragment.h"
#include "tempdrt/model.h"

namespace tempdrt {

// The denotation of a clause: every model eventuality with this predicate
// and these arguments.
struct ClauseQuery {
  std::string predicate;
  std::vector<std::string> args;  // individual names
  Aspect aspect = Aspect::kEvent;

  std::vector<const ModelEventuality *> Select(const TemporalModel &m) const;
};

// Whether (sub, main) stand in the relation the connective demands.
bool TcHolds(Connective tc, const ModelEventuality &sub,
             const ModelEventuality &main);

bool OracleQuantify(const Quantifier &q, const ClauseQuery &sub,
                    const ClauseQuery &main, Connective tc,
                    const TemporalModel &m);

// Builds the queries for the clauses of a resolved sentence with a
// subordinate clause and a single main clause. Returns nullopt for other
// shapes.
struct SentenceQuery {
  Quantifier quantifier;
  ClauseQuery sub;
  ClauseQuery main;
  Connective tc = Connective::kWhen;
};
std::optional<SentenceQuery> QueryFor(const Sentence &sentence,
                                      const Rational &often_threshold);

}  // namespace tempdrt

#endif  // TEMPDRT_ORACLE_H_
