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

#include "tempdrt/oracle.h"

#include "tempdrt/interval.h"

namespace tempdrt {

std::vector<const ModelEventuality *> ClauseQuery::Select(
    const TemporalModel &m) const {
  std::vector<const ModelEventuality *> out;
  for (const ModelEventuality &e : m.eventualities) {
    if (e.kind != aspect || ToLower(e.predicate) != ToLower(predicate) ||
        e.args.size() != args.size()) {
      continue;
    }
    bool ok = true;
    for (size_t i = 0; i < args.size() && ok; ++i) {
      ok = ToLower(e.args[i]) == ToLower(args[i]);
    }
    if (ok) out.push_back(&e);
  }
  return out;
}

bool TcHolds(Connective tc, const ModelEventuality &sub,
             const ModelEventuality &main) {
  const Interval &s = sub.trace, &e = main.trace;
  bool main_event = main.kind == Aspect::kEvent;
  switch (tc) {
    case Connective::kBefore:
      return main_event ? Precedes(e, s) : e.start < s.start;
    case Connective::kAfter:
      return main_event ? Precedes(s, e) : e.end > s.end;
    case Connective::kWhen:
    case Connective::kWhenever:
      if (sub.kind == Aspect::kEvent) {
        return main_event ? Precedes(s, e) : IncludedIn(s, e);
      }
      return main_event ? IncludedIn(e, s) : true;
  }
  return false;
}

bool OracleQuantify(const Quantifier &q, const ClauseQuery &sub,
                    const ClauseQuery &main, Connective tc,
                    const TemporalModel &m) {
  std::vector<const ModelEventuality *> subs = sub.Select(m);
  std::vector<const ModelEventuality *> mains = main.Select(m);
  long total = 0, covered = 0;
  for (const ModelEventuality *s : subs) {
    total++;
    for (const ModelEventuality *e : mains) {
      if (TcHolds(tc, *s, *e)) {
        covered++;
        break;
      }
    }
  }
  if (total == 0) return true;
  if (q.kind == Quantifier::Kind::kEvery) return covered == total;
  return covered * q.threshold.den > q.threshold.num * total;
}

std::optional<SentenceQuery> QueryFor(const Sentence &sentence,
                                      const Rational &often_threshold) {
  if (!sentence.connective || sentence.main.size() != 1 ||
      sentence.has_scoped() || IsPerfect(sentence.subordinate->tense) ||
      IsPerfect(sentence.main[0].tense)) {
    return std::nullopt;
  }
  auto query = [](const Clause &c) {
    ClauseQuery q;
    q.predicate = c.verb;
    q.aspect = c.aspect;
    if (c.subject.kind != RefExpr::Kind::kExpletive) {
      q.args.push_back(c.subject.lemma);
    }
    for (const RefExpr &o : c.objects) q.args.push_back(o.lemma);
    return q;
  };
  SentenceQuery out;
  out.quantifier = sentence.q_adverb == QAdverb::kOften
                       ? Quantifier::Often(often_threshold)
                       : Quantifier::Every();
  out.sub = query(*sentence.subordinate);
  out.main = query(sentence.main[0]);
  out.tc = *sentence.connective;
  return out;
}

}  // namespace tempdrt
