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

#include "tempdrt/baseline.h"

#include "construct_util.h"
#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

using internal::ContinuesScope;
using internal::Hints;
using internal::Participants;

class BaselineBuilder {
 public:
  explicit BaselineBuilder(const ConstructionOptions &options)
      : options_(options), people_(&top_.drs) {
    top_.drs.universe.push_back(Marker::Now());
    top_.next_reference_index = 0;
  }

  Drs Build(const ParsedDiscourse &d) {
    for (size_t i = 0; i < d.sentences.size(); ++i) {
      const Sentence &s = d.sentences[i];
      if (s.quantified()) {
        std::vector<const Sentence *> rest;
        while (i + 1 < d.sentences.size() &&
               ContinuesScope(s, d.sentences[i + 1])) {
          rest.push_back(&d.sentences[++i]);
        }
        Quantified(s, rest);
      } else {
        Narrative(s);
      }
    }
    return std::move(top_.drs);
  }

  void Quantified(const Sentence &s, const std::vector<const Sentence *> &rest) {
    if (!s.connective) {
      throw ConstructionError("quantified sentence without a temporal clause");
    }
    if (!s.quantified()) {
      throw ConstructionError("sentence has no adverb of quantification");
    }
    RejectUnsupported(s);
    Register(s);
    const Clause &sub = *s.subordinate;
    bool past = IsPast(sub.tense);

    Marker r0 = NewReference(&top_);
    top_.drs.universe.push_back(r0);

    Drs ante;
    Marker e1 = NewEventuality(sub);
    Marker r1 = NewReference(&top_);
    ante.universe = {e1, r1};
    Connective tc = *s.connective;
    if (sub.aspect == Aspect::kEvent) {
      ante.Add(Rel2(Rel::kIncludedIn, e1, r0));
      if (past) ante.Add(Rel2(Rel::kPrecedes, e1, Marker::Now()));
      switch (tc) {
        case Connective::kWhen:
        case Connective::kWhenever:
          ante.Add(Rel2(Rel::kJustBefore, e1, r1));
          break;
        case Connective::kBefore:
          ante.Add(Rel2(Rel::kPrecedes, r1, e1));
          break;
        case Connective::kAfter:
          ante.Add(Rel2(Rel::kPrecedes, e1, r1));
          break;
      }
    } else {
      ante.Add(Rel2(Rel::kOverlaps, e1, r0));
      switch (tc) {
        case Connective::kWhen:
        case Connective::kWhenever:
          ante.Add(Rel2(Rel::kIncludedIn, r1, e1));
          break;
        case Connective::kBefore:
          ante.Add(Rel2(Rel::kPrecedes, r1, e1));
          break;
        case Connective::kAfter:
          ante.Add(Rel2(Rel::kPrecedes, e1, r1));
          break;
      }
    }
    if (past) ante.Add(Rel2(Rel::kPrecedes, r1, Marker::Now()));
    ante.Add(Desc(e1, sub.verb, people_.Args(sub)));

    BaselineState cons;
    cons.current_reference_time = r1;
    cons.next_reference_index = top_.next_reference_index;
    for (const Clause &c : s.main) Place(c, &cons, true);
    for (const Sentence *more : rest) {
      Register(*more);
      for (const Clause &c : more->main) Place(c, &cons, true);
    }
    top_.next_reference_index = cons.next_reference_index;

    Quantifier q = s.q_adverb == QAdverb::kOften
                       ? Quantifier::Often(options_.often_threshold)
                       : Quantifier::Every();
    top_.drs.Add(Duplex{std::move(ante), q, std::move(cons.drs)});
  }

 private:
  void RejectUnsupported(const Sentence &s) const {
    if (s.has_scoped()) {
      throw ConstructionError(
          "the reference-time analysis has no rule for nested temporal "
          "clauses");
    }
    auto check = [](const Clause &c) {
      if (IsPerfect(c.tense)) {
        throw ConstructionError(
            "the reference-time analysis has no rule for the perfect");
      }
    };
    if (s.subordinate) check(*s.subordinate);
    for (const Clause &c : s.main) check(c);
  }

  // Declares the names of a sentence in textual order.
  void Register(const Sentence &s) {
    auto clause = [&](const Clause &c) { people_.Args(c); };
    if (s.subordinate && s.subordinate_first) clause(*s.subordinate);
    for (const Clause &c : s.main) clause(c);
    if (s.subordinate && !s.subordinate_first) clause(*s.subordinate);
  }

  Marker NewReference(BaselineState *st) {
    return FreshMarker(Sort::kTime,
                       "r" + std::to_string(st->next_reference_index++));
  }

  Marker NewEventuality(const Clause &c) {
    if (c.aspect == Aspect::kEvent) return FreshMarker(Sort::kEvent, hints_.Next("e"));
    return FreshMarker(Sort::kState, hints_.Next("s"));
  }

  void EnsureReference(const Clause &first) {
    if (have_reference_) return;
    Marker r = NewReference(&top_);
    top_.drs.universe.push_back(r);
    if (IsPast(first.tense)) {
      top_.drs.Add(Rel2(Rel::kPrecedes, r, Marker::Now()));
    }
    top_.current_reference_time = r;
    top_.reference_used = false;
    have_reference_ = true;
  }

  void Narrative(const Sentence &s) {
    RejectUnsupported(s);
    Register(s);
    if (!s.connective) {
      EnsureReference(s.main.front());
      for (const Clause &c : s.main) Place(c, &top_, false);
      return;
    }
    const Clause &sub = *s.subordinate;
    EnsureReference(sub);
    Marker ev = Place(sub, &top_, false);
    Marker r = NewReference(&top_);
    top_.drs.universe.push_back(r);
    switch (*s.connective) {
      case Connective::kWhen:
      case Connective::kWhenever:
        if (sub.aspect == Aspect::kEvent) {
          top_.drs.Add(Rel2(Rel::kJustBefore, ev, r));
        } else {
          top_.drs.Add(Rel2(Rel::kIncludedIn, r, ev));
        }
        break;
      case Connective::kBefore:
        top_.drs.Add(Rel2(Rel::kPrecedes, r, ev));
        break;
      case Connective::kAfter:
        top_.drs.Add(Rel2(Rel::kPrecedes, ev, r));
        break;
    }
    if (IsPast(sub.tense)) top_.drs.Add(Rel2(Rel::kPrecedes, r, Marker::Now()));
    top_.current_reference_time = r;
    top_.reference_used = false;
    for (const Clause &c : s.main) Place(c, &top_, false);
  }

  // Interprets one clause against the current reference time of `st`.
  Marker Place(const Clause &c, BaselineState *st, bool in_scope) {
    if (IsPerfect(c.tense)) {
      throw ConstructionError(
          "the reference-time analysis has no rule for the perfect");
    }
    bool past = IsPast(c.tense);
    if (!past && !in_scope) {
      throw ConstructionError(
          "present tense needs an adverb of quantification in the "
          "reference-time analysis");
    }
    Marker ev = NewEventuality(c);
    if (c.aspect == Aspect::kEvent) {
      if (st->reference_used) AdvanceReferenceTime(st, st->last_event, past);
      st->drs.universe.push_back(ev);
      st->drs.Add(Rel2(Rel::kIncludedIn, ev, st->current_reference_time));
      st->reference_used = true;
      st->last_event = ev;
    } else {
      st->drs.universe.push_back(ev);
      st->drs.Add(Rel2(Rel::kIncludedIn, st->current_reference_time, ev));
    }
    st->drs.Add(Desc(ev, c.verb, people_.Args(c)));
    return ev;
  }

  ConstructionOptions options_;
  BaselineState top_;
  Participants people_;
  Hints hints_;
  bool have_reference_ = false;
};

}  // namespace

Marker AdvanceReferenceTime(BaselineState *st, const Marker &after_event,
                            bool past) {
  if (after_event.sort != Sort::kEvent) {
    throw ConstructionError("reference time can only advance past an event");
  }
  Marker r = FreshMarker(Sort::kTime,
                         "r" + std::to_string(st->next_reference_index++));
  st->drs.universe.push_back(r);
  st->drs.Add(Rel2(Rel::kJustBefore, st->current_reference_time, r));
  if (past) st->drs.Add(Rel2(Rel::kPrecedes, r, Marker::Now()));
  st->current_reference_time = r;
  st->reference_used = false;
  return r;
}

Drs BuildBaseline(const ParsedDiscourse &discourse,
                  const ConstructionOptions &options) {
  return BaselineBuilder(options).Build(discourse);
}

Drs BuildQuantifiedBaseline(const Sentence &sentence,
                            const ConstructionOptions &options) {
  BaselineBuilder builder(options);
  builder.Quantified(sentence, {});
  return builder.Build(ParsedDiscourse{});
}

}  // namespace tempdrt
