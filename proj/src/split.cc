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

#include "tempdrt/split.h"

#include "construct_util.h"
#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

using internal::ContinuesScope;
using internal::Hints;
using internal::Participants;

// The eventuality a clause describes, with the conditions that introduce it.
struct Described {
  Marker ev;
  Aspect aspect;  // the perfect describes a state
  Drs drs;
};

Described Describe(const Clause &c, const std::vector<Marker> &args,
                   Hints *hints) {
  if (IsPerfect(c.tense)) {
    PerfResult perf = ApplyPerf(c, args, hints->Next("e"), hints->Next("s"));
    return {perf.nucleus.consequent_state, Aspect::kState, std::move(perf.drs)};
  }
  Described d;
  d.aspect = c.aspect;
  d.ev = c.aspect == Aspect::kEvent ? FreshMarker(Sort::kEvent, hints->Next("e"))
                                    : FreshMarker(Sort::kState, hints->Next("s"));
  d.drs.universe.push_back(d.ev);
  d.drs.Add(Desc(d.ev, c.verb, args));
  return d;
}

// Places clauses one after another in a box, tracking the Rpt.
class Narrator {
 public:
  Narrator(Drs *box, Hints *hints, const ArgResolver &args, bool tensed)
      : box_(box), hints_(hints), args_(args), tensed_(tensed) {}

  // Places one clause. `anchor` positions it relative to a temporal clause;
  // otherwise the Rpt does, if there is one.
  void Place(const Clause &c, const ScopeAnchor *anchor) {
    if (rpt_ && !rpt_emitted_) {
      box_->Add(RptAssign{*rpt_});
      rpt_emitted_ = true;
    }
    Described d = Describe(c, args_(c), hints_);
    std::optional<TcSchema> schema;
    if (anchor != nullptr) {
      schema = TcRelation(anchor->schema.connective, anchor->schema.sub_aspect,
                          d.aspect);
    }
    bool present = tensed_ && !IsPast(c.tense);

    Drs located;
    if (present && anchor == nullptr) {
      // The location time coincides with the utterance point.
      if (d.aspect == Aspect::kEvent) {
        located.Add(Rel2(Rel::kIncludedIn, d.ev, Marker::Now()));
      } else {
        located.Add(Rel2(Rel::kIncludedIn, Marker::Now(), d.ev));
      }
    } else {
      Marker t = FreshMarker(Sort::kTime, hints_->Next("t"));
      located.universe.push_back(t);
      if (d.aspect == Aspect::kEvent) {
        located.Add(Rel2(Rel::kIncludedIn, d.ev, t));
      } else if (schema && schema->state_includes_location) {
        located.Add(Rel2(Rel::kIncludedIn, t, d.ev));
      } else {
        located.Add(Rel2(Rel::kOverlaps, d.ev, t));
      }
      if (schema) {
        located.Add(Temporal{schema->Instantiate(anchor->sub_time, t)});
      }
      if (tensed_ && IsPast(c.tense)) {
        located.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
      }
    }
    if (!schema && rpt_) {
      if (d.aspect == Aspect::kEvent) {
        located.Add(Rel2(Rel::kPrecedes, *rpt_, d.ev));
      } else {
        located.Add(Rel2(Rel::kIncludedIn, *rpt_, d.ev));
      }
    }

    // Universe first, then location, then the description.
    Drs &box = *box_;
    box.universe.insert(box.universe.end(), d.drs.universe.begin(),
                        d.drs.universe.end());
    box.universe.insert(box.universe.end(), located.universe.begin(),
                        located.universe.end());
    box.conditions.insert(box.conditions.end(), located.conditions.begin(),
                          located.conditions.end());
    box.conditions.insert(box.conditions.end(), d.drs.conditions.begin(),
                          d.drs.conditions.end());

    if (d.ev.sort == Sort::kEvent) {
      rpt_ = d.ev;
      rpt_emitted_ = false;
    }
  }

  void Reset() { rpt_.reset(); }

 private:
  Drs *box_;
  Hints *hints_;
  const ArgResolver &args_;
  bool tensed_;
  std::optional<Marker> rpt_;
  bool rpt_emitted_ = false;
};

class SplitBuilder {
 public:
  explicit SplitBuilder(const ConstructionOptions &options)
      : options_(options),
        people_(&top_),
        args_([this](const Clause &c) { return people_.Args(c); }),
        top_narrator_(&top_, &hints_, args_, true) {
    top_.universe.push_back(Marker::Now());
  }

  Drs Build(const ParsedDiscourse &d) {
    for (size_t i = 0; i < d.sentences.size(); ++i) {
      const Sentence &s = d.sentences[i];
      Register(s);
      if (s.quantified()) {
        std::vector<const Sentence *> rest;
        while (i + 1 < d.sentences.size() &&
               ContinuesScope(s, d.sentences[i + 1])) {
          rest.push_back(&d.sentences[++i]);
          Register(*rest.back());
        }
        Habit(s, rest);
        top_narrator_.Reset();
      } else if (s.connective) {
        Anchored(s);
      } else {
        if (s.has_scoped()) {
          throw ConstructionError("nested temporal clause outside a habit");
        }
        for (const Clause &c : s.main) top_narrator_.Place(c, nullptr);
      }
    }
    return std::move(top_);
  }

 private:
  void Register(const Sentence &s) {
    if (s.subordinate && s.subordinate_first) people_.Args(*s.subordinate);
    if (s.has_scoped()) {
      Register(s.scoped.front());
    } else {
      for (const Clause &c : s.main) people_.Args(c);
    }
    if (s.subordinate && !s.subordinate_first) people_.Args(*s.subordinate);
  }

  // A habit at the top level: complex state located at n (present) or by a
  // past location time.
  void Habit(const Sentence &s, const std::vector<const Sentence *> &rest) {
    Marker state = FreshMarker(Sort::kState, hints_.Next("s"));
    top_.universe.push_back(state);
    if (IsPast(s.subordinate->tense)) {
      Marker t = FreshMarker(Sort::kTime, hints_.Next("t"));
      top_.universe.push_back(t);
      top_.Add(Rel2(Rel::kOverlaps, state, t));
      top_.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
    } else {
      top_.Add(Rel2(Rel::kIncludedIn, Marker::Now(), state));
    }
    Drs body;
    body.Add(QuantifiedDuplex(s, rest));
    top_.Add(ComplexState{state, std::move(body)});
  }

  Duplex QuantifiedDuplex(const Sentence &s,
                          const std::vector<const Sentence *> &rest) {
    const Clause &sub = *s.subordinate;
    Drs ante;
    Described d = Describe(sub, people_.Args(sub), &hints_);
    Marker t = FreshMarker(Sort::kTime, hints_.Next("t"));
    ante.universe = d.drs.universe;
    ante.universe.push_back(t);
    ante.Add(Rel2(Rel::kEqualsEventTime, t, d.ev));
    ante.conditions.insert(ante.conditions.end(), d.drs.conditions.begin(),
                           d.drs.conditions.end());

    ScopeAnchor anchor{TcRelation(*s.connective, d.aspect, Aspect::kEvent), t};
    Drs cons;
    if (s.has_scoped()) {
      // The inner habit is the main-clause state.
      const Sentence &inner = s.scoped.front();
      Marker habit = FreshMarker(Sort::kState, hints_.Next("s"));
      Marker loc = FreshMarker(Sort::kTime, hints_.Next("t"));
      TcSchema schema = TcRelation(*s.connective, d.aspect, Aspect::kState);
      cons.universe = {habit, loc};
      if (schema.state_includes_location) {
        cons.Add(Rel2(Rel::kIncludedIn, loc, habit));
      } else {
        cons.Add(Rel2(Rel::kOverlaps, habit, loc));
      }
      cons.Add(Temporal{schema.Instantiate(t, loc)});
      Drs body;
      body.Add(QuantifiedDuplex(inner, {}));
      cons.Add(ComplexState{habit, std::move(body)});
    } else {
      Narrator narrator(&cons, &hints_, args_, false);
      bool first = true;
      for (const Clause &c : s.main) {
        narrator.Place(c, first ? &anchor : nullptr);
        first = false;
      }
      for (const Sentence *more : rest) {
        for (const Clause &c : more->main) narrator.Place(c, nullptr);
      }
    }
    Quantifier q = s.q_adverb == QAdverb::kOften
                       ? Quantifier::Often(options_.often_threshold)
                       : Quantifier::Every();
    return Duplex{std::move(ante), q, std::move(cons)};
  }

  // A single occasion: "Mary wrote the letter when Bill left."
  void Anchored(const Sentence &s) {
    if (s.has_scoped()) {
      throw ConstructionError("nested temporal clause outside a habit");
    }
    const Clause &sub = *s.subordinate;
    Described d = Describe(sub, people_.Args(sub), &hints_);
    Marker t = FreshMarker(Sort::kTime, hints_.Next("t"));
    top_.universe.insert(top_.universe.end(), d.drs.universe.begin(),
                         d.drs.universe.end());
    top_.universe.push_back(t);
    top_.Add(Rel2(Rel::kEqualsEventTime, t, d.ev));
    if (IsPast(sub.tense)) top_.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
    top_.conditions.insert(top_.conditions.end(), d.drs.conditions.begin(),
                           d.drs.conditions.end());
    ScopeAnchor anchor{TcRelation(*s.connective, d.aspect, Aspect::kEvent), t};
    bool first = true;
    for (const Clause &c : s.main) {
      top_narrator_.Place(c, first ? &anchor : nullptr);
      first = false;
    }
  }

  ConstructionOptions options_;
  Drs top_;
  Hints hints_;
  Participants people_;
  ArgResolver args_;
  Narrator top_narrator_;
};

}  // namespace

TemporalRelation TcSchema::Instantiate(const Marker &sub_time,
                                       const Marker &main_location) const {
  if (main_first) return {rel, main_location, sub_time};
  return {rel, sub_time, main_location};
}

TcSchema TcRelation(Connective connective, Aspect sub_aspect,
                    Aspect main_aspect) {
  TcSchema s;
  s.connective = connective;
  s.sub_aspect = sub_aspect;
  s.main_aspect = main_aspect;
  switch (connective) {
    case Connective::kBefore:
      s.rel = Rel::kPrecedes;
      s.main_first = true;
      return s;
    case Connective::kAfter:
      s.rel = Rel::kPrecedes;
      s.main_first = false;
      return s;
    case Connective::kWhen:
    case Connective::kWhenever:
      break;
  }
  bool sub_event = sub_aspect == Aspect::kEvent;
  bool main_event = main_aspect == Aspect::kEvent;
  if (sub_event && main_event) {
    s.rel = Rel::kJustBefore;
  } else if (sub_event) {
    s.rel = Rel::kIncludedIn;
    s.state_includes_location = true;
  } else if (main_event) {
    s.rel = Rel::kIncludedIn;
    s.main_first = true;
  } else {
    s.rel = Rel::kOverlaps;
    s.main_first = true;
  }
  return s;
}

PerfResult ApplyPerf(const Clause &clause, const std::vector<Marker> &args,
                     const std::string &event_hint,
                     const std::string &state_hint) {
  if (!IsPerfect(clause.tense)) {
    throw ConstructionError("perf applies to perfect clauses only");
  }
  if (clause.aspect != Aspect::kEvent) {
    throw ConstructionError("the perfect of a state verb ('" + clause.verb +
                            "') is outside the fragment");
  }
  PerfResult r;
  Marker e = FreshMarker(Sort::kEvent, event_hint);
  Marker s = FreshMarker(Sort::kState, state_hint);
  r.nucleus = {e, s, {Rel::kAbuts, e, s}};
  r.drs.universe = {e, s};
  r.drs.Add(Desc(e, clause.verb, args));
  r.drs.Add(Temporal{r.nucleus.abut_condition});
  r.drs.Add(Desc(s, kPerfPredicate, {e}));
  return r;
}

Drs NarrativeInScope(const std::vector<Clause> &clauses, Drs consequent,
                     const ArgResolver &args,
                     const std::optional<ScopeAnchor> &anchor) {
  Hints hints;
  Narrator narrator(&consequent, &hints, args, false);
  for (size_t i = 0; i < clauses.size(); ++i) {
    narrator.Place(clauses[i], i == 0 && anchor ? &*anchor : nullptr);
  }
  return consequent;
}

Drs BuildSplit(const ParsedDiscourse &discourse,
               const ConstructionOptions &options) {
  return SplitBuilder(options).Build(discourse);
}

}  // namespace tempdrt
