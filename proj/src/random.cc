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

#include "tempdrt/random.h"

#include <algorithm>

namespace tempdrt {

namespace {

int Uniform(std::mt19937 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
const T &Pick(std::mt19937 &rng, const std::vector<T> &items) {
  return items[Uniform(rng, 0, static_cast<int>(items.size()) - 1)];
}

class DrsGenerator {
 public:
  DrsGenerator(std::mt19937 &rng, const RandomDrsOptions &options)
      : rng_(rng), budget_(options.max_markers), max_depth_(options.max_depth) {}

  Drs Top() {
    std::vector<Marker> accessible;
    Drs d;
    if (Uniform(rng_, 0, 1)) {
      d.universe.push_back(Marker::Now());
      accessible.push_back(Marker::Now());
    }
    Fill(&d, 0, accessible);
    return d;
  }

 private:
  Drs Box(int depth, std::vector<Marker> accessible) {
    Drs d;
    Fill(&d, depth, std::move(accessible));
    return d;
  }

  void Fill(Drs *d, int depth, std::vector<Marker> accessible) {
    int k = Uniform(rng_, 0, std::min(2, budget_));
    budget_ -= k;
    for (int i = 0; i < k; ++i) {
      Marker m = NewMarker();
      d->universe.push_back(m);
      accessible.push_back(m);
    }
    int conditions = Uniform(rng_, 0, 3);
    for (int i = 0; i < conditions; ++i) AddCondition(d, depth, accessible);
  }

  Marker NewMarker() {
    static const Sort kSorts[] = {Sort::kIndividual, Sort::kEvent, Sort::kState,
                                  Sort::kTime};
    static const char *kPrefix[] = {"x", "e", "s", "t"};
    int k = Uniform(rng_, 0, 3);
    return FreshMarker(kSorts[k], kPrefix[k] + std::to_string(++count_));
  }

  std::vector<Marker> Where(const std::vector<Marker> &markers,
                            bool (*keep)(const Marker &)) {
    std::vector<Marker> out;
    for (const Marker &m : markers) {
      if (keep(m)) out.push_back(m);
    }
    return out;
  }

  void AddCondition(Drs *d, int depth, const std::vector<Marker> &acc) {
    auto individuals = Where(acc, [](const Marker &m) {
      return m.sort == Sort::kIndividual;
    });
    auto eventualities =
        Where(acc, [](const Marker &m) { return m.is_eventuality(); });
    auto temporal = Where(acc, [](const Marker &m) { return m.is_temporal(); });
    auto times = Where(acc, [](const Marker &m) { return m.sort == Sort::kTime; });
    auto events = Where(acc, [](const Marker &m) { return m.sort == Sort::kEvent; });
    auto states = Where(acc, [](const Marker &m) { return m.sort == Sort::kState; });
    static const std::vector<std::string> kPreds = {"John", "phone", "light-up",
                                                    "be-asleep"};
    switch (Uniform(rng_, 0, 6)) {
      case 0: {
        if (acc.empty()) return;
        std::vector<Marker> args;
        int n = Uniform(rng_, 1, 2);
        for (int i = 0; i < n; ++i) args.push_back(Pick(rng_, acc));
        d->Add(Pred(Pick(rng_, kPreds), args));
        return;
      }
      case 1: {
        if (eventualities.empty()) return;
        std::vector<Marker> args;
        if (!individuals.empty() && Uniform(rng_, 0, 1)) {
          args.push_back(Pick(rng_, individuals));
        }
        d->Add(Desc(Pick(rng_, eventualities), Pick(rng_, kPreds), args));
        return;
      }
      case 2: {
        if (temporal.empty()) return;
        static const Rel kRels[] = {Rel::kPrecedes, Rel::kIncludedIn,
                                    Rel::kOverlaps, Rel::kAbuts,
                                    Rel::kJustBefore};
        d->Add(Rel2(kRels[Uniform(rng_, 0, 4)], Pick(rng_, temporal),
                    Pick(rng_, temporal)));
        return;
      }
      case 3: {
        if (times.empty() || eventualities.empty()) return;
        d->Add(Rel2(Rel::kEqualsEventTime, Pick(rng_, times),
                    Pick(rng_, eventualities)));
        return;
      }
      case 4: {
        if (events.empty()) return;
        d->Add(RptAssign{Pick(rng_, events)});
        return;
      }
      case 5: {
        if (depth >= max_depth_) return;
        d->Add(MakeDuplex(depth, acc));
        return;
      }
      case 6: {
        if (depth >= max_depth_ || states.empty()) return;
        Drs body;
        body.Add(MakeDuplex(depth + 1, acc));
        d->Add(ComplexState{Pick(rng_, states), std::move(body)});
        return;
      }
    }
  }

  Duplex MakeDuplex(int depth, const std::vector<Marker> &acc) {
    Drs ante = Box(depth + 1, acc);
    std::vector<Marker> inner = acc;
    inner.insert(inner.end(), ante.universe.begin(), ante.universe.end());
    Drs cons = Box(depth + 1, inner);
    Quantifier q = Quantifier::Every();
    if (Uniform(rng_, 0, 1)) {
      q = Quantifier::Often(Rational{Uniform(rng_, 1, 3), 4});
    }
    return Duplex{std::move(ante), q, std::move(cons)};
  }

  std::mt19937 &rng_;
  int budget_;
  int max_depth_;
  int count_ = 0;
};

}  // namespace

Drs RandomDrs(std::mt19937 &rng, const RandomDrsOptions &options) {
  return DrsGenerator(rng, options).Top();
}

Interval RandomInterval(std::mt19937 &rng, int timeline_end) {
  int a = Uniform(rng, 0, timeline_end);
  int b = Uniform(rng, 0, timeline_end);
  return {std::min(a, b), std::max(a, b)};
}

TemporalModel RandomModel(std::mt19937 &rng,
                          const std::vector<Individual> &individuals,
                          const std::vector<EventualityTemplate> &templates,
                          const RandomModelOptions &options) {
  TemporalModel m;
  m.timeline_end = Uniform(rng, 1, options.max_timeline);
  m.now = Uniform(rng, 1, m.timeline_end);
  m.individuals = individuals;
  int n = templates.empty() ? 0 : Uniform(rng, 0, options.max_eventualities);
  for (int i = 0; i < n; ++i) {
    const EventualityTemplate &t = Pick(rng, templates);
    m.eventualities.push_back({"v" + std::to_string(i + 1), t.kind,
                               t.predicate, t.args,
                               RandomInterval(rng, m.timeline_end)});
  }
  return m;
}

AgreementCorpus MakeAgreementCorpus() {
  AgreementCorpus c;
  c.individuals = {{"John", Gender::kMasculine}, {"Mary", Gender::kFeminine}};
  c.templates = {{Aspect::kEvent, "telephone", {"Mary"}},
                 {Aspect::kState, "be-asleep", {"Mary"}},
                 {Aspect::kEvent, "light-up", {"John"}},
                 {Aspect::kState, "be-happy", {"John"}}};
  const char *kConnectives[] = {"Before", "After", "When", "Whenever"};
  for (const char *conn : kConnectives) {
    bool always = std::string(conn) != "Whenever";
    for (bool past : {false, true}) {
      for (bool sub_event : {true, false}) {
        for (bool main_event : {true, false}) {
          std::string sub =
              sub_event ? (past ? "Mary telephoned" : "Mary telephones")
                        : (past ? "Mary was asleep" : "Mary is asleep");
          std::string adverb = always ? " always" : "";
          std::string main;
          if (main_event) {
            main = "John" + adverb +
                   (past ? " lit up a cigarette" : " lights up a cigarette");
          } else {
            main = std::string("John ") + (past ? "was" : "is") + adverb +
                   " happy";
          }
          c.sentences.push_back(std::string(conn) + " " + sub + ", " + main +
                                ".");
        }
      }
    }
  }
  return c;
}

}  // namespace tempdrt
