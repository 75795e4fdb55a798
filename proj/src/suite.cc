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

#include "tempdrt/suite.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "tempdrt/compare.h"
#include "tempdrt/construct.h"
#include "tempdrt/corpus.h"
#include "tempdrt/drs.h"
#include "tempdrt/errors.h"
#include "tempdrt/eval.h"
#include "tempdrt/model.h"
#include "tempdrt/oracle.h"
#include "tempdrt/random.h"
#include "tempdrt/render.h"
#include "tempdrt/term.h"

namespace tempdrt {

namespace {

// Records the first failed expectation.
class Checker {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string &failure() const { return failure_; }

 private:
  std::string failure_;
};

struct Item {
  const char *id;
  const char *description;
  double limit_seconds;  // 0 means no limit
  std::function<std::string(const std::string &dir, Checker &c)> body;
};

std::string Path(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Drs Build(Strategy s, std::string_view text) {
  return ConstructText(s, std::string(text));
}

void ExpectMatches(Checker &c, const std::string &dir, const char *fixture,
                   Strategy s, std::string_view text) {
  Drs want = LoadDrs(Path(dir, fixture));
  c.Expect(AlphaEquivalent(Build(s, text), want),
           std::string(StrategyName(s)) + " construction of \"" +
               std::string(text) + "\" differs from " + fixture);
}

bool Truth(const Drs &d, const TemporalModel &m, int delta = 1) {
  EvalConfig config;
  config.delta = delta;
  return Evaluate(d, m, config).truth;
}

TemporalModel Without(const TemporalModel &m, const std::string &id) {
  TemporalModel out = m;
  std::erase_if(out.eventualities,
                [&](const ModelEventuality &e) { return e.id == id; });
  if (out.eventualities.size() == m.eventualities.size()) {
    throw Error("model has no eventuality " + id);
  }
  return out;
}

const Duplex *FirstDuplex(const Drs &d) {
  for (const Condition &c : d.conditions) {
    if (const auto *dx = std::get_if<Duplex>(&c)) return dx;
    if (const auto *cs = std::get_if<ComplexState>(&c)) {
      if (const Duplex *inner = FirstDuplex(*cs->body)) return inner;
    }
  }
  return nullptr;
}

int CountSort(const Drs &d, Sort sort) {
  int n = 0;
  for (const Marker &m : d.universe) n += m.sort == sort;
  return n;
}

std::string MinimalPair(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "fig1a.drs", Strategy::kBaseline,
                corpus::kBeforePhoneCall);
  ExpectMatches(c, dir, "fig1b.drs", Strategy::kSplit,
                corpus::kBeforePhoneCall);
  Drs baseline = Build(Strategy::kBaseline, corpus::kBeforePhoneCall);
  const Duplex *base = FirstDuplex(baseline);
  c.Expect(base && CountSort(*base->antecedent, Sort::kTime) == 1 &&
               CountSort(*base->consequent, Sort::kTime) == 0,
           "baseline reference time is not in the antecedent");
  Drs habit = Build(Strategy::kSplit, corpus::kBeforePhoneCall);
  const Duplex *split = FirstDuplex(habit);
  c.Expect(split && CountSort(*split->consequent, Sort::kTime) == 1,
           "split main-clause location time is not in the consequent");
  return "both constructions match";
}

std::string QuantificationDefect(const std::string &dir, Checker &c) {
  Drs a = LoadDrs(Path(dir, "fig1a.drs"));
  Drs b = LoadDrs(Path(dir, "fig1b.drs"));
  TemporalModel m1 = LoadModel(Path(dir, "M1.model"));
  ClauseQuery phone{"phone", {"john"}, Aspect::kEvent};
  ClauseQuery light{"light-up", {"john"}, Aspect::kEvent};
  bool ta = Truth(a, m1), tb = Truth(b, m1);
  bool oracle = OracleQuantify(Quantifier::Every(), phone, light,
                               Connective::kBefore, m1);
  c.Expect(!ta, "fig1a is true on M1");
  c.Expect(tb, "fig1b is false on M1");
  c.Expect(oracle, "oracle is false on M1");

  // Without the first light-up the first call has nothing before it.
  TemporalModel bare = Without(m1, "l1");
  c.Expect(!OracleQuantify(Quantifier::Every(), phone, light,
                           Connective::kBefore, bare),
           "oracle is true without the first light-up");
  c.Expect(!Truth(a, bare) && !Truth(b, bare),
           "a DRS is true without the first light-up");

  ComparisonReport r =
      CompareStrategies(std::string(corpus::kBeforePhoneCall), m1);
  const StrategyOutcome &rb = r.Get(Strategy::kBaseline);
  const StrategyOutcome &rs = r.Get(Strategy::kSplit);
  c.Expect(!rb.error && !rb.result.truth && !rs.error && rs.result.truth &&
               r.oracle == true,
           "comparison report disagrees with the fixture verdicts");
  std::ostringstream out;
  out << "baseline=" << ta << " split=" << tb << " oracle=" << oracle;
  return out.str();
}

std::string Whenever(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "fig3.drs", Strategy::kBaseline,
                corpus::kWheneverTelephoned);
  ExpectMatches(c, dir, "fig3.drs", Strategy::kBaseline,
                corpus::kWhenAlwaysTelephoned);
  Drs base = LoadDrs(Path(dir, "fig3.drs"));
  Drs split = Build(Strategy::kSplit, corpus::kWheneverTelephoned);
  TemporalModel m = LoadModel(Path(dir, "whenever.model"));
  c.Expect(Truth(base, m), "baseline is false on the sleep model");
  c.Expect(Truth(split, m), "split is false on the sleep model");
  // Without the earlier sleep the first call has none adjacent to it.
  TemporalModel less = Without(m, "z1");
  c.Expect(!Truth(base, less), "baseline stays true without z1");
  c.Expect(!Truth(split, less), "split stays true without z1");
  return "true on the sleep model, false with the first sleep removed";
}

std::string Narrative(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "fig2.drs", Strategy::kBaseline,
                corpus::kBlindNarrativeOpening);
  Drs d = LoadDrs(Path(dir, "fig2.drs"));
  c.Expect(CountRelations(d, Rel::kJustBefore) == 2,
           "expected two reference-time steps");
  c.Expect(Truth(d, LoadModel(Path(dir, "morning.model"))),
           "false on the ordered morning");
  c.Expect(!Truth(d, LoadModel(Path(dir, "morning_scrambled.model"))),
           "true on the scrambled morning");
  return "chain matches; ordered true, scrambled false";
}

std::string RptProgression(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "fig4.drs", Strategy::kSplit, corpus::kHabitNarrative);
  Drs d = LoadDrs(Path(dir, "fig4.drs"));
  Drs bare = WithoutRptAssignments(d);
  c.Expect(!AlphaEquivalent(d, bare), "fixture has no Rpt assignments");
  TemporalModel evenings = LoadModel(Path(dir, "evenings.model"));
  c.Expect(Truth(d, evenings), "false on the evenings model");
  c.Expect(Truth(bare, evenings), "Rpt removal changes the evenings verdict");

  std::vector<Individual> people = {{"John", Gender::kMasculine}};
  std::vector<EventualityTemplate> kinds = {
      {Aspect::kEvent, "come-home", {"John"}},
      {Aspect::kEvent, "switch-on-tv", {"John"}},
      {Aspect::kEvent, "take-beer", {"John"}},
      {Aspect::kEvent, "sit-down", {"John"}}};
  RandomModelOptions options;
  options.max_timeline = 16;
  std::mt19937 rng(4);
  int trues = 0;
  const int kModels = 40;
  for (int i = 0; i < kModels && c.ok(); ++i) {
    TemporalModel m = RandomModel(rng, people, kinds, options);
    bool t = Truth(d, m);
    trues += t;
    c.Expect(t == Truth(bare, m),
             "Rpt removal changes the verdict on random model " +
                 std::to_string(i));
  }
  return "Rpt inert on " + std::to_string(kModels + 1) + " models (" +
         std::to_string(trues) + " random ones true)";
}

std::string PerfectOften(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "often_dinner.drs", Strategy::kSplit,
                corpus::kOftenDinner);
  Drs d = Build(Strategy::kSplit, corpus::kOftenDinner);
  c.Expect(CountRelations(d, Rel::kAbuts) == 1, "expected exactly one abut");
  const Duplex *dx = FirstDuplex(d);
  c.Expect(dx != nullptr, "no duplex");
  if (dx == nullptr) return "";
  // The antecedent's location time must be included in a consequent time.
  Marker loc;
  for (const Condition &cond : dx->antecedent->conditions) {
    const auto *t = std::get_if<Temporal>(&cond);
    if (t && t->relation.rel == Rel::kEqualsEventTime) loc = t->relation.lhs;
  }
  bool included = false;
  for (const Condition &cond : dx->consequent->conditions) {
    const auto *t = std::get_if<Temporal>(&cond);
    included |= t && t->relation.rel == Rel::kIncludedIn &&
                t->relation.lhs == loc &&
                dx->consequent->Declares(t->relation.rhs);
  }
  c.Expect(included, "arrival time is not included in a consequent time");
  c.Expect(dx->quantifier == Quantifier::Often({1, 2}),
           "quantifier is not often(1/2)");

  TemporalModel m = LoadModel(Path(dir, "dinner.model"));
  c.Expect(Truth(d, m), "false on the dinner model");
  // Dinner only after the last arrival: no arrival is covered.
  TemporalModel late = m;
  for (ModelEventuality &e : late.eventualities) {
    if (e.predicate == "prepare-dinner") e.trace = {32, 34};
  }
  c.Expect(!Truth(d, late), "true when dinner is never ready in time");
  return "inclusion present, one abut, dinner model true";
}

std::string Iteration(const std::string &dir, Checker &c) {
  ExpectMatches(c, dir, "fig5.drs", Strategy::kSplit, corpus::kBeachSquint);
  return "nested habit matches";
}

std::string OracleAgreement(const std::string &, Checker &c) {
  AgreementCorpus corpus = MakeAgreementCorpus();
  std::vector<Drs> drss;
  std::vector<SentenceQuery> queries;
  for (const std::string &s : corpus.sentences) {
    drss.push_back(Build(Strategy::kSplit, s));
    ParsedDiscourse p = ResolvePronouns(ParseText(s));
    auto q = QueryFor(p.sentences.at(0), Rational{1, 2});
    if (!q) throw Error("oracle does not cover \"" + s + "\"");
    queries.push_back(*q);
  }
  std::mt19937 rng(20260101);
  const int kModels = 200;
  long cases = 0, agree = 0, trues = 0;
  for (int i = 0; i < kModels; ++i) {
    TemporalModel m = RandomModel(rng, corpus.individuals, corpus.templates);
    for (size_t k = 0; k < drss.size(); ++k) {
      const SentenceQuery &q = queries[k];
      bool oracle = OracleQuantify(q.quantifier, q.sub, q.main, q.tc, m);
      bool split = Truth(drss[k], m);
      cases++;
      trues += oracle;
      agree += oracle == split;
      c.Expect(oracle == split, "disagreement on \"" + corpus.sentences[k] +
                                    "\" with model:\n" + m.ToString());
    }
  }
  return std::to_string(agree) + "/" + std::to_string(cases) +
         " cases agree over " + std::to_string(kModels) + " models (" +
         std::to_string(trues) + " true)";
}

std::string IntervalAlgebra(const std::string &, Checker &c) {
  std::mt19937 rng(7);
  const int kTrials = 1000;
  for (int i = 0; i < kTrials && c.ok(); ++i) {
    Interval a = RandomInterval(rng, 30), b = RandomInterval(rng, 30),
             x = RandomInterval(rng, 30);
    std::string at = " at " + a.ToString() + " " + b.ToString() + " " +
                     x.ToString();
    c.Expect(!Precedes(a, a), "< is reflexive" + at);
    c.Expect(!(Precedes(a, b) && Precedes(b, x)) || Precedes(a, x),
             "< is not transitive" + at);
    c.Expect(Overlaps(a, b) == Overlaps(b, a), "overlap is not symmetric" + at);
    c.Expect(IncludedIn(a, a), "inclusion is not reflexive" + at);
    c.Expect(!(IncludedIn(a, b) && IncludedIn(b, a)) || a == b,
             "inclusion is not antisymmetric" + at);
    c.Expect(!(IncludedIn(a, b) && IncludedIn(b, x)) || IncludedIn(a, x),
             "inclusion is not transitive" + at);
    c.Expect(Abuts(a, b) == (a.end + 1 == b.start), "abut identity fails" + at);
    c.Expect(Abuts(a, b) == JustBefore(a, b, 1),
             "abut and just-before(1) differ" + at);
  }
  return std::to_string(kTrials) + " random triples";
}

std::string RoundTrip(const std::string &dir, Checker &c) {
  int files = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".drs") continue;
    Drs d = LoadDrs(entry.path().string());
    c.Expect(AlphaEquivalent(Deserialize(Serialize(d)), d),
             "round trip fails for " + entry.path().filename().string());
    files++;
  }
  std::mt19937 rng(11);
  const int kRandom = 500;
  for (int i = 0; i < kRandom; ++i) {
    Drs d = RandomDrs(rng);
    c.Expect(AlphaEquivalent(Deserialize(Serialize(d)), d),
             "round trip fails for random DRS:\n" + Serialize(d));
  }
  struct Golden {
    const char *name;
    Strategy strategy;
    std::string_view text;
  };
  const Golden kGolden[] = {
      {"fig1a", Strategy::kBaseline, corpus::kBeforePhoneCall},
      {"fig1b", Strategy::kSplit, corpus::kBeforePhoneCall},
      {"fig3", Strategy::kBaseline, corpus::kWheneverTelephoned},
      {"fig4", Strategy::kSplit, corpus::kHabitNarrative},
      {"fig5", Strategy::kSplit, corpus::kBeachSquint},
  };
  for (const Golden &g : kGolden) {
    std::string want =
        ReadFile(Path(dir, std::string("golden/") + g.name + ".txt"));
    c.Expect(RenderBox(Build(g.strategy, g.text)) == want,
             std::string("rendering differs from golden/") + g.name + ".txt");
  }
  return std::to_string(files) + " fixtures, " + std::to_string(kRandom) +
         " random DRSs, 5 golden renders";
}

const std::vector<Item> &Items() {
  static const std::vector<Item> items = {
      {"ac1-fig1-minimal-pair",
       "before-sentence constructions match both fixtures", 1, MinimalPair},
      {"ac2-fig1-quantification-defect",
       "reference-time reading is false where the split reading holds", 10,
       QuantificationDefect},
      {"ac3-fig3-whenever", "whenever is handled by both strategies", 10,
       Whenever},
      {"ac4-fig2-narrative", "reference-time narrative chain", 0, Narrative},
      {"ac5-fig4-rpt", "quantified narrative progression and Rpt inertness", 0,
       RptProgression},
      {"ac6-perfect-often", "perfect under often", 0, PerfectOften},
      {"ac7-fig5-iteration", "nested habits", 0, Iteration},
      {"ac8-oracle-agreement", "split evaluation agrees with the oracle", 60,
       OracleAgreement},
      {"ac9-interval-algebra", "interval relation laws", 1, IntervalAlgebra},
      {"ac10-roundtrip-render", "term round trip and golden renders", 0,
       RoundTrip},
  };
  return items;
}

}  // namespace

std::string DefaultFixturesDir() {
  if (const char *env = std::getenv("TEMPDRT_FIXTURES"); env && *env) {
    return env;
  }
  return TEMPDRT_DEFAULT_FIXTURES;
}

std::vector<std::string> SuiteItemIds() {
  std::vector<std::string> ids;
  for (const Item &item : Items()) ids.push_back(item.id);
  return ids;
}

std::vector<SuiteItem> RunSuite(const SuiteOptions &options) {
  std::string dir =
      options.fixtures_dir.empty() ? DefaultFixturesDir() : options.fixtures_dir;
  std::vector<SuiteItem> results;
  for (const Item &item : Items()) {
    if (std::string(item.id).find(options.filter) == std::string::npos) {
      continue;
    }
    SuiteItem r;
    r.id = item.id;
    r.description = item.description;
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = item.body(dir, c);
    } catch (const std::exception &e) {
      c.Expect(false, e.what());
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (c.ok() && item.limit_seconds > 0 && r.seconds >= item.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << r.seconds << "s, limit " << item.limit_seconds << "s";
      c.Expect(false, msg.str());
    }
    r.passed = c.ok();
    if (!r.passed) r.detail = c.failure();
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatSuite(const std::vector<SuiteItem> &items) {
  std::ostringstream out;
  int passed = 0;
  for (const SuiteItem &item : items) {
    passed += item.passed;
    out << (item.passed ? "PASS " : "FAIL ") << item.id << " ("
        << std::fixed << std::setprecision(3) << item.seconds
        << "s): " << item.detail << "\n";
  }
  out << passed << "/" << items.size() << " passed\n";
  return out.str();
}

}  // namespace tempdrt
