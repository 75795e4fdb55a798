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

#include "tempdrt/eval.h"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "naive_eval.h"
#include "tempdrt/construct.h"
#include "tempdrt/corpus.h"
#include "tempdrt/errors.h"
#include "tempdrt/random.h"
#include "tempdrt/term.h"

namespace tempdrt {
namespace {

const std::string kFixtures = TEMPDRT_TEST_FIXTURES;

Value Time(int a, int b) { return {Value::Kind::kInterval, -1, {a, b}}; }

TemporalModel M1() { return LoadModel(kFixtures + "/M1.model"); }

TEST(VerifyTest, TemporalConditions) {
  TemporalModel m = M1();
  Marker e = FreshMarker(Sort::kEvent, "e"), t = FreshMarker(Sort::kTime, "t");
  Marker s = FreshMarker(Sort::kTime, "s");
  Assignment f{{e, {Value::Kind::kEventuality, 1, {10, 12}}},
               {t, Time(9, 20)},
               {s, Time(13, 30)}};
  EXPECT_TRUE(VerifyCondition(Rel2(Rel::kIncludedIn, e, t), f, m));
  EXPECT_FALSE(VerifyCondition(Rel2(Rel::kIncludedIn, t, e), f, m));
  EXPECT_TRUE(VerifyCondition(Rel2(Rel::kAbuts, e, s), f, m));
  EXPECT_TRUE(VerifyCondition(Rel2(Rel::kJustBefore, e, s), f, m));
  EXPECT_FALSE(VerifyCondition(Rel2(Rel::kPrecedes, e, t), f, m));
  EXPECT_TRUE(VerifyCondition(Rel2(Rel::kOverlaps, t, s), f, m));
  EXPECT_FALSE(VerifyCondition(Rel2(Rel::kEqualsEventTime, t, e), f, m));
}

TEST(VerifyTest, RptAssignAlwaysHolds) {
  TemporalModel m = M1();
  Marker e = FreshMarker(Sort::kEvent, "e");
  EXPECT_TRUE(VerifyCondition(RptAssign{e}, {}, m));
  EXPECT_TRUE(VerifyCondition(
      RptAssign{e}, {{e, {Value::Kind::kEventuality, 0, {5, 6}}}}, m));
}

TEST(VerifyTest, UnassignedMarkerIsAnError) {
  Marker e = FreshMarker(Sort::kEvent, "e"), t = FreshMarker(Sort::kTime, "t");
  EXPECT_THROW(VerifyCondition(Rel2(Rel::kIncludedIn, e, t), {}, M1()),
               EvalError);
}

TEST(VerifyTest, PredicationsUseNamesAndEventualities) {
  TemporalModel m = M1();
  Marker x = FreshMarker(Sort::kIndividual, "x");
  Marker e = FreshMarker(Sort::kEvent, "e");
  Assignment f{{x, {Value::Kind::kIndividual, 0, {}}},
               {e, {Value::Kind::kEventuality, 1, {10, 12}}}};
  EXPECT_TRUE(VerifyCondition(Pred("John", {x}), f, m));
  EXPECT_FALSE(VerifyCondition(Pred("Mary", {x}), f, m));
  EXPECT_TRUE(VerifyCondition(Desc(e, "phone", {x}), f, m));
  EXPECT_FALSE(VerifyCondition(Desc(e, "light-up", {x}), f, m));
}

TEST(EnumerateTest, PhoneEventsOnM1) {
  TemporalModel m = M1();
  int phones = 0;
  for (const ModelEventuality &e : m.eventualities) {
    phones += e.predicate == "phone";
  }
  Marker x = FreshMarker(Sort::kIndividual, "x");
  Marker e = FreshMarker(Sort::kEvent, "e");
  Drs d;
  d.universe = {e};
  d.Add(Desc(e, "phone", {x}));
  Assignment base{{x, {Value::Kind::kIndividual, 0, {}}}};
  EXPECT_EQ(static_cast<int>(EnumerateEmbeddings(d, base, m).size()), phones);
  EXPECT_EQ(phones, 2);
}

TEST(EnumerateTest, EmptyAndUnsatisfiable) {
  TemporalModel m = M1();
  Assignment base{{Marker::Now(), Time(35, 35)}};
  EXPECT_EQ(EnumerateEmbeddings(Drs{}, base, m).size(), 1u);
  Drs never;
  Marker t = FreshMarker(Sort::kTime, "t");
  never.universe = {t};
  never.Add(Rel2(Rel::kPrecedes, t, t));
  EXPECT_TRUE(EnumerateEmbeddings(never, base, m).empty());
}

TEST(EnumerateTest, TimesRangeOverAllSubintervals) {
  TemporalModel m = ParseModel("timeline 5\nnow 5\n");
  Drs d;
  d.universe = {FreshMarker(Sort::kTime, "t")};
  EXPECT_EQ(EnumerateEmbeddings(d, {}, m).size(), 21u);  // 6 * 7 / 2
  Marker t = FreshMarker(Sort::kTime, "t");
  Drs before_now;
  before_now.universe = {t};
  before_now.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
  // Intervals inside [0,4].
  EXPECT_EQ(
      EnumerateEmbeddings(before_now, {{Marker::Now(), Time(5, 5)}}, m).size(),
      15u);
}

TEST(EvaluateTest, EmptyDrsIsTrue) {
  EXPECT_TRUE(Evaluate(Drs{}, M1()).truth);
  EXPECT_TRUE(Evaluate(Drs{}, ParseModel("timeline 0\nnow 0\n")).truth);
}

TEST(EvaluateTest, DeltaMustBePositive) {
  EvalConfig config;
  config.delta = 0;
  EXPECT_THROW(Evaluate(Drs{}, M1(), config), EvalError);
}

Duplex PhoneDuplex(const Marker &x, Quantifier q, const char *main_pred) {
  Marker e = FreshMarker(Sort::kEvent, "e"), e2 = FreshMarker(Sort::kEvent);
  Drs ante, cons;
  ante.universe = {e};
  ante.Add(Desc(e, "phone", {x}));
  cons.universe = {e2};
  cons.Add(Desc(e2, main_pred, {x}));
  cons.Add(Rel2(Rel::kPrecedes, e2, e));
  return Duplex{ante, q, cons};
}

TEST(DuplexTest, VacuousWithoutAntecedentEmbeddings) {
  TemporalModel m = ParseModel("timeline 10\nnow 5\nindividual john\n");
  Marker x = FreshMarker(Sort::kIndividual, "x");
  Assignment f{{x, {Value::Kind::kIndividual, 0, {}}}};
  EXPECT_TRUE(EvaluateDuplex(PhoneDuplex(x, Quantifier::Every(), "light-up"),
                             f, m));
  EXPECT_TRUE(EvaluateDuplex(
      PhoneDuplex(x, Quantifier::Often({1, 2}), "light-up"), f, m));
}

TEST(DuplexTest, OftenCountsPartialCoverage) {
  // Calls at 10, 20, 30; the only light-up sits at 25, covering one call.
  TemporalModel m = ParseModel(
      "timeline 40\nnow 39\nindividual john\n"
      "event p1 phone(john) 10 10\nevent p2 phone(john) 20 20\n"
      "event p3 phone(john) 30 30\nevent l light-up(john) 25 25\n");
  Marker x = FreshMarker(Sort::kIndividual, "x");
  Assignment f{{x, {Value::Kind::kIndividual, 0, {}}}};
  auto holds = [&](Quantifier q) {
    return EvaluateDuplex(PhoneDuplex(x, q, "light-up"), f, m);
  };
  // 1 of 3 covered.
  EXPECT_FALSE(holds(Quantifier::Often({1, 2})));
  EXPECT_TRUE(holds(Quantifier::Often({1, 4})));
  EXPECT_FALSE(holds(Quantifier::Often({1, 3})));
  EXPECT_FALSE(holds(Quantifier::Every()));
}

TEST(EvaluateTest, PhoneCallReadingsOnM1) {
  TemporalModel m = M1();
  Drs a = LoadDrs(kFixtures + "/fig1a.drs");
  Drs b = LoadDrs(kFixtures + "/fig1b.drs");
  EvalResult ra = Evaluate(a, m), rb = Evaluate(b, m);
  EXPECT_FALSE(ra.truth);
  EXPECT_TRUE(rb.truth);
  EXPECT_TRUE(ra.counterexample.has_value());
  testing::NaiveEvaluator naive(m);
  EXPECT_FALSE(naive.Evaluate(a));
  EXPECT_TRUE(naive.Evaluate(b));
}

TEST(EvaluateTest, WitnessShowsDerivedHabitTrace) {
  TemporalModel m = M1();
  Drs b = LoadDrs(kFixtures + "/fig1b.drs");
  EvalResult r = Evaluate(b, m);
  ASSERT_TRUE(r.truth);
  bool found = false;
  for (const auto &[marker, v] : r.witness) {
    if (marker.sort == Sort::kState) {
      found = true;
      EXPECT_EQ(v.kind, Value::Kind::kDerivedState);
      EXPECT_EQ(v.interval, (Interval{0, 40}));
    }
    if (marker.is_now()) {
      EXPECT_EQ(v.interval, (Interval{35, 35}));
    }
  }
  EXPECT_TRUE(found);
  std::string text = FormatAssignment(r.witness, m);
  EXPECT_NE(text.find("x = john"), std::string::npos) << text;
  EXPECT_NE(text.find("derived state [0,40]"), std::string::npos) << text;
}

TEST(EvaluateTest, PerfStateStartsAfterTheEvent) {
  TemporalModel m = ParseModel(
      "timeline 20\nnow 15\nindividual mary\n"
      "event m1 meet-president(mary) 4 6\n");
  Drs d = Deserialize(R"(
    (drs (u n:now x:individual e:event s:state)
      (cond (desc e (meet-president x)) (abuts e s) (desc s (perf e))
            (subset n s)))
  )");
  EvalResult r = Evaluate(d, m);
  ASSERT_TRUE(r.truth);
  for (const auto &[marker, v] : r.witness) {
    if (marker.sort == Sort::kState) {
      EXPECT_EQ(v.interval, (Interval{7, 20}));
    }
  }
  TemporalModel late = ParseModel(
      "timeline 20\nnow 5\nindividual mary\n"
      "event m1 meet-president(mary) 4 6\n");
  EXPECT_FALSE(Evaluate(d, late).truth);
}

TEST(EvaluateTest, LocPinsTheTime) {
  TemporalModel m = M1();
  Drs d = Deserialize(R"(
    (drs (u x:individual e:event t:time)
      (cond (pred John x) (desc e (phone x)) (loc t e)))
  )");
  std::vector<Assignment> all = EnumerateEmbeddings(d, {}, m);
  ASSERT_EQ(all.size(), 2u);
  for (const Assignment &f : all) {
    Interval e, t;
    for (const auto &[marker, v] : f) {
      if (marker.sort == Sort::kEvent) e = v.interval;
      if (marker.sort == Sort::kTime) t = v.interval;
    }
    EXPECT_EQ(e, t);
  }
}

// Sentences whose DRSs stay small enough for the naive evaluator.
std::vector<std::string> SmallSentences() {
  std::vector<std::string> out = MakeAgreementCorpus().sentences;
  out.emplace_back(corpus::kBeforePhoneCall);
  out.emplace_back(corpus::kWheneverTelephoned);
  out.emplace_back(corpus::kWhenAlwaysTelephoned);
  out.emplace_back(corpus::kWroteLetterWhenLeft);
  out.emplace_back(corpus::kWroteLetter);
  out.emplace_back("Mary telephoned. John lit up a cigarette. Mary was asleep.");
  return out;
}

TEST(EvaluateTest, AgreesWithNaiveEvaluator) {
  std::vector<Individual> people = {{"John", Gender::kMasculine},
                                    {"Mary", Gender::kFeminine},
                                    {"Bill", Gender::kMasculine},
                                    {"Sam", Gender::kMasculine}};
  std::vector<EventualityTemplate> kinds = {
      {Aspect::kEvent, "telephone", {"Mary"}},
      {Aspect::kState, "be-asleep", {"Mary"}},
      {Aspect::kState, "be-asleep", {"Sam"}},
      {Aspect::kEvent, "light-up", {"John"}},
      {Aspect::kEvent, "phone", {"John"}},
      {Aspect::kState, "be-happy", {"John"}},
      {Aspect::kEvent, "write-letter", {"Mary"}},
      {Aspect::kEvent, "leave", {"Bill"}}};
  RandomModelOptions options;
  options.max_timeline = 7;
  options.max_eventualities = 4;
  std::mt19937 rng(31);
  int compared = 0, trues = 0;
  for (const std::string &text : SmallSentences()) {
    for (Strategy s : {Strategy::kBaseline, Strategy::kSplit}) {
      Drs d;
      try {
        d = ConstructText(s, text);
      } catch (const ConstructionError &) {
        continue;
      }
      for (int i = 0; i < 6; ++i) {
        TemporalModel m = RandomModel(rng, people, kinds, options);
        bool fast = Evaluate(d, m).truth;
        testing::NaiveEvaluator naive(m);
        ASSERT_EQ(fast, naive.Evaluate(d))
            << StrategyName(s) << ": " << text << "\n" << m.ToString();
        compared++;
        trues += fast;
      }
    }
  }
  EXPECT_GT(compared, 300);
  EXPECT_GT(trues, 0);
  EXPECT_LT(trues, compared);
}

TEST(EvaluateTest, NarrativeHabitAgreesWithNaiveEvaluator) {
  Drs d = LoadDrs(kFixtures + "/fig4.drs");
  std::vector<Individual> people = {{"John", Gender::kMasculine}};
  std::vector<EventualityTemplate> kinds = {
      {Aspect::kEvent, "come-home", {"John"}},
      {Aspect::kEvent, "switch-on-tv", {"John"}},
      {Aspect::kEvent, "take-beer", {"John"}},
      {Aspect::kEvent, "sit-down", {"John"}}};
  RandomModelOptions options;
  options.max_timeline = 4;
  options.max_eventualities = 4;
  std::mt19937 rng(37);
  for (int i = 0; i < 8; ++i) {
    TemporalModel m = RandomModel(rng, people, kinds, options);
    testing::NaiveEvaluator naive(m);
    EXPECT_EQ(Evaluate(d, m).truth, naive.Evaluate(d)) << m.ToString();
  }
}

TEST(EvaluateTest, DeltaWidensJustBefore) {
  // Bill leaves two points after the call.
  TemporalModel m = ParseModel(
      "timeline 20\nnow 19\nindividual mary f\nindividual bill m\n"
      "event c telephone(mary) 5 5\nevent l leave(bill) 7 7\n");
  Drs d = Deserialize(R"(
    (drs (u x:individual y:individual e1:event e2:event)
      (cond (pred Mary x) (pred Bill y) (desc e1 (telephone x))
            (desc e2 (leave y)) (just-before e1 e2))))");
  EvalConfig narrow, wide;
  wide.delta = 2;
  EXPECT_FALSE(Evaluate(d, m, narrow).truth);
  EXPECT_TRUE(Evaluate(d, m, wide).truth);
  testing::NaiveEvaluator naive_narrow(m, 1), naive_wide(m, 2);
  EXPECT_FALSE(naive_narrow.Evaluate(d));
  EXPECT_TRUE(naive_wide.Evaluate(d));
}

// On any model where the split reading holds and some call has an earlier
// stretch of time free of light-ups, the reference-time reading fails.
TEST(PropertyTest, DefectIsMonotonic) {
  Drs a = LoadDrs(kFixtures + "/fig1a.drs");
  Drs b = LoadDrs(kFixtures + "/fig1b.drs");
  std::vector<Individual> people = {{"John", Gender::kMasculine}};
  std::vector<EventualityTemplate> kinds = {
      {Aspect::kEvent, "phone", {"John"}},
      {Aspect::kEvent, "light-up", {"John"}}};
  std::mt19937 rng(41);
  int premises = 0;
  for (int i = 0; i < 1000; ++i) {
    TemporalModel m = RandomModel(rng, people, kinds);
    if (!Evaluate(b, m).truth) continue;
    // A one-point interval before a call is free unless a light-up
    // occupies exactly that point.
    bool gap = false;
    for (const ModelEventuality &p : m.eventualities) {
      if (p.predicate != "phone") continue;
      for (int point = 0; point < p.trace.start; ++point) {
        bool occupied = false;
        for (const ModelEventuality &l : m.eventualities) {
          occupied |= l.predicate == "light-up" &&
                      l.trace == Interval{point, point};
        }
        gap |= !occupied;
      }
    }
    if (!gap) continue;
    premises++;
    EXPECT_FALSE(Evaluate(a, m).truth) << m.ToString();
  }
  EXPECT_GE(premises, 50);
}

TEST(PropertyTest, RptAssignmentsAreInert) {
  AgreementCorpus c = MakeAgreementCorpus();
  std::mt19937 rng(43);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Drs d = RandomDrs(rng);
    Drs bare = WithoutRptAssignments(d);
    TemporalModel m = RandomModel(rng, c.individuals, c.templates,
                                  {12, 4});
    EXPECT_EQ(Evaluate(d, m).truth, Evaluate(bare, m).truth) << Serialize(d);
    checked++;
  }
  for (std::string_view text : corpus::AllSentences()) {
    Drs d;
    try {
      d = ConstructText(Strategy::kSplit, std::string(text));
    } catch (const Error &) {
      continue;
    }
    for (int i = 0; i < 5; ++i) {
      TemporalModel m = RandomModel(rng, c.individuals, c.templates, {12, 4});
      EXPECT_EQ(Evaluate(d, m).truth,
                Evaluate(WithoutRptAssignments(d), m).truth);
      checked++;
    }
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace tempdrt
