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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "tempdrt/model.h"
#include "tempdrt/random.h"

namespace tempdrt {
namespace {

const std::string kFixtures = TEMPDRT_TEST_FIXTURES;

const ClauseQuery kPhone{"phone", {"john"}, Aspect::kEvent};
const ClauseQuery kLightUp{"light-up", {"john"}, Aspect::kEvent};

TemporalModel Without(TemporalModel m, const std::string &id) {
  std::erase_if(m.eventualities,
                [&](const ModelEventuality &e) { return e.id == id; });
  return m;
}

TEST(OracleTest, EveryCallPrecededByLightUpOnM1) {
  TemporalModel m = LoadModel(kFixtures + "/M1.model");
  EXPECT_TRUE(OracleQuantify(Quantifier::Every(), kPhone, kLightUp,
                             Connective::kBefore, m));
}

TEST(OracleTest, RemovingTheFirstLightUpFalsifies) {
  TemporalModel m = Without(LoadModel(kFixtures + "/M1.model"), "l1");
  ASSERT_EQ(m.eventualities.size(), 3u);
  EXPECT_FALSE(OracleQuantify(Quantifier::Every(), kPhone, kLightUp,
                              Connective::kBefore, m));
  // The second call still has l2 before it: one of two.
  EXPECT_FALSE(OracleQuantify(Quantifier::Often({1, 2}), kPhone, kLightUp,
                              Connective::kBefore, m));
  EXPECT_TRUE(OracleQuantify(Quantifier::Often({1, 3}), kPhone, kLightUp,
                             Connective::kBefore, m));
}

TEST(OracleTest, VacuousWithoutSubordinateEvents) {
  TemporalModel m = ParseModel("timeline 10\nnow 5\nindividual john\n");
  for (Connective tc : {Connective::kBefore, Connective::kAfter,
                        Connective::kWhen, Connective::kWhenever}) {
    EXPECT_TRUE(OracleQuantify(Quantifier::Every(), kPhone, kLightUp, tc, m));
    EXPECT_TRUE(
        OracleQuantify(Quantifier::Often({1, 2}), kPhone, kLightUp, tc, m));
  }
}

TEST(OracleTest, SelectMatchesPredicateArgsAndKind) {
  TemporalModel m = LoadModel(kFixtures + "/whenever.model");
  ClauseQuery calls{"telephone", {"Mary"}, Aspect::kEvent};
  EXPECT_EQ(calls.Select(m).size(), 2u);
  ClauseQuery wrong_kind{"telephone", {"Mary"}, Aspect::kState};
  EXPECT_TRUE(wrong_kind.Select(m).empty());
  ClauseQuery wrong_arg{"be-asleep", {"mary"}, Aspect::kState};
  EXPECT_TRUE(wrong_arg.Select(m).empty());
}

// The oracle's connective relation must coincide with "some location time t'
// for the main eventuality stands in the connective's relation to the
// subordinate event time". The table below is the location-time schema.
bool ViaLocationTime(Connective tc, const ModelEventuality &sub,
                     const ModelEventuality &main, int horizon) {
  const Interval &t = sub.trace, &m = main.trace;
  bool sub_event = sub.kind == Aspect::kEvent;
  bool main_event = main.kind == Aspect::kEvent;
  for (int a = 0; a <= horizon; ++a) {
    for (int b = a; b <= horizon; ++b) {
      Interval tp{a, b};
      bool located, related;
      bool includes = false;
      if (tc == Connective::kBefore) {
        related = tp.end < t.start;
      } else if (tc == Connective::kAfter) {
        related = t.end < tp.start;
      } else if (sub_event && main_event) {
        related = t.end < tp.start && tp.start <= t.end + 1;
      } else if (sub_event) {
        related = t.start >= tp.start && t.end <= tp.end;
        includes = true;
      } else if (main_event) {
        related = tp.start >= t.start && tp.end <= t.end;
      } else {
        related = tp.start <= t.end && t.start <= tp.end;
      }
      if (main_event) {
        located = m.start >= tp.start && m.end <= tp.end;
      } else if (includes) {
        located = tp.start >= m.start && tp.end <= m.end;
      } else {
        located = tp.start <= m.end && m.start <= tp.end;
      }
      if (located && related) return true;
    }
  }
  return false;
}

TEST(OracleTest, ConnectiveRelationMatchesLocationTimes) {
  std::mt19937 rng(47);
  const int kHorizon = 14;
  for (int i = 0; i < 3000; ++i) {
    ModelEventuality sub, main;
    sub.kind = rng() % 2 ? Aspect::kEvent : Aspect::kState;
    main.kind = rng() % 2 ? Aspect::kEvent : Aspect::kState;
    sub.trace = RandomInterval(rng, kHorizon);
    main.trace = RandomInterval(rng, kHorizon);
    for (Connective tc : {Connective::kBefore, Connective::kAfter,
                          Connective::kWhen, Connective::kWhenever}) {
      EXPECT_EQ(TcHolds(tc, sub, main),
                ViaLocationTime(tc, sub, main, kHorizon))
          << ConnectiveName(tc) << " sub " << AspectName(sub.kind) << " "
          << sub.trace.ToString() << " main " << AspectName(main.kind) << " "
          << main.trace.ToString();
    }
  }
}

TEST(QueryForTest, CoversSimpleQuantifiedSentences) {
  ParsedDiscourse d = ResolvePronouns(
      ParseText("Before John makes a phone call, he always lights up a "
                "cigarette."));
  auto q = QueryFor(d.sentences[0], {1, 2});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->tc, Connective::kBefore);
  EXPECT_EQ(q->quantifier, Quantifier::Every());
  EXPECT_EQ(q->sub.predicate, "phone");
  EXPECT_EQ(q->main.predicate, "light-up");
  EXPECT_EQ(q->main.args, std::vector<std::string>{"John"});
}

TEST(QueryForTest, SkipsPerfectAndNestedSentences) {
  for (const char *text :
       {"Often, when Anne came home late, Paul had already prepared dinner.",
        "When John is at the beach, he always squints when the sun is "
        "shining.",
        "When Mary telephoned, Sam took a beer and sat down in his armchair "
        "to forget the day."}) {
    ParsedDiscourse d = ResolvePronouns(ParseText(text));
    EXPECT_FALSE(QueryFor(d.sentences[0], {1, 2}).has_value()) << text;
  }
}

TEST(QueryForTest, OftenUsesThreshold) {
  ParsedDiscourse d = ParseText("When Mary telephoned, Sam was often asleep.");
  auto q = QueryFor(d.sentences[0], {2, 3});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->quantifier, Quantifier::Often({2, 3}));
}

}  // namespace
}  // namespace tempdrt
