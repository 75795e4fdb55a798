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

#include "tempdrt/drs.h"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "gtest/gtest.h"
#include "tempdrt/errors.h"
#include "tempdrt/random.h"
#include "tempdrt/term.h"

namespace tempdrt {
namespace {

Marker M(Sort sort, const char *hint) { return FreshMarker(sort, hint); }

TEST(MarkerTest, NowIsShared) {
  EXPECT_EQ(Marker::Now(), Marker::Now());
  EXPECT_TRUE(Marker::Now().is_now());
  EXPECT_EQ(Marker::Now().hint, "n");
}

TEST(MarkerTest, FreshIdsAreUniqueAcrossThreads) {
  std::vector<std::vector<uint64_t>> ids(4);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k) {
    threads.emplace_back([&ids, k] {
      for (int i = 0; i < 1000; ++i) {
        ids[k].push_back(FreshMarker(Sort::kTime).id);
      }
    });
  }
  for (std::thread &t : threads) t.join();
  std::set<uint64_t> all;
  for (const auto &v : ids) all.insert(v.begin(), v.end());
  EXPECT_EQ(all.size(), 4000u);
  EXPECT_EQ(all.count(Marker::Now().id), 0u);
}

TEST(RationalTest, ParsesAndReduces) {
  Rational half = Rational::Parse("2/4");
  EXPECT_EQ(half.num, 1);
  EXPECT_EQ(half.den, 2);
  EXPECT_EQ(Rational::Parse("0.75"), (Rational{3, 4}));
  EXPECT_EQ(Rational::Parse("1"), (Rational{1, 1}));
  EXPECT_EQ((Rational{2, 3}).ToString(), "2/3");
  EXPECT_THROW(Rational::Parse("1/0"), Error);
  EXPECT_THROW(Rational::Parse("half"), Error);
  EXPECT_THROW(Rational::Parse("-1/2"), Error);
  EXPECT_THROW(Rational::Parse("1/2x"), Error);
}

TEST(QuantifierTest, Names) {
  EXPECT_EQ(Quantifier::Every().ToString(), "every");
  EXPECT_EQ(Quantifier::Often({1, 2}).ToString(), "often(1/2)");
  EXPECT_EQ(Quantifier::Often({1, 2}), Quantifier::Often({2, 4}));
  EXPECT_FALSE(Quantifier::Often({1, 2}) == Quantifier::Every());
}

TEST(DrsTest, Declares) {
  Marker x = M(Sort::kIndividual, "x");
  Drs d;
  d.universe = {x};
  EXPECT_TRUE(d.Declares(x));
  EXPECT_FALSE(d.Declares(M(Sort::kIndividual, "y")));
}

TEST(MergeTest, UnionKeepsOrderAndSharesNow) {
  Marker x = M(Sort::kIndividual, "x"), e = M(Sort::kEvent, "e");
  Drs a, b;
  a.universe = {Marker::Now(), x};
  a.Add(Pred("John", {x}));
  b.universe = {Marker::Now(), e};
  b.Add(Desc(e, "leave", {x}));
  Drs ab = Merge(a, b);
  EXPECT_EQ(ab.universe.size(), 3u);
  ASSERT_EQ(ab.conditions.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Predication>(ab.conditions[0]));
}

TEST(MergeTest, SharedMarkerIsAnError) {
  Marker x = M(Sort::kIndividual, "x");
  Drs a, b;
  a.universe = {x};
  b.universe = {x};
  EXPECT_THROW(Merge(a, b), MergeError);
}

TEST(MergeTest, Associative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Drs a = RandomDrs(rng), b = RandomDrs(rng), c = RandomDrs(rng);
    EXPECT_TRUE(AlphaEquivalent(Merge(Merge(a, b), c), Merge(a, Merge(b, c))));
  }
}

TEST(MergeTest, EmptyIsIdentity) {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Drs a = RandomDrs(rng);
    EXPECT_TRUE(AlphaEquivalent(Merge(a, Drs{}), a));
    EXPECT_TRUE(AlphaEquivalent(Merge(Drs{}, a), a));
  }
}

Drs PhoneBox(const Marker &x, const Marker &e, const Marker &t) {
  Drs d;
  d.universe = {Marker::Now(), x, e, t};
  d.Add(Pred("John", {x}));
  d.Add(Desc(e, "phone", {x}));
  d.Add(Rel2(Rel::kIncludedIn, e, t));
  d.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
  return d;
}

TEST(AlphaTest, RenamingAndOrderDoNotMatter) {
  Drs a = PhoneBox(M(Sort::kIndividual, "x"), M(Sort::kEvent, "e"),
                   M(Sort::kTime, "t"));
  Drs b = PhoneBox(M(Sort::kIndividual, "y"), M(Sort::kEvent, "f"),
                   M(Sort::kTime, "u"));
  std::reverse(b.conditions.begin(), b.conditions.end());
  std::reverse(b.universe.begin(), b.universe.end());
  EXPECT_TRUE(AlphaEquivalent(a, b));
}

TEST(AlphaTest, DetectsStructuralDifferences) {
  Marker x = M(Sort::kIndividual, "x"), e = M(Sort::kEvent, "e"),
         t = M(Sort::kTime, "t");
  Drs a = PhoneBox(x, e, t);

  Drs flipped = a;
  flipped.conditions[2] = Rel2(Rel::kIncludedIn, t, e);
  EXPECT_FALSE(AlphaEquivalent(a, flipped));

  Drs other_rel = a;
  other_rel.conditions[3] = Rel2(Rel::kOverlaps, t, Marker::Now());
  EXPECT_FALSE(AlphaEquivalent(a, other_rel));

  Drs extra = a;
  extra.universe.push_back(M(Sort::kTime, "u"));
  EXPECT_FALSE(AlphaEquivalent(a, extra));

  Drs pred = a;
  pred.conditions[0] = Pred("Mary", {x});
  EXPECT_FALSE(AlphaEquivalent(a, pred));

  // A time marker in place of now.
  Drs not_now = a;
  Marker u = M(Sort::kTime, "u");
  not_now.universe[0] = u;
  not_now.conditions[3] = Rel2(Rel::kPrecedes, t, u);
  EXPECT_FALSE(AlphaEquivalent(a, not_now));
}

TEST(AlphaTest, BijectionIsInjective) {
  // Two distinct markers may not collapse onto one.
  Marker e1 = M(Sort::kEvent, "e1"), e2 = M(Sort::kEvent, "e2");
  Drs a;
  a.universe = {e1, e2};
  a.Add(Rel2(Rel::kPrecedes, e1, e2));
  Drs b;
  Marker f = M(Sort::kEvent, "f"), g = M(Sort::kEvent, "g");
  b.universe = {f, g};
  b.Add(Rel2(Rel::kPrecedes, f, f));
  EXPECT_FALSE(AlphaEquivalent(a, b));
  EXPECT_FALSE(AlphaEquivalent(b, a));
}

TEST(AlphaTest, UnmentionedMarkersPairBySort) {
  Drs a, b;
  a.universe = {M(Sort::kTime, "t"), M(Sort::kEvent, "e")};
  b.universe = {M(Sort::kEvent, "f"), M(Sort::kTime, "u")};
  EXPECT_TRUE(AlphaEquivalent(a, b));
  b.universe[0] = M(Sort::kState, "s");
  EXPECT_FALSE(AlphaEquivalent(a, b));
}

TEST(AlphaTest, NestedBoxesAndQuantifiers) {
  auto make = [](Quantifier q) {
    Marker x = FreshMarker(Sort::kIndividual, "x");
    Marker e = FreshMarker(Sort::kEvent, "e"), t = FreshMarker(Sort::kTime);
    Drs ante, cons;
    ante.universe = {e, t};
    ante.Add(Rel2(Rel::kEqualsEventTime, t, e));
    Marker e2 = FreshMarker(Sort::kEvent);
    cons.universe = {e2};
    cons.Add(Rel2(Rel::kPrecedes, e2, t));
    cons.Add(Desc(e2, "leave", {x}));
    Drs d;
    d.universe = {x};
    d.Add(Duplex{ante, q, cons});
    return d;
  };
  EXPECT_TRUE(AlphaEquivalent(make(Quantifier::Every()),
                              make(Quantifier::Every())));
  EXPECT_FALSE(AlphaEquivalent(make(Quantifier::Every()),
                               make(Quantifier::Often({1, 2}))));
  EXPECT_FALSE(AlphaEquivalent(make(Quantifier::Often({1, 3})),
                               make(Quantifier::Often({1, 2}))));
}

TEST(AlphaTest, EquivalenceLawsOnRandomDrs) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    Drs a = RandomDrs(rng);
    Drs b = RenameMarkers(a);
    Drs c = RenameMarkers(b);
    std::shuffle(c.conditions.begin(), c.conditions.end(), rng);
    std::shuffle(c.universe.begin(), c.universe.end(), rng);
    EXPECT_TRUE(AlphaEquivalent(a, a));
    EXPECT_EQ(AlphaEquivalent(a, b), AlphaEquivalent(b, a));
    EXPECT_TRUE(AlphaEquivalent(a, b));
    EXPECT_TRUE(AlphaEquivalent(b, c));
    EXPECT_TRUE(AlphaEquivalent(a, c));
    Drs other = RandomDrs(rng);
    EXPECT_EQ(AlphaEquivalent(a, other), AlphaEquivalent(other, a));
  }
}

TEST(AlphaTest, RenameMarkersKeepsNowAndChangesTheRest) {
  std::mt19937 rng(19);
  for (int i = 0; i < 50; ++i) {
    Drs a = RandomDrs(rng);
    Drs b = RenameMarkers(a);
    std::vector<Marker> da = DeclaredMarkers(a), db = DeclaredMarkers(b);
    ASSERT_EQ(da.size(), db.size());
    for (size_t k = 0; k < da.size(); ++k) {
      EXPECT_EQ(da[k].sort, db[k].sort);
      EXPECT_EQ(da[k].hint, db[k].hint);
      EXPECT_EQ(da[k].is_now(), da[k] == db[k]);
    }
  }
}

TEST(UnboundTest, RandomDrsIsClosed) {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(UnboundMarkers(RandomDrs(rng)).empty());
  }
}

TEST(UnboundTest, ConsequentSeesAntecedent) {
  Marker e = FreshMarker(Sort::kEvent, "e");
  Marker t = FreshMarker(Sort::kTime, "t");
  Drs ante, cons;
  ante.universe = {e};
  cons.universe = {t};
  cons.Add(Rel2(Rel::kIncludedIn, e, t));
  Drs d;
  d.Add(Duplex{ante, Quantifier::Every(), cons});
  EXPECT_TRUE(UnboundMarkers(d).empty());

  // The reverse direction is not accessible.
  Drs ante2, cons2;
  ante2.universe = {e};
  ante2.Add(Rel2(Rel::kIncludedIn, e, t));
  cons2.universe = {t};
  Drs d2;
  d2.Add(Duplex{ante2, Quantifier::Every(), cons2});
  std::vector<Marker> unbound = UnboundMarkers(d2);
  ASSERT_EQ(unbound.size(), 1u);
  EXPECT_EQ(unbound[0], t);
}

TEST(DrsTest, CountAndStripRpt) {
  Marker e = FreshMarker(Sort::kEvent, "e");
  Drs cons;
  cons.universe = {e};
  cons.Add(RptAssign{e});
  cons.Add(Rel2(Rel::kAbuts, e, e));
  Drs d;
  d.Add(Duplex{Drs{}, Quantifier::Every(), cons});
  EXPECT_EQ(CountRelations(d, Rel::kAbuts), 1);
  EXPECT_EQ(CountRelations(d, Rel::kPrecedes), 0);
  Drs stripped = WithoutRptAssignments(d);
  const auto &dx = std::get<Duplex>(stripped.conditions[0]);
  EXPECT_EQ(dx.consequent->conditions.size(), 1u);
}

TEST(BoxTest, DeepCopies) {
  Marker s = FreshMarker(Sort::kState, "s");
  Drs body;
  body.universe = {FreshMarker(Sort::kTime)};
  ComplexState cs{s, body};
  ComplexState copy = cs;
  copy.body->universe.clear();
  EXPECT_EQ(cs.body->universe.size(), 1u);
}

}  // namespace
}  // namespace tempdrt
