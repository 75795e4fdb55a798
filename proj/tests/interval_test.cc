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

#include "tempdrt/interval.h"

#include <random>

#include "gtest/gtest.h"
#include "tempdrt/random.h"

namespace tempdrt {
namespace {

TEST(IntervalTest, Examples) {
  EXPECT_TRUE(Precedes({1, 2}, {3, 4}));
  EXPECT_FALSE(Precedes({1, 3}, {3, 4}));
  EXPECT_TRUE(IncludedIn({10, 12}, {9, 20}));
  EXPECT_FALSE(IncludedIn({9, 21}, {9, 20}));
  EXPECT_TRUE(Overlaps({1, 3}, {3, 4}));
  EXPECT_FALSE(Overlaps({1, 2}, {3, 4}));
  EXPECT_TRUE(Abuts({10, 12}, {13, 30}));
  EXPECT_FALSE(Abuts({10, 12}, {14, 30}));
  EXPECT_TRUE(JustBefore({10, 12}, {13, 13}, 1));
  EXPECT_FALSE(JustBefore({10, 12}, {14, 14}, 1));
  EXPECT_TRUE(JustBefore({10, 12}, {14, 14}, 2));
  EXPECT_FALSE(JustBefore({10, 12}, {12, 14}, 2));
  EXPECT_EQ(Interval({3, 5}).ToString(), "[3,5]");
}

TEST(IntervalTest, RandomIntervalsAreWellFormed) {
  std::mt19937 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Interval a = RandomInterval(rng, 30);
    EXPECT_LE(0, a.start);
    EXPECT_LE(a.start, a.end);
    EXPECT_LE(a.end, 30);
  }
}

// Laws checked against point-set definitions.
bool PointIn(int p, const Interval &a) { return a.start <= p && p <= a.end; }

TEST(IntervalTest, AgreesWithPointSets) {
  std::mt19937 rng(2);
  for (int i = 0; i < 1000; ++i) {
    Interval a = RandomInterval(rng, 12), b = RandomInterval(rng, 12);
    bool all_before = true, subset = true, shared = false;
    for (int p = 0; p <= 12; ++p) {
      for (int q = 0; q <= 12; ++q) {
        if (PointIn(p, a) && PointIn(q, b) && !(p < q)) all_before = false;
      }
      if (PointIn(p, a) && !PointIn(p, b)) subset = false;
      if (PointIn(p, a) && PointIn(p, b)) shared = true;
    }
    EXPECT_EQ(Precedes(a, b), all_before);
    EXPECT_EQ(IncludedIn(a, b), subset);
    EXPECT_EQ(Overlaps(a, b), shared);
    // Adjacent: a before b with no point strictly between them.
    bool gap = false;
    for (int p = a.end + 1; p < b.start; ++p) gap = true;
    EXPECT_EQ(Abuts(a, b), all_before && !gap);
  }
}

TEST(IntervalTest, AlgebraLaws) {
  std::mt19937 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Interval a = RandomInterval(rng, 30), b = RandomInterval(rng, 30),
             c = RandomInterval(rng, 30);
    EXPECT_FALSE(Precedes(a, a));
    if (Precedes(a, b) && Precedes(b, c)) {
      EXPECT_TRUE(Precedes(a, c));
    }
    if (Precedes(a, b)) {
      EXPECT_FALSE(Precedes(b, a));
    }
    EXPECT_EQ(Overlaps(a, b), Overlaps(b, a));
    EXPECT_TRUE(Overlaps(a, a));
    EXPECT_NE(Overlaps(a, b), Precedes(a, b) || Precedes(b, a));
    EXPECT_TRUE(IncludedIn(a, a));
    if (IncludedIn(a, b) && IncludedIn(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (IncludedIn(a, b) && IncludedIn(b, c)) {
      EXPECT_TRUE(IncludedIn(a, c));
    }
    EXPECT_EQ(Abuts(a, b), a.end + 1 == b.start);
    EXPECT_EQ(JustBefore(a, b, 1), Abuts(a, b));
    for (int d = 1; d <= 3; ++d) {
      if (JustBefore(a, b, d)) {
        EXPECT_TRUE(JustBefore(a, b, d + 1));
      }
      if (JustBefore(a, b, d)) {
        EXPECT_TRUE(Precedes(a, b));
      }
    }
  }
}

}  // namespace
}  // namespace tempdrt
