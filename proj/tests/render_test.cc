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

#include "tempdrt/render.h"

#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "tempdrt/construct.h"
#include "tempdrt/corpus.h"

namespace tempdrt {
namespace {

std::string ReadGolden(const std::string &name) {
  std::ifstream in(std::string(TEMPDRT_TEST_FIXTURES) + "/golden/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(DisplayWidthTest, CountsCodePoints) {
  EXPECT_EQ(DisplayWidth(""), 0u);
  EXPECT_EQ(DisplayWidth("e < n"), 5u);
  EXPECT_EQ(DisplayWidth("e ⊆ t"), 5u);
  EXPECT_EQ(DisplayWidth("e ⊃⊂ s"), 6u);
  EXPECT_EQ(DisplayWidth("≼○"), 2u);
}

TEST(RenderTest, EmptyBox) { EXPECT_EQ(RenderBox(Drs{}), "+--+\n+--+\n"); }

TEST(RenderTest, FlatBox) {
  Marker x = FreshMarker(Sort::kIndividual, "x");
  Marker e = FreshMarker(Sort::kEvent, "e");
  Marker t = FreshMarker(Sort::kTime, "t");
  Drs d;
  d.universe = {Marker::Now(), x, e, t};
  d.Add(Pred("John", {x}));
  d.Add(Desc(e, "phone", {x}));
  d.Add(Rel2(Rel::kIncludedIn, e, t));
  d.Add(Rel2(Rel::kPrecedes, t, Marker::Now()));
  EXPECT_EQ(RenderBox(d),
            "+-------------+\n"
            "| n x e t     |\n"
            "+-------------+\n"
            "| John(x)     |\n"
            "| e: phone(x) |\n"
            "| e ⊆ t       |\n"
            "| t < n       |\n"
            "+-------------+\n");
}

TEST(RenderTest, UniverseOnly) {
  Drs d;
  d.universe = {FreshMarker(Sort::kTime, "t1")};
  EXPECT_EQ(RenderBox(d), "+----+\n| t1 |\n+----+\n");
}

TEST(RenderTest, RelationSymbols) {
  Marker a = FreshMarker(Sort::kTime, "a"), b = FreshMarker(Sort::kTime, "b");
  Marker e = FreshMarker(Sort::kEvent, "e");
  Drs d;
  d.universe = {a, b, e};
  d.Add(Rel2(Rel::kOverlaps, a, b));
  d.Add(Rel2(Rel::kAbuts, a, b));
  d.Add(Rel2(Rel::kJustBefore, a, b));
  d.Add(Rel2(Rel::kEqualsEventTime, a, e));
  d.Add(RptAssign{e});
  std::string box = RenderBox(d);
  EXPECT_NE(box.find("| a ○ b      |"), std::string::npos) << box;
  EXPECT_NE(box.find("| a ⊃⊂ b     |"), std::string::npos) << box;
  EXPECT_NE(box.find("| a ≼ b      |"), std::string::npos) << box;
  EXPECT_NE(box.find("| a = loc(e) |"), std::string::npos) << box;
  EXPECT_NE(box.find("| Rpt := e   |"), std::string::npos) << box;
}

TEST(RenderTest, DuplexSideBySide) {
  Drs ante, cons;
  ante.universe = {FreshMarker(Sort::kEvent, "e")};
  cons.universe = {FreshMarker(Sort::kTime, "t")};
  Drs d;
  d.Add(Duplex{ante, Quantifier::Often({1, 2}), cons});
  EXPECT_EQ(RenderBox(d),
            "+----------------------------+\n"
            "|                            |\n"
            "+----------------------------+\n"
            "| +---+                +---+ |\n"
            "| | e | often(1/2) ==> | t | |\n"
            "| +---+                +---+ |\n"
            "+----------------------------+\n");
}

TEST(RenderTest, ComplexStatePrefix) {
  Marker s = FreshMarker(Sort::kState, "s");
  Drs body;
  body.universe = {FreshMarker(Sort::kTime, "t")};
  Drs d;
  d.universe = {s};
  d.Add(ComplexState{s, body});
  EXPECT_EQ(RenderBox(d),
            "+----------+\n"
            "| s        |\n"
            "+----------+\n"
            "| s: +---+ |\n"
            "|    | t | |\n"
            "|    +---+ |\n"
            "+----------+\n");
}

struct GoldenCase {
  const char *file;
  Strategy strategy;
  std::string_view text;
};

void PrintTo(const GoldenCase &c, std::ostream *os) { *os << c.file; }

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesFile) {
  const GoldenCase &c = GetParam();
  EXPECT_EQ(RenderBox(ConstructText(c.strategy, std::string(c.text))),
            ReadGolden(c.file));
}

INSTANTIATE_TEST_SUITE_P(
    Renders, GoldenTest,
    ::testing::Values(
        GoldenCase{"fig1a.txt", Strategy::kBaseline, corpus::kBeforePhoneCall},
        GoldenCase{"fig1b.txt", Strategy::kSplit, corpus::kBeforePhoneCall},
        GoldenCase{"fig3.txt", Strategy::kBaseline,
                   corpus::kWheneverTelephoned},
        GoldenCase{"fig4.txt", Strategy::kSplit, corpus::kHabitNarrative},
        GoldenCase{"fig5.txt", Strategy::kSplit, corpus::kBeachSquint}),
    [](const ::testing::TestParamInfo<GoldenCase> &info) {
      std::string name = info.param.file;
      return name.substr(0, name.find('.'));
    });

}  // namespace
}  // namespace tempdrt
