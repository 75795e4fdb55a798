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

// The example corpus used throughout the tests, the
// suite and the documentation.

#ifndef TEMPDRT_CORPUS_H_
#define TEMPDRT_CORPUS_H_

#include <string_view>
#include <vector>

namespace tempdrt {
namespace corpus {

inline constexpr std::string_view kBeforePhoneCall =
    "Before John makes a phone call, he always lights up a cigarette.";
inline constexpr std::string_view kOftenDinner =
    "Often, when Anne came home late, Paul had already prepared dinner.";
// The habit narrative with its subject named; the pronoun-initial original
// has no antecedent on its own.
inline constexpr std::string_view kHabitNarrative =
    "When John came home, he always switched on the tv. He took a beer and "
    "sat down in his armchair to forget the day.";
inline constexpr std::string_view kHabitNarrativePronouns =
    "When he came home, he always switched on the tv. He took a beer and sat "
    "down in his armchair to forget the day.";
inline constexpr std::string_view kBeachSquint =
    "When John is at the beach, he always squints when the sun is shining.";
inline constexpr std::string_view kWheneverTelephoned =
    "Whenever Mary telephoned, Sam was asleep.";
inline constexpr std::string_view kWhenAlwaysTelephoned =
    "When Mary telephoned, Sam was always asleep.";
inline constexpr std::string_view kBlindNarrative =
    "John got up, went to the window, and raised the blind. It was light out. "
    "He pulled the blind down and went back to bed. He wasn't ready to face "
    "the day. He was too depressed.";
inline constexpr std::string_view kBlindNarrativeOpening =
    "John got up, went to the window, and raised the blind. It was light out.";
inline constexpr std::string_view kWroteLetter = "Mary wrote the letter.";
inline constexpr std::string_view kWroteLetterWhenLeft =
    "Mary wrote the letter when Bill left.";
inline constexpr std::string_view kMetPresident = "Mary has met the president.";

// Every sentence above that parses on its own.
inline std::vector<std::string_view> AllSentences() {
  return {kBeforePhoneCall,     kOftenDinner,          kHabitNarrativePronouns,
          kHabitNarrative,      kBeachSquint,          kWheneverTelephoned,
          kWhenAlwaysTelephoned, kBlindNarrative,      kWroteLetter,
          kWroteLetterWhenLeft, kMetPresident};
}

}  // namespace corpus
}  // namespace tempdrt

#endif  // TEMPDRT_CORPUS_H_
