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

// Random generators for property tests: DRSs, interval models and a family
// of quantified temporal sentences.

#ifndef TEMPDRT_RANDOM_H_
#define TEMPDRT_RANDOM_H_

#include <random>
#include <string>
#include <vector>

#include "tempdrt/drs.h"
#include "tempdrt/interval.h"
#include "tempdrt/model.h"

namespace tempdrt {

struct RandomDrsOptions {
  int max_markers = 6;  // declared markers, the utterance point excluded
  int max_depth = 3;    // nesting of duplex and complex-state boxes
};

// A closed DRS: every marker used is declared in an accessible universe.
Drs RandomDrs(std::mt19937 &rng, const RandomDrsOptions &options = {});

// A random subinterval of 0..timeline_end.
Interval RandomInterval(std::mt19937 &rng, int timeline_end);

struct EventualityTemplate {
  Aspect kind = Aspect::kEvent;
  std::string predicate;
  std::vector<std::string> args;
};

struct RandomModelOptions {
  int max_timeline = 30;
  int max_eventualities = 6;
};

// Timeline 1..max_timeline, now in 1..T, and up to max_eventualities
// eventualities drawn from `templates` with random traces.
TemporalModel RandomModel(std::mt19937 &rng,
                          const std::vector<Individual> &individuals,
                          const std::vector<EventualityTemplate> &templates,
                          const RandomModelOptions &options = {});

// Quantified sentences over two fixed participants: every connective, both
// aspects in each clause, both tenses. "always" except with "whenever".
struct AgreementCorpus {
  std::vector<Individual> individuals;
  std::vector<EventualityTemplate> templates;
  std::vector<std::string> sentences;
};
AgreementCorpus MakeAgreementCorpus();

}  // namespace tempdrt

#endif  // TEMPDRT_RANDOM_H_
