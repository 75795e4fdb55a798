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

// Finite interval event models.
//
// Model files are line oriented; '#' starts a comment:
//
//   timeline 40
//   now 35
//   individual john m
//   event p1 phone(john) 10 12
//   state s1 be-asleep(sam) 10 29
//
// The timeline is the integer points 0..T. See docs/model-format.md.

#ifndef TEMPDRT_MODEL_H_
#define TEMPDRT_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

#include "tempdrt/interval.h"
#include "tempdrt/lexicon.h"

namespace tempdrt {

struct Individual {
  std::string name;
  Gender gender = Gender::kNone;
};

struct ModelEventuality {
  std::string id;
  Aspect kind = Aspect::kEvent;
  std::string predicate;
  std::vector<std::string> args;  // individual names
  Interval trace;
};

struct TemporalModel {
  int timeline_end = 0;
  int now = 0;
  std::vector<Individual> individuals;
  std::vector<ModelEventuality> eventualities;

  // Index of the individual with this name (case-insensitive), or -1.
  int FindIndividual(std::string_view name) const;

  // Model file text that parses back to this model.
  std::string ToString() const;
};

// Throws ModelError with the offending line. Predicates must be lexicon
// verbs of the matching kind and arity.
TemporalModel ParseModel(std::string_view text,
                         const Lexicon &lexicon = Lexicon::Default());
TemporalModel LoadModel(const std::string &path,
                        const Lexicon &lexicon = Lexicon::Default());

}  // namespace tempdrt

#endif  // TEMPDRT_MODEL_H_
