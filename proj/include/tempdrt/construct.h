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

// Shared pieces of the two DRS construction strategies.

#ifndef TEMPDRT_CONSTRUCT_H_
#define TEMPDRT_CONSTRUCT_H_

#include <string>

#include "tempdrt/drs.h"
#include "tempdrt/fragment.h"

namespace tempdrt {

enum class Strategy { kBaseline, kSplit };

const char *StrategyName(Strategy strategy);

struct ConstructionOptions {
  // Proportion an "often" duplex must exceed.
  Rational often_threshold{1, 2};
};

// Dispatches to BuildBaseline or BuildSplit. The discourse must have its
// pronouns resolved.
Drs Construct(Strategy strategy, const ParsedDiscourse &discourse,
              const ConstructionOptions &options = {});

// Tokenize, parse, resolve pronouns, construct.
Drs ConstructText(Strategy strategy, const std::string &text,
                  const ConstructionOptions &options = {});

}  // namespace tempdrt

#endif  // TEMPDRT_CONSTRUCT_H_
