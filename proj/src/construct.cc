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

#include "tempdrt/construct.h"

#include "tempdrt/baseline.h"
#include "tempdrt/split.h"

namespace tempdrt {

const char *StrategyName(Strategy strategy) {
  return strategy == Strategy::kBaseline ? "baseline" : "split";
}

Drs Construct(Strategy strategy, const ParsedDiscourse &discourse,
              const ConstructionOptions &options) {
  if (strategy == Strategy::kBaseline) return BuildBaseline(discourse, options);
  return BuildSplit(discourse, options);
}

Drs ConstructText(Strategy strategy, const std::string &text,
                  const ConstructionOptions &options) {
  return Construct(strategy, ResolvePronouns(ParseText(text)), options);
}

}  // namespace tempdrt
