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

// Helpers shared by the construction strategies. Not installed.

#ifndef TEMPDRT_SRC_CONSTRUCT_UTIL_H_
#define TEMPDRT_SRC_CONSTRUCT_UTIL_H_

#include <map>
#include <string>
#include <vector>

#include "tempdrt/drs.h"
#include "tempdrt/errors.h"
#include "tempdrt/fragment.h"

namespace tempdrt {
namespace internal {

// Numbered display hints per prefix: e1, e2, ...
class Hints {
 public:
  std::string Next(const std::string &prefix, int first = 1) {
    auto it = next_.emplace(prefix, first).first;
    return prefix + std::to_string(it->second++);
  }

 private:
  std::map<std::string, int> next_;
};

// Individual markers for proper names, declared in the top box with a name
// condition on first mention.
class Participants {
 public:
  explicit Participants(Drs *top) : top_(top) {}

  Marker Of(const RefExpr &r) {
    if (r.kind == RefExpr::Kind::kPronoun) {
      throw ConstructionError("unresolved pronoun '" + r.surface + "'");
    }
    auto it = markers_.find(r.lemma);
    if (it != markers_.end()) return it->second;
    static const char *kHints[] = {"x", "y", "z", "w", "v", "u"};
    size_t k = markers_.size();
    std::string hint = k < 6 ? kHints[k] : "x" + std::to_string(k + 1);
    Marker m = FreshMarker(Sort::kIndividual, hint);
    top_->universe.push_back(m);
    top_->Add(Pred(r.lemma, {m}));
    markers_.emplace(r.lemma, m);
    return m;
  }

  // Subject (unless expletive) followed by the objects.
  std::vector<Marker> Args(const Clause &c) {
    std::vector<Marker> args;
    if (c.subject.kind != RefExpr::Kind::kExpletive) args.push_back(Of(c.subject));
    for (const RefExpr &o : c.objects) args.push_back(Of(o));
    return args;
  }

 private:
  Drs *top_;
  std::map<std::string, Marker> markers_;
};

// Clauses that continue the narrative of the preceding quantified sentence:
// no temporal clause or adverb of their own, same subject and tense.
inline bool ContinuesScope(const Sentence &prev, const Sentence &next) {
  if (!prev.quantified() || prev.has_scoped() || prev.main.empty()) {
    return false;
  }
  if (next.connective || next.q_adverb || next.has_scoped()) return false;
  const Clause &head = prev.main.front();
  for (const Clause &c : next.main) {
    if (c.subject.lemma != head.subject.lemma || c.tense != head.tense) {
      return false;
    }
  }
  return true;
}

}  // namespace internal
}  // namespace tempdrt

#endif  // TEMPDRT_SRC_CONSTRUCT_UTIL_H_
