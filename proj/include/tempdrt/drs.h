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

// Discourse Representation Structures.
//
// A Drs is a universe of markers plus an ordered list of conditions. Nested
// boxes hang off Duplex (quantified) and ComplexState conditions. Condition
// order is kept for rendering but carries no meaning: alpha-equivalence and
// evaluation both ignore it.

#ifndef TEMPDRT_DRS_H_
#define TEMPDRT_DRS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace tempdrt {

enum class Sort { kIndividual, kEvent, kState, kTime, kNow };

const char *SortName(Sort sort);

// A discourse referent. Identity is the id; the hint is only for display.
struct Marker {
  uint64_t id = 0;
  Sort sort = Sort::kIndividual;
  std::string hint;

  // The utterance point. Shared by every DRS.
  static const Marker &Now();

  bool is_now() const { return sort == Sort::kNow; }
  bool is_eventuality() const {
    return sort == Sort::kEvent || sort == Sort::kState;
  }
  // Markers that denote something with a temporal trace.
  bool is_temporal() const { return sort != Sort::kIndividual; }

  bool operator==(const Marker &other) const { return id == other.id; }
  bool operator<(const Marker &other) const { return id < other.id; }
};

// Returns a marker whose id was never issued before. Thread-safe.
Marker FreshMarker(Sort sort, std::string hint = "");

// Rational number for quantifier thresholds.
struct Rational {
  int64_t num = 1;
  int64_t den = 2;

  bool operator==(const Rational &other) const {
    return num * other.den == other.num * den;
  }
  std::string ToString() const;
  // Accepts "p/q" or a decimal such as "0.5".
  static Rational Parse(const std::string &text);
};

struct Quantifier {
  enum class Kind { kEvery, kOften };
  Kind kind = Kind::kEvery;
  Rational threshold;  // meaningful for kOften only

  static Quantifier Every() { return {}; }
  static Quantifier Often(Rational threshold) {
    return {Kind::kOften, threshold};
  }
  bool operator==(const Quantifier &other) const {
    return kind == other.kind &&
           (kind == Kind::kEvery || threshold == other.threshold);
  }
  std::string ToString() const;
};

enum class Rel {
  kPrecedes,         // <   end(lhs) < start(rhs)
  kIncludedIn,       // ⊆   trace inclusion
  kOverlaps,         // ○   non-empty intersection
  kAbuts,            // ⊃⊂  end(lhs) + 1 == start(rhs)
  kJustBefore,       // ≼   rhs starts just after lhs ends
  kEqualsEventTime,  // lhs = loc(rhs)
};

const char *RelName(Rel rel);    // term-syntax keyword
const char *RelSymbol(Rel rel);  // box rendering

struct TemporalRelation {
  Rel rel = Rel::kPrecedes;
  Marker lhs;
  Marker rhs;
};

struct Drs;

// Value-semantic owning pointer for nested boxes.
class Box {
 public:
  Box();
  Box(Drs drs);  // NOLINT: implicit on purpose
  Box(const Box &other);
  Box(Box &&other) noexcept = default;
  Box &operator=(const Box &other);
  Box &operator=(Box &&other) noexcept = default;
  ~Box();

  const Drs &operator*() const { return *drs_; }
  const Drs *operator->() const { return drs_.get(); }
  Drs &operator*() { return *drs_; }
  Drs *operator->() { return drs_.get(); }

 private:
  std::unique_ptr<Drs> drs_;
};

struct Predication {
  std::string pred;
  std::vector<Marker> args;
};

// "e: [x phone]". The reserved predicate "perf" with the culminating event
// as its argument describes a consequent state.
struct EventualityDescription {
  Marker ev;
  Predication body;
};

inline constexpr const char *kPerfPredicate = "perf";

// A derived state whose description is a whole box (a habit).
struct ComplexState {
  Marker state;
  Box body;
};

struct Temporal {
  TemporalRelation relation;
};

struct Duplex {
  Box antecedent;
  Quantifier quantifier;
  Box consequent;
};

// Narrative bookkeeping; never takes part in embedding.
struct RptAssign {
  Marker target;
};

using Condition = std::variant<Predication, EventualityDescription,
                               ComplexState, Temporal, Duplex, RptAssign>;

struct Drs {
  std::vector<Marker> universe;
  std::vector<Condition> conditions;

  bool empty() const { return universe.empty() && conditions.empty(); }
  bool Declares(const Marker &m) const;
  void Add(Condition c) { conditions.push_back(std::move(c)); }
};

// Condition builders.
Condition Pred(std::string pred, std::vector<Marker> args);
Condition Desc(const Marker &ev, std::string pred, std::vector<Marker> args);
Condition Rel2(Rel rel, const Marker &lhs, const Marker &rhs);

// Union of universes and condition lists (a's conditions first). The
// utterance point may occur in both. Throws MergeError if any other marker is
// declared in both.
Drs Merge(const Drs &a, const Drs &b);

// True iff a sort-preserving bijection of markers makes the two DRSs equal up
// to condition order in every box. The utterance point maps to itself.
bool AlphaEquivalent(const Drs &a, const Drs &b);

// Markers used in a condition but not declared in an accessible universe.
// Accessibility: enclosing boxes, and the antecedent from its consequent.
std::vector<Marker> UnboundMarkers(const Drs &drs);

// Every marker declared anywhere in the tree, outermost first.
std::vector<Marker> DeclaredMarkers(const Drs &drs);

// Number of Temporal conditions with the given relation, at any depth.
int CountRelations(const Drs &drs, Rel rel);

// Copy of `drs` with every RptAssign condition removed at every depth.
Drs WithoutRptAssignments(const Drs &drs);

// Copy with every declared marker replaced by a fresh one (same sort and
// hint). The utterance point is kept.
Drs RenameMarkers(const Drs &drs);

}  // namespace tempdrt

#endif  // TEMPDRT_DRS_H_
