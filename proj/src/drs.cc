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
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

std::atomic<uint64_t> next_marker_id{1};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const char *SortName(Sort sort) {
  switch (sort) {
    case Sort::kIndividual: return "individual";
    case Sort::kEvent: return "event";
    case Sort::kState: return "state";
    case Sort::kTime: return "time";
    case Sort::kNow: return "now";
  }
  return "";
}

const Marker &Marker::Now() {
  static const Marker now{0, Sort::kNow, "n"};
  return now;
}

Marker FreshMarker(Sort sort, std::string hint) {
  uint64_t id = next_marker_id.fetch_add(1, std::memory_order_relaxed);
  return Marker{id, sort, std::move(hint)};
}

// Printed in lowest terms so that equal thresholds print alike.
std::string Rational::ToString() const {
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

Rational Rational::Parse(const std::string &text) {
  Rational r;
  try {
    size_t slash = text.find('/');
    if (slash != std::string::npos) {
      size_t used = 0;
      r.num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      std::string den = text.substr(slash + 1);
      r.den = std::stoll(den, &used);
      if (used != den.size()) throw std::invalid_argument(text);
    } else {
      size_t dot = text.find('.');
      std::string digits = text;
      r.den = 1;
      if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        for (size_t i = dot + 1; i < text.size(); ++i) r.den *= 10;
      }
      size_t used = 0;
      r.num = std::stoll(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception &) {
    throw Error("bad rational '" + text + "'");
  }
  if (r.den <= 0 || r.num < 0) throw Error("bad rational '" + text + "'");
  int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Quantifier::ToString() const {
  if (kind == Kind::kEvery) return "every";
  return "often(" + threshold.ToString() + ")";
}

const char *RelName(Rel rel) {
  switch (rel) {
    case Rel::kPrecedes: return "precedes";
    case Rel::kIncludedIn: return "subset";
    case Rel::kOverlaps: return "overlaps";
    case Rel::kAbuts: return "abuts";
    case Rel::kJustBefore: return "just-before";
    case Rel::kEqualsEventTime: return "loc";
  }
  return "";
}

const char *RelSymbol(Rel rel) {
  switch (rel) {
    case Rel::kPrecedes: return "<";
    case Rel::kIncludedIn: return "⊆";
    case Rel::kOverlaps: return "○";
    case Rel::kAbuts: return "⊃⊂";
    case Rel::kJustBefore: return "≼";
    case Rel::kEqualsEventTime: return "=";
  }
  return "";
}

Box::Box() : drs_(std::make_unique<Drs>()) {}
Box::Box(Drs drs) : drs_(std::make_unique<Drs>(std::move(drs))) {}
Box::Box(const Box &other) : drs_(std::make_unique<Drs>(*other.drs_)) {}
Box &Box::operator=(const Box &other) {
  if (this != &other) drs_ = std::make_unique<Drs>(*other.drs_);
  return *this;
}
Box::~Box() = default;

bool Drs::Declares(const Marker &m) const {
  return std::find(universe.begin(), universe.end(), m) != universe.end();
}

Condition Pred(std::string pred, std::vector<Marker> args) {
  return Predication{std::move(pred), std::move(args)};
}

Condition Desc(const Marker &ev, std::string pred, std::vector<Marker> args) {
  return EventualityDescription{ev, Predication{std::move(pred), std::move(args)}};
}

Condition Rel2(Rel rel, const Marker &lhs, const Marker &rhs) {
  return Temporal{TemporalRelation{rel, lhs, rhs}};
}

Drs Merge(const Drs &a, const Drs &b) {
  Drs out = a;
  for (const Marker &m : b.universe) {
    if (a.Declares(m)) {
      if (m.is_now()) continue;
      throw MergeError("marker '" + m.hint + "' declared in both boxes");
    }
    out.universe.push_back(m);
  }
  out.conditions.insert(out.conditions.end(), b.conditions.begin(),
                        b.conditions.end());
  return out;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence.
//
// Backtracking search in continuation-passing style: each step extends a
// partial bijection and hands it to the rest of the match, so a choice made
// deep inside a nested box can be revisited when a later condition fails.

namespace {

struct Bijection {
  std::map<uint64_t, uint64_t> fwd, bwd;

  bool Bind(const Marker &x, const Marker &y) {
    if (x.sort != y.sort) return false;
    if (x.is_now() || y.is_now()) return x.is_now() && y.is_now();
    auto f = fwd.find(x.id);
    if (f != fwd.end()) return f->second == y.id;
    if (bwd.count(y.id)) return false;
    fwd[x.id] = y.id;
    bwd[y.id] = x.id;
    return true;
  }
};

using Cont = std::function<bool(const Bijection &)>;

bool MatchBox(const Drs &a, const Drs &b, const Bijection &bij, const Cont &k);

bool BindAll(Bijection *bij, const std::vector<Marker> &x,
             const std::vector<Marker> &y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!bij->Bind(x[i], y[i])) return false;
  }
  return true;
}

bool MatchCond(const Condition &x, const Condition &y, const Bijection &bij,
               const Cont &k) {
  if (x.index() != y.index()) return false;
  Bijection next = bij;
  return std::visit(
      Overloaded{
          [&](const Predication &p) {
            const auto &q = std::get<Predication>(y);
            return p.pred == q.pred && BindAll(&next, p.args, q.args) &&
                   k(next);
          },
          [&](const EventualityDescription &p) {
            const auto &q = std::get<EventualityDescription>(y);
            return p.body.pred == q.body.pred && next.Bind(p.ev, q.ev) &&
                   BindAll(&next, p.body.args, q.body.args) && k(next);
          },
          [&](const ComplexState &p) {
            const auto &q = std::get<ComplexState>(y);
            return next.Bind(p.state, q.state) &&
                   MatchBox(*p.body, *q.body, next, k);
          },
          [&](const Temporal &p) {
            const auto &q = std::get<Temporal>(y);
            return p.relation.rel == q.relation.rel &&
                   next.Bind(p.relation.lhs, q.relation.lhs) &&
                   next.Bind(p.relation.rhs, q.relation.rhs) && k(next);
          },
          [&](const Duplex &p) {
            const auto &q = std::get<Duplex>(y);
            if (!(p.quantifier == q.quantifier)) return false;
            return MatchBox(*p.antecedent, *q.antecedent, next,
                            [&](const Bijection &after) {
                              return MatchBox(*p.consequent, *q.consequent,
                                              after, k);
                            });
          },
          [&](const RptAssign &p) {
            const auto &q = std::get<RptAssign>(y);
            return next.Bind(p.target, q.target) && k(next);
          },
      },
      x);
}

bool MatchConds(const Drs &a, const Drs &b, size_t i, std::vector<bool> *used,
                const Bijection &bij, const Cont &k) {
  if (i == a.conditions.size()) return k(bij);
  for (size_t j = 0; j < b.conditions.size(); ++j) {
    if ((*used)[j]) continue;
    if (a.conditions[i].index() != b.conditions[j].index()) continue;
    (*used)[j] = true;
    bool ok = MatchCond(a.conditions[i], b.conditions[j], bij,
                        [&](const Bijection &next) {
                          return MatchConds(a, b, i + 1, used, next, k);
                        });
    (*used)[j] = false;
    if (ok) return true;
  }
  return false;
}

// Universe markers must map into the partner universe; markers no condition
// mentions are paired freely by sort.
bool CloseUniverse(const Drs &a, const Drs &b, const Bijection &bij,
                   const Cont &k) {
  Bijection next = bij;
  std::vector<Marker> free_a;
  for (const Marker &m : a.universe) {
    auto f = next.fwd.find(m.id);
    if (m.is_now()) {
      if (!b.Declares(Marker::Now())) return false;
      continue;
    }
    if (f == next.fwd.end()) {
      free_a.push_back(m);
      continue;
    }
    bool found = false;
    for (const Marker &n : b.universe) found = found || n.id == f->second;
    if (!found) return false;
  }
  std::vector<Marker> free_b;
  for (const Marker &m : b.universe) {
    if (!m.is_now() && !next.bwd.count(m.id)) free_b.push_back(m);
  }
  if (free_a.size() != free_b.size()) return false;
  std::vector<bool> taken(free_b.size(), false);
  for (const Marker &m : free_a) {
    bool paired = false;
    for (size_t j = 0; j < free_b.size() && !paired; ++j) {
      if (!taken[j] && free_b[j].sort == m.sort) {
        taken[j] = true;
        paired = next.Bind(m, free_b[j]);
      }
    }
    if (!paired) return false;
  }
  return k(next);
}

std::string Signature(const Condition &c) {
  return std::visit(
      Overloaded{
          [](const Predication &p) { return "p:" + p.pred; },
          [](const EventualityDescription &p) { return "d:" + p.body.pred; },
          [](const ComplexState &) { return std::string("c"); },
          [](const Temporal &p) {
            return std::string("t:") + RelName(p.relation.rel);
          },
          [](const Duplex &p) {
            return std::string(p.quantifier.kind == Quantifier::Kind::kEvery
                                   ? "x:every"
                                   : "x:often");
          },
          [](const RptAssign &) { return std::string("r"); },
      },
      c);
}

bool SameShape(const Drs &a, const Drs &b) {
  if (a.universe.size() != b.universe.size() ||
      a.conditions.size() != b.conditions.size()) {
    return false;
  }
  std::multiset<Sort> sa, sb;
  for (const Marker &m : a.universe) sa.insert(m.sort);
  for (const Marker &m : b.universe) sb.insert(m.sort);
  if (sa != sb) return false;
  std::multiset<std::string> ca, cb;
  for (const Condition &c : a.conditions) ca.insert(Signature(c));
  for (const Condition &c : b.conditions) cb.insert(Signature(c));
  return ca == cb;
}

bool MatchBox(const Drs &a, const Drs &b, const Bijection &bij,
              const Cont &k) {
  if (!SameShape(a, b)) return false;
  std::vector<bool> used(b.conditions.size(), false);
  return MatchConds(a, b, 0, &used, bij, [&](const Bijection &next) {
    return CloseUniverse(a, b, next, k);
  });
}

void CollectUnbound(const Drs &drs, std::vector<std::set<uint64_t>> *scopes,
                    std::vector<Marker> *out);

void CheckMarker(const Marker &m, const std::vector<std::set<uint64_t>> &scopes,
                 std::vector<Marker> *out) {
  for (const auto &scope : scopes) {
    if (scope.count(m.id)) return;
  }
  for (const Marker &seen : *out) {
    if (seen == m) return;
  }
  out->push_back(m);
}

void CollectConditionUnbound(const Condition &c,
                             std::vector<std::set<uint64_t>> *scopes,
                             std::vector<Marker> *out) {
  std::visit(
      Overloaded{
          [&](const Predication &p) {
            for (const Marker &m : p.args) CheckMarker(m, *scopes, out);
          },
          [&](const EventualityDescription &p) {
            CheckMarker(p.ev, *scopes, out);
            for (const Marker &m : p.body.args) CheckMarker(m, *scopes, out);
          },
          [&](const ComplexState &p) {
            CheckMarker(p.state, *scopes, out);
            CollectUnbound(*p.body, scopes, out);
          },
          [&](const Temporal &p) {
            CheckMarker(p.relation.lhs, *scopes, out);
            CheckMarker(p.relation.rhs, *scopes, out);
          },
          [&](const Duplex &p) {
            std::set<uint64_t> ante;
            for (const Marker &m : p.antecedent->universe) ante.insert(m.id);
            scopes->push_back(ante);
            for (const Condition &c : p.antecedent->conditions) {
              CollectConditionUnbound(c, scopes, out);
            }
            // The consequent sees the antecedent universe.
            CollectUnbound(*p.consequent, scopes, out);
            scopes->pop_back();
          },
          [&](const RptAssign &p) { CheckMarker(p.target, *scopes, out); },
      },
      c);
}

void CollectUnbound(const Drs &drs, std::vector<std::set<uint64_t>> *scopes,
                    std::vector<Marker> *out) {
  std::set<uint64_t> scope;
  for (const Marker &m : drs.universe) scope.insert(m.id);
  scopes->push_back(scope);
  for (const Condition &c : drs.conditions) {
    CollectConditionUnbound(c, scopes, out);
  }
  scopes->pop_back();
}

void CollectDeclared(const Drs &drs, std::vector<Marker> *out) {
  out->insert(out->end(), drs.universe.begin(), drs.universe.end());
  for (const Condition &c : drs.conditions) {
    if (const auto *cs = std::get_if<ComplexState>(&c)) {
      CollectDeclared(*cs->body, out);
    } else if (const auto *dx = std::get_if<Duplex>(&c)) {
      CollectDeclared(*dx->antecedent, out);
      CollectDeclared(*dx->consequent, out);
    }
  }
}

Marker Rename(const Marker &m, const std::map<uint64_t, Marker> &map) {
  auto it = map.find(m.id);
  return it == map.end() ? m : it->second;
}

Drs RenameWith(const Drs &drs, const std::map<uint64_t, Marker> &map) {
  Drs out;
  for (const Marker &m : drs.universe) out.universe.push_back(Rename(m, map));
  for (const Condition &c : drs.conditions) {
    out.conditions.push_back(std::visit(
        Overloaded{
            [&](const Predication &p) -> Condition {
              Predication q{p.pred, {}};
              for (const Marker &m : p.args) q.args.push_back(Rename(m, map));
              return q;
            },
            [&](const EventualityDescription &p) -> Condition {
              EventualityDescription q{Rename(p.ev, map), {p.body.pred, {}}};
              for (const Marker &m : p.body.args) {
                q.body.args.push_back(Rename(m, map));
              }
              return q;
            },
            [&](const ComplexState &p) -> Condition {
              return ComplexState{Rename(p.state, map),
                                  RenameWith(*p.body, map)};
            },
            [&](const Temporal &p) -> Condition {
              return Temporal{{p.relation.rel, Rename(p.relation.lhs, map),
                               Rename(p.relation.rhs, map)}};
            },
            [&](const Duplex &p) -> Condition {
              return Duplex{RenameWith(*p.antecedent, map), p.quantifier,
                            RenameWith(*p.consequent, map)};
            },
            [&](const RptAssign &p) -> Condition {
              return RptAssign{Rename(p.target, map)};
            },
        },
        c));
  }
  return out;
}

}  // namespace

bool AlphaEquivalent(const Drs &a, const Drs &b) {
  return MatchBox(a, b, Bijection{}, [](const Bijection &) { return true; });
}

std::vector<Marker> UnboundMarkers(const Drs &drs) {
  std::vector<std::set<uint64_t>> scopes;
  std::vector<Marker> out;
  CollectUnbound(drs, &scopes, &out);
  return out;
}

std::vector<Marker> DeclaredMarkers(const Drs &drs) {
  std::vector<Marker> out;
  CollectDeclared(drs, &out);
  return out;
}

int CountRelations(const Drs &drs, Rel rel) {
  int count = 0;
  for (const Condition &c : drs.conditions) {
    if (const auto *t = std::get_if<Temporal>(&c)) {
      count += t->relation.rel == rel;
    } else if (const auto *cs = std::get_if<ComplexState>(&c)) {
      count += CountRelations(*cs->body, rel);
    } else if (const auto *dx = std::get_if<Duplex>(&c)) {
      count += CountRelations(*dx->antecedent, rel) +
               CountRelations(*dx->consequent, rel);
    }
  }
  return count;
}

Drs WithoutRptAssignments(const Drs &drs) {
  Drs out;
  out.universe = drs.universe;
  for (const Condition &c : drs.conditions) {
    if (std::holds_alternative<RptAssign>(c)) continue;
    if (const auto *cs = std::get_if<ComplexState>(&c)) {
      out.conditions.push_back(
          ComplexState{cs->state, WithoutRptAssignments(*cs->body)});
    } else if (const auto *dx = std::get_if<Duplex>(&c)) {
      out.conditions.push_back(Duplex{WithoutRptAssignments(*dx->antecedent),
                                      dx->quantifier,
                                      WithoutRptAssignments(*dx->consequent)});
    } else {
      out.conditions.push_back(c);
    }
  }
  return out;
}

Drs RenameMarkers(const Drs &drs) {
  std::map<uint64_t, Marker> map;
  for (const Marker &m : DeclaredMarkers(drs)) {
    if (!m.is_now()) map[m.id] = FreshMarker(m.sort, m.hint);
  }
  return RenameWith(drs, map);
}

}  // namespace tempdrt
