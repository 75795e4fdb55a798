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

#include "tempdrt/eval.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

void CollectBox(const Drs &drs, std::vector<Marker> *out);

void CollectCondition(const Condition &c, std::vector<Marker> *out) {
  if (const auto *p = std::get_if<Predication>(&c)) {
    out->insert(out->end(), p->args.begin(), p->args.end());
  } else if (const auto *d = std::get_if<EventualityDescription>(&c)) {
    out->push_back(d->ev);
    out->insert(out->end(), d->body.args.begin(), d->body.args.end());
  } else if (const auto *cs = std::get_if<ComplexState>(&c)) {
    out->push_back(cs->state);
    CollectBox(*cs->body, out);
  } else if (const auto *t = std::get_if<Temporal>(&c)) {
    out->push_back(t->relation.lhs);
    out->push_back(t->relation.rhs);
  } else if (const auto *dx = std::get_if<Duplex>(&c)) {
    CollectBox(*dx->antecedent, out);
    CollectBox(*dx->consequent, out);
  } else if (const auto *r = std::get_if<RptAssign>(&c)) {
    out->push_back(r->target);
  }
}

void CollectBox(const Drs &drs, std::vector<Marker> *out) {
  for (const Condition &c : drs.conditions) CollectCondition(c, out);
}

int Rank(const Marker &m, const std::set<uint64_t> &derived) {
  switch (m.sort) {
    case Sort::kIndividual: return 0;
    case Sort::kEvent: return 1;
    case Sort::kState: return derived.count(m.id) ? 3 : 2;
    case Sort::kTime: return 4;
    case Sort::kNow: return 5;
  }
  return 5;
}

// How to enumerate one box: marker order, the conditions that become
// checkable after each marker, and the markers with derived values.
struct Plan {
  std::vector<Marker> order;
  std::vector<std::vector<const Condition *>> checks;  // size order + 1
  std::map<uint64_t, Marker> perf_source;
  std::set<uint64_t> complex_states;
  std::map<uint64_t, Marker> pinned;  // time -> eventuality
};

class Evaluator {
 public:
  using Visit = std::function<bool(const Assignment &)>;

  Evaluator(const TemporalModel &m, const EvalConfig &config)
      : m_(m), config_(config), full_{0, m.timeline_end} {
    if (config.delta < 1) throw EvalError("delta must be at least 1");
  }

  // Calls `visit` on each embedding of `drs` extending `base` until it
  // returns false. Returns false iff stopped early.
  bool ForEach(const Drs &drs, const Assignment &base, const Visit &visit,
               const Interval *cond_window = nullptr,
               const Interval *ev_window = nullptr,
               const std::set<uint64_t> *context_fixed = nullptr) {
    const Plan &plan = PlanFor(drs, base);
    Assignment f = base;
    for (const Condition *c : plan.checks[0]) {
      if (!Verify(*c, f, cond_window)) return true;
    }
    return Search(plan, 0, &f, visit, cond_window, ev_window, context_fixed);
  }

  bool Verify(const Condition &c, const Assignment &f,
              const Interval *window = nullptr) {
    if (const auto *p = std::get_if<Predication>(&c)) return Predicate(*p, f);
    if (const auto *d = std::get_if<EventualityDescription>(&c)) {
      return Description(*d, f);
    }
    if (const auto *cs = std::get_if<ComplexState>(&c)) {
      Interval trace = Get(cs->state, f).interval;
      bool found = false;
      ForEach(*cs->body, f, [&](const Assignment &) {
        found = true;
        return false;
      }, &trace);
      return found;
    }
    if (const auto *t = std::get_if<Temporal>(&c)) return Relation(t->relation, f);
    if (const auto *dx = std::get_if<Duplex>(&c)) return DuplexHolds(*dx, f, window);
    return true;  // RptAssign
  }

  bool DuplexHolds(const Duplex &dx, const Assignment &f,
                   const Interval *window) {
    long total = 0, extended = 0;
    bool every = dx.quantifier.kind == Quantifier::Kind::kEvery;
    ForEach(*dx.antecedent, f, [&](const Assignment &g) {
      total++;
      bool ok = false;
      ForEach(*dx.consequent, g, [&](const Assignment &) {
        ok = true;
        return false;
      });
      if (ok) {
        extended++;
      } else if (!counterexample) {
        counterexample = g;
      }
      return ok || !every;
    }, nullptr, window);
    if (total == 0) return true;
    if (every) return extended == total;
    const Rational &th = dx.quantifier.threshold;
    return extended * th.den > th.num * total;
  }

  std::optional<Assignment> counterexample;

 private:
  const Value &Get(const Marker &marker, const Assignment &f) const {
    auto it = f.find(marker);
    if (it == f.end()) {
      throw EvalError("unassigned marker '" + marker.hint + "'");
    }
    return it->second;
  }

  bool SameName(const std::string &a, const std::string &b) const {
    return ToLower(a) == ToLower(b);
  }

  bool Predicate(const Predication &p, const Assignment &f) const {
    if (p.args.size() == 1) {
      const Value &v = Get(p.args[0], f);
      if (v.kind == Value::Kind::kIndividual &&
          SameName(m_.individuals[v.index].name, p.pred)) {
        return true;
      }
    }
    for (const ModelEventuality &e : m_.eventualities) {
      if (Matches(e, p, f)) return true;
    }
    return false;
  }

  bool Matches(const ModelEventuality &e, const Predication &p,
               const Assignment &f) const {
    if (!SameName(e.predicate, p.pred) || e.args.size() != p.args.size()) {
      return false;
    }
    for (size_t i = 0; i < p.args.size(); ++i) {
      const Value &v = Get(p.args[i], f);
      if (v.kind != Value::Kind::kIndividual ||
          !SameName(m_.individuals[v.index].name, e.args[i])) {
        return false;
      }
    }
    return true;
  }

  bool Description(const EventualityDescription &d, const Assignment &f) const {
    const Value &v = Get(d.ev, f);
    if (d.body.pred == kPerfPredicate) {
      if (d.body.args.size() != 1 || v.kind != Value::Kind::kDerivedState) {
        return false;
      }
      const Value &src = Get(d.body.args[0], f);
      return src.kind == Value::Kind::kEventuality &&
             v.interval == Interval{src.interval.end + 1, m_.timeline_end};
    }
    if (v.kind != Value::Kind::kEventuality) return false;
    return Matches(m_.eventualities[v.index], d.body, f);
  }

  Interval Trace(const Marker &marker, const Assignment &f) const {
    const Value &v = Get(marker, f);
    if (v.kind == Value::Kind::kIndividual) {
      throw EvalError("temporal relation over individual '" + marker.hint +
                      "'");
    }
    return v.interval;
  }

  bool Relation(const TemporalRelation &r, const Assignment &f) const {
    Interval a = Trace(r.lhs, f), b = Trace(r.rhs, f);
    switch (r.rel) {
      case Rel::kPrecedes: return Precedes(a, b);
      case Rel::kIncludedIn: return IncludedIn(a, b);
      case Rel::kOverlaps: return Overlaps(a, b);
      case Rel::kAbuts: return Abuts(a, b);
      case Rel::kJustBefore: return JustBefore(a, b, config_.delta);
      case Rel::kEqualsEventTime: return a == b;
    }
    return false;
  }

  const Plan &PlanFor(const Drs &drs, const Assignment &base) {
    auto it = plans_.find(&drs);
    if (it != plans_.end()) return it->second;
    Plan plan;
    for (const Condition &c : drs.conditions) {
      if (const auto *d = std::get_if<EventualityDescription>(&c)) {
        if (d->body.pred == kPerfPredicate && d->body.args.size() == 1) {
          plan.perf_source[d->ev.id] = d->body.args[0];
        }
      } else if (const auto *cs = std::get_if<ComplexState>(&c)) {
        plan.complex_states.insert(cs->state.id);
      } else if (const auto *t = std::get_if<Temporal>(&c)) {
        if (t->relation.rel == Rel::kEqualsEventTime &&
            !plan.pinned.count(t->relation.lhs.id)) {
          plan.pinned[t->relation.lhs.id] = t->relation.rhs;
        }
      }
    }
    std::set<uint64_t> derived = plan.complex_states;
    for (const auto &[id, src] : plan.perf_source) derived.insert(id);
    for (const Marker &m : drs.universe) {
      if (!base.count(m)) plan.order.push_back(m);
    }
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](const Marker &a, const Marker &b) {
                       return Rank(a, derived) < Rank(b, derived);
                     });
    plan.checks.resize(plan.order.size() + 1);
    for (const Condition &c : drs.conditions) {
      std::vector<Marker> used;
      CollectCondition(c, &used);
      int level = 0;
      for (const Marker &u : used) {
        for (size_t i = 0; i < plan.order.size(); ++i) {
          if (plan.order[i] == u) level = std::max(level, static_cast<int>(i) + 1);
        }
      }
      plan.checks[level].push_back(&c);
    }
    return plans_.emplace(&drs, std::move(plan)).first->second;
  }

  // Bounds on the start and end of a time marker implied by the temporal
  // conditions that become checkable once it is assigned. The conditions are
  // still verified; this only skips intervals that cannot satisfy them.
  void Narrow(const std::vector<const Condition *> &checks,
              const Marker &marker, const Assignment &f, Interval *lo,
              Interval *hi) const {
    auto clamp_start = [&](int a, int b) {
      lo->start = std::max(lo->start, a);
      hi->start = std::min(hi->start, b);
    };
    auto clamp_end = [&](int a, int b) {
      lo->end = std::max(lo->end, a);
      hi->end = std::min(hi->end, b);
    };
    const int kMin = 0, kMax = m_.timeline_end;
    for (const Condition *c : checks) {
      const auto *t = std::get_if<Temporal>(c);
      if (t == nullptr) continue;
      const TemporalRelation &r = t->relation;
      bool left = r.lhs == marker, right = r.rhs == marker;
      if (left == right) continue;
      auto it = f.find(left ? r.rhs : r.lhs);
      if (it == f.end() || it->second.kind == Value::Kind::kIndividual) continue;
      const Interval &x = it->second.interval;
      switch (r.rel) {
        case Rel::kPrecedes:
          if (left) {
            clamp_end(kMin, x.start - 1);
          } else {
            clamp_start(x.end + 1, kMax);
          }
          break;
        case Rel::kIncludedIn:
          if (left) {
            clamp_start(x.start, kMax);
            clamp_end(kMin, x.end);
          } else {
            clamp_start(kMin, x.start);
            clamp_end(x.end, kMax);
          }
          break;
        case Rel::kOverlaps:
          clamp_start(kMin, x.end);
          clamp_end(x.start, kMax);
          break;
        case Rel::kAbuts:
          if (left) {
            clamp_end(x.start - 1, x.start - 1);
          } else {
            clamp_start(x.end + 1, x.end + 1);
          }
          break;
        case Rel::kJustBefore:
          if (left) {
            clamp_end(x.start - config_.delta, x.start - 1);
          } else {
            clamp_start(x.end + 1, x.end + config_.delta);
          }
          break;
        case Rel::kEqualsEventTime:
          clamp_start(x.start, x.start);
          clamp_end(x.end, x.end);
          break;
      }
    }
  }

  bool Try(const Plan &plan, size_t i, Assignment *f, const Marker &marker,
           const Value &v, const Visit &visit, const Interval *cond_window,
           const Interval *ev_window, const std::set<uint64_t> *fixed) {
    (*f)[marker] = v;
    bool keep_going = true;
    bool ok = true;
    for (const Condition *c : plan.checks[i + 1]) {
      if (!Verify(*c, *f, cond_window)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      keep_going = Search(plan, i + 1, f, visit, cond_window, ev_window, fixed);
    }
    f->erase(marker);
    return keep_going;
  }

  bool Search(const Plan &plan, size_t i, Assignment *f, const Visit &visit,
              const Interval *cond_window, const Interval *ev_window,
              const std::set<uint64_t> *fixed) {
    if (i == plan.order.size()) return visit(*f);
    const Marker &marker = plan.order[i];
    auto go = [&](const Value &v) {
      return Try(plan, i, f, marker, v, visit, cond_window, ev_window, fixed);
    };
    switch (marker.sort) {
      case Sort::kIndividual:
        for (size_t k = 0; k < m_.individuals.size(); ++k) {
          if (!go({Value::Kind::kIndividual, static_cast<int>(k), {}})) {
            return false;
          }
        }
        return true;
      case Sort::kEvent:
      case Sort::kState: {
        if (plan.complex_states.count(marker.id)) {
          return go({Value::Kind::kDerivedState, -1, full_});
        }
        auto src = plan.perf_source.find(marker.id);
        if (src != plan.perf_source.end()) {
          auto sv = f->find(src->second);
          if (sv == f->end()) {
            throw EvalError("perf source of '" + marker.hint +
                            "' is not accessible");
          }
          int start = sv->second.interval.end + 1;
          if (start > m_.timeline_end) return true;
          return go({Value::Kind::kDerivedState, -1, {start, m_.timeline_end}});
        }
        Aspect kind =
            marker.sort == Sort::kEvent ? Aspect::kEvent : Aspect::kState;
        for (size_t k = 0; k < m_.eventualities.size(); ++k) {
          const ModelEventuality &e = m_.eventualities[k];
          if (e.kind != kind) continue;
          if (ev_window != nullptr && !Overlaps(e.trace, *ev_window)) continue;
          if (!go({Value::Kind::kEventuality, static_cast<int>(k), e.trace})) {
            return false;
          }
        }
        return true;
      }
      case Sort::kTime: {
        if (fixed != nullptr && fixed->count(marker.id)) {
          return go({Value::Kind::kInterval, -1, full_});
        }
        auto pin = plan.pinned.find(marker.id);
        if (pin != plan.pinned.end()) {
          auto ev = f->find(pin->second);
          if (ev != f->end()) {
            return go({Value::Kind::kInterval, -1, ev->second.interval});
          }
        }
        Interval lo{0, 0}, hi{m_.timeline_end, m_.timeline_end};
        Narrow(plan.checks[i + 1], marker, *f, &lo, &hi);
        for (int a = lo.start; a <= hi.start; ++a) {
          for (int b = std::max(a, lo.end); b <= hi.end; ++b) {
            if (!go({Value::Kind::kInterval, -1, {a, b}})) return false;
          }
        }
        return true;
      }
      case Sort::kNow:
        return go({Value::Kind::kInterval, -1, {m_.now, m_.now}});
    }
    return true;
  }

  const TemporalModel &m_;
  EvalConfig config_;
  Interval full_;
  std::map<const Drs *, Plan> plans_;
};

Assignment BaseAssignment(const TemporalModel &m) {
  return {{Marker::Now(), {Value::Kind::kInterval, -1, {m.now, m.now}}}};
}

// Top-level times mentioned only inside nested boxes.
std::set<uint64_t> ContextFixedTimes(const Drs &drs) {
  std::set<uint64_t> fixed;
  for (const Marker &m : drs.universe) {
    if (m.sort == Sort::kTime) fixed.insert(m.id);
  }
  for (const Condition &c : drs.conditions) {
    if (std::holds_alternative<Duplex>(c) ||
        std::holds_alternative<ComplexState>(c) ||
        std::holds_alternative<RptAssign>(c)) {
      continue;
    }
    std::vector<Marker> used;
    CollectCondition(c, &used);
    for (const Marker &m : used) fixed.erase(m.id);
  }
  return fixed;
}

}  // namespace

bool VerifyCondition(const Condition &c, const Assignment &f,
                     const TemporalModel &m, const EvalConfig &config) {
  Evaluator ev(m, config);
  return ev.Verify(c, f);
}

std::vector<Assignment> EnumerateEmbeddings(const Drs &drs,
                                            const Assignment &base,
                                            const TemporalModel &m,
                                            const EvalConfig &config) {
  Evaluator ev(m, config);
  std::vector<Assignment> out;
  ev.ForEach(drs, base, [&](const Assignment &f) {
    out.push_back(f);
    return true;
  });
  return out;
}

bool EvaluateDuplex(const Duplex &dx, const Assignment &f,
                    const TemporalModel &m, const EvalConfig &config) {
  Evaluator ev(m, config);
  return ev.DuplexHolds(dx, f, nullptr);
}

EvalResult Evaluate(const Drs &drs, const TemporalModel &m,
                    const EvalConfig &config) {
  Evaluator ev(m, config);
  EvalResult result;
  std::set<uint64_t> fixed = ContextFixedTimes(drs);
  ev.ForEach(drs, BaseAssignment(m), [&](const Assignment &f) {
    result.truth = true;
    result.witness = f;
    return false;
  }, nullptr, nullptr, &fixed);
  if (!result.truth) result.counterexample = ev.counterexample;
  return result;
}

std::string FormatAssignment(const Assignment &f, const TemporalModel &m) {
  std::ostringstream out;
  bool first = true;
  for (const auto &[marker, v] : f) {
    if (!first) out << ", ";
    first = false;
    out << marker.hint << " = ";
    switch (v.kind) {
      case Value::Kind::kIndividual:
        out << m.individuals[v.index].name;
        break;
      case Value::Kind::kEventuality: {
        const ModelEventuality &e = m.eventualities[v.index];
        out << e.id << " " << e.predicate << "(";
        for (size_t k = 0; k < e.args.size(); ++k) {
          out << (k > 0 ? "," : "") << e.args[k];
        }
        out << ") " << e.trace.ToString();
        break;
      }
      case Value::Kind::kDerivedState:
        out << "derived state " << v.interval.ToString();
        break;
      case Value::Kind::kInterval:
        out << v.interval.ToString();
        break;
    }
  }
  return out.str();
}

}  // namespace tempdrt
