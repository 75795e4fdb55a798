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

#include "tempdrt/term.h"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

// ---------------------------------------------------------------------------
// Reader.

struct SExpr {
  bool atom = false;
  std::string text;
  size_t pos = 0;
  std::vector<SExpr> items;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr ReadDocument() {
    SkipSpace();
    if (pos_ >= text_.size()) throw SyntaxError("empty input", pos_);
    SExpr e = Read();
    SkipSpace();
    if (pos_ < text_.size()) {
      throw SyntaxError("trailing input after term", pos_);
    }
    return e;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        pos_++;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') pos_++;
      } else {
        break;
      }
    }
  }

  SExpr Read() {
    SExpr e;
    e.pos = pos_;
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')'", pos_);
    if (c == '(') {
      pos_++;
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size()) throw SyntaxError("unterminated list", e.pos);
        if (text_[pos_] == ')') {
          pos_++;
          return e;
        }
        e.items.push_back(Read());
      }
    }
    e.atom = true;
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      e.text += c;
      pos_++;
    }
    return e;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Interpretation.

class Builder {
 public:
  Drs Box(const SExpr &e) {
    ExpectHead(e, "drs");
    Drs drs;
    size_t i = 1;
    if (i < e.items.size() && IsHead(e.items[i], "u")) {
      const SExpr &u = e.items[i++];
      for (size_t k = 1; k < u.items.size(); ++k) {
        drs.universe.push_back(Declare(u.items[k]));
      }
    }
    if (i < e.items.size() && IsHead(e.items[i], "cond")) {
      const SExpr &c = e.items[i++];
      for (size_t k = 1; k < c.items.size(); ++k) {
        drs.conditions.push_back(Cond(c.items[k]));
      }
    }
    if (i < e.items.size()) {
      throw SyntaxError("expected (u ...) or (cond ...)", e.items[i].pos);
    }
    return drs;
  }

 private:
  static bool IsHead(const SExpr &e, const char *head) {
    return !e.atom && !e.items.empty() && e.items[0].atom &&
           e.items[0].text == head;
  }

  static void ExpectHead(const SExpr &e, const char *head) {
    if (!IsHead(e, head)) {
      throw SyntaxError(std::string("expected (") + head + " ...)", e.pos);
    }
  }

  static const std::string &Atom(const SExpr &e, const char *what) {
    if (!e.atom) throw SyntaxError(std::string("expected ") + what, e.pos);
    return e.text;
  }

  static void Arity(const SExpr &e, size_t n) {
    if (e.items.size() != n + 1) {
      throw SyntaxError("'" + e.items[0].text + "' takes " +
                            std::to_string(n) + " arguments",
                        e.pos);
    }
  }

  Marker Declare(const SExpr &e) {
    const std::string &decl = Atom(e, "name:sort");
    size_t colon = decl.find(':');
    if (colon == std::string::npos || colon == 0) {
      throw SyntaxError("expected name:sort, got '" + decl + "'", e.pos);
    }
    std::string name = decl.substr(0, colon);
    std::string sort = decl.substr(colon + 1);
    if (names_.count(name)) {
      throw SyntaxError("marker '" + name + "' declared twice", e.pos);
    }
    Marker m;
    if (sort == "now") {
      if (have_now_) throw SyntaxError("second now marker", e.pos);
      have_now_ = true;
      m = Marker::Now();
    } else if (sort == "individual") {
      m = FreshMarker(Sort::kIndividual, name);
    } else if (sort == "event") {
      m = FreshMarker(Sort::kEvent, name);
    } else if (sort == "state") {
      m = FreshMarker(Sort::kState, name);
    } else if (sort == "time") {
      m = FreshMarker(Sort::kTime, name);
    } else {
      throw SyntaxError("unknown sort '" + sort + "'", e.pos);
    }
    names_[name] = m;
    return m;
  }

  Marker Use(const SExpr &e) {
    const std::string &name = Atom(e, "marker name");
    auto it = names_.find(name);
    if (it == names_.end()) {
      throw SyntaxError("undeclared marker '" + name + "'", e.pos);
    }
    return it->second;
  }

  Predication Body(const SExpr &e) {
    if (e.atom || e.items.empty()) {
      throw SyntaxError("expected (predicate args...)", e.pos);
    }
    Predication p{Atom(e.items[0], "predicate"), {}};
    for (size_t k = 1; k < e.items.size(); ++k) p.args.push_back(Use(e.items[k]));
    return p;
  }

  Quantifier Quant(const SExpr &e) {
    if (e.atom) {
      if (e.text == "every") return Quantifier::Every();
      if (e.text == "often") return Quantifier::Often(Rational{});
    } else if (e.items.size() == 2 && e.items[0].atom &&
               e.items[0].text == "often") {
      const std::string &r = Atom(e.items[1], "threshold");
      try {
        return Quantifier::Often(Rational::Parse(r));
      } catch (const Error &) {
        throw SyntaxError("bad threshold '" + r + "'", e.items[1].pos);
      }
    }
    throw SyntaxError("expected every, often or (often p/q)", e.pos);
  }

  Condition Cond(const SExpr &e) {
    if (e.atom || e.items.empty() || !e.items[0].atom) {
      throw SyntaxError("expected a condition", e.pos);
    }
    const std::string &head = e.items[0].text;
    if (head == "pred") {
      if (e.items.size() < 2) throw SyntaxError("pred needs a name", e.pos);
      Predication p{Atom(e.items[1], "predicate"), {}};
      for (size_t k = 2; k < e.items.size(); ++k) {
        p.args.push_back(Use(e.items[k]));
      }
      return p;
    }
    if (head == "desc") {
      Arity(e, 2);
      Marker ev = Use(e.items[1]);
      return EventualityDescription{ev, Body(e.items[2])};
    }
    if (head == "complex") {
      Arity(e, 2);
      Marker s = Use(e.items[1]);
      return ComplexState{s, Box(e.items[2])};
    }
    if (head == "duplex") {
      Arity(e, 3);
      Drs ante = Box(e.items[1]);
      Quantifier q = Quant(e.items[2]);
      Drs cons = Box(e.items[3]);
      return Duplex{std::move(ante), q, std::move(cons)};
    }
    if (head == "rpt") {
      Arity(e, 1);
      return RptAssign{Use(e.items[1])};
    }
    for (Rel rel : {Rel::kPrecedes, Rel::kIncludedIn, Rel::kOverlaps,
                    Rel::kAbuts, Rel::kJustBefore, Rel::kEqualsEventTime}) {
      if (head == RelName(rel)) {
        Arity(e, 2);
        Marker lhs = Use(e.items[1]);
        Marker rhs = Use(e.items[2]);
        if (rel == Rel::kEqualsEventTime &&
            (lhs.sort != Sort::kTime || !rhs.is_eventuality())) {
          throw SyntaxError("loc relates a time to an eventuality", e.pos);
        }
        if (!lhs.is_temporal() || !rhs.is_temporal()) {
          throw SyntaxError("temporal relation over an individual", e.pos);
        }
        return Rel2(rel, lhs, rhs);
      }
    }
    throw SyntaxError("unknown condition '" + head + "'", e.pos);
  }

  std::map<std::string, Marker> names_;
  bool have_now_ = false;
};

// ---------------------------------------------------------------------------
// Writer.

bool IsIdentifier(const std::string &s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '\'' &&
        c != '_' && c != '-') {
      return false;
    }
  }
  return true;
}

class Writer {
 public:
  explicit Writer(const Drs &drs) {
    for (const Marker &m : DeclaredMarkers(drs)) Name(m);
  }

  void Box(const Drs &drs, int indent) {
    out_ << "(drs (u";
    for (const Marker &m : drs.universe) {
      out_ << ' ' << Name(m) << ':' << SortName(m.sort);
    }
    out_ << ')';
    if (!drs.conditions.empty()) {
      Newline(indent + 2);
      out_ << "(cond";
      for (const Condition &c : drs.conditions) {
        Newline(indent + 4);
        Cond(c, indent + 4);
      }
      out_ << ')';
    }
    out_ << ')';
  }

  std::string str() const { return out_.str(); }

 private:
  const std::string &Name(const Marker &m) {
    auto it = names_.find(m.id);
    if (it != names_.end()) return it->second;
    std::string base = IsIdentifier(m.hint) ? m.hint
                                            : std::string(1, SortName(m.sort)[0]);
    std::string name = base;
    for (int k = 2; used_.count(name); ++k) {
      name = base + "_" + std::to_string(k);
    }
    used_.insert(name);
    return names_[m.id] = name;
  }

  void Newline(int indent) { out_ << '\n' << std::string(indent, ' '); }

  void Body(const Predication &p) {
    out_ << '(' << p.pred;
    for (const Marker &m : p.args) out_ << ' ' << Name(m);
    out_ << ')';
  }

  void Cond(const Condition &c, int indent) {
    if (const auto *p = std::get_if<Predication>(&c)) {
      out_ << "(pred " << p->pred;
      for (const Marker &m : p->args) out_ << ' ' << Name(m);
      out_ << ')';
    } else if (const auto *d = std::get_if<EventualityDescription>(&c)) {
      out_ << "(desc " << Name(d->ev) << ' ';
      Body(d->body);
      out_ << ')';
    } else if (const auto *cs = std::get_if<ComplexState>(&c)) {
      out_ << "(complex " << Name(cs->state);
      Newline(indent + 2);
      Box(*cs->body, indent + 2);
      out_ << ')';
    } else if (const auto *t = std::get_if<Temporal>(&c)) {
      out_ << '(' << RelName(t->relation.rel) << ' ' << Name(t->relation.lhs)
           << ' ' << Name(t->relation.rhs) << ')';
    } else if (const auto *dx = std::get_if<Duplex>(&c)) {
      out_ << "(duplex";
      Newline(indent + 2);
      Box(*dx->antecedent, indent + 2);
      Newline(indent + 2);
      if (dx->quantifier.kind == Quantifier::Kind::kEvery) {
        out_ << "every";
      } else {
        out_ << "(often " << dx->quantifier.threshold.ToString() << ')';
      }
      Newline(indent + 2);
      Box(*dx->consequent, indent + 2);
      out_ << ')';
    } else if (const auto *r = std::get_if<RptAssign>(&c)) {
      out_ << "(rpt " << Name(r->target) << ')';
    }
  }

  std::ostringstream out_;
  std::map<uint64_t, std::string> names_;
  std::set<std::string> used_;
};

}  // namespace

std::string Serialize(const Drs &drs) {
  Writer writer(drs);
  writer.Box(drs, 0);
  return writer.str() + "\n";
}

Drs Deserialize(std::string_view text) {
  SExpr e = Reader(text).ReadDocument();
  return Builder().Box(e);
}

Drs LoadDrs(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Deserialize(buffer.str());
  } catch (const SyntaxError &e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace tempdrt
