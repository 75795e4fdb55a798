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

#include "tempdrt/model.h"

#include <fstream>
#include <set>
#include <sstream>

#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

int ParseInt(const std::string &s, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ModelError("expected an integer, got '" + s + "'", line);
  }
  return v;
}

}  // namespace

int TemporalModel::FindIndividual(std::string_view name) const {
  std::string lower = ToLower(name);
  for (size_t i = 0; i < individuals.size(); ++i) {
    if (ToLower(individuals[i].name) == lower) return static_cast<int>(i);
  }
  return -1;
}

std::string TemporalModel::ToString() const {
  std::ostringstream out;
  out << "timeline " << timeline_end << "\n";
  out << "now " << now << "\n";
  for (const Individual &i : individuals) {
    out << "individual " << i.name;
    if (i.gender != Gender::kNone) out << " " << GenderName(i.gender);
    out << "\n";
  }
  for (const ModelEventuality &e : eventualities) {
    out << (e.kind == Aspect::kEvent ? "event " : "state ") << e.id << " "
        << e.predicate << "(";
    for (size_t k = 0; k < e.args.size(); ++k) {
      out << (k > 0 ? "," : "") << e.args[k];
    }
    out << ") " << e.trace.start << " " << e.trace.end << "\n";
  }
  return out.str();
}

TemporalModel ParseModel(std::string_view text, const Lexicon &lexicon) {
  TemporalModel m;
  bool have_timeline = false, have_now = false;
  int now_line = 0;
  std::vector<int> lines;  // per eventuality
  std::set<std::string> ids;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    line++;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    const std::string &kw = w[0];
    if (kw == "timeline") {
      if (w.size() != 2) throw ModelError("usage: timeline T", line);
      if (have_timeline) throw ModelError("timeline given twice", line);
      m.timeline_end = ParseInt(w[1], line);
      if (m.timeline_end < 0) throw ModelError("negative timeline", line);
      have_timeline = true;
    } else if (kw == "now") {
      if (w.size() != 2) throw ModelError("usage: now P", line);
      if (have_now) throw ModelError("now given twice", line);
      m.now = ParseInt(w[1], line);
      now_line = line;
      have_now = true;
    } else if (kw == "individual") {
      if (w.size() != 2 && w.size() != 3) {
        throw ModelError("usage: individual NAME [m|f|n]", line);
      }
      if (m.FindIndividual(w[1]) >= 0) {
        throw ModelError("individual '" + w[1] + "' declared twice", line);
      }
      Individual ind{w[1], Gender::kNone};
      if (w.size() == 3) {
        if (w[2] == "m") {
          ind.gender = Gender::kMasculine;
        } else if (w[2] == "f") {
          ind.gender = Gender::kFeminine;
        } else if (w[2] == "n") {
          ind.gender = Gender::kNeuter;
        } else {
          throw ModelError("bad gender '" + w[2] + "'", line);
        }
      }
      m.individuals.push_back(ind);
    } else if (kw == "event" || kw == "state") {
      if (w.size() != 5) {
        throw ModelError("usage: " + kw + " ID PRED(ARGS) START END", line);
      }
      ModelEventuality e;
      e.id = w[1];
      e.kind = kw == "event" ? Aspect::kEvent : Aspect::kState;
      if (!ids.insert(e.id).second) {
        throw ModelError("eventuality id '" + e.id + "' used twice", line);
      }
      const std::string &term = w[2];
      size_t open = term.find('(');
      if (open == std::string::npos || open == 0 || term.back() != ')') {
        throw ModelError("expected PRED(ARGS), got '" + term + "'", line);
      }
      e.predicate = term.substr(0, open);
      std::string args = term.substr(open + 1, term.size() - open - 2);
      std::istringstream arg_in(args);
      for (std::string a; std::getline(arg_in, a, ',');) {
        if (a.empty()) throw ModelError("empty argument in '" + term + "'", line);
        e.args.push_back(a);
      }
      const LexEntry *entry = lexicon.Find(e.predicate);
      if (entry == nullptr || !entry->is_verb()) {
        throw ModelError("unknown predicate '" + e.predicate + "'", line);
      }
      Aspect lex_kind =
          entry->category == Category::kEvent ? Aspect::kEvent : Aspect::kState;
      if (lex_kind != e.kind) {
        throw ModelError("'" + e.predicate + "' is " + AspectName(lex_kind) +
                             " in the lexicon",
                         line);
      }
      if (static_cast<int>(e.args.size()) != entry->arity) {
        throw ModelError("'" + e.predicate + "' takes " +
                             std::to_string(entry->arity) + " arguments",
                         line);
      }
      e.trace = {ParseInt(w[3], line), ParseInt(w[4], line)};
      if (e.trace.start > e.trace.end) {
        throw ModelError("trace starts after it ends", line);
      }
      m.eventualities.push_back(e);
      lines.push_back(line);
    } else {
      throw ModelError("unknown keyword '" + kw + "'", line);
    }
  }
  if (!have_timeline) throw ModelError("missing timeline", line);
  if (!have_now) throw ModelError("missing now", line);
  if (m.now < 0 || m.now > m.timeline_end) {
    throw ModelError("now outside the timeline", now_line);
  }
  for (size_t i = 0; i < m.eventualities.size(); ++i) {
    const ModelEventuality &e = m.eventualities[i];
    if (e.trace.start < 0 || e.trace.end > m.timeline_end) {
      throw ModelError("trace " + e.trace.ToString() + " outside timeline 0.." +
                           std::to_string(m.timeline_end),
                       lines[i]);
    }
    for (const std::string &a : e.args) {
      if (m.FindIndividual(a) < 0) {
        throw ModelError("undeclared individual '" + a + "'", lines[i]);
      }
    }
  }
  return m;
}

TemporalModel LoadModel(const std::string &path, const Lexicon &lexicon) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str(), lexicon);
}

}  // namespace tempdrt
