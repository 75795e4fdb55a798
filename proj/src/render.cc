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

#include "tempdrt/render.h"

#include <algorithm>
#include <vector>

namespace tempdrt {

namespace {

using Lines = std::vector<std::string>;

std::string Pad(const std::string &s, size_t width) {
  size_t w = DisplayWidth(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

size_t Width(const Lines &lines) {
  size_t w = 0;
  for (const std::string &l : lines) w = std::max(w, DisplayWidth(l));
  return w;
}

std::string Args(const std::vector<Marker> &args) {
  std::string out = "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += args[i].hint;
  }
  return out + ")";
}

Lines Draw(const Drs &drs);

// `prefix` on the first line, blanks of equal width on the rest.
Lines Prefixed(const std::string &prefix, const Lines &body) {
  Lines out;
  std::string blank(DisplayWidth(prefix), ' ');
  for (size_t i = 0; i < body.size(); ++i) {
    out.push_back((i == 0 ? prefix : blank) + body[i]);
  }
  return out;
}

Lines DrawCondition(const Condition &c) {
  if (const auto *p = std::get_if<Predication>(&c)) {
    return {p->pred + Args(p->args)};
  }
  if (const auto *d = std::get_if<EventualityDescription>(&c)) {
    return {d->ev.hint + ": " + d->body.pred + Args(d->body.args)};
  }
  if (const auto *cs = std::get_if<ComplexState>(&c)) {
    return Prefixed(cs->state.hint + ": ", Draw(*cs->body));
  }
  if (const auto *t = std::get_if<Temporal>(&c)) {
    const TemporalRelation &r = t->relation;
    if (r.rel == Rel::kEqualsEventTime) {
      return {r.lhs.hint + " = loc(" + r.rhs.hint + ")"};
    }
    return {r.lhs.hint + " " + RelSymbol(r.rel) + " " + r.rhs.hint};
  }
  if (const auto *dx = std::get_if<Duplex>(&c)) {
    Lines left = Draw(*dx->antecedent);
    Lines right = Draw(*dx->consequent);
    std::string arrow = " " + dx->quantifier.ToString() + " ==> ";
    size_t height = std::max(left.size(), right.size());
    size_t lw = Width(left), rw = Width(right);
    size_t aw = DisplayWidth(arrow);
    size_t mid = (height - 1) / 2;
    Lines out;
    for (size_t i = 0; i < height; ++i) {
      std::string l = i < left.size() ? left[i] : "";
      std::string r = i < right.size() ? right[i] : "";
      std::string a = i == mid ? arrow : std::string(aw, ' ');
      std::string line = Pad(l, lw) + a + Pad(r, rw);
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out.push_back(line);
    }
    return out;
  }
  if (const auto *r = std::get_if<RptAssign>(&c)) {
    return {"Rpt := " + r->target.hint};
  }
  return {};
}

Lines Draw(const Drs &drs) {
  std::string universe;
  for (const Marker &m : drs.universe) {
    if (!universe.empty()) universe += " ";
    universe += m.hint;
  }
  Lines body;
  for (const Condition &c : drs.conditions) {
    Lines lines = DrawCondition(c);
    body.insert(body.end(), lines.begin(), lines.end());
  }
  if (drs.empty()) return {"+--+", "+--+"};
  size_t w = std::max(Width(body), DisplayWidth(universe));
  std::string rule = "+" + std::string(w + 2, '-') + "+";
  Lines out{rule, "| " + Pad(universe, w) + " |", rule};
  for (const std::string &l : body) out.push_back("| " + Pad(l, w) + " |");
  if (!body.empty()) out.push_back(rule);
  return out;
}

}  // namespace

size_t DisplayWidth(std::string_view text) {
  size_t w = 0;
  for (unsigned char c : text) w += (c & 0xC0) != 0x80;
  return w;
}

std::string RenderBox(const Drs &drs) {
  std::string out;
  for (const std::string &line : Draw(drs)) out += line + "\n";
  return out;
}

}  // namespace tempdrt
