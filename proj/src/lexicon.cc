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

#include "tempdrt/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tempdrt/errors.h"

namespace tempdrt {

extern const std::string_view kBuiltinLexicon;

namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitOn(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(ToLower(w));
  return words;
}

Category ParseCategory(const std::string &s, int line) {
  static const std::pair<const char *, Category> kNames[] = {
      {"event", Category::kEvent},           {"state", Category::kState},
      {"name", Category::kName},             {"pronoun", Category::kPronoun},
      {"connective", Category::kConnective}, {"qadverb", Category::kQAdverb},
      {"decoration", Category::kDecoration}, {"aux", Category::kAux},
      {"conj", Category::kConj},
  };
  for (const auto &[name, cat] : kNames) {
    if (s == name) return cat;
  }
  throw ParseError("lexicon line " + std::to_string(line) +
                   ": unknown category '" + s + "'");
}

}  // namespace

const char *AspectName(Aspect aspect) {
  return aspect == Aspect::kEvent ? "event" : "state";
}

const char *GenderName(Gender gender) {
  switch (gender) {
    case Gender::kMasculine: return "m";
    case Gender::kFeminine: return "f";
    case Gender::kNeuter: return "n";
    case Gender::kNone: break;
  }
  return "";
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = std::tolower(static_cast<unsigned char>(c));
  return out;
}

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line_no++;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> cols = SplitOn(trimmed, '|');
    if (cols.size() < 4 || cols.size() > 5) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": expected 4 or 5 '|'-separated columns");
    }
    LexEntry entry;
    entry.lemma = cols[0];
    if (entry.lemma.empty()) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": empty lemma");
    }
    entry.category = ParseCategory(cols[2], line_no);
    try {
      entry.arity = std::stoi(cols[3]);
    } catch (const std::exception &) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": bad arity '" + cols[3] + "'");
    }
    std::string extra = cols.size() == 5 ? cols[4] : "";
    if (entry.category == Category::kAux) {
      if (extra == "past") {
        entry.aux_tense = FormTag::kPast;
      } else if (extra == "pres") {
        entry.aux_tense = FormTag::kPresent;
      } else {
        throw ParseError("lexicon line " + std::to_string(line_no) +
                         ": auxiliary needs tense 'past' or 'pres'");
      }
    } else if (extra == "m") {
      entry.gender = Gender::kMasculine;
    } else if (extra == "f") {
      entry.gender = Gender::kFeminine;
    } else if (extra == "n") {
      entry.gender = Gender::kNeuter;
    } else if (!extra.empty()) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": bad gender '" + extra + "'");
    }
    for (const std::string &raw : SplitOn(cols[1], ',')) {
      if (raw.empty()) continue;
      SurfaceForm form;
      std::string body = raw;
      size_t slash = raw.rfind('/');
      if (slash != std::string::npos) {
        std::string tag = Trim(raw.substr(slash + 1));
        body = Trim(raw.substr(0, slash));
        if (tag == "past") {
          form.tag = FormTag::kPast;
        } else if (tag == "pres") {
          form.tag = FormTag::kPresent;
        } else if (tag == "part") {
          form.tag = FormTag::kParticiple;
        } else {
          throw ParseError("lexicon line " + std::to_string(line_no) +
                           ": bad form tag '" + tag + "'");
        }
      }
      if (entry.is_verb() && form.tag == FormTag::kNone) {
        throw ParseError("lexicon line " + std::to_string(line_no) +
                         ": verb form '" + body + "' needs a tense tag");
      }
      form.text = body;
      form.words = Words(body);
      for (const std::string &w : form.words) lex.words_.insert(w);
      entry.forms.push_back(std::move(form));
    }
    if (entry.forms.empty()) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": no surface forms");
    }
    if (lex.by_lemma_.count(entry.lemma)) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": duplicate lemma '" + entry.lemma + "'");
    }
    lex.by_lemma_[entry.lemma] = lex.entries_.size();
    lex.entries_.push_back(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const Lexicon &Lexicon::Default() {
  static const Lexicon lexicon = Parse(kBuiltinLexicon);
  return lexicon;
}

const LexEntry *Lexicon::Find(std::string_view lemma) const {
  auto it = by_lemma_.find(std::string(lemma));
  return it == by_lemma_.end() ? nullptr : &entries_[it->second];
}

bool Lexicon::Knows(std::string_view word) const {
  return words_.count(ToLower(word)) > 0;
}

std::vector<FormMatch> Lexicon::MatchPrefix(std::span<const std::string> words,
                                            Category category) const {
  std::vector<FormMatch> matches;
  for (const LexEntry &entry : entries_) {
    if (entry.category != category) continue;
    for (const SurfaceForm &form : entry.forms) {
      if (form.words.size() > words.size()) continue;
      bool ok = true;
      for (size_t i = 0; i < form.words.size() && ok; ++i) {
        ok = ToLower(words[i]) == form.words[i];
      }
      if (ok) matches.push_back({&entry, &form});
    }
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const FormMatch &a, const FormMatch &b) {
                     return a.form->words.size() > b.form->words.size();
                   });
  return matches;
}

const LexEntry *Lexicon::MatchWord(std::string_view word,
                                   Category category) const {
  std::string lower = ToLower(word);
  for (const LexEntry &entry : entries_) {
    if (entry.category != category) continue;
    for (const SurfaceForm &form : entry.forms) {
      if (form.words.size() == 1 && form.words[0] == lower) return &entry;
    }
  }
  return nullptr;
}

Aspect ClassifyAspect(const Lexicon &lexicon, std::string_view lemma) {
  const LexEntry *entry = lexicon.Find(lemma);
  if (entry == nullptr || !entry->is_verb()) {
    throw UnknownWordError(std::string(lemma));
  }
  return entry->category == Category::kEvent ? Aspect::kEvent : Aspect::kState;
}

}  // namespace tempdrt
