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

// Tokenizer and parser for the controlled temporal fragment.
//
// A sentence is an optional temporal clause introduced by a connective, a
// main part, and an optional adverb of quantification:
//
//   Before John makes a phone call, he always lights up a cigarette.
//   Often, when Anne came home late, Paul had already prepared dinner.
//   Mary wrote the letter when Bill left.
//
// The main part is either a coordination of clauses ("got up, went to the
// window, and raised the blind") or a nested temporal construction ("he
// always squints when the sun is shining"). Multi-word predicates are single
// lexicon entries, so a clause is subject + optional perfect auxiliary +
// one lexicalized verb phrase + object referring expressions.

#ifndef TEMPDRT_FRAGMENT_H_
#define TEMPDRT_FRAGMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempdrt/lexicon.h"

namespace tempdrt {

struct Token {
  enum class Kind { kWord, kComma, kPeriod };
  std::string text;
  Kind kind = Kind::kWord;
  size_t offset = 0;  // byte offset in the input

  bool operator==(const Token &other) const {
    return text == other.text && kind == other.kind;
  }
};

// Splits fragment text into words, commas and periods. Words are runs of
// ASCII letters, possibly with inner apostrophes ("wasn't"). Throws
// LexicalError on any other non-space character.
std::vector<Token> Tokenize(std::string_view text);

enum class Tense { kSimplePast, kSimplePresent, kPastPerfect, kPresentPerfect };
enum class Connective { kWhen, kWhenever, kBefore, kAfter };
enum class QAdverb { kAlways, kOften };

const char *TenseName(Tense tense);
const char *ConnectiveName(Connective connective);
const char *QAdverbName(QAdverb q);

inline bool IsPerfect(Tense t) {
  return t == Tense::kPastPerfect || t == Tense::kPresentPerfect;
}
inline bool IsPast(Tense t) {
  return t == Tense::kSimplePast || t == Tense::kPastPerfect;
}

// Proper name, pronoun or the expletive subject of a weather verb.
struct RefExpr {
  enum class Kind { kName, kPronoun, kExpletive };
  Kind kind = Kind::kName;
  std::string surface;  // as it appears in the text (case-normalized)
  std::string lemma;    // name lemma; pronoun lemma until resolved
  Gender gender = Gender::kNone;

  bool operator==(const RefExpr &) const = default;
};

struct Clause {
  RefExpr subject;
  bool subject_elided = false;  // shared subject in a coordination
  std::string verb;             // lemma
  std::string verb_surface;     // matched lexicon form
  std::vector<RefExpr> objects;
  Tense tense = Tense::kSimplePast;
  Aspect aspect = Aspect::kEvent;  // lexical aspect of the verb
  std::vector<std::string> decorations;

  bool operator==(const Clause &) const = default;
};

struct Sentence {
  std::optional<Connective> connective;
  std::optional<Clause> subordinate;
  // Coordinated main clauses. Empty only when `scoped` holds a nested
  // temporal construction in place of the main clause.
  std::vector<Clause> main;
  std::vector<Sentence> scoped;  // at most one element
  std::optional<QAdverb> q_adverb;
  bool q_initial = false;          // "Often, when ..."
  bool subordinate_first = true;   // "When A, B" rather than "B when A"

  bool operator==(const Sentence &) const = default;

  bool has_scoped() const { return !scoped.empty(); }
  // Quantified constructions become duplex conditions: an adverb of
  // quantification, "whenever", or a generic present-tense temporal clause.
  bool quantified() const;
};

struct ParsedDiscourse {
  std::vector<Sentence> sentences;

  bool operator==(const ParsedDiscourse &) const = default;
};

// Parses tokens into sentences. Throws UnknownWordError for words outside the
// lexicon and ParseError for ill-formed sentences.
ParsedDiscourse ParseDiscourse(const std::vector<Token> &tokens,
                               const Lexicon &lexicon = Lexicon::Default());

// Tokenize + ParseDiscourse.
ParsedDiscourse ParseText(std::string_view text,
                          const Lexicon &lexicon = Lexicon::Default());

// Replaces each pronoun with the most recently mentioned proper name of the
// same gender. Throws ResolutionError when nothing earlier matches.
ParsedDiscourse ResolvePronouns(const ParsedDiscourse &discourse);

// Canonical text: single spaces, mid-position adverbs after the first
// auxiliary (or before the verb), "late" clause-final, sentence-initial
// capital. The corpus sentences are already canonical.
std::string Render(const Sentence &sentence);
std::string Render(const ParsedDiscourse &discourse);

}  // namespace tempdrt

#endif  // TEMPDRT_FRAGMENT_H_
