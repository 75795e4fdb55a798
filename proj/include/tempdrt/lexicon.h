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

#ifndef TEMPDRT_LEXICON_H_
#define TEMPDRT_LEXICON_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tempdrt {

enum class Category {
  kEvent,
  kState,
  kName,
  kPronoun,
  kConnective,
  kQAdverb,
  kDecoration,
  kAux,
  kConj,
};

enum class Aspect { kEvent, kState };

enum class Gender { kNone, kMasculine, kFeminine, kNeuter };

enum class FormTag { kNone, kPast, kPresent, kParticiple };

const char *AspectName(Aspect aspect);
const char *GenderName(Gender gender);

struct SurfaceForm {
  std::vector<std::string> words;  // lowercased
  FormTag tag = FormTag::kNone;
  std::string text;  // as written in the lexicon
};

struct LexEntry {
  std::string lemma;
  std::vector<SurfaceForm> forms;
  Category category = Category::kEvent;
  int arity = 0;
  Gender gender = Gender::kNone;
  // Aux entries only: the tense column ("past" or "pres").
  FormTag aux_tense = FormTag::kNone;

  bool is_verb() const {
    return category == Category::kEvent || category == Category::kState;
  }
};

// A surface form matched against a word sequence.
struct FormMatch {
  const LexEntry *entry;
  const SurfaceForm *form;
};

// Closed lexicon for the fragment. Immutable after loading.
class Lexicon {
 public:
  // Parses the line format documented in data/lexicon.txt. Throws ParseError
  // with the offending line number.
  static Lexicon Parse(std::string_view text);
  static Lexicon Load(const std::string &path);

  // The lexicon shipped with the library.
  static const Lexicon &Default();

  // Entry by lemma, or null.
  const LexEntry *Find(std::string_view lemma) const;

  // True if the (lowercased) word occurs in any surface form.
  bool Knows(std::string_view word) const;

  // All forms of entries in `category` whose words are a prefix of `words`
  // (case-insensitive), longest first.
  std::vector<FormMatch> MatchPrefix(std::span<const std::string> words,
                                     Category category) const;

  // Single-word lookup for function words; null if the word is not a
  // one-word form of an entry in `category`.
  const LexEntry *MatchWord(std::string_view word, Category category) const;

  const std::vector<LexEntry> &entries() const { return entries_; }

 private:
  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, size_t> by_lemma_;
  std::unordered_set<std::string> words_;
};

// Aktionsart of a verb lemma. Throws UnknownWordError for anything that is
// not a verb entry.
Aspect ClassifyAspect(const Lexicon &lexicon, std::string_view lemma);

std::string ToLower(std::string_view text);

}  // namespace tempdrt

#endif  // TEMPDRT_LEXICON_H_
