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

#include "tempdrt/fragment.h"

#include <cctype>
#include <map>
#include <span>
#include <sstream>

#include "tempdrt/errors.h"

namespace tempdrt {

namespace {

bool IsLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string Join(const std::vector<std::string> &parts, const char *sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> SplitWords(const std::string &s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

// Adverbs placed in mid position when rendering.
bool IsMidAdverb(const std::string &word) { return word == "already"; }

bool IsCopula(const std::string &word) {
  return word == "is" || word == "was" || word == "isn't" ||
         word == "wasn't" || word == "are" || word == "were";
}

class SentenceParser {
 public:
  explicit SentenceParser(const Lexicon &lexicon) : lex_(lexicon) {}

  Sentence Parse(std::span<const Token> tokens) {
    if (tokens.empty()) throw ParseError("empty sentence");
    Sentence s;
    size_t pos = 0;
    if (IsQAdverb(tokens[0])) {
      if (tokens.size() > 1 && tokens[1].kind == Token::Kind::kComma) {
        s.q_adverb = QAdverbOf(tokens[0]);
        s.q_initial = true;
        pos = 2;
      }
    }
    if (pos >= tokens.size()) throw ParseError("sentence has no clause");

    if (ConnectiveOf(tokens[pos])) {
      s.connective = ConnectiveOf(tokens[pos]);
      size_t comma = pos + 1;
      while (comma < tokens.size() &&
             tokens[comma].kind != Token::Kind::kComma) {
        comma++;
      }
      if (comma >= tokens.size()) {
        throw ParseError("connective '" + tokens[pos].text +
                         "' without comma-delimited main clause");
      }
      s.subordinate =
          ParseClause(tokens.subspan(pos + 1, comma - pos - 1), nullptr,
                      nullptr);
      s.subordinate_first = true;
      ParseMain(tokens.subspan(comma + 1), &s);
    } else {
      size_t k = pos;
      while (k < tokens.size() && !ConnectiveOf(tokens[k])) k++;
      if (k < tokens.size()) {
        s.connective = ConnectiveOf(tokens[k]);
        s.subordinate_first = false;
        for (size_t i = k + 1; i < tokens.size(); ++i) {
          if (tokens[i].kind != Token::Kind::kWord) {
            throw ParseError("unexpected '" + tokens[i].text +
                             "' in temporal clause");
          }
        }
        s.subordinate = ParseClause(tokens.subspan(k + 1), nullptr, nullptr);
        ParseCoordination(tokens.subspan(pos, k - pos), &s);
      } else {
        ParseCoordination(tokens.subspan(pos), &s);
      }
    }

    if (s.connective == Connective::kWhenever && s.q_adverb) {
      throw ParseError(
          "'whenever' already quantifies; drop the adverb of quantification");
    }
    return s;
  }

 private:
  bool IsQAdverb(const Token &t) const {
    return t.kind == Token::Kind::kWord &&
           lex_.MatchWord(t.text, Category::kQAdverb) != nullptr;
  }

  QAdverb QAdverbOf(const Token &t) const {
    const LexEntry *e = lex_.MatchWord(t.text, Category::kQAdverb);
    return e->lemma == "often" ? QAdverb::kOften : QAdverb::kAlways;
  }

  std::optional<Connective> ConnectiveOf(const Token &t) const {
    if (t.kind != Token::Kind::kWord) return std::nullopt;
    const LexEntry *e = lex_.MatchWord(t.text, Category::kConnective);
    if (e == nullptr) return std::nullopt;
    if (e->lemma == "when") return Connective::kWhen;
    if (e->lemma == "whenever") return Connective::kWhenever;
    if (e->lemma == "before") return Connective::kBefore;
    if (e->lemma == "after") return Connective::kAfter;
    return std::nullopt;
  }

  void ParseMain(std::span<const Token> tokens, Sentence *s) {
    if (tokens.empty()) throw ParseError("missing main clause");
    for (const Token &t : tokens) {
      if (ConnectiveOf(t)) {
        s->scoped.push_back(Parse(tokens));
        return;
      }
    }
    ParseCoordination(tokens, s);
  }

  // Conjuncts are separated by commas and/or "and".
  void ParseCoordination(std::span<const Token> tokens, Sentence *s) {
    std::vector<std::span<const Token>> conjuncts;
    size_t start = 0;
    for (size_t i = 0; i <= tokens.size(); ++i) {
      bool sep = i == tokens.size() ||
                 tokens[i].kind == Token::Kind::kComma ||
                 lex_.MatchWord(tokens[i].text, Category::kConj) != nullptr;
      if (!sep) continue;
      // ", and" is one separator.
      bool merged = i < tokens.size() && i == start && i > 0 &&
                    tokens[i].kind == Token::Kind::kWord &&
                    tokens[i - 1].kind == Token::Kind::kComma;
      if (!merged) {
        if (i == start) throw ParseError("empty conjunct");
        conjuncts.push_back(tokens.subspan(start, i - start));
      }
      start = i + 1;
    }
    for (size_t i = 0; i < conjuncts.size(); ++i) {
      const RefExpr *inherited =
          i == 0 ? nullptr : &s->main.front().subject;
      s->main.push_back(ParseClause(conjuncts[i], inherited, s));
    }
  }

  // Longest proper name or a pronoun at words[i].
  std::optional<std::pair<RefExpr, size_t>> MatchRef(
      std::span<const std::string> words) const {
    if (words.empty()) return std::nullopt;
    auto names = lex_.MatchPrefix(words, Category::kName);
    if (!names.empty()) {
      RefExpr r;
      r.kind = RefExpr::Kind::kName;
      r.surface = names[0].form->text;
      r.lemma = names[0].entry->lemma;
      r.gender = names[0].entry->gender;
      return std::make_pair(r, names[0].form->words.size());
    }
    if (const LexEntry *p = lex_.MatchWord(words[0], Category::kPronoun)) {
      RefExpr r;
      r.kind = RefExpr::Kind::kPronoun;
      r.surface = ToLower(words[0]);
      r.lemma = p->lemma;
      r.gender = p->gender;
      return std::make_pair(r, size_t{1});
    }
    return std::nullopt;
  }

  Clause ParseClause(std::span<const Token> tokens, const RefExpr *inherited,
                     Sentence *q_sink) {
    if (tokens.empty()) throw ParseError("empty clause");
    Clause c;
    std::vector<std::string> words;
    std::string text;
    for (const Token &t : tokens) {
      if (t.kind != Token::Kind::kWord) {
        throw ParseError("unexpected '" + t.text + "' inside a clause");
      }
      if (!text.empty()) text += " ";
      text += t.text;
      if (IsQAdverb(t)) {
        if (q_sink == nullptr) {
          throw ParseError("adverb of quantification inside a temporal clause");
        }
        if (q_sink->q_adverb) {
          throw ParseError("more than one adverb of quantification");
        }
        q_sink->q_adverb = QAdverbOf(t);
        continue;
      }
      if (lex_.MatchWord(t.text, Category::kDecoration) != nullptr) {
        c.decorations.push_back(ToLower(t.text));
        continue;
      }
      words.push_back(t.text);
    }
    std::span<const std::string> rest(words);

    if (auto ref = MatchRef(rest)) {
      c.subject = ref->first;
      rest = rest.subspan(ref->second);
    } else if (inherited != nullptr) {
      c.subject = *inherited;
      c.subject_elided = true;
    } else {
      throw ParseError("clause '" + text + "' has no subject");
    }

    std::optional<Tense> perfect;
    if (!rest.empty()) {
      if (const LexEntry *aux = lex_.MatchWord(rest[0], Category::kAux)) {
        perfect = aux->aux_tense == FormTag::kPast ? Tense::kPastPerfect
                                                   : Tense::kPresentPerfect;
        rest = rest.subspan(1);
      }
    }

    std::vector<FormMatch> candidates;
    for (Category cat : {Category::kEvent, Category::kState}) {
      for (const FormMatch &m : lex_.MatchPrefix(rest, cat)) {
        candidates.push_back(m);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const FormMatch &a, const FormMatch &b) {
                       return a.form->words.size() > b.form->words.size();
                     });
    for (const FormMatch &m : candidates) {
      bool wanted = perfect ? m.form->tag == FormTag::kParticiple
                            : m.form->tag != FormTag::kParticiple;
      if (!wanted) continue;
      std::span<const std::string> after = rest.subspan(m.form->words.size());
      std::vector<RefExpr> objects;
      bool ok = true;
      for (int k = 1; k < m.entry->arity && ok; ++k) {
        auto obj = MatchRef(after);
        if (!obj) {
          ok = false;
        } else {
          objects.push_back(obj->first);
          after = after.subspan(obj->second);
        }
      }
      if (!ok || !after.empty()) continue;
      if (m.entry->arity == 0) {
        if (c.subject_elided || c.subject.kind != RefExpr::Kind::kPronoun ||
            c.subject.lemma != "it") {
          continue;
        }
        c.subject.kind = RefExpr::Kind::kExpletive;
      }
      c.verb = m.entry->lemma;
      c.verb_surface = m.form->text;
      c.objects = std::move(objects);
      c.aspect = m.entry->category == Category::kEvent ? Aspect::kEvent
                                                      : Aspect::kState;
      if (perfect) {
        c.tense = *perfect;
      } else {
        c.tense = m.form->tag == FormTag::kPast ? Tense::kSimplePast
                                                : Tense::kSimplePresent;
      }
      return c;
    }
    throw ParseError("cannot parse clause '" + text + "'");
  }

  const Lexicon &lex_;
};

// Walks referring expressions in textual order.
class Resolver {
 public:
  void ResolveSentence(Sentence *s) {
    if (s->subordinate_first && s->subordinate) ResolveClause(&*s->subordinate);
    if (s->has_scoped()) {
      ResolveSentence(&s->scoped.front());
    } else {
      for (size_t i = 0; i < s->main.size(); ++i) {
        Clause &c = s->main[i];
        if (c.subject_elided && i > 0) {
          c.subject = s->main.front().subject;
          ResolveObjects(&c);
        } else {
          ResolveClause(&c);
        }
      }
    }
    if (!s->subordinate_first && s->subordinate) {
      ResolveClause(&*s->subordinate);
    }
  }

 private:
  void ResolveClause(Clause *c) {
    Resolve(&c->subject);
    ResolveObjects(c);
  }

  void ResolveObjects(Clause *c) {
    for (RefExpr &o : c->objects) Resolve(&o);
  }

  void Resolve(RefExpr *r) {
    switch (r->kind) {
      case RefExpr::Kind::kExpletive:
        return;
      case RefExpr::Kind::kName:
        recent_[r->gender] = *r;
        return;
      case RefExpr::Kind::kPronoun: {
        auto it = recent_.find(r->gender);
        if (it == recent_.end()) {
          throw ResolutionError("pronoun '" + r->surface +
                                "' has no antecedent");
        }
        std::string surface = r->surface;
        *r = it->second;
        r->surface = surface;
        return;
      }
    }
  }

  std::map<Gender, RefExpr> recent_;
};

std::string RenderClause(const Clause &c, std::optional<QAdverb> mid_q) {
  std::vector<std::string> mids, finals, parts;
  if (mid_q) mids.push_back(QAdverbName(*mid_q));
  for (const std::string &d : c.decorations) {
    (IsMidAdverb(d) ? mids : finals).push_back(d);
  }
  if (!c.subject_elided) parts.push_back(c.subject.surface);
  std::vector<std::string> verb = SplitWords(c.verb_surface);
  if (IsPerfect(c.tense)) {
    parts.push_back(c.tense == Tense::kPastPerfect ? "had" : "has");
    parts.insert(parts.end(), mids.begin(), mids.end());
    parts.insert(parts.end(), verb.begin(), verb.end());
  } else if (!verb.empty() && IsCopula(verb.front())) {
    parts.push_back(verb.front());
    parts.insert(parts.end(), mids.begin(), mids.end());
    parts.insert(parts.end(), verb.begin() + 1, verb.end());
  } else {
    parts.insert(parts.end(), mids.begin(), mids.end());
    parts.insert(parts.end(), verb.begin(), verb.end());
  }
  for (const RefExpr &o : c.objects) parts.push_back(o.surface);
  parts.insert(parts.end(), finals.begin(), finals.end());
  return Join(parts, " ");
}

std::string RenderBody(const Sentence &s) {
  std::string main;
  if (s.has_scoped()) {
    main = RenderBody(s.scoped.front());
  } else {
    std::vector<std::string> clauses;
    for (size_t i = 0; i < s.main.size(); ++i) {
      std::optional<QAdverb> q;
      if (i == 0 && !s.q_initial) q = s.q_adverb;
      clauses.push_back(RenderClause(s.main[i], q));
    }
    if (clauses.size() <= 2) {
      main = Join(clauses, " and ");
    } else {
      for (size_t i = 0; i < clauses.size(); ++i) {
        if (i > 0) main += i + 1 == clauses.size() ? ", and " : ", ";
        main += clauses[i];
      }
    }
  }
  std::string body = main;
  if (s.connective) {
    std::string sub = RenderClause(*s.subordinate, std::nullopt);
    std::string conn = ConnectiveName(*s.connective);
    if (s.subordinate_first) {
      body = conn + " " + sub + ", " + main;
    } else {
      body = main + " " + conn + " " + sub;
    }
  }
  if (s.q_initial) body = std::string(QAdverbName(*s.q_adverb)) + ", " + body;
  return body;
}

}  // namespace

const char *TenseName(Tense tense) {
  switch (tense) {
    case Tense::kSimplePast: return "simple-past";
    case Tense::kSimplePresent: return "simple-present";
    case Tense::kPastPerfect: return "past-perfect";
    case Tense::kPresentPerfect: return "present-perfect";
  }
  return "";
}

const char *ConnectiveName(Connective connective) {
  switch (connective) {
    case Connective::kWhen: return "when";
    case Connective::kWhenever: return "whenever";
    case Connective::kBefore: return "before";
    case Connective::kAfter: return "after";
  }
  return "";
}

const char *QAdverbName(QAdverb q) {
  return q == QAdverb::kAlways ? "always" : "often";
}

bool Sentence::quantified() const {
  if (!connective) return false;
  if (q_adverb || *connective == Connective::kWhenever) return true;
  Tense t = subordinate->tense;
  return t == Tense::kSimplePresent || t == Tense::kPresentPerfect;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      i++;
    } else if (c == ',') {
      tokens.push_back({",", Token::Kind::kComma, i});
      i++;
    } else if (c == '.') {
      tokens.push_back({".", Token::Kind::kPeriod, i});
      i++;
    } else if (IsLetter(c)) {
      size_t start = i;
      while (i < text.size() &&
             (IsLetter(text[i]) ||
              (text[i] == '\'' && i + 1 < text.size() && IsLetter(text[i + 1]) &&
               i > start))) {
        i++;
      }
      tokens.push_back(
          {std::string(text.substr(start, i - start)), Token::Kind::kWord,
           start});
    } else {
      throw LexicalError(std::string("unrecognized character '") + c + "'",
                         i);
    }
  }
  return tokens;
}

ParsedDiscourse ParseDiscourse(const std::vector<Token> &tokens,
                               const Lexicon &lexicon) {
  for (const Token &t : tokens) {
    if (t.kind == Token::Kind::kWord && !lexicon.Knows(t.text)) {
      throw UnknownWordError(t.text);
    }
  }
  ParsedDiscourse d;
  SentenceParser parser(lexicon);
  std::span<const Token> all(tokens);
  size_t start = 0;
  for (size_t i = 0; i <= all.size(); ++i) {
    bool end = i == all.size() || all[i].kind == Token::Kind::kPeriod;
    if (!end) continue;
    if (i == start) {
      if (i == all.size()) break;
      throw ParseError("empty sentence before period at offset " +
                       std::to_string(all[i].offset));
    }
    d.sentences.push_back(parser.Parse(all.subspan(start, i - start)));
    start = i + 1;
  }
  return d;
}

ParsedDiscourse ParseText(std::string_view text, const Lexicon &lexicon) {
  return ParseDiscourse(Tokenize(text), lexicon);
}

ParsedDiscourse ResolvePronouns(const ParsedDiscourse &discourse) {
  ParsedDiscourse out = discourse;
  Resolver resolver;
  for (Sentence &s : out.sentences) resolver.ResolveSentence(&s);
  return out;
}

std::string Render(const Sentence &sentence) {
  std::string body = RenderBody(sentence);
  if (!body.empty()) {
    body[0] = std::toupper(static_cast<unsigned char>(body[0]));
  }
  return body + ".";
}

std::string Render(const ParsedDiscourse &discourse) {
  std::vector<std::string> sentences;
  for (const Sentence &s : discourse.sentences) sentences.push_back(Render(s));
  return Join(sentences, " ");
}

}  // namespace tempdrt
