// Copyright 2026 The Reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Shallow, rule-based annotation layers over block text: tokens with
// lemma/stem/POS/morphology, sentences, flat NP/VP/PP/SBAR chunks with a
// subject heuristic, and gazetteer entities. Everything is deterministic
// and driven by the LanguagePack dictionaries.

#ifndef REQLINT_NLP_HPP
#define REQLINT_NLP_HPP

#include <cctype>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/docmodel.hpp"
#include "reqlint/resources.hpp"
#include "reqlint/stemmer.hpp"

namespace reqlint {

enum class MorphFlag {
  Plural,
  PastTense,
  Gerund,
  Comparative,
  Superlative,
  ThirdPersonSingular,
};

struct Token {
  Span span;  // block-relative
  std::string text;
  std::string lemma;
  std::string stem;
  PosTag pos = PosTag::X;
  std::set<MorphFlag> morph;
};

struct Sentence {
  Span span;                // block-relative
  std::size_t first = 0;    // token index range [first, last)
  std::size_t last = 0;
};

enum class ChunkLabel { NP, VP, PP, SBAR, O };

inline std::string_view to_string(ChunkLabel l) {
  switch (l) {
    case ChunkLabel::NP: return "NP";
    case ChunkLabel::VP: return "VP";
    case ChunkLabel::PP: return "PP";
    case ChunkLabel::SBAR: return "SBAR";
    case ChunkLabel::O: return "O";
  }
  return "?";
}

struct Chunk {
  ChunkLabel label = ChunkLabel::O;
  std::size_t first = 0;  // token index range [first, last)
  std::size_t last = 0;
  bool is_subject = false;
};

struct AnnotationSet {
  std::size_t block = 0;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  std::vector<Chunk> chunks;  // ordered, sentence by sentence
  std::vector<std::pair<Span, std::string>> entities;
};

namespace detail {

inline bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

inline bool is_all_punct(std::string_view s) {
  for (char c : s)
    if (is_word_char(c)) return false;
  return !s.empty();
}

inline bool equals_ci(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace detail

// Splits text into word and punctuation tokens. Hyphens, apostrophes,
// slashes and dots stay inside a token when flanked by word characters
// (REQ-1, don't, I/O, 3.5); a trailing dot is absorbed when the result is
// a known abbreviation (e.g., i.e.). Only span and text are filled in.
inline std::vector<Token> tokenize(std::string_view text,
                                   const LanguagePack& lang = builtin_english()) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char u = static_cast<unsigned char>(text[i]);
    if (std::isspace(u)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (detail::is_word_char(text[i])) {
      ++i;
      while (i < n) {
        if (detail::is_word_char(text[i])) {
          ++i;
        } else if ((text[i] == '-' || text[i] == '\'' || text[i] == '.' ||
                    text[i] == '/') &&
                   i + 1 < n && detail::is_word_char(text[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
      // Absorb a trailing dot for known abbreviations.
      if (i < n && text[i] == '.' &&
          lang.is_abbreviation(text.substr(start, i - start)))
        ++i;
    } else {
      ++i;  // one punctuation character per token
    }
    Token t;
    t.span = {start, i};
    t.text = std::string(text.substr(start, i - start));
    out.push_back(std::move(t));
  }
  return out;
}

// Sentence boundaries fall after '.', '?' and '!' tokens unless the
// preceding token is an abbreviation. Trailing tokens form a final
// sentence.
inline std::vector<Sentence> split_sentences(
    const std::vector<Token>& tokens,
    const LanguagePack& lang = builtin_english()) {
  std::vector<Sentence> out;
  std::size_t first = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i].text;
    bool terminal = (t == "." || t == "?" || t == "!");
    if (terminal && i > first && lang.is_abbreviation(tokens[i - 1].text))
      terminal = false;
    if (terminal) {
      out.push_back({{tokens[first].span.start, tokens[i].span.end}, first, i + 1});
      first = i + 1;
    }
  }
  if (first < tokens.size())
    out.push_back(
        {{tokens[first].span.start, tokens.back().span.end}, first, tokens.size()});
  return out;
}

namespace detail {

inline bool lemma_repair(std::string& stem_part) {
  // Porter-style cleanup after stripping -ing/-ed.
  if (!porter::has_vowel(stem_part, stem_part.size())) return false;
  if (porter::ends_double_consonant(stem_part)) {
    char c = stem_part.back();
    if (c != 'l' && c != 's' && c != 'z') {
      stem_part.pop_back();
    } else if (c == 'l' && porter::measure(stem_part, stem_part.size()) > 1) {
      stem_part.pop_back();
    }
    return true;
  }
  if (porter::measure(stem_part, stem_part.size()) == 1 &&
      porter::ends_cvc(stem_part, stem_part.size()))
    stem_part.push_back('e');
  return true;
}

inline std::string lemma_once(const std::string& w,
                              const LanguagePack& lang) {
  auto ex = lang.lemma_exceptions.find(w);
  if (ex != lang.lemma_exceptions.end()) return ex->second;
  std::size_t n = w.size();
  auto ends = [&](std::string_view s) {
    return n >= s.size() && std::string_view(w).substr(n - s.size()) == s;
  };
  if (ends("'s")) return w.substr(0, n - 2);
  if (ends("ies") && n > 4) return w.substr(0, n - 3) + "y";
  if (ends("sses")) return w.substr(0, n - 2);
  if ((ends("xes") || ends("ches") || ends("shes") || ends("zes") ||
       ends("oes")) &&
      n >= 4)
    return w.substr(0, n - 2);
  if (ends("es") && n >= 4) return w.substr(0, n - 1);
  if (ends("s") && n >= 4 && !ends("ss") && !ends("us") && !ends("is"))
    return w.substr(0, n - 1);
  if (ends("ing") && n > 5) {
    std::string s = w.substr(0, n - 3);
    if (lemma_repair(s)) return s;
    return w;
  }
  if (ends("ed") && n > 4) {
    std::string s = w.substr(0, n - 2);
    if (lemma_repair(s)) return s;
    return w;
  }
  return w;
}

}  // namespace detail

// Lowercase dictionary lemma: exception dictionary first, then suffix
// rules, iterated to a fixed point so the result is idempotent.
inline std::string lemmatize(std::string_view word,
                             const LanguagePack& lang = builtin_english()) {
  std::string w = detail::lower_copy(word);
  bool has_alpha = false;
  for (char c : w)
    if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
  if (!has_alpha) return w;
  for (int guard = 0; guard < 8; ++guard) {
    std::string next = detail::lemma_once(w, lang);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

namespace detail {

inline bool has_adj_suffix(const std::string& w) {
  auto ends = [&](std::string_view s) {
    return w.size() >= s.size() + 2 &&
           std::string_view(w).substr(w.size() - s.size()) == s;
  };
  return ends("ous") || ends("ful") || ends("able") || ends("ible") ||
         ends("ive") || ends("less");
}

inline bool has_noun_suffix(const std::string& w) {
  auto ends = [&](std::string_view s) {
    return w.size() >= s.size() + 2 &&
           std::string_view(w).substr(w.size() - s.size()) == s;
  };
  return ends("tion") || ends("sion") || ends("ment") || ends("ness") ||
         ends("ity") || ends("ance") || ends("ence") || ends("ship") ||
         ends("ism");
}

}  // namespace detail

// Tags one sentence of tokens. Deterministic cascade: lexicon, determiner
// context, suffix shape, auxiliary/noun context, default NOUN. Determiner
// context wins over the verb suffixes so noun uses of -ing/-ed words
// ("the warning", "the speed") stay nominal.
inline std::vector<PosTag> pos_tag(std::span<const Token> sentence,
                                   const LanguagePack& lang = builtin_english()) {
  std::vector<PosTag> tags(sentence.size(), PosTag::X);
  std::vector<bool> setflag(sentence.size(), false);

  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const std::string& text = sentence[i].text;
    std::string low = detail::lower_copy(text);

    if (detail::is_all_punct(text)) {
      tags[i] = PosTag::PUNCT;
      setflag[i] = true;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(text[0]))) {
      tags[i] = PosTag::NUM;
      setflag[i] = true;
      continue;
    }
    if (auto it = lang.lexicon.find(low); it != lang.lexicon.end()) {
      tags[i] = it->second;
      setflag[i] = true;
      continue;
    }
    bool has_digit = false;
    for (char c : text)
      if (std::isdigit(static_cast<unsigned char>(c))) has_digit = true;
    if (has_digit) {  // identifiers such as REQ-1, D-17
      tags[i] = PosTag::PROPN;
      setflag[i] = true;
      continue;
    }

    PosTag prev = i > 0 ? tags[i - 1] : PosTag::X;
    if (i > 0 && (prev == PosTag::DET || prev == PosTag::ADJ)) {
      tags[i] = detail::has_adj_suffix(low) ? PosTag::ADJ : PosTag::NOUN;
      setflag[i] = true;
      continue;
    }

    auto ends = [&](std::string_view s) {
      return low.size() >= s.size() + 2 &&
             std::string_view(low).substr(low.size() - s.size()) == s;
    };
    if (ends("ly")) {
      tags[i] = PosTag::ADV;
      setflag[i] = true;
      continue;
    }
    if (detail::has_noun_suffix(low)) {
      tags[i] = PosTag::NOUN;
      setflag[i] = true;
      continue;
    }
    if (detail::has_adj_suffix(low)) {
      tags[i] = PosTag::ADJ;
      setflag[i] = true;
      continue;
    }
    if ((ends("ing") || (ends("ed") && !ends("eed")))) {
      tags[i] = PosTag::VERB;
      setflag[i] = true;
      continue;
    }

    // Context: a base verb after an auxiliary (skipping particles and
    // adverbs), a present-tense verb after a nominal head.
    std::size_t j = i;
    while (j > 0 &&
           (tags[j - 1] == PosTag::PART || tags[j - 1] == PosTag::ADV))
      --j;
    if (j > 0 && tags[j - 1] == PosTag::AUX) {
      tags[i] = PosTag::VERB;
      setflag[i] = true;
      continue;
    }
    if (i > 0 &&
        (prev == PosTag::NOUN || prev == PosTag::PROPN || prev == PosTag::PRON) &&
        low.size() >= 3 && low.back() == 's') {
      tags[i] = PosTag::VERB;
      setflag[i] = true;
      continue;
    }
    tags[i] = PosTag::NOUN;
    setflag[i] = true;
  }

  // Demonstratives standing alone are pronouns: "this shall ..." vs
  // "this system shall ...".
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (tags[i] != PosTag::DET) continue;
    std::string low = detail::lower_copy(sentence[i].text);
    if (low != "this" && low != "that" && low != "these" && low != "those")
      continue;
    if (i + 1 == sentence.size() || tags[i + 1] == PosTag::AUX ||
        tags[i + 1] == PosTag::VERB)
      tags[i] = PosTag::PRON;
  }
  return tags;
}

namespace detail {

inline bool is_subordinator(std::string_view text) {
  static const std::set<std::string, std::less<>> coordinating = {"and", "or",
                                                                  "but", "nor"};
  return coordinating.find(lower_copy(text)) == coordinating.end();
}

}  // namespace detail

// Flat chunks over one tagged sentence. Token indices in the result are
// relative to the given span. Grammar: NP = (DET)(ADJ|NUM)*(NOUN|PROPN|PRON)+,
// VP starts at the first AUX/VERB and runs over AUX/VERB/PART/ADV,
// PP = ADP + NP, SBAR = subordinating CONJ up to the next comma. The
// subject is the first NP preceding the first VP.
inline std::vector<Chunk> chunk(std::span<const Token> sentence,
                                std::span<const PosTag> tags) {
  std::vector<Chunk> chunks;
  const std::size_t n = sentence.size();

  auto match_np = [&](std::size_t i) -> std::size_t {  // 0 if no NP at i
    std::size_t k = i;
    if (k < n && tags[k] == PosTag::DET) ++k;
    while (k < n && (tags[k] == PosTag::ADJ || tags[k] == PosTag::NUM)) ++k;
    std::size_t noun_start = k;
    while (k < n && (tags[k] == PosTag::NOUN || tags[k] == PosTag::PROPN ||
                     tags[k] == PosTag::PRON))
      ++k;
    return k == noun_start ? 0 : k;
  };

  std::size_t i = 0;
  while (i < n) {
    PosTag t = tags[i];
    if (t == PosTag::CONJ && detail::is_subordinator(sentence[i].text)) {
      std::size_t j = i + 1;
      while (j < n && sentence[j].text != ",") ++j;
      chunks.push_back({ChunkLabel::SBAR, i, j, false});
      i = j;
      continue;
    }
    if (std::size_t end = match_np(i); end != 0) {
      chunks.push_back({ChunkLabel::NP, i, end, false});
      i = end;
      continue;
    }
    if (t == PosTag::ADP) {
      if (std::size_t end = match_np(i + 1); end != 0) {
        chunks.push_back({ChunkLabel::PP, i, end, false});
        i = end;
        continue;
      }
      chunks.push_back({ChunkLabel::O, i, i + 1, false});
      ++i;
      continue;
    }
    if (t == PosTag::AUX || t == PosTag::VERB) {
      std::size_t j = i + 1;
      while (j < n && (tags[j] == PosTag::AUX || tags[j] == PosTag::VERB ||
                       tags[j] == PosTag::PART || tags[j] == PosTag::ADV))
        ++j;
      chunks.push_back({ChunkLabel::VP, i, j, false});
      i = j;
      continue;
    }
    chunks.push_back({ChunkLabel::O, i, i + 1, false});
    ++i;
  }

  std::size_t first_vp = chunks.size();
  for (std::size_t c = 0; c < chunks.size(); ++c)
    if (chunks[c].label == ChunkLabel::VP) {
      first_vp = c;
      break;
    }
  for (std::size_t c = 0; c < first_vp && c < chunks.size(); ++c)
    if (chunks[c].label == ChunkLabel::NP) {
      chunks[c].is_subject = true;
      break;
    }
  return chunks;
}

namespace detail {

inline void assign_morphology(Token& tok) {
  const std::string low = lower_copy(tok.text);
  auto ends = [&](std::string_view s) {
    return low.size() > s.size() &&
           std::string_view(low).substr(low.size() - s.size()) == s;
  };
  bool inflected = tok.lemma != low;
  switch (tok.pos) {
    case PosTag::NOUN:
    case PosTag::PROPN:
      if (inflected && ends("s")) tok.morph.insert(MorphFlag::Plural);
      break;
    case PosTag::VERB:
    case PosTag::AUX:
      if (ends("ing")) tok.morph.insert(MorphFlag::Gerund);
      else if (ends("ed") || (inflected && !ends("s")))
        tok.morph.insert(MorphFlag::PastTense);
      else if (inflected && ends("s"))
        tok.morph.insert(MorphFlag::ThirdPersonSingular);
      break;
    case PosTag::ADJ:
      if (ends("est")) tok.morph.insert(MorphFlag::Superlative);
      else if (ends("er")) tok.morph.insert(MorphFlag::Comparative);
      break;
    default:
      break;
  }
}

inline bool word_boundary(std::string_view text, std::size_t start,
                          std::size_t end) {
  bool left = start == 0 || !is_word_char(text[start - 1]);
  bool right = end >= text.size() || !is_word_char(text[end]);
  return left && right;
}

inline std::vector<std::pair<Span, std::string>> find_entities(
    std::string_view text, const LanguagePack& lang) {
  std::vector<std::pair<Span, std::string>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    bool at_word_start =
        is_word_char(text[i]) && (i == 0 || !is_word_char(text[i - 1]));
    if (at_word_start) {
      for (const auto& [phrase, label] : lang.gazetteer) {
        if (i + phrase.size() <= text.size() &&
            equals_ci(text.substr(i, phrase.size()), phrase) &&
            word_boundary(text, i, i + phrase.size())) {
          out.push_back({{i, i + phrase.size()}, label});
          i += phrase.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) ++i;
  }
  return out;
}

}  // namespace detail

// Annotates a single block. `body_start` marks a requirement-id prefix
// whose tokens are tagged X and never enter chunks.
inline AnnotationSet annotate_block(const Block& block, std::size_t block_index,
                                    const LanguagePack& lang = builtin_english()) {
  AnnotationSet ann;
  ann.block = block_index;
  ann.tokens = tokenize(block.text, lang);
  ann.sentences = split_sentences(ann.tokens, lang);

  for (const Sentence& sent : ann.sentences) {
    std::span<const Token> toks(ann.tokens.data() + sent.first,
                                sent.last - sent.first);
    std::vector<PosTag> tags = pos_tag(toks, lang);
    for (std::size_t k = 0; k < tags.size(); ++k) {
      Token& tok = ann.tokens[sent.first + k];
      if (block.kind == BlockKind::Requirement &&
          tok.span.end <= block.body_start)
        tags[k] = PosTag::X;
      tok.pos = tags[k];
    }
    std::vector<Chunk> sentence_chunks = chunk(toks, tags);
    for (Chunk c : sentence_chunks) {
      c.first += sent.first;
      c.last += sent.first;
      ann.chunks.push_back(c);
    }
  }

  for (Token& tok : ann.tokens) {
    tok.lemma = lemmatize(tok.text, lang);
    tok.stem = stem(tok.text);
    detail::assign_morphology(tok);
  }
  ann.entities = detail::find_entities(block.text, lang);
  return ann;
}

// One AnnotationSet per block, in block order.
inline std::vector<AnnotationSet> annotate(
    const Document& doc, const LanguagePack& lang = builtin_english()) {
  std::vector<AnnotationSet> out;
  out.reserve(doc.blocks.size());
  for (std::size_t i = 0; i < doc.blocks.size(); ++i)
    out.push_back(annotate_block(doc.blocks[i], i, lang));
  return out;
}

}  // namespace reqlint

#endif  // REQLINT_NLP_HPP
