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
// Porter suffix-stripping stemmer (the 1980 algorithm), run to a fixed
// point so that stem(stem(w)) == stem(w) holds for every input.

#ifndef REQLINT_STEMMER_HPP
#define REQLINT_STEMMER_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {
namespace porter {

inline bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of vowel->consonant transitions in w[0, end), the Porter measure.
inline int measure(const std::string& w, std::size_t end) {
  int m = 0;
  bool in_vowel = false;
  for (std::size_t i = 0; i < end; ++i) {
    if (!is_consonant(w, i)) {
      in_vowel = true;
    } else {
      if (in_vowel) ++m;
      in_vowel = false;
    }
  }
  return m;
}

inline bool has_vowel(const std::string& w, std::size_t end) {
  for (std::size_t i = 0; i < end; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

inline bool ends_double_consonant(const std::string& w) {
  std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o condition: stem ends consonant-vowel-consonant, final not w/x/y.
inline bool ends_cvc(const std::string& w, std::size_t end) {
  if (end < 3) return false;
  char last = w[end - 1];
  return is_consonant(w, end - 3) && !is_consonant(w, end - 2) &&
         is_consonant(w, end - 1) && last != 'w' && last != 'x' && last != 'y';
}

inline bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         std::string_view(w).substr(w.size() - suffix.size()) == suffix;
}

struct Mapping {
  std::string_view from;
  std::string_view to;
};

// Longest matching suffix decides; if its measure condition fails, the
// step does nothing (per the original algorithm).
inline bool apply_longest(std::string& w, const std::vector<Mapping>& table,
                          int min_measure) {
  const Mapping* best = nullptr;
  for (const Mapping& m : table)
    if (ends_with(w, m.from) && (!best || m.from.size() > best->from.size()))
      best = &m;
  if (!best) return false;
  std::size_t stem_len = w.size() - best->from.size();
  if (measure(w, stem_len) <= min_measure) return false;
  w.resize(stem_len);
  w.append(best->to);
  return true;
}

inline void step1a(std::string& w) {
  if (ends_with(w, "sses")) w.resize(w.size() - 2);
  else if (ends_with(w, "ies")) w.resize(w.size() - 2);
  else if (ends_with(w, "ss")) { /* keep */ }
  else if (ends_with(w, "s")) w.resize(w.size() - 1);
}

inline void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w.push_back('e');
  }
}

inline void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

inline void step2(std::string& w) {
  static const std::vector<Mapping> table = {
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  };
  apply_longest(w, table, 0);
}

inline void step3(std::string& w) {
  static const std::vector<Mapping> table = {
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  };
  apply_longest(w, table, 0);
}

inline void step4(std::string& w) {
  static const std::vector<Mapping> table = {
      {"ement", ""}, {"ance", ""}, {"ence", ""}, {"able", ""}, {"ible", ""},
      {"ment", ""},  {"ant", ""},  {"ent", ""},  {"ism", ""},  {"ate", ""},
      {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},  {"ion", ""},
      {"al", ""},    {"er", ""},   {"ic", ""},   {"ou", ""},
  };
  const Mapping* best = nullptr;
  for (const Mapping& m : table)
    if (ends_with(w, m.from) && (!best || m.from.size() > best->from.size()))
      best = &m;
  if (!best) return;
  std::size_t stem_len = w.size() - best->from.size();
  if (best->from == "ion" &&
      !(stem_len > 0 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't')))
    return;
  if (measure(w, stem_len) <= 1) return;
  w.resize(stem_len);
}

inline void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  int m = measure(w, w.size() - 1);
  if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.pop_back();
}

inline void step5b(std::string& w) {
  if (measure(w, w.size()) > 1 && ends_double_consonant(w) && w.back() == 'l')
    w.pop_back();
}

inline std::string once(std::string w) {
  if (w.size() <= 2) return w;
  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace porter

// Lowercased Porter stem of `word`, iterated to a fixed point. Inputs
// containing non-letters are lowercased and returned unchanged.
inline std::string stem(std::string_view word) {
  std::string w;
  w.reserve(word.size());
  bool alphabetic = true;
  for (char c : word) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalpha(u)) alphabetic = false;
    w.push_back(static_cast<char>(std::tolower(u)));
  }
  if (!alphabetic || w.size() <= 2) return w;
  for (int guard = 0; guard < 16; ++guard) {
    std::string next = porter::once(w);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

}  // namespace reqlint

#endif  // REQLINT_STEMMER_HPP
