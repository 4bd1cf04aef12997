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
// Externalized language data and per-run checker resources. All files are
// line-oriented UTF-8, one `key<TAB>value` entry per line. A language pack
// can be loaded from a directory to swap in another language; the built-in
// pack is English.

#ifndef REQLINT_RESOURCES_HPP
#define REQLINT_RESOURCES_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "reqlint/errors.hpp"
#include "reqlint/lang_en.hpp"
#include "reqlint/taxonomy.hpp"

namespace reqlint {

enum class PosTag {
  NOUN, PROPN, PRON, VERB, AUX, ADJ, ADV, ADP, DET, CONJ, NUM, PART, PUNCT, X,
};

inline std::string_view to_string(PosTag t) {
  switch (t) {
    case PosTag::NOUN: return "NOUN";
    case PosTag::PROPN: return "PROPN";
    case PosTag::PRON: return "PRON";
    case PosTag::VERB: return "VERB";
    case PosTag::AUX: return "AUX";
    case PosTag::ADJ: return "ADJ";
    case PosTag::ADV: return "ADV";
    case PosTag::ADP: return "ADP";
    case PosTag::DET: return "DET";
    case PosTag::CONJ: return "CONJ";
    case PosTag::NUM: return "NUM";
    case PosTag::PART: return "PART";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::X: return "X";
  }
  return "?";
}

namespace detail {

inline std::string lower_copy(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// Parses `key<TAB>value` lines; blank lines are skipped.
inline std::vector<std::pair<std::string, std::string>> parse_tsv(
    std::string_view text, const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++lineno;
    pos = eol + 1;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ResourceError(origin + ":" + std::to_string(lineno) +
                          ": expected key<TAB>value");
    out.emplace_back(std::string(line.substr(0, tab)),
                     std::string(line.substr(tab + 1)));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read resource file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

// Dictionaries driving the annotation pipeline.
struct LanguagePack {
  std::unordered_map<std::string, std::string> lemma_exceptions;
  std::unordered_set<std::string> abbreviations;  // lowercase, trailing '.'
  std::unordered_map<std::string, PosTag> lexicon;
  // Ordered so that longest-phrase matching is deterministic.
  std::vector<std::pair<std::string, std::string>> gazetteer;

  bool is_abbreviation(std::string_view token) const {
    std::string k = detail::lower_copy(token);
    if (abbreviations.count(k)) return true;
    if (!k.empty() && k.back() != '.') k.push_back('.');
    return abbreviations.count(k) > 0;
  }
};

inline LanguagePack parse_language_pack(std::string_view lemma_tsv,
                                        std::string_view abbrev_tsv,
                                        std::string_view lexicon_tsv,
                                        std::string_view gazetteer_tsv,
                                        const std::string& origin) {
  LanguagePack pack;
  for (auto& [k, v] : detail::parse_tsv(lemma_tsv, origin + "/lemma_exceptions"))
    pack.lemma_exceptions[detail::lower_copy(k)] = detail::lower_copy(v);
  for (auto& [k, v] : detail::parse_tsv(abbrev_tsv, origin + "/abbreviations"))
    pack.abbreviations.insert(detail::lower_copy(k));
  for (auto& [k, v] : detail::parse_tsv(lexicon_tsv, origin + "/lexicon")) {
    static const std::map<std::string_view, PosTag> tags = {
        {"NOUN", PosTag::NOUN}, {"PROPN", PosTag::PROPN}, {"PRON", PosTag::PRON},
        {"VERB", PosTag::VERB}, {"AUX", PosTag::AUX},     {"ADJ", PosTag::ADJ},
        {"ADV", PosTag::ADV},   {"ADP", PosTag::ADP},     {"DET", PosTag::DET},
        {"CONJ", PosTag::CONJ}, {"NUM", PosTag::NUM},     {"PART", PosTag::PART},
        {"PUNCT", PosTag::PUNCT}, {"X", PosTag::X}};
    auto it = tags.find(v);
    if (it == tags.end())
      throw ResourceError(origin + "/lexicon: unknown tag '" + v + "' for '" +
                          k + "'");
    pack.lexicon[detail::lower_copy(k)] = it->second;
  }
  for (auto& [k, v] : detail::parse_tsv(gazetteer_tsv, origin + "/gazetteer"))
    pack.gazetteer.emplace_back(k, v);
  // Longest phrases first so greedy entity matching is well defined.
  std::stable_sort(pack.gazetteer.begin(), pack.gazetteer.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });
  return pack;
}

// Loads the four dictionary files from a directory.
inline LanguagePack load_language_pack(const std::string& dir) {
  return parse_language_pack(
      detail::read_file(dir + "/lemma_exceptions.tsv"),
      detail::read_file(dir + "/abbreviations.tsv"),
      detail::read_file(dir + "/lexicon.tsv"),
      detail::read_file(dir + "/gazetteer.tsv"), dir);
}

// Compiled-in English pack; parsed once.
inline const LanguagePack& builtin_english() {
  static const LanguagePack pack = parse_language_pack(
      lang_en::kLemmaExceptions, lang_en::kAbbreviations, lang_en::kLexicon,
      lang_en::kGazetteer, "<builtin>");
  return pack;
}

// Everything checkers may consult besides the block itself.
struct Resources {
  LanguagePack lang = builtin_english();
  std::map<std::string, std::string> document_list;  // doc id -> title
  std::set<std::string> domain_terms;
};

// `id<TAB>title` per line.
inline std::map<std::string, std::string> load_document_list(
    const std::string& path) {
  std::map<std::string, std::string> out;
  for (auto& [k, v] : detail::parse_tsv(detail::read_file(path), path)) {
    if (k.empty() || v.empty())
      throw ResourceError(path + ": document ids and titles must be non-empty");
    out[k] = v;
  }
  return out;
}

// `term<TAB>anything` per line; only the keys matter.
inline std::set<std::string> load_domain_terms(const std::string& path) {
  std::set<std::string> out;
  for (auto& [k, v] : detail::parse_tsv(detail::read_file(path), path))
    out.insert(k);
  return out;
}

}  // namespace reqlint

#endif  // REQLINT_RESOURCES_HPP
