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
// Built-in violation detectors. Each checker is a pure function of
// (block, annotations, params, resources) and only ever reports findings
// for the given block. rule_id and accuracy on a Finding are stamped by
// the engine from the rule that bound the checker.

#ifndef REQLINT_CHECKERS_HPP
#define REQLINT_CHECKERS_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/catalog.hpp"
#include "reqlint/docmodel.hpp"
#include "reqlint/nlp.hpp"
#include "reqlint/resources.hpp"

namespace reqlint {

struct Finding {
  std::string rule_id;
  std::size_t block = 0;
  Span span;  // block-relative
  std::string message;
  std::optional<std::string> suggestion;
  Accuracy accuracy = Accuracy::Deterministic;
};

using Checker = std::vector<Finding> (*)(const Block&, const AnnotationSet&,
                                         const CheckerParams&, const Resources&);

namespace detail {

inline std::optional<std::string> param_string(const CheckerParams& params,
                                               const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  return std::nullopt;
}

inline bool id_boundary(std::string_view text, std::size_t start,
                        std::size_t end) {
  auto hard = [](char c) {
    return is_word_char(c) || c == '-' || c == '_';
  };
  bool left = start == 0 || !hard(text[start - 1]);
  bool right = end >= text.size() || !hard(text[end]);
  return left && right;
}

inline bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i)
    if (equals_ci(haystack.substr(i, needle.size()), needle)) return true;
  return false;
}

// Copy with every whitespace character turned into a plain space, so
// multi-word needles match across line breaks. Offsets are unchanged.
inline std::string flatten_ws(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (std::isspace(static_cast<unsigned char>(c))) c = ' ';
  return out;
}

// Compiled-pattern cache; checker behaviour stays pure.
inline const std::regex& compiled_regex(const std::string& pattern) {
  static std::map<std::string, std::regex> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(pattern);
  if (it == cache.end()) {
    try {
      it = cache.emplace(pattern, std::regex(pattern)).first;
    } catch (const std::regex_error& e) {
      throw BadParams("regex: pattern does not compile: " + pattern + " (" +
                      e.what() + ")");
    }
  }
  return it->second;
}

// Chunks belonging to one sentence, requirement-id prefix skipped.
inline std::vector<const Chunk*> body_chunks(const Block& block,
                                             const AnnotationSet& ann,
                                             const Sentence& sent) {
  std::vector<const Chunk*> out;
  for (const Chunk& c : ann.chunks) {
    if (c.first < sent.first || c.last > sent.last) continue;
    if (block.kind == BlockKind::Requirement &&
        ann.tokens[c.last - 1].span.end <= block.body_start)
      continue;
    out.push_back(&c);
  }
  return out;
}

}  // namespace detail

// Table 1 rule 160 family: a list of forbidden lemmas or phrases with
// preferred replacements. Params: each key is a term (a lemma, or a
// phrase when it contains a space), the value its replacement.
inline std::vector<Finding> check_forbidden_term(const Block& block,
                                                 const AnnotationSet& ann,
                                                 const CheckerParams& params,
                                                 const Resources&) {
  if (params.empty())
    throw BadParams("forbidden_term: no terms configured");
  std::vector<Finding> out;
  for (const auto& [term, value] : params) {
    const auto* replacement = std::get_if<std::string>(&value);
    if (!replacement)
      throw BadParams("forbidden_term: replacement for '" + term +
                      "' must be a string");
    std::string low = detail::lower_copy(term);
    if (low.find(' ') == std::string::npos) {
      for (const Token& tok : ann.tokens) {
        if (tok.lemma != low) continue;
        Finding f;
        f.block = ann.block;
        f.span = tok.span;
        f.message = "term \"" + tok.text + "\" is forbidden; use \"" +
                    *replacement + "\"";
        f.suggestion = *replacement;
        out.push_back(std::move(f));
      }
    } else {
      std::string flat = detail::flatten_ws(block.text);
      std::string_view text = flat;
      std::size_t i = 0;
      while (i + low.size() <= text.size()) {
        if (detail::equals_ci(text.substr(i, low.size()), low) &&
            detail::word_boundary(text, i, i + low.size())) {
          Finding f;
          f.block = ann.block;
          f.span = {i, i + low.size()};
          f.message = "phrase \"" + std::string(text.substr(i, low.size())) +
                      "\" is forbidden; use \"" + *replacement + "\"";
          f.suggestion = *replacement;
          out.push_back(std::move(f));
          i += low.size();
        } else {
          ++i;
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
    return a.span.start != b.span.start ? a.span.start < b.span.start
                                        : a.span.end < b.span.end;
  });
  return out;
}

// Pure-text pattern rule. Params: "pattern" (required), "message",
// "invert" ("true" flags the absence of a match once per block).
inline std::vector<Finding> check_regex(const Block& block,
                                        const AnnotationSet& ann,
                                        const CheckerParams& params,
                                        const Resources&) {
  auto pattern = detail::param_string(params, "pattern");
  if (!pattern || pattern->empty())
    throw BadParams("regex: missing 'pattern' parameter");
  const std::regex& re = detail::compiled_regex(*pattern);
  std::string message = detail::param_string(params, "message")
                            .value_or("text matches pattern " + *pattern);
  bool invert = detail::param_string(params, "invert").value_or("false") == "true";

  std::vector<Finding> out;
  auto begin = std::cregex_iterator(block.text.data(),
                                    block.text.data() + block.text.size(), re);
  auto end = std::cregex_iterator();
  if (invert) {
    if (begin == end) {
      Finding f;
      f.block = ann.block;
      f.span = {0, block.text.size()};
      f.message = message;
      out.push_back(std::move(f));
    }
    return out;
  }
  for (auto it = begin; it != end; ++it) {
    Finding f;
    f.block = ann.block;
    std::size_t pos = static_cast<std::size_t>(it->position());
    f.span = {pos, pos + static_cast<std::size_t>(it->length())};
    f.message = message;
    out.push_back(std::move(f));
  }
  return out;
}

// Table 1 rule 24: references to known documents must cite the document
// title in the same sentence.
inline std::vector<Finding> check_reference_style(const Block& block,
                                                  const AnnotationSet& ann,
                                                  const CheckerParams&,
                                                  const Resources& resources) {
  if (resources.document_list.empty())
    throw ResourceError("reference_style: document list is empty");
  std::vector<Finding> out;
  std::string flat = detail::flatten_ws(block.text);
  std::string_view text = flat;
  for (const Sentence& sent : ann.sentences) {
    std::string_view sentence = text.substr(sent.span.start, sent.span.size());
    for (const auto& [doc_id, title] : resources.document_list) {
      bool title_present = detail::contains_ci(sentence, title);
      std::size_t i = 0;
      while (i + doc_id.size() <= sentence.size()) {
        if (sentence.substr(i, doc_id.size()) == doc_id &&
            detail::id_boundary(sentence, i, i + doc_id.size())) {
          if (!title_present) {
            Finding f;
            f.block = ann.block;
            f.span = {sent.span.start + i, sent.span.start + i + doc_id.size()};
            f.message = "reference to " + doc_id +
                        " should cite the document title \"" + title + "\"";
            f.suggestion = doc_id + ", " + title;
            out.push_back(std::move(f));
          }
          i += doc_id.size();
        } else {
          ++i;
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
    return a.span.start < b.span.start;
  });
  return out;
}

// Table 1 rule 78: definitional sentences (NP + "is a"/"is an"/"means"/
// "refers to"/"denotes" + NP) must be introduced by "Definition:".
inline std::vector<Finding> check_definition_marker(const Block& block,
                                                    const AnnotationSet& ann,
                                                    const CheckerParams&,
                                                    const Resources&) {
  if (block.kind != BlockKind::Requirement &&
      block.kind != BlockKind::Informative)
    return {};
  std::string_view body = std::string_view(block.text).substr(block.body_start);
  if (detail::ltrim(body).substr(0, 11) == "Definition:") return {};

  std::vector<Finding> out;
  for (const Sentence& sent : ann.sentences) {
    auto np_ending_at = [&](std::size_t v) {
      for (const Chunk& c : ann.chunks)
        if (c.label == ChunkLabel::NP && c.last == v && c.first >= sent.first)
          return true;
      return false;
    };
    auto nominal_starting_at = [&](std::size_t v) {
      for (const Chunk& c : ann.chunks)
        if ((c.label == ChunkLabel::NP || c.label == ChunkLabel::PP) &&
            c.first == v && c.last <= sent.last)
          return true;
      return false;
    };
    for (std::size_t v = sent.first; v < sent.last; ++v) {
      const Token& tok = ann.tokens[v];
      std::size_t marker_end = 0;  // token index one past the marker
      if (tok.lemma == "be" && v + 1 < sent.last) {
        std::string nxt = detail::lower_copy(ann.tokens[v + 1].text);
        if (nxt == "a" || nxt == "an") marker_end = v + 1;
      } else if ((tok.lemma == "mean" || tok.lemma == "denote") &&
                 (tok.pos == PosTag::VERB || tok.pos == PosTag::AUX)) {
        marker_end = v + 1;
      } else if (tok.lemma == "refer" && v + 1 < sent.last &&
                 detail::lower_copy(ann.tokens[v + 1].text) == "to") {
        marker_end = v + 1;
      }
      if (marker_end == 0) continue;
      if (!np_ending_at(v)) continue;
      if (!nominal_starting_at(marker_end)) continue;
      Finding f;
      f.block = ann.block;
      f.span = {tok.span.start, ann.tokens[marker_end].span.end};
      f.message = "definitional sentence should be preceded with \"Definition:\"";
      out.push_back(std::move(f));
      break;  // one finding per sentence
    }
  }
  return out;
}

// Table 1 rule 56: a requirement sentence must open with its subject.
inline std::vector<Finding> check_subject_first(const Block& block,
                                                const AnnotationSet& ann,
                                                const CheckerParams&,
                                                const Resources&) {
  if (block.kind != BlockKind::Requirement) return {};
  std::vector<Finding> out;
  for (const Sentence& sent : ann.sentences) {
    std::vector<const Chunk*> chunks = detail::body_chunks(block, ann, sent);
    if (chunks.empty()) continue;
    const Chunk* first = chunks.front();
    if (first->label == ChunkLabel::NP && first->is_subject) continue;
    Finding f;
    f.block = ann.block;
    f.span = {ann.tokens[first->first].span.start,
              ann.tokens[first->last - 1].span.end};
    f.message = "requirement sentence does not start with its subject";
    out.push_back(std::move(f));
  }
  return out;
}

// Table 1 rule 50: a requirement sentence must name its subject
// explicitly; a bare pronoun does not count.
inline std::vector<Finding> check_explicit_subject(const Block& block,
                                                   const AnnotationSet& ann,
                                                   const CheckerParams&,
                                                   const Resources&) {
  if (block.kind != BlockKind::Requirement) return {};
  std::vector<Finding> out;
  for (const Sentence& sent : ann.sentences) {
    std::vector<const Chunk*> chunks = detail::body_chunks(block, ann, sent);
    if (chunks.empty()) continue;
    const Chunk* subject = nullptr;
    for (const Chunk* c : chunks)
      if (c->label == ChunkLabel::NP && c->is_subject) subject = c;
    if (!subject) {
      Finding f;
      f.block = ann.block;
      f.span = {ann.tokens[chunks.front()->first].span.start,
                ann.tokens[chunks.back()->last - 1].span.end};
      f.message = "requirement sentence has no explicit subject";
      out.push_back(std::move(f));
      continue;
    }
    if (subject->last - subject->first == 1) {
      const Token& tok = ann.tokens[subject->first];
      std::string low = detail::lower_copy(tok.text);
      if (tok.pos == PosTag::PRON &&
          (low == "it" || low == "this" || low == "that" || low == "they")) {
        Finding f;
        f.block = ann.block;
        f.span = tok.span;
        f.message = "subject \"" + tok.text +
                    "\" is a pronoun; name the subject explicitly";
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

// Table 1 rule 81: clarification markers or a long parenthetical after
// the modal suggest the sentence mixes a requirement with supplemental
// information. Low-confidence by design.
inline std::vector<Finding> check_clarification_split(const Block& block,
                                                      const AnnotationSet& ann,
                                                      const CheckerParams&,
                                                      const Resources&) {
  if (block.kind != BlockKind::Requirement) return {};
  static const std::vector<std::vector<std::string>> phrases = {
      {"in", "other", "words"}, {"this", "means"}, {"to", "clarify"}};
  std::vector<Finding> out;
  for (const Sentence& sent : ann.sentences) {
    std::optional<Span> hit;
    for (std::size_t i = sent.first; i < sent.last && !hit; ++i) {
      std::string low = detail::lower_copy(ann.tokens[i].text);
      if (low == "i.e." || low == "e.g.") {
        hit = ann.tokens[i].span;
        break;
      }
      for (const auto& phrase : phrases) {
        if (i + phrase.size() > sent.last) continue;
        bool all = true;
        for (std::size_t k = 0; k < phrase.size(); ++k)
          if (detail::lower_copy(ann.tokens[i + k].text) != phrase[k]) all = false;
        if (all) {
          hit = Span{ann.tokens[i].span.start,
                     ann.tokens[i + phrase.size() - 1].span.end};
          break;
        }
      }
    }
    if (!hit) {
      // Parenthetical longer than five tokens after the modal verb.
      std::size_t modal = sent.last;
      for (std::size_t i = sent.first; i < sent.last; ++i)
        if (ann.tokens[i].pos == PosTag::AUX) {
          modal = i;
          break;
        }
      for (std::size_t p = modal + 1; p < sent.last && modal < sent.last; ++p) {
        if (ann.tokens[p].text != "(") continue;
        std::size_t q = p + 1;
        while (q < sent.last && ann.tokens[q].text != ")") ++q;
        std::size_t inner = q - p - 1;
        if (inner > 5) {
          std::size_t close = q < sent.last ? q : sent.last - 1;
          hit = Span{ann.tokens[p].span.start, ann.tokens[close].span.end};
        }
        break;
      }
    }
    if (hit) {
      Finding f;
      f.block = ann.block;
      f.span = *hit;
      f.message =
          "clarification should be a separate requirement "
          "(low-confidence candidate)";
      out.push_back(std::move(f));
    }
  }
  return out;
}

inline const std::map<std::string, Checker>& checker_registry() {
  static const std::map<std::string, Checker> registry = {
      {"forbidden_term", &check_forbidden_term},
      {"regex", &check_regex},
      {"reference_style", &check_reference_style},
      {"definition_marker", &check_definition_marker},
      {"subject_first", &check_subject_first},
      {"explicit_subject", &check_explicit_subject},
      {"clarification_split", &check_clarification_split},
  };
  return registry;
}

// Throws UnknownChecker for ids outside the registry.
inline Checker registry_lookup(const std::string& checker_id) {
  const auto& registry = checker_registry();
  auto it = registry.find(checker_id);
  if (it == registry.end())
    throw UnknownChecker("unknown checker id '" + checker_id + "'");
  return it->second;
}

}  // namespace reqlint

#endif  // REQLINT_CHECKERS_HPP
