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
// Classification dimensions for requirements writing rules: what kind of
// constraint a rule expresses, where it applies, how much text a check has
// to look at, which annotations a check needs, and how accurately a
// machine can detect violations.

#ifndef REQLINT_TAXONOMY_HPP
#define REQLINT_TAXONOMY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "reqlint/errors.hpp"

namespace reqlint {

enum class RuleType { Lexical, Grammatical, Structural, Semantic, Unclassified };

enum class ContextKind {
  Anywhere,
  Requirement,
  Heading,
  Figure,
  Table,
  Reference,
  Enumeration,
  Comment,
  Unclassified,
};

enum class Scope { WordPhrase, Sentence, Section, Document, Global, Unclassified };

// Annotation layers a check may need, one per information kind.
enum class InfoKind {
  LemmasDictionaries,
  PureTextRegex,
  Formatting,
  DomainModels,
  PosTags,
  ListsOfX,
  Morphology,
  ParseTrees,
  WordStems,
  TokensSentences,
  NamedEntities,
};

// Ordinal scale from perfectly checkable down to not checkable at all.
// The numeric order is load-bearing: weighted agreement uses it.
enum class Accuracy {
  Deterministic = 0,
  HeuristicHigh = 1,
  HeuristicMedium = 2,
  HeuristicLow = 3,
  NotDetectable = 4,
};

// Why a rule resists automated detection.
enum class Reason {
  R1_UnclearRule,
  R2_DeepSemantics,
  R3_DomainKnowledge,
  R4_SystemScope,
  R5_ProcessStatus,
};

enum class RuleStatus { Approved, Unapproved };

inline constexpr std::size_t kRuleTypeCount = 5;
inline constexpr std::size_t kAccuracyCount = 5;
inline constexpr std::size_t kInfoKindCount = 11;
inline constexpr std::size_t kReasonCount = 5;

inline constexpr std::array<RuleType, kRuleTypeCount> kAllRuleTypes = {
    RuleType::Lexical, RuleType::Grammatical, RuleType::Structural,
    RuleType::Semantic, RuleType::Unclassified};

inline constexpr std::array<Accuracy, kAccuracyCount> kAllAccuracies = {
    Accuracy::Deterministic, Accuracy::HeuristicHigh, Accuracy::HeuristicMedium,
    Accuracy::HeuristicLow, Accuracy::NotDetectable};

inline constexpr std::array<InfoKind, kInfoKindCount> kAllInfoKinds = {
    InfoKind::LemmasDictionaries, InfoKind::PureTextRegex, InfoKind::Formatting,
    InfoKind::DomainModels,       InfoKind::PosTags,       InfoKind::ListsOfX,
    InfoKind::Morphology,         InfoKind::ParseTrees,    InfoKind::WordStems,
    InfoKind::TokensSentences,    InfoKind::NamedEntities};

inline constexpr std::array<Reason, kReasonCount> kAllReasons = {
    Reason::R1_UnclearRule, Reason::R2_DeepSemantics, Reason::R3_DomainKnowledge,
    Reason::R4_SystemScope, Reason::R5_ProcessStatus};

// Canonical names. These are the exact strings used in catalog files.
inline std::string_view to_string(RuleType v) {
  switch (v) {
    case RuleType::Lexical: return "Lexical";
    case RuleType::Grammatical: return "Grammatical";
    case RuleType::Structural: return "Structural";
    case RuleType::Semantic: return "Semantic";
    case RuleType::Unclassified: return "Unclassified";
  }
  return "?";
}

inline std::string_view to_string(ContextKind v) {
  switch (v) {
    case ContextKind::Anywhere: return "Anywhere";
    case ContextKind::Requirement: return "Requirement";
    case ContextKind::Heading: return "Heading";
    case ContextKind::Figure: return "Figure";
    case ContextKind::Table: return "Table";
    case ContextKind::Reference: return "Reference";
    case ContextKind::Enumeration: return "Enumeration";
    case ContextKind::Comment: return "Comment";
    case ContextKind::Unclassified: return "Unclassified";
  }
  return "?";
}

inline std::string_view to_string(Scope v) {
  switch (v) {
    case Scope::WordPhrase: return "WordPhrase";
    case Scope::Sentence: return "Sentence";
    case Scope::Section: return "Section";
    case Scope::Document: return "Document";
    case Scope::Global: return "Global";
    case Scope::Unclassified: return "Unclassified";
  }
  return "?";
}

inline std::string_view to_string(InfoKind v) {
  switch (v) {
    case InfoKind::LemmasDictionaries: return "LemmasDictionaries";
    case InfoKind::PureTextRegex: return "PureTextRegex";
    case InfoKind::Formatting: return "Formatting";
    case InfoKind::DomainModels: return "DomainModels";
    case InfoKind::PosTags: return "PosTags";
    case InfoKind::ListsOfX: return "ListsOfX";
    case InfoKind::Morphology: return "Morphology";
    case InfoKind::ParseTrees: return "ParseTrees";
    case InfoKind::WordStems: return "WordStems";
    case InfoKind::TokensSentences: return "TokensSentences";
    case InfoKind::NamedEntities: return "NamedEntities";
  }
  return "?";
}

inline std::string_view to_string(Accuracy v) {
  switch (v) {
    case Accuracy::Deterministic: return "Deterministic";
    case Accuracy::HeuristicHigh: return "HeuristicHigh";
    case Accuracy::HeuristicMedium: return "HeuristicMedium";
    case Accuracy::HeuristicLow: return "HeuristicLow";
    case Accuracy::NotDetectable: return "NotDetectable";
  }
  return "?";
}

inline std::string_view to_string(Reason v) {
  switch (v) {
    case Reason::R1_UnclearRule: return "R1_UnclearRule";
    case Reason::R2_DeepSemantics: return "R2_DeepSemantics";
    case Reason::R3_DomainKnowledge: return "R3_DomainKnowledge";
    case Reason::R4_SystemScope: return "R4_SystemScope";
    case Reason::R5_ProcessStatus: return "R5_ProcessStatus";
  }
  return "?";
}

inline std::string_view to_string(RuleStatus v) {
  return v == RuleStatus::Approved ? "Approved" : "Unapproved";
}

// Short code used in reports and statistics tables ("R1" .. "R5").
inline std::string_view reason_code(Reason v) {
  switch (v) {
    case Reason::R1_UnclearRule: return "R1";
    case Reason::R2_DeepSemantics: return "R2";
    case Reason::R3_DomainKnowledge: return "R3";
    case Reason::R4_SystemScope: return "R4";
    case Reason::R5_ProcessStatus: return "R5";
  }
  return "?";
}

template <typename E>
std::optional<E> enum_from_string(std::string_view) = delete;

template <>
inline std::optional<RuleType> enum_from_string<RuleType>(std::string_view s) {
  for (RuleType v : kAllRuleTypes)
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<ContextKind> enum_from_string<ContextKind>(std::string_view s) {
  for (ContextKind v :
       {ContextKind::Anywhere, ContextKind::Requirement, ContextKind::Heading,
        ContextKind::Figure, ContextKind::Table, ContextKind::Reference,
        ContextKind::Enumeration, ContextKind::Comment, ContextKind::Unclassified})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<Scope> enum_from_string<Scope>(std::string_view s) {
  for (Scope v : {Scope::WordPhrase, Scope::Sentence, Scope::Section,
                  Scope::Document, Scope::Global, Scope::Unclassified})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<InfoKind> enum_from_string<InfoKind>(std::string_view s) {
  for (InfoKind v : kAllInfoKinds)
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<Accuracy> enum_from_string<Accuracy>(std::string_view s) {
  for (Accuracy v : kAllAccuracies)
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<Reason> enum_from_string<Reason>(std::string_view s) {
  for (Reason v : kAllReasons)
    if (s == to_string(v)) return v;
  return std::nullopt;
}

template <>
inline std::optional<RuleStatus> enum_from_string<RuleStatus>(std::string_view s) {
  if (s == "Approved") return RuleStatus::Approved;
  if (s == "Unapproved") return RuleStatus::Unapproved;
  return std::nullopt;
}

// Parses a catalog enum value or throws FormatError naming the field.
template <typename E>
E parse_enum(std::string_view s, std::string_view field) {
  if (auto v = enum_from_string<E>(s)) return *v;
  throw FormatError("unknown value '" + std::string(s) + "' for " +
                    std::string(field));
}

}  // namespace reqlint

#endif  // REQLINT_TAXONOMY_HPP
