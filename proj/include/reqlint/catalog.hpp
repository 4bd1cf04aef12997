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
// The classified rule catalog: data model, JSON ingest with status
// filtering and compound-rule expansion, invariant validation, queries.
//
// Catalog file format (UTF-8 JSON):
//   { "rules": [ { "id": "160", "status": "Approved", "text": "...",
//                  "type": "Lexical", "context": "Anywhere",
//                  "scope": "WordPhrase",
//                  "required_info": ["LemmasDictionaries"],
//                  "accuracy": "Deterministic",
//                  "checker": {"id": "forbidden_term",
//                              "params": {"functionality": "function"}} },
//                ... ] }
// A compound rule carries "subrules": [ ... ] instead of its own
// classification; each sub-rule is a fully classified rule object and
// inherits parent_id from the container. Rules with status "Unapproved"
// are dropped during ingest. "reason" is required exactly when accuracy
// is "NotDetectable".

#ifndef REQLINT_CATALOG_HPP
#define REQLINT_CATALOG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "reqlint/errors.hpp"
#include "reqlint/taxonomy.hpp"

namespace reqlint {

using ParamValue = std::variant<std::string, std::vector<std::string>>;
using CheckerParams = std::map<std::string, ParamValue>;

struct CheckerBinding {
  std::string checker_id;
  CheckerParams params;
};

struct Rule {
  std::string id;
  std::optional<std::string> parent_id;  // set for split sub-rules
  RuleStatus status = RuleStatus::Approved;
  std::string text;
  RuleType rule_type = RuleType::Unclassified;
  ContextKind context = ContextKind::Unclassified;
  Scope scope = Scope::Unclassified;
  std::vector<InfoKind> required_info;
  Accuracy accuracy = Accuracy::NotDetectable;
  std::optional<Reason> reason;
  std::optional<CheckerBinding> checker;

  bool detectable() const { return accuracy != Accuracy::NotDetectable; }
};

struct IngestReport {
  std::size_t raw_count = 0;
  std::size_t unapproved_filtered = 0;
  std::size_t approved_count = 0;
  std::size_t split_added = 0;
  std::size_t classified_count = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct Catalog {
  std::vector<Rule> rules;
  IngestReport ingest;
};

// Messages for every violated rule invariant; empty when the rule is
// well formed.
inline std::vector<std::string> validate_rule(const Rule& rule) {
  std::vector<std::string> out;
  const std::string who = "rule " + rule.id;
  if (rule.accuracy == Accuracy::NotDetectable) {
    if (!rule.reason)
      out.push_back(who + ": NotDetectable requires a reason");
    if (rule.checker)
      out.push_back(who + ": NotDetectable rule must not bind a checker");
    if (!rule.required_info.empty())
      out.push_back(who + ": NotDetectable rule must not list required information");
  } else {
    if (rule.reason)
      out.push_back(who + ": reason is set but accuracy is not NotDetectable");
    if (rule.required_info.empty())
      out.push_back(who + ": detectable rule must list required information");
    if (rule.rule_type == RuleType::Unclassified)
      out.push_back(who + ": Unclassified type allowed only for NotDetectable rules");
    if (rule.context == ContextKind::Unclassified)
      out.push_back(who + ": Unclassified context allowed only for NotDetectable rules");
    if (rule.scope == Scope::Unclassified)
      out.push_back(who + ": Unclassified scope allowed only for NotDetectable rules");
  }
  return out;
}

inline std::vector<std::string> validate_catalog(const Catalog& catalog) {
  std::vector<std::string> out;
  std::map<std::string, std::size_t> seen;
  for (const Rule& r : catalog.rules) {
    for (std::string& v : validate_rule(r)) out.push_back(std::move(v));
    if (++seen[r.id] == 2) out.push_back("duplicate rule id " + r.id);
  }
  if (catalog.ingest.classified_count !=
      catalog.ingest.approved_count + catalog.ingest.split_added)
    out.push_back("ingest arithmetic: classified != approved + split");
  if (catalog.ingest.approved_count !=
      catalog.ingest.raw_count - catalog.ingest.unapproved_filtered)
    out.push_back("ingest arithmetic: approved != raw - unapproved");
  return out;
}

namespace detail {

inline std::size_t byte_to_line(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline const nlohmann::json& require_field(const nlohmann::json& obj,
                                           const char* key,
                                           const std::string& who) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw FormatError(who + ": missing field '" + key + "'");
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& who) {
  const nlohmann::json& v = require_field(obj, key, who);
  if (!v.is_string())
    throw FormatError(who + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

inline CheckerParams parse_params(const nlohmann::json& obj,
                                  const std::string& who) {
  CheckerParams params;
  if (!obj.is_object())
    throw FormatError(who + ": checker params must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it.value().is_string()) {
      params[it.key()] = it.value().get<std::string>();
    } else if (it.value().is_array()) {
      std::vector<std::string> list;
      for (const auto& e : it.value()) {
        if (!e.is_string())
          throw FormatError(who + ": param '" + it.key() +
                            "' must contain only strings");
        list.push_back(e.get<std::string>());
      }
      params[it.key()] = std::move(list);
    } else {
      throw FormatError(who + ": param '" + it.key() +
                        "' must be a string or a string list");
    }
  }
  return params;
}

inline Rule parse_classified_rule(const nlohmann::json& obj,
                                  const std::string& origin) {
  Rule rule;
  rule.id = require_string(obj, "id", origin + ": rule");
  const std::string who = origin + ": rule " + rule.id;
  rule.status = RuleStatus::Approved;
  rule.text = require_string(obj, "text", who);
  rule.rule_type = parse_enum<RuleType>(require_string(obj, "type", who),
                                        who + ".type");
  rule.context = parse_enum<ContextKind>(require_string(obj, "context", who),
                                         who + ".context");
  rule.scope = parse_enum<Scope>(require_string(obj, "scope", who), who + ".scope");
  const nlohmann::json& info = require_field(obj, "required_info", who);
  if (!info.is_array())
    throw FormatError(who + ": field 'required_info' must be an array");
  for (const auto& e : info) {
    if (!e.is_string())
      throw FormatError(who + ": required_info entries must be strings");
    InfoKind kind =
        parse_enum<InfoKind>(e.get<std::string>(), who + ".required_info");
    bool dup = false;
    for (InfoKind k : rule.required_info) dup = dup || (k == kind);
    if (!dup) rule.required_info.push_back(kind);
  }
  rule.accuracy = parse_enum<Accuracy>(require_string(obj, "accuracy", who),
                                       who + ".accuracy");
  if (obj.contains("reason"))
    rule.reason =
        parse_enum<Reason>(require_string(obj, "reason", who), who + ".reason");
  if (obj.contains("checker")) {
    const nlohmann::json& chk = obj.at("checker");
    if (!chk.is_object())
      throw FormatError(who + ": field 'checker' must be an object");
    CheckerBinding binding;
    binding.checker_id = require_string(chk, "id", who + ".checker");
    if (chk.contains("params"))
      binding.params = parse_params(chk.at("params"), who);
    rule.checker = std::move(binding);
  }
  return rule;
}

}  // namespace detail

// Parses a catalog without enforcing rule invariants (cmd_validate wants
// to report them instead of failing). Throws FormatError on malformed
// input, with a line number for JSON syntax errors.
inline Catalog parse_catalog_text(const std::string& text,
                                  const std::string& origin = "<catalog>") {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(origin + ":" +
                      std::to_string(detail::byte_to_line(text, e.byte)) +
                      ": " + e.what());
  }
  if (!root.is_object() || !root.contains("rules") || !root["rules"].is_array())
    throw FormatError(origin + ": expected a top-level object with a 'rules' array");

  Catalog catalog;
  const nlohmann::json& rules = root["rules"];
  catalog.ingest.raw_count = rules.size();

  for (std::size_t i = 0; i < rules.size(); ++i) {
    const nlohmann::json& obj = rules[i];
    const std::string who = origin + ": rules[" + std::to_string(i) + "]";
    if (!obj.is_object()) throw FormatError(who + ": expected an object");
    std::string id = detail::require_string(obj, "id", who);
    RuleStatus status = parse_enum<RuleStatus>(
        detail::require_string(obj, "status", who + " (" + id + ")"),
        who + ".status");
    if (status == RuleStatus::Unapproved) {
      ++catalog.ingest.unapproved_filtered;
      continue;
    }
    if (obj.contains("subrules")) {
      const nlohmann::json& subs = obj.at("subrules");
      if (!subs.is_array() || subs.empty())
        throw FormatError(who + ": 'subrules' must be a non-empty array");
      for (const auto& sub : subs) {
        if (sub.contains("subrules"))
          throw FormatError(who + ": sub-rules cannot be nested");
        Rule rule = detail::parse_classified_rule(sub, origin);
        rule.parent_id = id;
        catalog.rules.push_back(std::move(rule));
      }
      catalog.ingest.split_added += subs.size() - 1;
    } else {
      catalog.rules.push_back(detail::parse_classified_rule(obj, origin));
    }
  }
  catalog.ingest.approved_count =
      catalog.ingest.raw_count - catalog.ingest.unapproved_filtered;
  catalog.ingest.classified_count = catalog.rules.size();
  return catalog;
}

// Parse + validate; the loaded catalog contains only approved rules and
// satisfies every rule invariant.
inline Catalog load_catalog_text(const std::string& text,
                                 const std::string& origin = "<catalog>") {
  Catalog catalog = parse_catalog_text(text, origin);
  std::vector<std::string> violations = validate_catalog(catalog);
  if (!violations.empty())
    throw ValidationError(origin + ": catalog validation failed (" +
                              std::to_string(violations.size()) + " violations)",
                          std::move(violations));
  return catalog;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog_text(buf.str(), path);
}

// Order-preserving filter over the classification fields.
template <typename Pred>
std::vector<const Rule*> query(const Catalog& catalog, Pred&& pred) {
  std::vector<const Rule*> out;
  for (const Rule& r : catalog.rules)
    if (pred(r)) out.push_back(&r);
  return out;
}

// Stable content hash used to refuse merging reports across catalogs.
inline std::uint64_t catalog_fingerprint(const Catalog& catalog) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const Rule& r : catalog.rules) {
    mix(r.id);
    mix(r.parent_id.value_or(""));
    mix(r.text);
    mix(to_string(r.rule_type));
    mix(to_string(r.context));
    mix(to_string(r.scope));
    for (InfoKind k : r.required_info) mix(to_string(k));
    mix(to_string(r.accuracy));
    if (r.reason) mix(to_string(*r.reason));
    if (r.checker) {
      mix(r.checker->checker_id);
      for (const auto& [k, v] : r.checker->params) {
        mix(k);
        if (const auto* s = std::get_if<std::string>(&v)) {
          mix(*s);
        } else {
          for (const std::string& e : std::get<std::vector<std::string>>(v))
            mix(e);
        }
      }
    }
  }
  return h;
}

}  // namespace reqlint

#endif  // REQLINT_CATALOG_HPP
