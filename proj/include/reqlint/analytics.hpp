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
// Catalog statistics (accuracy distribution, type/accuracy cross table,
// required-information frequency, reasons preventing detection, ingest
// summary) and weighted Cohen's kappa for inter-rater agreement over the
// ordinal accuracy scale.

#ifndef REQLINT_ANALYTICS_HPP
#define REQLINT_ANALYTICS_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reqlint/catalog.hpp"
#include "reqlint/resources.hpp"

namespace reqlint {

enum class DenominatorKind { AllRules, DetectableRules, NotDetectableRules };

struct DistributionEntry {
  std::string label;
  std::size_t count = 0;
  int percent = 0;
};

struct Distribution {
  std::vector<DistributionEntry> entries;
  std::size_t denominator = 0;
  DenominatorKind denominator_kind = DenominatorKind::AllRules;
};

// Integer percent, rounded half up, computed exactly in integers.
// A zero denominator yields 0.
inline int round_percent(std::size_t count, std::size_t denominator) {
  if (denominator == 0) return 0;
  return static_cast<int>((200 * count + denominator) / (2 * denominator));
}

// Counts over the five accuracy classes; denominator is the whole catalog.
inline Distribution accuracy_distribution(const Catalog& catalog) {
  Distribution dist;
  dist.denominator = catalog.rules.size();
  dist.denominator_kind = DenominatorKind::AllRules;
  for (Accuracy a : kAllAccuracies) {
    std::size_t n = 0;
    for (const Rule& r : catalog.rules)
      if (r.accuracy == a) ++n;
    dist.entries.push_back(
        {std::string(to_string(a)), n, round_percent(n, dist.denominator)});
  }
  return dist;
}

// Combined share (integer percent of all rules) of the given classes.
inline int combined_share(const Catalog& catalog,
                          std::initializer_list<Accuracy> classes) {
  std::size_t n = 0;
  for (const Rule& r : catalog.rules)
    for (Accuracy a : classes)
      if (r.accuracy == a) ++n;
  return round_percent(n, catalog.rules.size());
}

struct CrossTab {
  std::array<std::array<std::size_t, kAccuracyCount>, kRuleTypeCount> cells{};
  std::size_t total = 0;

  std::size_t cell(RuleType t, Accuracy a) const {
    return cells[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)];
  }
};

// Rule type x accuracy counts over the whole catalog.
inline CrossTab type_accuracy_crosstab(const Catalog& catalog) {
  CrossTab tab;
  for (const Rule& r : catalog.rules) {
    ++tab.cells[static_cast<std::size_t>(r.rule_type)]
               [static_cast<std::size_t>(r.accuracy)];
    ++tab.total;
  }
  return tab;
}

// How often each information kind is required, over detectable rules.
// Multiple selections per rule are allowed, so counts may sum to more
// than the denominator.
inline Distribution info_frequency(const Catalog& catalog) {
  Distribution dist;
  dist.denominator_kind = DenominatorKind::DetectableRules;
  for (const Rule& r : catalog.rules)
    if (r.detectable()) ++dist.denominator;
  for (InfoKind kind : kAllInfoKinds) {
    std::size_t n = 0;
    for (const Rule& r : catalog.rules) {
      if (!r.detectable()) continue;
      for (InfoKind k : r.required_info)
        if (k == kind) ++n;
    }
    dist.entries.push_back(
        {std::string(to_string(kind)), n, round_percent(n, dist.denominator)});
  }
  return dist;
}

// Reasons preventing automated detection, over NotDetectable rules.
// Labels are the short reason codes R1..R5. Empty when the catalog has
// no NotDetectable rules.
inline Distribution reasons_distribution(const Catalog& catalog) {
  Distribution dist;
  dist.denominator_kind = DenominatorKind::NotDetectableRules;
  for (const Rule& r : catalog.rules)
    if (!r.detectable()) ++dist.denominator;
  if (dist.denominator == 0) return dist;
  for (Reason reason : kAllReasons) {
    std::size_t n = 0;
    for (const Rule& r : catalog.rules)
      if (!r.detectable() && r.reason == reason) ++n;
    dist.entries.push_back(
        {std::string(reason_code(reason)), n, round_percent(n, dist.denominator)});
  }
  return dist;
}

inline IngestReport ingest_summary(const Catalog& catalog) {
  return catalog.ingest;
}

enum class WeightScheme { Linear, Quadratic, Unweighted };

inline std::string_view to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::Linear: return "Linear";
    case WeightScheme::Quadratic: return "Quadratic";
    case WeightScheme::Unweighted: return "Unweighted";
  }
  return "?";
}

struct AgreementResult {
  double kappa = 0.0;
  double observed_agreement = 0.0;
  double expected_agreement = 0.0;
  WeightScheme weight_scheme = WeightScheme::Linear;
};

// Weighted Cohen's kappa over the five-class ordinal accuracy scale.
// Weights: Linear 1 - |i-j|/4, Quadratic 1 - (i-j)^2/16, Unweighted
// identity. When expected agreement is 1 (all mass on one agreed label)
// kappa is 1 by convention. Throws LengthMismatch on unequal or empty
// inputs.
inline AgreementResult weighted_kappa(std::span<const Accuracy> labels_a,
                                      std::span<const Accuracy> labels_b,
                                      WeightScheme scheme = WeightScheme::Linear) {
  if (labels_a.size() != labels_b.size())
    throw LengthMismatch("label sequences differ in length (" +
                         std::to_string(labels_a.size()) + " vs " +
                         std::to_string(labels_b.size()) + ")");
  if (labels_a.empty()) throw LengthMismatch("label sequences are empty");

  constexpr std::size_t k = kAccuracyCount;
  auto weight = [scheme](std::size_t i, std::size_t j) {
    double d = static_cast<double>(i > j ? i - j : j - i);
    switch (scheme) {
      case WeightScheme::Linear: return 1.0 - d / (k - 1);
      case WeightScheme::Quadratic: return 1.0 - (d * d) / ((k - 1) * (k - 1));
      case WeightScheme::Unweighted: return i == j ? 1.0 : 0.0;
    }
    return 0.0;
  };

  std::array<std::array<std::size_t, k>, k> confusion{};
  std::array<std::size_t, k> row{};
  std::array<std::size_t, k> col{};
  const std::size_t n = labels_a.size();
  for (std::size_t t = 0; t < n; ++t) {
    auto i = static_cast<std::size_t>(labels_a[t]);
    auto j = static_cast<std::size_t>(labels_b[t]);
    ++confusion[i][j];
    ++row[i];
    ++col[j];
  }

  double po = 0.0;
  double pe = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double w = weight(i, j);
      po += w * static_cast<double>(confusion[i][j]);
      pe += w * static_cast<double>(row[i]) * static_cast<double>(col[j]) /
            static_cast<double>(n);
    }
  po /= static_cast<double>(n);
  pe /= static_cast<double>(n);

  AgreementResult result;
  result.observed_agreement = po;
  result.expected_agreement = pe;
  result.weight_scheme = scheme;
  result.kappa = (pe >= 1.0) ? 1.0 : (po - pe) / (1.0 - pe);
  return result;
}

// Rater label file: one `rule_id<TAB>Accuracy` entry per line.
inline std::vector<std::pair<std::string, Accuracy>> load_label_file(
    const std::string& path) {
  std::vector<std::pair<std::string, Accuracy>> out;
  for (auto& [id, label] : detail::parse_tsv(detail::read_file(path), path)) {
    auto acc = enum_from_string<Accuracy>(label);
    if (!acc)
      throw FormatError(path + ": unknown accuracy label '" + label +
                        "' for rule " + id);
    out.emplace_back(id, *acc);
  }
  return out;
}

// Pairs two rater files by rule id (order of the first file). Throws
// FormatError when the id sets do not match.
inline std::pair<std::vector<Accuracy>, std::vector<Accuracy>> align_labels(
    const std::vector<std::pair<std::string, Accuracy>>& a,
    const std::vector<std::pair<std::string, Accuracy>>& b) {
  std::map<std::string, Accuracy> b_by_id;
  for (const auto& [id, acc] : b) b_by_id[id] = acc;
  std::vector<Accuracy> out_a;
  std::vector<Accuracy> out_b;
  std::vector<std::string> missing;
  for (const auto& [id, acc] : a) {
    auto it = b_by_id.find(id);
    if (it == b_by_id.end()) {
      missing.push_back(id);
      continue;
    }
    out_a.push_back(acc);
    out_b.push_back(it->second);
    b_by_id.erase(it);
  }
  if (!missing.empty() || !b_by_id.empty()) {
    std::string msg = "label files do not align on rule ids;";
    if (!missing.empty()) {
      msg += " missing from second file:";
      for (const std::string& id : missing) msg += " " + id;
    }
    if (!b_by_id.empty()) {
      msg += " extra in second file:";
      for (const auto& [id, acc] : b_by_id) msg += " " + id;
    }
    throw FormatError(msg);
  }
  return {std::move(out_a), std::move(out_b)};
}

}  // namespace reqlint

#endif  // REQLINT_ANALYTICS_HPP
