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
// Deterministic report and statistics rendering. The JSON shape is a
// single object {findings[], skipped[], stats{}} with a fixed key order,
// so identical inputs serialize byte-identically; the human format has
// no colors or timestamps for the same reason.

#ifndef REQLINT_REPORT_IO_HPP
#define REQLINT_REPORT_IO_HPP

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reqlint/analytics.hpp"
#include "reqlint/engine.hpp"

namespace reqlint {

namespace detail {

// 1-based line and column of a byte offset in `text`.
inline std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                                    std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline std::string report_to_json(const Report& report) {
  nlohmann::ordered_json root;
  root["findings"] = nlohmann::ordered_json::array();
  for (const ReportEntry& e : report.findings) {
    nlohmann::ordered_json f;
    f["document"] = report.documents[e.doc_index];
    f["block"] = e.finding.block;
    f["rule"] = e.finding.rule_id;
    f["accuracy"] = to_string(e.finding.accuracy);
    f["span"] = {{"start", e.finding.span.start}, {"end", e.finding.span.end}};
    f["message"] = e.finding.message;
    if (e.finding.suggestion) f["suggestion"] = *e.finding.suggestion;
    root["findings"].push_back(std::move(f));
  }
  root["skipped"] = nlohmann::ordered_json::array();
  for (const SkippedRule& s : report.skipped)
    root["skipped"].push_back({{"rule", s.rule_id}, {"reason", to_string(s.reason)}});
  nlohmann::ordered_json stats;
  stats["documents"] = report.documents.size();
  stats["blocks"] = report.stats.blocks;
  stats["sentences"] = report.stats.sentences;
  stats["rules_run"] = report.stats.rules_run;
  stats["findings"] = report.findings.size();
  root["stats"] = std::move(stats);
  return root.dump(2) + "\n";
}

// Human-readable rendering; `docs` must align with report.documents.
inline std::string report_to_text(const Report& report,
                                  std::span<const Document> docs) {
  std::ostringstream out;
  for (const ReportEntry& e : report.findings) {
    const Document& doc = docs[e.doc_index];
    const Block& block = doc.blocks[e.finding.block];
    auto [line, col] =
        detail::line_col(doc.source, block.span.start + e.finding.span.start);
    out << report.documents[e.doc_index] << ":" << line << ":" << col
        << ": [rule " << e.finding.rule_id << ", "
        << to_string(e.finding.accuracy) << "] " << e.finding.message << "\n";
    if (e.finding.suggestion)
      out << "    suggestion: " << *e.finding.suggestion << "\n";
  }
  for (const SkippedRule& s : report.skipped)
    out << "skipped: rule " << s.rule_id << " (" << to_string(s.reason) << ")\n";
  out << report.findings.size() << " finding(s) in " << report.stats.blocks
      << " block(s), " << report.stats.sentences << " sentence(s); "
      << report.skipped.size() << " rule(s) not automatically checkable\n";
  return out.str();
}

namespace detail {

inline nlohmann::ordered_json distribution_json(const Distribution& dist) {
  nlohmann::ordered_json d;
  d["entries"] = nlohmann::ordered_json::array();
  for (const DistributionEntry& e : dist.entries)
    d["entries"].push_back(
        {{"label", e.label}, {"count", e.count}, {"percent", e.percent}});
  d["denominator"] = dist.denominator;
  return d;
}

}  // namespace detail

inline std::string stats_to_json(const Catalog& catalog) {
  nlohmann::ordered_json root;
  root["accuracy"] = detail::distribution_json(accuracy_distribution(catalog));
  root["combined"] = {
      {"det+high", combined_share(catalog, {Accuracy::Deterministic,
                                            Accuracy::HeuristicHigh})},
      {"det+high+medium",
       combined_share(catalog, {Accuracy::Deterministic, Accuracy::HeuristicHigh,
                                Accuracy::HeuristicMedium})}};
  CrossTab tab = type_accuracy_crosstab(catalog);
  nlohmann::ordered_json cross;
  for (RuleType t : kAllRuleTypes) {
    nlohmann::ordered_json row;
    for (Accuracy a : kAllAccuracies)
      row[std::string(to_string(a))] = tab.cell(t, a);
    cross[std::string(to_string(t))] = std::move(row);
  }
  root["type_accuracy"] = std::move(cross);
  root["required_info"] = detail::distribution_json(info_frequency(catalog));
  root["reasons"] = detail::distribution_json(reasons_distribution(catalog));
  const IngestReport& ing = catalog.ingest;
  root["ingest"] = {{"raw", ing.raw_count},
                    {"unapproved_filtered", ing.unapproved_filtered},
                    {"approved", ing.approved_count},
                    {"split_added", ing.split_added},
                    {"classified", ing.classified_count}};
  return root.dump(2) + "\n";
}

inline std::string stats_to_text(const Catalog& catalog) {
  std::ostringstream out;
  Distribution acc = accuracy_distribution(catalog);
  out << "accuracy distribution (" << acc.denominator << " rules):\n";
  for (const DistributionEntry& e : acc.entries)
    out << "  " << e.label << " " << e.count << " " << e.percent << "%\n";
  out << "combined(det+high) "
      << combined_share(catalog,
                        {Accuracy::Deterministic, Accuracy::HeuristicHigh})
      << "%\n";
  out << "combined(det+high+medium) "
      << combined_share(catalog, {Accuracy::Deterministic, Accuracy::HeuristicHigh,
                                  Accuracy::HeuristicMedium})
      << "%\n";

  CrossTab tab = type_accuracy_crosstab(catalog);
  out << "type x accuracy (" << tab.total << " rules):\n";
  for (RuleType t : kAllRuleTypes) {
    out << "  " << to_string(t);
    for (Accuracy a : kAllAccuracies)
      out << " " << to_string(a) << "=" << tab.cell(t, a);
    out << "\n";
  }

  Distribution info = info_frequency(catalog);
  out << "required information (" << info.denominator
      << " detectable rules, multiple selections):\n";
  for (const DistributionEntry& e : info.entries)
    out << "  " << e.label << " " << e.count << " " << e.percent << "%\n";

  Distribution reasons = reasons_distribution(catalog);
  out << "reasons preventing detection (" << reasons.denominator
      << " rules):\n";
  for (const DistributionEntry& e : reasons.entries)
    out << "  " << e.label << " " << e.count << " " << e.percent << "%\n";

  const IngestReport& ing = catalog.ingest;
  out << "ingest: raw " << ing.raw_count << ", unapproved "
      << ing.unapproved_filtered << ", approved " << ing.approved_count
      << ", split " << ing.split_added << ", classified "
      << ing.classified_count << "\n";
  return out.str();
}

}  // namespace reqlint

#endif  // REQLINT_REPORT_IO_HPP
