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
// Lint orchestration: annotate the document, run every bound checker on
// exactly the blocks its rule's context selects, and assemble a
// deterministic report. Rules graded NotDetectable are never run; they
// are reported as skipped together with their reason.

#ifndef REQLINT_ENGINE_HPP
#define REQLINT_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reqlint/catalog.hpp"
#include "reqlint/checkers.hpp"
#include "reqlint/docmodel.hpp"
#include "reqlint/nlp.hpp"
#include "reqlint/resources.hpp"

namespace reqlint {

struct SkippedRule {
  std::string rule_id;
  Reason reason = Reason::R1_UnclearRule;
};

struct ReportStats {
  std::size_t blocks = 0;
  std::size_t sentences = 0;
  std::size_t rules_run = 0;
};

struct ReportEntry {
  std::size_t doc_index = 0;  // into Report::documents
  Finding finding;
};

struct Report {
  std::vector<std::string> documents;
  std::uint64_t catalog_hash = 0;
  std::vector<ReportEntry> findings;  // sorted: doc, block, span, rule
  std::vector<SkippedRule> skipped;
  std::map<std::string, std::size_t> per_rule_counts;
  ReportStats stats;
};

namespace detail {

inline void sort_findings(std::vector<ReportEntry>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     if (a.doc_index != b.doc_index) return a.doc_index < b.doc_index;
                     const Finding& x = a.finding;
                     const Finding& y = b.finding;
                     if (x.block != y.block) return x.block < y.block;
                     if (x.span.start != y.span.start)
                       return x.span.start < y.span.start;
                     if (x.span.end != y.span.end) return x.span.end < y.span.end;
                     return x.rule_id < y.rule_id;
                   });
}

}  // namespace detail

// Lints one document against a validated catalog. Fails fast before any
// checker runs: UnknownChecker lists every rule with an unresolvable
// checker id, ResourceError every rule whose resources are missing.
inline Report lint(const Document& doc, const Catalog& catalog,
                   const Resources& resources,
                   const std::string& document_id = "") {
  // Resolve every binding first.
  std::vector<std::pair<const Rule*, Checker>> bound;
  std::vector<std::string> unknown;
  std::vector<std::string> unresolved;
  for (const Rule& rule : catalog.rules) {
    if (!rule.checker) continue;
    const auto& registry = checker_registry();
    auto it = registry.find(rule.checker->checker_id);
    if (it == registry.end()) {
      unknown.push_back("rule " + rule.id + ": unknown checker '" +
                        rule.checker->checker_id + "'");
      continue;
    }
    if (rule.checker->checker_id == "reference_style" &&
        resources.document_list.empty())
      unresolved.push_back("rule " + rule.id +
                           ": reference_style requires a document list");
    bound.emplace_back(&rule, it->second);
  }
  if (!unknown.empty()) {
    std::string msg = "cannot lint:";
    for (const std::string& u : unknown) msg += "\n  " + u;
    throw UnknownChecker(msg);
  }
  if (!unresolved.empty()) {
    std::string msg = "cannot lint:";
    for (const std::string& u : unresolved) msg += "\n  " + u;
    throw ResourceError(msg);
  }

  Report report;
  report.documents.push_back(document_id);
  report.catalog_hash = catalog_fingerprint(catalog);

  std::vector<AnnotationSet> annotations = annotate(doc, resources.lang);

  for (const auto& [rule, checker] : bound) {
    for (std::size_t bi : blocks_in_context(doc, rule->context)) {
      std::vector<Finding> found =
          checker(doc.blocks[bi], annotations[bi], rule->checker->params,
                  resources);
      for (Finding& f : found) {
        f.rule_id = rule->id;
        f.accuracy = rule->accuracy;
        f.block = bi;
        report.findings.push_back({0, std::move(f)});
      }
    }
  }
  detail::sort_findings(report.findings);

  for (const Rule& rule : catalog.rules)
    if (rule.accuracy == Accuracy::NotDetectable)
      report.skipped.push_back({rule.id, rule.reason.value_or(Reason::R1_UnclearRule)});

  for (const ReportEntry& e : report.findings)
    ++report.per_rule_counts[e.finding.rule_id];

  report.stats.blocks = doc.blocks.size();
  for (const AnnotationSet& ann : annotations)
    report.stats.sentences += ann.sentences.size();
  report.stats.rules_run = bound.size();
  return report;
}

// Concatenates reports produced from the same catalog; findings are
// re-sorted and counts summed. Document indices are renumbered in input
// order.
inline Report merge_reports(const std::vector<Report>& reports) {
  Report merged;
  if (reports.empty()) return merged;
  merged.catalog_hash = reports.front().catalog_hash;
  merged.skipped = reports.front().skipped;
  merged.stats.rules_run = reports.front().stats.rules_run;
  for (const Report& r : reports) {
    if (r.catalog_hash != merged.catalog_hash)
      throw CatalogMismatch("cannot merge reports from different catalogs");
    std::size_t offset = merged.documents.size();
    merged.documents.insert(merged.documents.end(), r.documents.begin(),
                            r.documents.end());
    for (ReportEntry e : r.findings) {
      e.doc_index += offset;
      merged.findings.push_back(std::move(e));
    }
    for (const auto& [id, n] : r.per_rule_counts)
      merged.per_rule_counts[id] += n;
    merged.stats.blocks += r.stats.blocks;
    merged.stats.sentences += r.stats.sentences;
  }
  detail::sort_findings(merged.findings);
  return merged;
}

// Drops findings whose accuracy class is worse than `floor`; counts are
// rebuilt to match.
inline Report filter_by_accuracy(Report report, Accuracy floor) {
  std::vector<ReportEntry> kept;
  for (ReportEntry& e : report.findings)
    if (static_cast<int>(e.finding.accuracy) <= static_cast<int>(floor))
      kept.push_back(std::move(e));
  report.findings = std::move(kept);
  report.per_rule_counts.clear();
  for (const ReportEntry& e : report.findings)
    ++report.per_rule_counts[e.finding.rule_id];
  return report;
}

}  // namespace reqlint

#endif  // REQLINT_ENGINE_HPP
