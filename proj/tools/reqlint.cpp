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
// reqlint command line tool.
//
// Exit codes: 0 no findings, 1 findings (or validation violations),
// 2 usage, format or resource errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reqlint/reqlint.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct LintOptions {
  std::vector<std::string> documents;
  std::string catalog_path;
  std::string doc_list_path;
  std::string config_path;
  std::string resources_dir;
  std::string format = "human";
  std::string min_accuracy;
};

reqlint::Resources make_resources(const std::string& resources_dir,
                                  const std::string& doc_list_path) {
  reqlint::Resources resources;
  std::string dir = resources_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("REQLINT_RESOURCES")) dir = env;
  }
  if (!dir.empty()) {
    resources.lang = reqlint::load_language_pack(dir);
    // Optional domain-term list next to the dictionaries.
    std::ifstream probe(dir + "/domain_terms.tsv");
    if (probe) resources.domain_terms = reqlint::load_domain_terms(dir + "/domain_terms.tsv");
  }
  if (!doc_list_path.empty())
    resources.document_list = reqlint::load_document_list(doc_list_path);
  return resources;
}

int run_lint(const LintOptions& opt) {
  reqlint::Catalog catalog = reqlint::load_catalog(opt.catalog_path);
  reqlint::Resources resources = make_resources(opt.resources_dir, opt.doc_list_path);
  reqlint::DocConfig config;
  if (!opt.config_path.empty()) config = reqlint::load_doc_config(opt.config_path);

  std::vector<reqlint::Document> docs;
  std::vector<reqlint::Report> reports;
  for (const std::string& path : opt.documents) {
    docs.push_back(reqlint::parse_document_file(path, config));
    reports.push_back(reqlint::lint(docs.back(), catalog, resources, path));
  }
  reqlint::Report report = reqlint::merge_reports(reports);
  if (!opt.min_accuracy.empty()) {
    auto floor = reqlint::enum_from_string<reqlint::Accuracy>(opt.min_accuracy);
    if (!floor)
      throw reqlint::FormatError("unknown accuracy class '" + opt.min_accuracy + "'");
    report = reqlint::filter_by_accuracy(std::move(report), *floor);
  }
  if (opt.format == "json")
    std::cout << reqlint::report_to_json(report);
  else
    std::cout << reqlint::report_to_text(report, docs);
  return report.findings.empty() ? kExitClean : kExitFindings;
}

int run_stats(const std::string& catalog_path, const std::string& format) {
  reqlint::Catalog catalog = reqlint::load_catalog(catalog_path);
  if (format == "json")
    std::cout << reqlint::stats_to_json(catalog);
  else
    std::cout << reqlint::stats_to_text(catalog);
  return kExitClean;
}

int run_agreement(const std::string& file_a, const std::string& file_b,
                  const std::string& scheme_name) {
  reqlint::WeightScheme scheme = reqlint::WeightScheme::Linear;
  if (scheme_name == "quadratic") scheme = reqlint::WeightScheme::Quadratic;
  else if (scheme_name == "unweighted") scheme = reqlint::WeightScheme::Unweighted;
  else if (scheme_name != "linear")
    throw reqlint::FormatError("unknown weight scheme '" + scheme_name + "'");

  auto labels_a = reqlint::load_label_file(file_a);
  auto labels_b = reqlint::load_label_file(file_b);
  auto [a, b] = reqlint::align_labels(labels_a, labels_b);
  reqlint::AgreementResult result = reqlint::weighted_kappa(a, b, scheme);

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "kappa %.9f\nobserved_agreement %.9f\nexpected_agreement %.9f\n",
                result.kappa, result.observed_agreement,
                result.expected_agreement);
  std::cout << buf << "items " << a.size() << "\nscheme "
            << reqlint::to_string(scheme) << "\n";
  return kExitClean;
}

int run_validate(const std::string& catalog_path) {
  std::ifstream in(catalog_path, std::ios::binary);
  if (!in) throw reqlint::FormatError("cannot read catalog file: " + catalog_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  reqlint::Catalog catalog = reqlint::parse_catalog_text(text, catalog_path);
  std::vector<std::string> violations = reqlint::validate_catalog(catalog);
  if (violations.empty()) {
    std::cout << "catalog OK: " << catalog.rules.size() << " rules\n";
    return kExitClean;
  }
  for (const std::string& v : violations) std::cout << v << "\n";
  std::cout << violations.size() << " violation(s)\n";
  return kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reqlint - writing-rule linter for requirements specifications"};
  app.require_subcommand(1);

  LintOptions lint_opt;
  CLI::App* lint = app.add_subcommand("lint", "lint documents against a rule catalog");
  lint->add_option("documents", lint_opt.documents, "specification files")
      ->required()
      ->check(CLI::ExistingFile);
  lint->add_option("--catalog", lint_opt.catalog_path, "rule catalog (JSON)")
      ->required();
  lint->add_option("--doc-list", lint_opt.doc_list_path,
                   "referenced-document list (id<TAB>title)");
  lint->add_option("--config", lint_opt.config_path, "document config (key = value)");
  lint->add_option("--resources", lint_opt.resources_dir,
                   "language resource directory (default: built-in English, "
                   "or $REQLINT_RESOURCES)");
  lint->add_option("--format", lint_opt.format, "output format")
      ->check(CLI::IsMember({"human", "json"}));
  lint->add_option("--min-accuracy", lint_opt.min_accuracy,
                   "suppress findings below this accuracy class");

  std::string stats_catalog;
  std::string stats_format = "human";
  CLI::App* stats = app.add_subcommand("stats", "catalog statistics");
  stats->add_option("--catalog", stats_catalog, "rule catalog (JSON)")->required();
  stats->add_option("--format", stats_format, "output format")
      ->check(CLI::IsMember({"human", "json"}));

  std::string agreement_a;
  std::string agreement_b;
  std::string agreement_scheme = "linear";
  CLI::App* agreement =
      app.add_subcommand("agreement", "weighted Cohen's kappa between two raters");
  agreement->add_option("file_a", agreement_a, "first rater labels")->required();
  agreement->add_option("file_b", agreement_b, "second rater labels")->required();
  agreement->add_option("--scheme", agreement_scheme, "weighting scheme")
      ->check(CLI::IsMember({"linear", "quadratic", "unweighted"}));

  std::string validate_catalog_path;
  CLI::App* validate = app.add_subcommand("validate", "check catalog invariants");
  validate->add_option("--catalog", validate_catalog_path, "rule catalog (JSON)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (lint->parsed()) return run_lint(lint_opt);
    if (stats->parsed()) return run_stats(stats_catalog, stats_format);
    if (agreement->parsed())
      return run_agreement(agreement_a, agreement_b, agreement_scheme);
    if (validate->parsed()) return run_validate(validate_catalog_path);
  } catch (const reqlint::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const std::string& v : e.violations()) std::cerr << "  " << v << "\n";
    return kExitError;
  } catch (const reqlint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
