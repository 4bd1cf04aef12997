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

#include <map>
#include <string>

#include <catch_amalgamated.hpp>

#include "reqlint/engine.hpp"
#include "reqlint/report_io.hpp"

using namespace reqlint;

namespace {

const std::string kFixtureDir = REQLINT_FIXTURE_DIR;

Resources sample_resources() {
  Resources res;
  res.document_list = load_document_list(kFixtureDir + "/documents.tsv");
  return res;
}

}  // namespace

TEST_CASE("empty document yields no findings, all NotDetectable rules skipped") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document("");
  Report report = lint(doc, catalog, sample_resources());
  CHECK(report.findings.empty());
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].rule_id == "54");
  CHECK(report.skipped[0].reason == Reason::R1_UnclearRule);
  CHECK(report.stats.rules_run == 6);
}

TEST_CASE("sample specification triggers each automatable rule exactly once") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document_file(kFixtureDir + "/sample_spec.txt");
  REQUIRE(doc.blocks.size() == 7);
  Report report = lint(doc, catalog, sample_resources(), "sample_spec.txt");

  REQUIRE(report.findings.size() == 6);
  std::map<std::string, std::size_t> expected = {{"160", 1}, {"56", 1}, {"24", 1},
                                                 {"78", 1},  {"50", 1}, {"81", 1}};
  CHECK(report.per_rule_counts == expected);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].rule_id == "54");

  SECTION("findings carry the rule's accuracy class") {
    std::map<std::string, Accuracy> accuracy;
    for (const ReportEntry& e : report.findings)
      accuracy[e.finding.rule_id] = e.finding.accuracy;
    CHECK(accuracy["160"] == Accuracy::Deterministic);
    CHECK(accuracy["24"] == Accuracy::Deterministic);
    CHECK(accuracy["56"] == Accuracy::HeuristicHigh);
    CHECK(accuracy["50"] == Accuracy::HeuristicHigh);
    CHECK(accuracy["78"] == Accuracy::HeuristicMedium);
    CHECK(accuracy["81"] == Accuracy::HeuristicLow);
  }
  SECTION("findings are sorted by block, span, rule") {
    for (std::size_t i = 1; i < report.findings.size(); ++i) {
      const Finding& a = report.findings[i - 1].finding;
      const Finding& b = report.findings[i].finding;
      bool ordered = a.block < b.block ||
                     (a.block == b.block && a.span.start <= b.span.start);
      CHECK(ordered);
    }
  }
  SECTION("every finding span lies inside its block") {
    for (const ReportEntry& e : report.findings) {
      REQUIRE(e.finding.block < doc.blocks.size());
      CHECK(e.finding.span.end <= doc.blocks[e.finding.block].text.size());
    }
  }
  SECTION("per-rule counts sum to the findings total") {
    std::size_t sum = 0;
    for (const auto& [id, n] : report.per_rule_counts) sum += n;
    CHECK(sum == report.findings.size());
  }
}

TEST_CASE("rules never fire outside their declared context") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  // Violation bait in a comment and a heading: Anywhere excludes comments,
  // requirement-context rules ignore informative text.
  Document doc = parse_document(
      "# About the functionality\n"
      "// The functionality is TBD, i.e. unknown.\n"
      "If unsure, it shall be clarified.\n"
      "REQ-1: The functionality shall restart.\n");
  Report report = lint(doc, catalog, sample_resources());
  std::map<ContextKind, BlockKind> allowed = {
      {ContextKind::Requirement, BlockKind::Requirement}};
  std::map<std::string, ContextKind> contexts;
  for (const Rule& r : catalog.rules) contexts[r.id] = r.context;
  for (const ReportEntry& e : report.findings) {
    ContextKind ctx = contexts.at(e.finding.rule_id);
    BlockKind kind = doc.blocks[e.finding.block].kind;
    if (ctx == ContextKind::Anywhere) {
      CHECK(kind != BlockKind::Comment);
    } else if (ctx == ContextKind::Requirement) {
      CHECK(kind == BlockKind::Requirement);
    }
  }
  // The comment bait must not add findings: rule 160 fires twice
  // (heading + requirement), never in the comment.
  CHECK(report.per_rule_counts["160"] == 2);
  for (const ReportEntry& e : report.findings)
    CHECK(doc.blocks[e.finding.block].kind != BlockKind::Comment);
}

TEST_CASE("context without matching blocks yields nothing for that rule") {
  Catalog catalog = load_catalog_text(R"({"rules":[
    {"id":"f1","status":"Approved","text":"figure captions say Figure",
     "type":"Structural","context":"Figure","scope":"WordPhrase",
     "required_info":["PureTextRegex"],"accuracy":"Deterministic",
     "checker":{"id":"regex","params":{"pattern":"caption"}}}]})");
  Document doc = parse_document("REQ-1: The caption shall say caption.");
  Report report = lint(doc, catalog, Resources{});
  CHECK(report.findings.empty());
}

TEST_CASE("lint fails fast on unknown checkers, listing every rule") {
  Catalog catalog;
  catalog.ingest = {2, 0, 2, 0, 2};
  Rule a;
  a.id = "x1";
  a.text = "t";
  a.rule_type = RuleType::Lexical;
  a.context = ContextKind::Anywhere;
  a.scope = Scope::WordPhrase;
  a.required_info = {InfoKind::LemmasDictionaries};
  a.accuracy = Accuracy::Deterministic;
  a.checker = CheckerBinding{"topic_model", {}};
  Rule b = a;
  b.id = "x2";
  b.checker = CheckerBinding{"neural_net", {}};
  catalog.rules = {a, b};
  Document doc = parse_document("text");
  try {
    lint(doc, catalog, Resources{});
    FAIL("expected UnknownChecker");
  } catch (const UnknownChecker& e) {
    std::string msg = e.what();
    CHECK(msg.find("x1") != std::string::npos);
    CHECK(msg.find("x2") != std::string::npos);
    CHECK(msg.find("topic_model") != std::string::npos);
  }
}

TEST_CASE("lint fails fast when reference_style lacks a document list") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document("REQ-1: See D-17.");
  Resources no_docs;
  CHECK_THROWS_AS(lint(doc, catalog, no_docs), ResourceError);
}

TEST_CASE("lint is deterministic") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document_file(kFixtureDir + "/sample_spec.txt");
  Report a = lint(doc, catalog, sample_resources(), "sample");
  Report b = lint(doc, catalog, sample_resources(), "sample");
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("lint is monotone in the catalog") {
  Catalog full = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document_file(kFixtureDir + "/sample_spec.txt");
  Report with_all = lint(doc, full, sample_resources());

  for (std::size_t drop = 0; drop < full.rules.size(); ++drop) {
    Catalog reduced = full;
    reduced.rules.erase(reduced.rules.begin() + static_cast<long>(drop));
    Report r = lint(doc, reduced, sample_resources());
    // Every finding of a surviving rule is unchanged.
    std::map<std::string, std::vector<Span>> before;
    std::map<std::string, std::vector<Span>> after;
    for (const ReportEntry& e : with_all.findings)
      if (e.finding.rule_id != full.rules[drop].id)
        before[e.finding.rule_id].push_back(e.finding.span);
    for (const ReportEntry& e : r.findings)
      after[e.finding.rule_id].push_back(e.finding.span);
    CHECK(before == after);
  }
}

TEST_CASE("merge_reports") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc1 = parse_document_file(kFixtureDir + "/sample_spec.txt");
  Document doc2 = parse_document("REQ-1: The functionality shall restart.");
  Report r1 = lint(doc1, catalog, sample_resources(), "a.txt");
  Report r2 = lint(doc2, catalog, sample_resources(), "b.txt");

  SECTION("merge of one report is the identity") {
    Report merged = merge_reports({r1});
    CHECK(report_to_json(merged) == report_to_json(r1));
  }
  SECTION("counts are additive") {
    Report merged = merge_reports({r1, r2});
    CHECK(merged.findings.size() == r1.findings.size() + r2.findings.size());
    CHECK(merged.per_rule_counts["160"] ==
          r1.per_rule_counts["160"] + r2.per_rule_counts["160"]);
    CHECK(merged.stats.blocks == r1.stats.blocks + r2.stats.blocks);
    CHECK(merged.documents.size() == 2);
    // Findings from the second document follow the first.
    for (std::size_t i = 1; i < merged.findings.size(); ++i)
      CHECK(merged.findings[i - 1].doc_index <= merged.findings[i].doc_index);
  }
  SECTION("catalog mismatch is refused") {
    Report other = r2;
    other.catalog_hash ^= 0xdeadbeef;
    CHECK_THROWS_AS(merge_reports({r1, other}), CatalogMismatch);
  }
}

TEST_CASE("accuracy filter drops low classes and rebuilds counts") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document_file(kFixtureDir + "/sample_spec.txt");
  Report report = lint(doc, catalog, sample_resources());
  Report filtered = filter_by_accuracy(report, Accuracy::HeuristicMedium);
  CHECK(filtered.findings.size() == 5);  // drops the HeuristicLow finding
  CHECK(filtered.per_rule_counts.count("81") == 0);
  std::size_t sum = 0;
  for (const auto& [id, n] : filtered.per_rule_counts) sum += n;
  CHECK(sum == filtered.findings.size());
}

TEST_CASE("json report round-trips byte-identically") {
  Catalog catalog = load_catalog(kFixtureDir + "/table1_catalog.json");
  Document doc = parse_document_file(kFixtureDir + "/sample_spec.txt");
  Report report = lint(doc, catalog, sample_resources(), "sample_spec.txt");
  std::string json = report_to_json(report);
  auto parsed = nlohmann::ordered_json::parse(json);
  CHECK(parsed.dump(2) + "\n" == json);
}
