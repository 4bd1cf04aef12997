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

#include <cmath>
#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "reqlint/analytics.hpp"

using namespace reqlint;

namespace {

const std::string kFixtureDir = REQLINT_FIXTURE_DIR;

Catalog sta() { return load_catalog(kFixtureDir + "/sta_catalog.json"); }

Catalog one_rule(Accuracy acc) {
  Catalog catalog;
  Rule r;
  r.id = "1";
  r.text = "t";
  r.accuracy = acc;
  if (acc == Accuracy::NotDetectable) {
    r.reason = Reason::R1_UnclearRule;
  } else {
    r.rule_type = RuleType::Lexical;
    r.context = ContextKind::Anywhere;
    r.scope = Scope::WordPhrase;
    r.required_info = {InfoKind::LemmasDictionaries};
  }
  catalog.rules.push_back(r);
  catalog.ingest = {1, 0, 1, 0, 1};
  return catalog;
}

// Classic Cohen's kappa on a 2x2 confusion matrix, written out directly.
double binary_kappa_oracle(const std::vector<int>& a, const std::vector<int>& b) {
  double n = static_cast<double>(a.size());
  double cell[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) cell[a[i]][b[i]] += 1.0;
  double po = (cell[0][0] + cell[1][1]) / n;
  double row0 = cell[0][0] + cell[0][1];
  double row1 = cell[1][0] + cell[1][1];
  double col0 = cell[0][0] + cell[1][0];
  double col1 = cell[0][1] + cell[1][1];
  double pe = (row0 * col0 + row1 * col1) / (n * n);
  if (pe >= 1.0) return 1.0;
  return (po - pe) / (1.0 - pe);
}

}  // namespace

TEST_CASE("accuracy distribution reproduces the published shares") {
  Distribution dist = accuracy_distribution(sta());
  REQUIRE(dist.entries.size() == 5);
  CHECK(dist.denominator == 166);
  const std::size_t counts[] = {68, 20, 18, 18, 42};
  const int percents[] = {41, 12, 11, 11, 25};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(dist.entries[i].count == counts[i]);
    CHECK(dist.entries[i].percent == percents[i]);
  }
}

TEST_CASE("accuracy distribution degenerate cases") {
  SECTION("empty catalog: zero counts, zero percents") {
    Distribution dist = accuracy_distribution(Catalog{});
    CHECK(dist.denominator == 0);
    for (const auto& e : dist.entries) {
      CHECK(e.count == 0);
      CHECK(e.percent == 0);
    }
  }
  SECTION("single deterministic rule") {
    Distribution dist = accuracy_distribution(one_rule(Accuracy::Deterministic));
    CHECK(dist.entries[0].count == 1);
    CHECK(dist.entries[0].percent == 100);
  }
}

TEST_CASE("combined shares") {
  Catalog catalog = sta();
  CHECK(combined_share(catalog, {Accuracy::Deterministic,
                                 Accuracy::HeuristicHigh}) == 53);
  CHECK(combined_share(catalog, {Accuracy::Deterministic, Accuracy::HeuristicHigh,
                                 Accuracy::HeuristicMedium}) == 64);
  CHECK(combined_share(catalog,
                       {Accuracy::Deterministic, Accuracy::HeuristicHigh,
                        Accuracy::HeuristicMedium, Accuracy::HeuristicLow,
                        Accuracy::NotDetectable}) == 100);
}

TEST_CASE("type/accuracy cross table on the example catalog") {
  Catalog table1 = load_catalog(kFixtureDir + "/table1_catalog.json");
  CrossTab tab = type_accuracy_crosstab(table1);
  CHECK(tab.total == 7);
  CHECK(tab.cell(RuleType::Lexical, Accuracy::Deterministic) == 1);
  CHECK(tab.cell(RuleType::Grammatical, Accuracy::HeuristicHigh) == 1);
  CHECK(tab.cell(RuleType::Structural, Accuracy::HeuristicMedium) == 1);
  CHECK(tab.cell(RuleType::Semantic, Accuracy::HeuristicLow) == 1);
  CHECK(tab.cell(RuleType::Structural, Accuracy::Deterministic) == 1);
  CHECK(tab.cell(RuleType::Semantic, Accuracy::HeuristicHigh) == 1);
  CHECK(tab.cell(RuleType::Unclassified, Accuracy::NotDetectable) == 1);
  SECTION("cells sum to the classified rule count") {
    std::size_t sum = 0;
    for (RuleType t : kAllRuleTypes)
      for (Accuracy a : kAllAccuracies) sum += tab.cell(t, a);
    CHECK(sum == table1.rules.size());
  }
  SECTION("empty catalog is all zeros") {
    CrossTab empty = type_accuracy_crosstab(Catalog{});
    CHECK(empty.total == 0);
  }
  SECTION("single-type catalog has one nonzero row") {
    CrossTab one = type_accuracy_crosstab(one_rule(Accuracy::Deterministic));
    CHECK(one.cell(RuleType::Lexical, Accuracy::Deterministic) == 1);
    CHECK(one.total == 1);
  }
}

TEST_CASE("information frequency reproduces the published table") {
  Distribution dist = info_frequency(sta());
  CHECK(dist.denominator == 124);
  REQUIRE(dist.entries.size() == 11);
  const std::size_t counts[] = {58, 43, 27, 11, 11, 8, 5, 3, 3, 3, 1};
  const int percents[] = {47, 35, 22, 9, 9, 6, 4, 2, 2, 2, 1};
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(dist.entries[i].count == counts[i]);
    CHECK(dist.entries[i].percent == percents[i]);
  }
  SECTION("multiple selections may exceed the denominator") {
    std::size_t sum = 0;
    for (const auto& e : dist.entries) sum += e.count;
    CHECK(sum == 173);
    CHECK(sum > dist.denominator);
  }
}

TEST_CASE("information frequency degenerate cases") {
  SECTION("one detectable rule needing two kinds") {
    Catalog catalog = one_rule(Accuracy::Deterministic);
    catalog.rules[0].required_info = {InfoKind::LemmasDictionaries,
                                      InfoKind::PosTags};
    Distribution dist = info_frequency(catalog);
    CHECK(dist.denominator == 1);
    for (const auto& e : dist.entries) {
      if (e.label == "LemmasDictionaries" || e.label == "PosTags") {
        CHECK(e.count == 1);
        CHECK(e.percent == 100);
      } else {
        CHECK(e.count == 0);
      }
    }
  }
  SECTION("only NotDetectable rules: all zero, denominator zero") {
    Distribution dist = info_frequency(one_rule(Accuracy::NotDetectable));
    CHECK(dist.denominator == 0);
    for (const auto& e : dist.entries) {
      CHECK(e.count == 0);
      CHECK(e.percent == 0);
    }
  }
}

TEST_CASE("reasons distribution reproduces the published table") {
  Distribution dist = reasons_distribution(sta());
  CHECK(dist.denominator == 42);
  REQUIRE(dist.entries.size() == 5);
  const std::size_t counts[] = {34, 1, 5, 1, 1};
  const int percents[] = {81, 2, 12, 2, 2};
  const char* labels[] = {"R1", "R2", "R3", "R4", "R5"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(dist.entries[i].label == labels[i]);
    CHECK(dist.entries[i].count == counts[i]);
    CHECK(dist.entries[i].percent == percents[i]);
  }
  SECTION("exclusive distribution sums to its denominator") {
    std::size_t sum = 0;
    for (const auto& e : dist.entries) sum += e.count;
    CHECK(sum == dist.denominator);
  }
}

TEST_CASE("reasons distribution degenerate cases") {
  SECTION("no NotDetectable rules: empty distribution") {
    Distribution dist = reasons_distribution(one_rule(Accuracy::Deterministic));
    CHECK(dist.entries.empty());
    CHECK(dist.denominator == 0);
  }
  SECTION("two rules, both R1") {
    Catalog catalog = one_rule(Accuracy::NotDetectable);
    Rule second = catalog.rules[0];
    second.id = "2";
    catalog.rules.push_back(second);
    Distribution dist = reasons_distribution(catalog);
    CHECK(dist.denominator == 2);
    CHECK(dist.entries[0].label == "R1");
    CHECK(dist.entries[0].count == 2);
    CHECK(dist.entries[0].percent == 100);
  }
}

TEST_CASE("rounding stays within half a percent of the exact share") {
  for (const Distribution& dist :
       {accuracy_distribution(sta()), info_frequency(sta()),
        reasons_distribution(sta())}) {
    for (const auto& e : dist.entries) {
      double exact = 100.0 * static_cast<double>(e.count) /
                     static_cast<double>(dist.denominator);
      CHECK(std::abs(e.percent - exact) <= 0.5);
    }
  }
}

TEST_CASE("ingest summary") {
  CHECK(ingest_summary(sta()) == IngestReport{192, 63, 129, 37, 166});
  CHECK(ingest_summary(one_rule(Accuracy::Deterministic)) ==
        IngestReport{1, 0, 1, 0, 1});
  Catalog unapproved = load_catalog_text(
      R"({"rules":[{"id":"1","status":"Unapproved","text":"a"},
                   {"id":"2","status":"Unapproved","text":"b"},
                   {"id":"3","status":"Unapproved","text":"c"}]})");
  CHECK(ingest_summary(unapproved) == IngestReport{3, 3, 0, 0, 0});
}

TEST_CASE("weighted kappa on the worked four-item example") {
  using A = Accuracy;
  std::vector<A> a = {A::Deterministic, A::Deterministic, A::HeuristicHigh,
                      A::NotDetectable};
  std::vector<A> b = {A::Deterministic, A::HeuristicHigh, A::HeuristicHigh,
                      A::NotDetectable};
  AgreementResult r = weighted_kappa(a, b, WeightScheme::Linear);
  // Hand-evaluated: po = 15/16, pe = 19/32, kappa = 11/13.
  CHECK(std::abs(r.observed_agreement - 15.0 / 16.0) < 1e-12);
  CHECK(std::abs(r.expected_agreement - 19.0 / 32.0) < 1e-12);
  CHECK(std::abs(r.kappa - 11.0 / 13.0) < 1e-9);
}

TEST_CASE("weighted kappa properties") {
  using A = Accuracy;
  SECTION("identical labelings score 1, any scheme") {
    std::mt19937 rng(1234);
    for (WeightScheme scheme : {WeightScheme::Linear, WeightScheme::Quadratic,
                                WeightScheme::Unweighted}) {
      for (int iter = 0; iter < 50; ++iter) {
        std::vector<A> labels;
        std::size_t n = 2 + rng() % 30;
        for (std::size_t i = 0; i < n; ++i)
          labels.push_back(static_cast<A>(rng() % 5));
        bool two_distinct = false;
        for (const A& l : labels) two_distinct = two_distinct || l != labels[0];
        if (!two_distinct) labels[0] = static_cast<A>((static_cast<int>(labels[1]) + 1) % 5);
        AgreementResult r = weighted_kappa(labels, labels, scheme);
        CHECK(r.kappa == 1.0);
      }
    }
  }
  SECTION("constant identical labelings score 1 by convention") {
    std::vector<A> labels(10, A::Deterministic);
    AgreementResult r = weighted_kappa(labels, labels, WeightScheme::Linear);
    CHECK(r.kappa == 1.0);
    CHECK(r.expected_agreement == 1.0);
  }
  SECTION("reversed balanced two-class labeling scores below zero") {
    std::vector<A> a = {A::Deterministic, A::Deterministic, A::NotDetectable,
                        A::NotDetectable};
    std::vector<A> b = {A::NotDetectable, A::NotDetectable, A::Deterministic,
                        A::Deterministic};
    CHECK(weighted_kappa(a, b, WeightScheme::Linear).kappa < 0.0);
    CHECK(weighted_kappa(a, b, WeightScheme::Unweighted).kappa < 0.0);
  }
  SECTION("kappa is symmetric") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
      std::size_t n = 2 + rng() % 40;
      std::vector<A> a, b;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(static_cast<A>(rng() % 5));
        b.push_back(static_cast<A>(rng() % 5));
      }
      for (WeightScheme scheme : {WeightScheme::Linear, WeightScheme::Quadratic,
                                  WeightScheme::Unweighted}) {
        double ab = weighted_kappa(a, b, scheme).kappa;
        double ba = weighted_kappa(b, a, scheme).kappa;
        CHECK(std::abs(ab - ba) < 1e-12);
      }
    }
  }
  SECTION("unweighted kappa matches the classic binary formula") {
    std::mt19937 rng(20260810);
    for (int iter = 0; iter < 100; ++iter) {
      std::size_t n = 2 + rng() % 60;
      std::vector<int> ia, ib;
      std::vector<A> a, b;
      for (std::size_t i = 0; i < n; ++i) {
        int x = static_cast<int>(rng() % 2);
        int y = static_cast<int>(rng() % 2);
        ia.push_back(x);
        ib.push_back(y);
        a.push_back(x == 0 ? A::Deterministic : A::NotDetectable);
        b.push_back(y == 0 ? A::Deterministic : A::NotDetectable);
      }
      double expected = binary_kappa_oracle(ia, ib);
      double actual = weighted_kappa(a, b, WeightScheme::Unweighted).kappa;
      CHECK(std::abs(expected - actual) < 1e-12);
    }
  }
  SECTION("length mismatch and empty input are rejected") {
    std::vector<A> a = {A::Deterministic};
    std::vector<A> b = {A::Deterministic, A::NotDetectable};
    CHECK_THROWS_AS(weighted_kappa(a, b, WeightScheme::Linear), LengthMismatch);
    CHECK_THROWS_AS(
        weighted_kappa(std::vector<A>{}, std::vector<A>{}, WeightScheme::Linear),
        LengthMismatch);
  }
}

TEST_CASE("label files load and align by rule id") {
  auto a = load_label_file(kFixtureDir + "/agreement/rater_a.tsv");
  auto b = load_label_file(kFixtureDir + "/agreement/rater_b.tsv");
  REQUIRE(a.size() == 20);
  REQUIRE(b.size() == 20);
  auto [la, lb] = align_labels(a, b);
  CHECK(la.size() == 20);
  AgreementResult r = weighted_kappa(la, lb, WeightScheme::Linear);
  CHECK(r.kappa > 0.0);
  CHECK(r.kappa <= 1.0);

  SECTION("disjoint ids are rejected") {
    std::vector<std::pair<std::string, Accuracy>> other = {
        {"zzz", Accuracy::Deterministic}};
    CHECK_THROWS_AS(align_labels(a, other), FormatError);
  }
  SECTION("files that are not two-column label lists are rejected") {
    CHECK_THROWS_AS(load_label_file(kFixtureDir + "/table1_catalog.json"), Error);
    std::string bad = kFixtureDir + "/agreement/rater_a.tsv";
    auto labels = load_label_file(bad);  // sanity: the good file still loads
    CHECK(labels.size() == 20);
  }
  SECTION("unknown accuracy labels are rejected") {
    // documents.tsv parses as key<TAB>value but carries titles, not labels.
    CHECK_THROWS_AS(load_label_file(kFixtureDir + "/documents.tsv"), FormatError);
  }
}
