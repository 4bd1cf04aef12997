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
// Generates fixtures/sta_catalog.json: a synthetic 192-entry rule catalog
// whose ingest counts and classification marginals match the published
// study statistics (63 unapproved drafts, 37 compound rules split in two,
// 166 classified rules; accuracy 68/20/18/18/42; the information-kind and
// reason tallies of the published tables). Seven real example rules keep
// their original ids; every other rule is synthetic. The output is
// deterministic, so the committed fixture can be regenerated and diffed.

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "reqlint/analytics.hpp"
#include "reqlint/catalog.hpp"

using nlohmann::ordered_json;

namespace {

// Spreads `targets` over `total` slots so every prefix is close to the
// target proportions (largest-remainder walk). Returns one label index
// per slot.
std::vector<std::size_t> smooth_schedule(const std::vector<std::size_t>& targets,
                                         std::size_t total) {
  std::vector<std::size_t> assigned(targets.size(), 0);
  std::vector<std::size_t> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t best = targets.size();
    long long best_score = -1;
    for (std::size_t c = 0; c < targets.size(); ++c) {
      if (assigned[c] >= targets[c]) continue;
      long long score = static_cast<long long>(targets[c]) *
                            static_cast<long long>(i + 1) -
                        static_cast<long long>(assigned[c]) *
                            static_cast<long long>(total);
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    if (best == targets.size()) throw std::runtime_error("schedule exhausted");
    ++assigned[best];
    out.push_back(best);
  }
  return out;
}

const char* kAccuracyNames[] = {"Deterministic", "HeuristicHigh",
                                "HeuristicMedium", "HeuristicLow",
                                "NotDetectable"};
const char* kReasonNames[] = {"R1_UnclearRule", "R2_DeepSemantics",
                              "R3_DomainKnowledge", "R4_SystemScope",
                              "R5_ProcessStatus"};
const char* kInfoNames[] = {"LemmasDictionaries", "PureTextRegex", "Formatting",
                            "DomainModels",       "PosTags",       "ListsOfX",
                            "Morphology",         "ParseTrees",    "WordStems",
                            "TokensSentences",    "NamedEntities"};

ordered_json real_rule(const char* id, const char* text, const char* type,
                       const char* context, const char* scope,
                       std::vector<const char*> info, const char* accuracy) {
  ordered_json r;
  r["id"] = id;
  r["status"] = "Approved";
  r["text"] = text;
  r["type"] = type;
  r["context"] = context;
  r["scope"] = scope;
  r["required_info"] = info;
  r["accuracy"] = accuracy;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "fixtures/sta_catalog.json";

  // The seven example rules with published classifications.
  std::map<int, ordered_json> real;
  real[160] = real_rule(
      "160", "Use the term \"function\" rather than \"functionality\".",
      "Lexical", "Anywhere", "WordPhrase", {"LemmasDictionaries"},
      "Deterministic");
  real[56] = real_rule("56", "Start every requirement with its subject.",
                       "Grammatical", "Requirement", "Sentence",
                       {"ParseTrees"}, "HeuristicHigh");
  real[78] = real_rule(
      "78", "Introduce definitions with the marker \"Definition:\".",
      "Structural", "Requirement", "Section", {"LemmasDictionaries"},
      "HeuristicMedium");
  real[81] = real_rule(
      "81",
      "Write supplementary clarification of a requirement as a requirement "
      "of its own.",
      "Semantic", "Requirement", "Section", {"DomainModels"}, "HeuristicLow");
  real[24] = real_rule(
      "24", "Refer to other documents by citing the document title.",
      "Structural", "Anywhere", "Global", {"PureTextRegex", "ListsOfX"},
      "Deterministic");
  real[50] = real_rule(
      "50",
      "Name the subject explicitly in each requirement so the sentence is "
      "understandable on its own.",
      "Semantic", "Requirement", "Sentence", {"PosTags"}, "HeuristicHigh");
  real[54] = ordered_json{{"id", "54"},
                          {"status", "Approved"},
                          {"text",
                           "The introductory section shall not contain "
                           "requirements."},
                          {"type", "Unclassified"},
                          {"context", "Unclassified"},
                          {"scope", "Unclassified"},
                          {"required_info", ordered_json::array()},
                          {"accuracy", "NotDetectable"},
                          {"reason", "R1_UnclearRule"}};

  // Partition the remaining 185 ids: 63 unapproved drafts, 37 compound
  // rules split in two, 85 plain approved rules.
  std::vector<int> candidates;
  for (int id = 1; id <= 192; ++id)
    if (!real.count(id)) candidates.push_back(id);

  std::set<int> unapproved;
  for (std::size_t i = 1; i < candidates.size() && unapproved.size() < 63; i += 3)
    unapproved.insert(candidates[i]);
  for (std::size_t i = 0; i < candidates.size() && unapproved.size() < 63; ++i)
    unapproved.insert(candidates[i]);

  std::vector<int> approved;
  for (int id : candidates)
    if (!unapproved.count(id)) approved.push_back(id);

  std::set<int> split;
  for (std::size_t i = 2; i < approved.size() && split.size() < 37; i += 3)
    split.insert(approved[i]);
  for (std::size_t i = 0; i < approved.size() && split.size() < 37; ++i)
    split.insert(approved[i]);

  // One classification slot per synthetic classified rule: plain rules
  // contribute one, split rules two.
  struct Slot {
    std::string id;
    int parent;  // 0 when not split
  };
  std::vector<Slot> slots;
  for (int id : approved) {
    if (split.count(id)) {
      slots.push_back({std::to_string(id) + "a", id});
      slots.push_back({std::to_string(id) + "b", id});
    } else {
      slots.push_back({std::to_string(id), 0});
    }
  }
  if (slots.size() != 159) {
    std::cerr << "expected 159 synthetic slots, got " << slots.size() << "\n";
    return 1;
  }

  // Accuracy marginals minus the real rules' contribution:
  // 68-2, 20-2, 18-1, 18-1, 42-1.
  std::vector<std::size_t> acc_targets = {66, 18, 17, 17, 41};
  std::vector<std::size_t> acc_schedule = smooth_schedule(acc_targets, 159);

  // Reasons for the 41 synthetic NotDetectable rules (table minus rule 54).
  std::vector<std::size_t> reason_targets = {33, 1, 5, 1, 1};
  std::vector<std::size_t> reason_schedule = smooth_schedule(reason_targets, 41);

  // Information kinds for the 118 synthetic detectable rules. Primary
  // selections cover every rule once; 48 rules carry a second kind so the
  // occurrence totals match the published table minus the real rules.
  std::vector<std::size_t> primary_targets = {56, 42, 20};  // Lem, Txt, Fmt
  std::vector<std::size_t> primary_schedule = smooth_schedule(primary_targets, 118);
  // kind index -> extra occurrences: Fmt 7, Dom 10, Pos 10, Lists 7,
  // Morph 5, PT 2, WS 3, TS 3, NE 1.
  std::vector<std::size_t> secondary_targets = {0, 0, 7, 10, 10, 7, 5, 2, 3, 3, 1};
  std::vector<std::size_t> secondary_schedule = smooth_schedule(secondary_targets, 48);
  // Place each secondary kind on the next detectable slot whose primary
  // kind differs, so the occurrence totals stay exact.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> second_kind(118, kNone);
  for (std::size_t kind : secondary_schedule) {
    std::size_t s = 0;
    while (s < second_kind.size() &&
           (second_kind[s] != kNone || primary_schedule[s] == kind))
      ++s;
    if (s == second_kind.size())
      throw std::runtime_error("no slot for secondary info kind");
    second_kind[s] = kind;
  }

  const char* type_cycle[] = {"Lexical", "Structural", "Grammatical",
                              "Lexical", "Semantic",   "Structural"};
  const char* context_cycle[] = {"Anywhere",    "Requirement", "Anywhere",
                                 "Requirement", "Heading",     "Anywhere",
                                 "Requirement", "Table",       "Anywhere",
                                 "Requirement", "Enumeration", "Reference"};
  const char* scope_cycle[] = {"WordPhrase", "Sentence", "WordPhrase",
                               "Sentence",   "Section",  "WordPhrase",
                               "Document",   "Sentence", "WordPhrase",
                               "Global"};

  std::map<std::string, ordered_json> classified;  // slot id -> rule object
  std::size_t detectable_seen = 0;
  std::size_t nd_seen = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    ordered_json r;
    r["id"] = slots[s].id;
    r["status"] = "Approved";
    std::size_t acc = acc_schedule[s];
    if (acc == 4) {
      r["text"] = "Synthetic rule " + slots[s].id +
                  ": quality expectation without an operational definition.";
      r["type"] = "Unclassified";
      r["context"] = "Unclassified";
      r["scope"] = "Unclassified";
      r["required_info"] = ordered_json::array();
      r["accuracy"] = "NotDetectable";
      r["reason"] = kReasonNames[reason_schedule[nd_seen++]];
    } else {
      r["text"] = "Synthetic rule " + slots[s].id +
                  ": phrasing constraint on specification text.";
      r["type"] = type_cycle[s % 6];
      r["context"] = context_cycle[s % 12];
      r["scope"] = scope_cycle[s % 10];
      std::vector<std::string> info;
      info.push_back(kInfoNames[primary_schedule[detectable_seen]]);
      if (second_kind[detectable_seen] != kNone)
        info.push_back(kInfoNames[second_kind[detectable_seen]]);
      r["required_info"] = info;
      r["accuracy"] = kAccuracyNames[acc];
      ++detectable_seen;
    }
    classified[slots[s].id] = std::move(r);
  }

  // Emit the 192 raw entries in id order.
  ordered_json rules = ordered_json::array();
  for (int id = 1; id <= 192; ++id) {
    if (real.count(id)) {
      rules.push_back(real[id]);
      continue;
    }
    if (unapproved.count(id)) {
      rules.push_back(ordered_json{
          {"id", std::to_string(id)},
          {"status", "Unapproved"},
          {"text", "Draft rule idea " + std::to_string(id) + " (unapproved)."}});
      continue;
    }
    if (split.count(id)) {
      ordered_json parent;
      parent["id"] = std::to_string(id);
      parent["status"] = "Approved";
      parent["text"] = "Compound rule " + std::to_string(id) +
                       " with two discernible sub-rules.";
      parent["subrules"] = ordered_json::array(
          {classified.at(std::to_string(id) + "a"),
           classified.at(std::to_string(id) + "b")});
      rules.push_back(std::move(parent));
      continue;
    }
    rules.push_back(classified.at(std::to_string(id)));
  }

  ordered_json root;
  root["rules"] = std::move(rules);
  std::string text = root.dump(2) + "\n";

  // Self-check: the generated catalog must reproduce the published
  // numbers exactly.
  reqlint::Catalog catalog = reqlint::load_catalog_text(text, out_path);
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("fixture self-check failed: " + what);
  };
  expect(catalog.ingest == reqlint::IngestReport{192, 63, 129, 37, 166},
         "ingest counts");
  reqlint::Distribution acc = reqlint::accuracy_distribution(catalog);
  const int acc_pct[] = {41, 12, 11, 11, 25};
  const std::size_t acc_cnt[] = {68, 20, 18, 18, 42};
  for (std::size_t i = 0; i < 5; ++i) {
    expect(acc.entries[i].count == acc_cnt[i], "accuracy count " + std::to_string(i));
    expect(acc.entries[i].percent == acc_pct[i], "accuracy percent " + std::to_string(i));
  }
  reqlint::Distribution info = reqlint::info_frequency(catalog);
  const std::size_t info_cnt[] = {58, 43, 27, 11, 11, 8, 5, 3, 3, 3, 1};
  const int info_pct[] = {47, 35, 22, 9, 9, 6, 4, 2, 2, 2, 1};
  for (std::size_t i = 0; i < 11; ++i) {
    expect(info.entries[i].count == info_cnt[i], "info count " + std::string(kInfoNames[i]));
    expect(info.entries[i].percent == info_pct[i], "info percent " + std::string(kInfoNames[i]));
  }
  reqlint::Distribution reasons = reqlint::reasons_distribution(catalog);
  const std::size_t reason_cnt[] = {34, 1, 5, 1, 1};
  const int reason_pct[] = {81, 2, 12, 2, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    expect(reasons.entries[i].count == reason_cnt[i], "reason count " + std::to_string(i));
    expect(reasons.entries[i].percent == reason_pct[i], "reason percent " + std::to_string(i));
  }
  expect(reqlint::combined_share(catalog, {reqlint::Accuracy::Deterministic,
                                           reqlint::Accuracy::HeuristicHigh}) == 53,
         "combined det+high");
  expect(reqlint::combined_share(catalog, {reqlint::Accuracy::Deterministic,
                                           reqlint::Accuracy::HeuristicHigh,
                                           reqlint::Accuracy::HeuristicMedium}) == 64,
         "combined det+high+medium");

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << text;
  std::cout << "wrote " << out_path << " (" << catalog.rules.size()
            << " classified rules)\n";
  return 0;
}
