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

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "reqlint/checkers.hpp"

using namespace reqlint;

namespace {

struct Annotated {
  Document doc;
  std::vector<AnnotationSet> anns;
};

Annotated make(const std::string& text) {
  Annotated a;
  a.doc = parse_document(text);
  a.anns = annotate(a.doc);
  REQUIRE(a.doc.blocks.size() == 1);
  return a;
}

Resources with_documents() {
  Resources res;
  res.document_list = {{"D-17", "Signal Interface Spec"},
                       {"D-3", "Braking Handbook"}};
  return res;
}

CheckerParams forbidden(std::initializer_list<std::pair<std::string, std::string>> terms) {
  CheckerParams params;
  for (const auto& [k, v] : terms) params[k] = v;
  return params;
}

}  // namespace

TEST_CASE("forbidden_term") {
  Resources res;
  CheckerParams params = forbidden({{"functionality", "function"}});
  SECTION("flags a forbidden lemma with its replacement") {
    Annotated a = make("The functionality restarts.");
    auto f = check_forbidden_term(a.doc.blocks[0], a.anns[0], params, res);
    REQUIRE(f.size() == 1);
    REQUIRE(f[0].suggestion.has_value());
    CHECK(*f[0].suggestion == "function");
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) ==
          "functionality");
  }
  SECTION("replacement term itself is clean") {
    Annotated a = make("The function restarts.");
    CHECK(check_forbidden_term(a.doc.blocks[0], a.anns[0], params, res).empty());
  }
  SECTION("lemma matching covers inflection") {
    Annotated a = make("Functionalities and functionality overlap.");
    auto f = check_forbidden_term(a.doc.blocks[0], a.anns[0], params, res);
    REQUIRE(f.size() == 2);
    CHECK(f[0].span.start < f[1].span.start);
  }
  SECTION("phrases match case-insensitively on word boundaries") {
    Annotated a = make("Handle this as soon as possible, not reasonable.");
    CheckerParams p = forbidden({{"as soon as possible", "within 100 ms"}});
    auto f = check_forbidden_term(a.doc.blocks[0], a.anns[0], p, res);
    REQUIRE(f.size() == 1);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) ==
          "as soon as possible");
  }
  SECTION("empty params raise BadParams") {
    Annotated a = make("Anything.");
    CHECK_THROWS_AS(check_forbidden_term(a.doc.blocks[0], a.anns[0], {}, res),
                    BadParams);
  }
}

TEST_CASE("regex checker") {
  Resources res;
  SECTION("one finding per non-overlapping match") {
    Annotated a = make("Value is TBD and also TBD later.");
    CheckerParams params;
    params["pattern"] = std::string(R"(\bTBD\b)");
    params["message"] = std::string("placeholder");
    auto f = check_regex(a.doc.blocks[0], a.anns[0], params, res);
    REQUIRE(f.size() == 2);
    CHECK(f[0].message == "placeholder");
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) == "TBD");
  }
  SECTION("invert flags only the absence of a match") {
    CheckerParams params;
    params["pattern"] = std::string("^Definition:");
    params["invert"] = std::string("true");
    Annotated with = make("Definition: A consist is a set.");
    CHECK(check_regex(with.doc.blocks[0], with.anns[0], params, res).empty());
    Annotated without = make("A consist is a set.");
    auto f = check_regex(without.doc.blocks[0], without.anns[0], params, res);
    REQUIRE(f.size() == 1);
    CHECK(f[0].span == Span{0, without.doc.blocks[0].text.size()});
  }
  SECTION("no matches on an empty block") {
    Block b;
    b.text = "";
    AnnotationSet ann;
    CheckerParams params;
    params["pattern"] = std::string("x");
    CHECK(check_regex(b, ann, params, res).empty());
  }
  SECTION("bad pattern raises BadParams") {
    Annotated a = make("text");
    CheckerParams params;
    params["pattern"] = std::string("([unclosed");
    CHECK_THROWS_AS(check_regex(a.doc.blocks[0], a.anns[0], params, res),
                    BadParams);
    CHECK_THROWS_AS(check_regex(a.doc.blocks[0], a.anns[0], {}, res), BadParams);
  }
}

TEST_CASE("reference_style") {
  Resources res = with_documents();
  SECTION("id without its title in the same sentence") {
    Annotated a = make("The value is given as defined in D-17.");
    auto f = check_reference_style(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) == "D-17");
  }
  SECTION("id accompanied by the title is clean") {
    Annotated a = make("As defined in D-17, Signal Interface Spec.");
    CHECK(check_reference_style(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("title in a different sentence does not count") {
    Annotated a = make("See D-17. The Signal Interface Spec describes it.");
    CHECK(check_reference_style(a.doc.blocks[0], a.anns[0], {}, res).size() == 1);
  }
  SECTION("block without ids is clean") {
    Annotated a = make("No references here.");
    CHECK(check_reference_style(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("a shorter id does not match inside a longer one") {
    Resources res2;
    res2.document_list = {{"D-1", "Decoy Doc"}, {"D-17", "Signal Interface Spec"}};
    Annotated a = make("Defined in D-17 only.");
    auto f = check_reference_style(a.doc.blocks[0], a.anns[0], {}, res2);
    REQUIRE(f.size() == 1);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) == "D-17");
  }
  SECTION("empty document list raises ResourceError") {
    Annotated a = make("See D-17.");
    Resources empty;
    CHECK_THROWS_AS(check_reference_style(a.doc.blocks[0], a.anns[0], {}, empty),
                    ResourceError);
  }
}

TEST_CASE("definition_marker") {
  Resources res;
  SECTION("unmarked definition is flagged") {
    Annotated a = make("A consist is a set of coupled vehicles.");
    auto f = check_definition_marker(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
  }
  SECTION("marker suppresses the finding") {
    Annotated a = make("Definition: A consist is a set of coupled vehicles.");
    CHECK(check_definition_marker(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("predicate adjective is not a definition") {
    Annotated a = make("The system is available.");
    CHECK(check_definition_marker(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("'means' and 'refers to' patterns") {
    Annotated m = make("REQ-1: The term consist means a group of coupled vehicles.");
    CHECK(check_definition_marker(m.doc.blocks[0], m.anns[0], {}, res).size() == 1);
    Annotated r = make("The term consist refers to a group of vehicles.");
    CHECK(check_definition_marker(r.doc.blocks[0], r.anns[0], {}, res).size() == 1);
  }
  SECTION("wrong block kind yields nothing") {
    Annotated a = make("# A consist is a set of vehicles");
    CHECK(a.doc.blocks[0].kind == BlockKind::Heading);
    CHECK(check_definition_marker(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
}

TEST_CASE("subject_first") {
  Resources res;
  SECTION("subordinate clause first is flagged") {
    Annotated a = make("REQ-2: If the door is open, the train shall not move.");
    auto f = check_subject_first(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, 2) == "If");
  }
  SECTION("subject first is clean") {
    Annotated a = make("REQ-3: The train shall not move while the door is open.");
    CHECK(check_subject_first(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("verb-initial requirement is flagged") {
    Annotated a = make("REQ-4: Shall be logged within 5 s.");
    CHECK(check_subject_first(a.doc.blocks[0], a.anns[0], {}, res).size() == 1);
  }
  SECTION("empty requirement body yields nothing") {
    Annotated a = make("REQ-9:");
    CHECK(check_subject_first(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("non-requirement blocks yield nothing") {
    Annotated a = make("If open, close the door.");
    CHECK(a.doc.blocks[0].kind == BlockKind::Informative);
    CHECK(check_subject_first(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
}

TEST_CASE("explicit_subject") {
  Resources res;
  SECTION("missing subject is flagged") {
    Annotated a = make("REQ-4: Shall be logged within 5 s.");
    auto f = check_explicit_subject(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
    CHECK(f[0].message.find("no explicit subject") != std::string::npos);
  }
  SECTION("pronoun subject is flagged") {
    Annotated a = make("REQ-5: It shall be logged within 5 s.");
    auto f = check_explicit_subject(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) == "It");
  }
  SECTION("explicit noun phrase subject is clean") {
    Annotated a = make("REQ-6: The event shall be logged within 5 s.");
    CHECK(check_explicit_subject(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
}

TEST_CASE("clarification_split") {
  Resources res;
  SECTION("clarification marker is flagged as low confidence") {
    Annotated a =
        make("REQ-7: The brake shall engage, i.e. pads contact the disc "
             "within 100 ms.");
    auto f = check_clarification_split(a.doc.blocks[0], a.anns[0], {}, res);
    REQUIRE(f.size() == 1);
    CHECK(f[0].message.find("low-confidence") != std::string::npos);
    CHECK(a.doc.blocks[0].text.substr(f[0].span.start, f[0].span.size()) == "i.e.");
  }
  SECTION("plain requirement is clean") {
    Annotated a = make("REQ-8: The brake shall engage within 100 ms.");
    CHECK(check_clarification_split(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("short parenthetical before the modal is clean") {
    Annotated a = make("REQ-9: The brake (disc type) shall engage.");
    CHECK(check_clarification_split(a.doc.blocks[0], a.anns[0], {}, res).empty());
  }
  SECTION("long parenthetical after the modal is flagged") {
    Annotated a = make(
        "REQ-10: The brake shall engage fully (measured from the pedal press "
        "to full pad contact).");
    CHECK(check_clarification_split(a.doc.blocks[0], a.anns[0], {}, res).size() == 1);
  }
  SECTION("phrase markers") {
    Annotated a = make("REQ-11: The brake shall engage, in other words pads close.");
    CHECK(check_clarification_split(a.doc.blocks[0], a.anns[0], {}, res).size() == 1);
  }
}

TEST_CASE("registry lookup") {
  CHECK(registry_lookup("forbidden_term") == &check_forbidden_term);
  CHECK(registry_lookup("regex") == &check_regex);
  CHECK(registry_lookup("reference_style") == &check_reference_style);
  CHECK(registry_lookup("definition_marker") == &check_definition_marker);
  CHECK(registry_lookup("subject_first") == &check_subject_first);
  CHECK(registry_lookup("explicit_subject") == &check_explicit_subject);
  CHECK(registry_lookup("clarification_split") == &check_clarification_split);
  CHECK_THROWS_AS(registry_lookup("topic_model"), UnknownChecker);
}

TEST_CASE("checkers are pure and bounded to their block") {
  Resources res = with_documents();
  const std::vector<std::string> samples = {
      "REQ-1: The functionality shall restart, i.e. cycle power.",
      "REQ-2: If the door is open, the train shall not move.",
      "A consist is a set of coupled vehicles defined in D-17.",
      "REQ-3: It shall comply with D-3.",
  };
  CheckerParams params = forbidden({{"functionality", "function"}});
  for (const std::string& text : samples) {
    Document doc = parse_document(text);
    auto anns = annotate(doc);
    for (const auto& [name, checker] : checker_registry()) {
      CheckerParams p;
      if (name == "forbidden_term") p = params;
      if (name == "regex") p["pattern"] = std::string("door");
      auto first = checker(doc.blocks[0], anns[0], p, res);
      auto second = checker(doc.blocks[0], anns[0], p, res);
      REQUIRE(first.size() == second.size());
      for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].span == second[i].span);
        CHECK(first[i].message == second[i].message);
        CHECK(first[i].span.end <= doc.blocks[0].text.size());
        CHECK(first[i].block == 0);
      }
    }
  }
}
