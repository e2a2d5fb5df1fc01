#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dmf/categorization.hpp"
#include "dmf/planner.hpp"
#include "support.hpp"

using namespace dmf;
using dmf::testing::fixture_kb;
using dmf::testing::id;

namespace {

std::vector<ConceptId> list(std::initializer_list<const char*> names) {
  std::vector<ConceptId> out;
  for (const char* n : names) out.push_back(id(n));
  return out;
}

std::set<ConceptId> set_of(std::initializer_list<const char*> names) {
  std::set<ConceptId> out;
  for (const char* n : names) out.insert(id(n));
  return out;
}

CaseDescription fixture_case() {
  return parse_case(read_text_file(dmf::testing::data_path("case.txt")), &fixture_kb());
}

ProblemFormulation formulate(const CaseDescription& input, FormulationOptions options = {}) {
  const auto& kb = fixture_kb();
  const auto table = characterize_background(kb, input);
  const auto ctx = establish_context(kb, table, input.oracle_conditions);
  return formulate_problem(kb, ctx, table, input.criterion, options);
}

const std::set<ConceptId> kTable2 = set_of(
    {"old-age", "cardiomyopathy", "fainting", "arrhythmia", "embolism", "pulmonary-embolism",
     "systemic-embolism", "anticoagulant-therapy", "bleeding", "long-term-morbidity",
     "short-term-morbidity", "mortality", "quality-adjusted-life-expectancy"});

}  // namespace

TEST_CASE("case files") {
  const auto input = fixture_case();
  CHECK(input.inputs.size() == 8);
  CHECK(input.oracle_conditions == list({"old-age"}));
  CHECK(input.criterion == id("quality-adjusted-life-expectancy"));

  CHECK(parse_case("input fainting\n").criterion == default_criterion());
  CHECK_THROWS_AS(parse_case("input fainting\ncriterion mortality\ncriterion mortality\n"), LoadError);
  CHECK_THROWS_AS(parse_case("condition old-age\n"), LoadError);
  CHECK_THROWS_AS(parse_case("inputs fainting\n"), LoadError);
  CHECK_THROWS_AS(parse_case("input unheard-of\n", &fixture_kb()), LoadError);
}

TEST_CASE("background characterization reproduces the fixture table") {
  const auto table = characterize_background(fixture_kb(), fixture_case());
  CHECK(table.row(Category::general_history) == list({"80-year-old", "female"}));
  CHECK(table.row(Category::sign_or_symptom) == list({"fainting", "arrhythmia"}));
  CHECK(table.row(Category::laboratory_finding).empty());
  CHECK(table.row(Category::disease) == list({"cardiomyopathy"}));
  CHECK(table.row(Category::alternative) == list({"anticoagulant-therapy"}));
  CHECK(table.row(Category::complication) == list({"embolism", "bleeding"}));
  CHECK(table.unclassified.empty());
  CHECK(table.warnings.empty());
}

TEST_CASE("roots are not their own specializations") {
  CaseDescription input;
  input.inputs = list({"disease"});
  const auto table = characterize_background(fixture_kb(), input);
  CHECK(table.unclassified == list({"disease"}));
  CHECK(!table.warnings.empty());
}

TEST_CASE("an input in two categories is listed in both with a warning") {
  const auto kb = parse_kb(
      "concept general-history\nconcept sign-or-symptom\nconcept laboratory-finding\n"
      "concept disease\nconcept alternative\nconcept complication\nconcept stroke\n"
      "ako stroke disease\nako stroke complication\n");
  CaseDescription input;
  input.inputs = list({"stroke"});
  const auto table = characterize_background(kb, input);
  CHECK(table.row(Category::disease) == list({"stroke"}));
  CHECK(table.row(Category::complication) == list({"stroke"}));
  CHECK(table.warnings.size() == 1);
}

TEST_CASE("domain context") {
  const auto& kb = fixture_kb();
  const auto table = characterize_background(kb, fixture_case());
  CHECK(establish_context(kb, table, list({"old-age"})).as_context() ==
        Context{id("cardiomyopathy"), id("old-age")});
  CHECK(establish_context(kb, table, {}).as_context() == Context{id("cardiomyopathy")});

  CaseDescription plain;
  plain.inputs = list({"fainting"});
  const auto no_disease = characterize_background(kb, plain);
  CHECK_THROWS_AS(establish_context(kb, no_disease, {}), EmptyContextError);
  CHECK(establish_context(kb, no_disease, list({"old-age"})).suspected_diseases.empty());
}

TEST_CASE("formulation with defaults yields the thirteen concepts") {
  const auto f = formulate(fixture_case());
  CHECK(f.concept_set() == kTable2);
  CHECK(f.concepts.size() == kTable2.size());
  CHECK(f.warnings.empty());
  CHECK(f.role_of(id("quality-adjusted-life-expectancy")) == Role::criterion);
  CHECK(f.role_of(id("old-age")) == Role::condition);
  CHECK(f.role_of(id("anticoagulant-therapy")) == Role::alternative);
  CHECK(f.role_of(id("cardiomyopathy")) == Role::disease);
  CHECK(f.role_of(id("fainting")) == Role::finding);
  CHECK(f.role_of(id("mortality")) == Role::outcome);
  CHECK(f.role_of(id("pulmonary-embolism")) == Role::outcome);
  CHECK_FALSE(f.contains(id("female")));
  CHECK_FALSE(f.contains(id("80-year-old")));
}

TEST_CASE("depth one stops before the morbidity chain") {
  FormulationOptions options;
  options.depth_bound = 1;
  const auto shallow = formulate(fixture_case(), options).concept_set();
  CHECK(std::includes(kTable2.begin(), kTable2.end(), shallow.begin(), shallow.end()));
  CHECK(shallow.size() < kTable2.size());
  for (const char* n : {"mortality", "long-term-morbidity", "short-term-morbidity"}) {
    CHECK_FALSE(shallow.count(id(n)));
  }
}

TEST_CASE("a threshold above every significance keeps seeds and criterion only") {
  FormulationOptions options;
  options.significance_threshold = 1.0;
  const auto f = formulate(fixture_case(), options);
  CHECK(f.concept_set() == set_of({"cardiomyopathy", "anticoagulant-therapy", "fainting", "arrhythmia",
                                   "old-age", "quality-adjusted-life-expectancy"}));
  CHECK(f.selected.empty());
  REQUIRE(f.warnings.size() == 1);
  CHECK(f.warnings[0].find("DisconnectedCriterion") != std::string::npos);
}

TEST_CASE("formulation invariants over random cases") {
  const auto& kb = fixture_kb();
  const auto pool = list({"80-year-old", "female", "fainting", "arrhythmia", "cardiomyopathy",
                          "anticoagulant-therapy", "embolism", "bleeding", "pulmonary-embolism",
                          "irregular-heartbeat", "mortality"});
  const auto conditions = list({"old-age", "young-age", "female"});
  const auto ako = ako_closure(kb, Context::universal());
  std::mt19937 rng(17);
  for (int round = 0; round < 150; ++round) {
    CaseDescription input;
    for (const auto& c : pool) {
      if (rng() % 3 == 0) input.inputs.push_back(c);
    }
    if (input.inputs.empty()) input.inputs.push_back(pool[rng() % pool.size()]);
    for (const auto& c : conditions) {
      if (rng() % 3 == 0) input.oracle_conditions.push_back(c);
    }
    const auto table = characterize_background(kb, input);
    DomainContext ctx;
    try {
      ctx = establish_context(kb, table, input.oracle_conditions);
    } catch (const EmptyContextError&) {
      CHECK(table.row(Category::disease).empty());
      CHECK(input.oracle_conditions.empty());
      continue;
    }

    std::set<ConceptId> previous;
    for (int depth = 1; depth <= 4; ++depth) {
      FormulationOptions options;
      options.depth_bound = depth;
      const auto f = formulate_problem(kb, ctx, table, input.criterion, options);
      const auto now = f.concept_set();
      CHECK(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
      previous = now;

      CHECK(f.contains(f.criterion));
      for (const auto& vi : f.selected) {
        CHECK(f.contains(vi.assertion.source));
        CHECK(f.contains(vi.assertion.target));
      }
      for (const auto& fc : f.concepts) {
        if (fc.role == Role::disease) CHECK(ako.contains(fc.id, id("disease")));
        if (fc.role == Role::alternative) CHECK(ako.contains(fc.id, id("alternative")));
      }
      const auto again = formulate_problem(kb, ctx, table, input.criterion, options);
      CHECK(again.concepts == f.concepts);
      CHECK(format_formulation(again) == format_formulation(f));
    }

    std::set<ConceptId> wider = formulate_problem(kb, ctx, table, input.criterion, {3, 0.0}).concept_set();
    for (double tau : {0.2, 0.45, 0.65, 0.85, 1.0}) {
      const auto narrower = formulate_problem(kb, ctx, table, input.criterion, {3, tau}).concept_set();
      CHECK(std::includes(wider.begin(), wider.end(), narrower.begin(), narrower.end()));
      wider = narrower;
    }
  }
}

TEST_CASE("report formatting") {
  const auto table = characterize_background(fixture_kb(), fixture_case());
  const std::string text = format_background(table);
  CHECK(text.find("general-history: 80-year-old, female") != std::string::npos);
  CHECK(text.find("laboratory-finding: -") != std::string::npos);
  const std::string report = format_formulation(formulate(fixture_case()));
  CHECK(report.find("concepts (13):") != std::string::npos);
}
