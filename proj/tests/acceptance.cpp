// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Thresholds are fixed here.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "dmf/categorization.hpp"
#include "dmf/cli.hpp"
#include "dmf/interactions.hpp"
#include "dmf/planner.hpp"
#include "dmf/qpn_build.hpp"
#include "dmf/qpn_eval.hpp"
#include "dmf/qpn_io.hpp"
#include "dmf/query.hpp"
#include "support.hpp"

using namespace dmf;
using dmf::testing::fixture_kb;
using dmf::testing::id;

namespace {

constexpr double kFastSeconds = 1.0;
constexpr double kOracleSeconds = 30.0;
constexpr int kRandomDags = 1000;
constexpr int kRandomKbs = 500;
constexpr int kRoundTrips = 100;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.require(false, "took " + std::to_string(seconds) + " s");
  }
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", number, title, seconds,
              outcome.ok ? "" : " - ", outcome.detail.c_str());
  if (!outcome.ok) ++failures;
}

std::vector<ConceptId> list(std::initializer_list<const char*> names) {
  std::vector<ConceptId> out;
  for (const char* n : names) out.push_back(id(n));
  return out;
}

CaseDescription fixture_case() {
  return parse_case(read_text_file(dmf::testing::data_path("case.txt")), &fixture_kb());
}

bool is_subset(const dmf::testing::Pairs& small, const std::vector<std::pair<ConceptId, ConceptId>>& large) {
  const dmf::testing::Pairs big(large.begin(), large.end());
  for (const auto& p : small) {
    if (!big.count(p)) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "background table", kFastSeconds, [](Outcome& o) {
    const auto table = characterize_background(fixture_kb(), fixture_case());
    o.require(table.row(Category::general_history) == list({"80-year-old", "female"}), "general-history row");
    o.require(table.row(Category::sign_or_symptom) == list({"fainting", "arrhythmia"}), "sign-or-symptom row");
    o.require(table.row(Category::laboratory_finding).empty(), "laboratory-finding row");
    o.require(table.row(Category::disease) == list({"cardiomyopathy"}), "disease row");
    o.require(table.row(Category::alternative) == list({"anticoagulant-therapy"}), "alternative row");
    o.require(table.row(Category::complication) == list({"embolism", "bleeding"}), "complication row");
    o.require(table.unclassified.empty(), "unclassified inputs");
  });

  criterion(2, "decision-problem concepts", kFastSeconds, [](Outcome& o) {
    const auto& kb = fixture_kb();
    const auto input = fixture_case();
    const auto table = characterize_background(kb, input);
    const auto ctx = establish_context(kb, table, input.oracle_conditions);
    const auto f = formulate_problem(kb, ctx, table, input.criterion);
    std::set<ConceptId> expected;
    for (const auto& c : list({"old-age", "cardiomyopathy", "fainting", "arrhythmia", "embolism",
                               "pulmonary-embolism", "systemic-embolism", "anticoagulant-therapy", "bleeding",
                               "long-term-morbidity", "short-term-morbidity", "mortality",
                               "quality-adjusted-life-expectancy"})) {
      expected.insert(c);
    }
    o.require(f.concept_set() == expected, "concept set differs");
  });

  criterion(3, "query quartet", kFastSeconds, [](Outcome& o) {
    const auto& kb = fixture_kb();
    const Context u;
    o.require(q1(kb, u, id("cardiomyopathy"), id("disease"), CategorizerKind::ako).yes, "q1");
    o.require(q2(kb, u, id("embolism"), CategorizerKind::ako, Direction::down).result_set() ==
                  std::set{id("pulmonary-embolism"), id("systemic-embolism")},
              "q2");
    o.require(q3(kb, u, id("complication-of-anticoagulant-therapy"), InteractionKind::positive_influence)
                      .result_set() == std::set{id("presence-of-old-age")},
              "q3");
    o.require(q4(kb, u, id("cardiomyopathy"), id("fainting"), InteractionKind::cause).yes, "q4");
  });

  criterion(4, "context example", kFastSeconds, [](Outcome& o) {
    const auto& kb = fixture_kb();
    const Context specific{id("cardiomyopathy"), id("old-age")};
    o.require(context_visible(Context{id("disease"), id("old-age")}, specific, kb), "subcontext check");
    const auto list = visible_interactions(kb, id("anticoagulant-therapy"), specific);
    o.require(!list.empty(), "no visible interactions");
    if (list.empty()) return;
    const auto& top = list.front();
    o.require(top.assertion.target == id("bleeding") && top.assertion.context == Context{id("old-age")},
              "old-age bleeding link is not first");
    for (const auto& vi : list) {
      if (vi.assertion.context.is_universal()) o.require(ranks_before(top, vi), "a universal link outranks it");
    }
  });

  criterion(5, "sign algebra laws", 0, [](Outcome& o) {
    for (EvalSign x : kEvalSigns) {
      o.require(sign_product(EvalSign::plus, x) == x, "product identity");
      o.require(sign_sum(EvalSign::zero, x) == x, "sum identity");
      o.require(sign_product(EvalSign::zero, x) == EvalSign::zero, "annihilation");
      for (EvalSign y : kEvalSigns) {
        o.require(sign_product(x, y) == sign_product(y, x), "product commutes");
        o.require(sign_sum(x, y) == sign_sum(y, x), "sum commutes");
        for (EvalSign z : kEvalSigns) {
          o.require(sign_product(sign_product(x, y), z) == sign_product(x, sign_product(y, z)), "product associates");
          o.require(sign_sum(sign_sum(x, y), z) == sign_sum(x, sign_sum(y, z)), "sum associates");
          o.require(sign_product(x, sign_sum(y, z)) == sign_sum(sign_product(x, y), sign_product(x, z)),
                    "distributivity");
        }
      }
    }
  });

  criterion(6, "evaluator matches path enumeration; reduction preserves influence", kOracleSeconds, [](Outcome& o) {
    std::mt19937 rng(6);
    for (int round = 0; round < kRandomDags && o.ok; ++round) {
      const Qpn q = dmf::testing::random_dag(rng, 10, 20);
      o.require(q.nodes().size() <= 10 && q.edges().size() <= 20, "generator bounds");
      for (const auto& x : q.nodes()) {
        for (const auto& y : q.nodes()) {
          o.require(net_influence(q, x.concept_id, y.concept_id) ==
                        dmf::testing::oracle_net(q, x.concept_id, y.concept_id),
                    "net_influence differs from enumeration");
        }
      }
      for (const auto& gone : q.nodes_of_kind(NodeKind::chance)) {
        const Qpn r = reduce_node(q, gone);
        for (const auto& x : r.nodes()) {
          for (const auto& y : r.nodes()) {
            o.require(net_influence(r, x.concept_id, y.concept_id) == net_influence(q, x.concept_id, y.concept_id),
                      "reduction changed an influence");
          }
        }
      }
    }
  });

  criterion(7, "closure and closed-world properties", 0, [](Outcome& o) {
    std::mt19937 rng(7);
    int valid = 0;
    while (valid < kRandomKbs && o.ok) {
      KnowledgeBase kb;
      try {
        kb = parse_kb(dmf::testing::random_kb_text(rng));
      } catch (const LoadError&) {
        continue;
      }
      std::vector<ConceptId> all;
      for (const auto& [cid, c] : kb.concepts()) {
        if (!c.builtin) all.push_back(cid);
      }
      std::vector<Context> nested{Context::universal()};
      for (int k = 0; k < 3; ++k) nested.push_back(nested.back().with(all[rng() % all.size()]));
      std::vector<std::vector<std::pair<ConceptId, ConceptId>>> closures;
      bool cyclic = false;
      for (const auto& ctx : nested) {
        try {
          closures.push_back(ako_closure(kb, ctx).pairs());
        } catch (const CycleError&) {
          cyclic = true;
          break;
        }
      }
      if (cyclic) continue;
      ++valid;
      for (std::size_t i = 0; i < nested.size(); ++i) {
        const dmf::testing::Pairs rel(closures[i].begin(), closures[i].end());
        for (const auto& [a, b] : rel) {
          o.require(a != b, "reflexive pair");
          o.require(!rel.count({b, a}), "symmetric pair");
          for (const auto& [b2, c] : rel) {
            if (b2 == b) o.require(rel.count({a, c}) == 1, "not transitive");
          }
        }
        if (i > 0) {
          const dmf::testing::Pairs smaller(closures[i - 1].begin(), closures[i - 1].end());
          o.require(is_subset(smaller, closures[i]), "closure shrank in a larger context");
        }
        for (const auto& ia : kb.interactions()) {
          if (i > 0 && context_visible(ia.context, nested[i - 1], kb)) {
            o.require(context_visible(ia.context, nested[i], kb), "visibility shrank in a larger context");
          }
        }
      }
    }
    const KnowledgeBase empty = parse_kb("concept a\nconcept b\n");
    for (auto kind : {CategorizerKind::ako, CategorizerKind::partof, CategorizerKind::eqv}) {
      o.require(!q1(empty, {}, id("a"), id("b"), kind).yes, "empty kb q1");
      o.require(q2(empty, {}, id("a"), kind, Direction::up).result_set().empty(), "empty kb q2");
      o.require(q2(empty, {}, id("b"), kind, Direction::down).result_set().empty(), "empty kb q2");
    }
    for (auto kind : kInteractionKinds) {
      o.require(q3(empty, {}, id("a"), kind).result_set().empty(), "empty kb q3");
      o.require(!q4(empty, {}, id("a"), id("b"), kind).yes, "empty kb q4");
    }
  });

  criterion(8, "end-to-end tradeoff", 0, [](Outcome& o) {
    const auto model = (std::filesystem::temp_directory_path() / "dmf-acceptance.qpn").string();
    std::ostringstream out;
    std::ostringstream err;
    const int formulated = dmf::cli::run({"formulate", "--kb", dmf::testing::data_path("cardiomyopathy.kb"), "--case",
                                          dmf::testing::data_path("case.txt"), "--out", model},
                                         out, err);
    o.require(formulated == 0, "formulate failed: " + err.str());
    std::ostringstream result;
    const int evaluated = dmf::cli::run({"evaluate", "--model", model}, result, err);
    o.require(evaluated == 0, "evaluate failed: " + err.str());
    o.require(result.str() == "anticoagulant-therapy: tradeoff (+ via embolism path, − via bleeding path)\n",
              "unexpected evaluation: " + result.str());
  });

  criterion(9, "serialization round-trips", 0, [](Outcome& o) {
    const auto& kb = fixture_kb();
    o.require(equivalent(parse_kb(serialize_kb(kb)), kb), "fixture kb");
    std::mt19937 rng(9);
    for (int done = 0; done < kRoundTrips;) {
      KnowledgeBase random;
      try {
        random = parse_kb(dmf::testing::random_kb_text(rng));
      } catch (const LoadError&) {
        continue;
      }
      ++done;
      o.require(equivalent(parse_kb(serialize_kb(random)), random), "random kb");
    }

    const auto input = fixture_case();
    const auto table = characterize_background(kb, input);
    const auto ctx = establish_context(kb, table, input.oracle_conditions);
    const Qpn model =
        construct_model(kb, formulate_problem(kb, ctx, table, input.criterion), ctx.as_context()).model;
    o.require(parse_qpn(serialize_qpn(model)) == model, "fixture model");
    for (int done = 0; done < kRoundTrips; ++done) {
      const Qpn q = dmf::testing::random_dag(rng);
      o.require(parse_qpn(serialize_qpn(q)) == q, "random model");
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
