// Shared fixtures, random generators and brute-force oracles for the tests.
#ifndef DMF_TESTS_SUPPORT_HPP
#define DMF_TESTS_SUPPORT_HPP

#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dmf/kb_parser.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/qpn.hpp"
#include "dmf/sign.hpp"

namespace dmf::testing {

inline std::string data_path(const std::string& name) { return std::string(DMF_DATA_DIR) + "/" + name; }

inline const KnowledgeBase& fixture_kb() {
  static const KnowledgeBase kb = load_kb(data_path("cardiomyopathy.kb"));
  return kb;
}

inline ConceptId id(const char* name) { return ConceptId(name); }

using Pairs = std::set<std::pair<ConceptId, ConceptId>>;

// Random KB text over c0..c(n-1), property-concepts p0, p1 and a few derived
// concepts. AKO/PARTOF edges point from a higher to a lower index, so cycles
// only arise through EQV substitution or contexts; callers decide whether to
// keep such cases.
inline std::string random_kb_text(std::mt19937& rng, int max_concepts = 8) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  const int n = pick(3, max_concepts);
  auto c = [](int i) { return "c" + std::to_string(i); };

  std::string text;
  for (int i = 0; i < n; ++i) text += "concept " + c(i) + "\n";
  text += "concept p0\nconcept p1\n";

  std::vector<std::string> derived;
  for (int i = 0; i < n; ++i) {
    for (const char* p : {"p0", "p1"}) {
      if (!chance(0.25)) continue;
      text += "property " + c(i) + "." + p + "\n";
      derived.push_back(std::string(p) + "-of-" + c(i));
      if (chance(0.4)) text += "value " + c(i) + "." + p + " = " + c(pick(0, n - 1)) + "\n";
    }
  }

  auto context = [&]() -> std::string {
    if (!chance(0.3)) return "";
    std::string ctx = " @ " + c(pick(0, n - 1));
    if (chance(0.4)) ctx += "+" + c(pick(0, n - 1));
    return ctx;
  };

  const int categorical = pick(0, 2 * n);
  for (int k = 0; k < categorical; ++k) {
    int a = pick(0, n - 1);
    int b = pick(0, n - 1);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    const int roll = pick(0, 9);
    const char* kind = roll < 6 ? "ako" : roll < 8 ? "partof" : "eqv";
    text += std::string(kind) + " " + c(a) + " " + c(b) + context() + "\n";
  }

  std::vector<std::string> endpoints;
  for (int i = 0; i < n; ++i) endpoints.push_back(c(i));
  endpoints.insert(endpoints.end(), derived.begin(), derived.end());
  const int links = pick(0, n);
  for (int k = 0; k < links; ++k) {
    const auto& s = endpoints[pick(0, static_cast<int>(endpoints.size()) - 1)];
    const auto& t = endpoints[pick(0, static_cast<int>(endpoints.size()) - 1)];
    if (s == t) continue;
    const char* sign = std::array{"+", "-", "?"}[pick(0, 2)];
    const char* prec = chance(0.5) ? "known" : "unknown";
    text += "link " + s + " -> " + t + " sign=" + sign + " prec=" + prec +
            " sig=0." + std::to_string(pick(0, 9)) + context() + "\n";
  }
  return text;
}

inline bool oracle_visible(const Context& ctx, const Context& active, const Pairs& ako,
                           const Pairs& eqv) {
  if (ctx.is_universal()) return true;
  if (active.is_universal()) return false;
  for (const auto& cond : ctx.conditions()) {
    bool covered = active.contains(cond);
    for (const auto& m : active.conditions()) {
      covered = covered || ako.count({m, cond}) || eqv.count({m, cond});
    }
    if (!covered) return false;
  }
  return true;
}

// Fixpoint over the definitions: transitivity, EQV substitution on either
// side and, for AKO, lifting through derived concepts sharing a property.
// Returns the pair set; the caller checks reflexive pairs for cycles.
inline Pairs oracle_closure(const KnowledgeBase& kb, CategorizerKind kind, const Context& active) {
  Pairs universal_ako;
  Pairs universal_eqv;
  if (!active.is_universal()) {
    universal_ako = oracle_closure(kb, CategorizerKind::ako, Context::universal());
    universal_eqv = oracle_closure(kb, CategorizerKind::eqv, Context::universal());
  }
  Pairs eqv;
  Pairs rel;
  for (const auto& a : kb.categorical()) {
    if (a.kind != kind && a.kind != CategorizerKind::eqv) continue;
    if (!oracle_visible(a.context, active, universal_ako, universal_eqv)) continue;
    if (a.kind == CategorizerKind::eqv) {
      eqv.insert({a.a, a.b});
      eqv.insert({a.b, a.a});
      eqv.insert({a.a, a.a});
      eqv.insert({a.b, a.b});
    } else {
      rel.insert({a.a, a.b});
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    const Pairs snapshot = eqv;
    for (const auto& [x, y] : snapshot) {
      for (const auto& [y2, z] : snapshot) {
        if (y == y2) changed |= eqv.insert({x, z}).second;
      }
    }
  }
  if (kind == CategorizerKind::eqv) return eqv;

  std::vector<std::pair<ConceptId, DerivedOrigin>> derived;
  for (const auto& [cid, c] : kb.concepts()) {
    if (c.derived) derived.emplace_back(cid, *c.derived);
  }
  for (bool changed = true; changed;) {
    changed = false;
    const Pairs snapshot = rel;
    for (const auto& [x, y] : snapshot) {
      for (const auto& [y2, z] : snapshot) {
        if (y == y2) changed |= rel.insert({x, z}).second;
      }
      for (const auto& [u, v] : eqv) {
        if (u == x) changed |= rel.insert({v, y}).second;
        if (u == y) changed |= rel.insert({x, v}).second;
      }
      if (kind != CategorizerKind::ako || x == y) continue;
      for (const auto& [dx, ox] : derived) {
        for (const auto& [dy, oy] : derived) {
          if (ox.property == oy.property && ox.of == x && oy.of == y) {
            changed |= rel.insert({dx, dy}).second;
          }
        }
      }
    }
  }
  return rel;
}

inline bool has_reflexive(const Pairs& rel) {
  for (const auto& [x, y] : rel) {
    if (x == y) return true;
  }
  return false;
}

// Random DAG: nodes n0..n(k-1) with edges only from lower to higher index.
inline Qpn random_dag(std::mt19937& rng, int max_nodes = 10, int max_edges = 20) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(2, max_nodes);
  std::vector<QpnNode> nodes;
  for (int i = 0; i < n; ++i) {
    const NodeKind kind = i == 0 ? NodeKind::decision : i == n - 1 ? NodeKind::value : NodeKind::chance;
    QpnNode node{ConceptId("n" + std::to_string(i)), kind, {}};
    if (kind != NodeKind::value) node.values = {builtin::present(), builtin::absent()};
    nodes.push_back(std::move(node));
  }
  std::set<std::pair<int, int>> used;
  std::vector<QpnEdge> edges;
  const int target = pick(0, max_edges);
  for (int k = 0; k < 4 * target && static_cast<int>(edges.size()) < target; ++k) {
    int a = pick(0, n - 1);
    int b = pick(0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.emplace(a, b).second) continue;
    const EvalSign sign = std::array{EvalSign::plus, EvalSign::minus, EvalSign::ambiguous}[pick(0, 2)];
    edges.push_back({nodes[a].concept_id, nodes[b].concept_id, sign, std::nullopt});
  }
  return Qpn(std::move(nodes), std::move(edges));
}

// Sum over every explicit path of the product of its edge signs.
inline EvalSign oracle_net(const Qpn& q, const ConceptId& from, const ConceptId& to) {
  if (from == to) return EvalSign::plus;
  EvalSign total = EvalSign::zero;
  std::function<void(const ConceptId&, EvalSign)> walk = [&](const ConceptId& at, EvalSign acc) {
    for (const auto& e : q.edges()) {
      if (e.from != at) continue;
      const EvalSign next = sign_product(acc, e.sign);
      if (e.to == to) {
        total = sign_sum(total, next);
      } else {
        walk(e.to, next);
      }
    }
  };
  walk(from, EvalSign::plus);
  return total;
}

}  // namespace dmf::testing

#endif  // DMF_TESTS_SUPPORT_HPP
