#include "dmf/qpn_build.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dmf/categorization.hpp"

namespace dmf {

namespace {

EvalSign edge_sign(const InteractionAssertion& a) {
  switch (a.sign) {
    case InfluenceSign::positive: return EvalSign::plus;
    case InfluenceSign::negative: return EvalSign::minus;
    case InfluenceSign::unknown: return EvalSign::ambiguous;
  }
  return EvalSign::ambiguous;
}

}  // namespace

ModelBuild construct_model(const KnowledgeBase& kb, const ProblemFormulation& formulation,
                           const Context& ctx) {
  ModelBuild build;
  const Relation ako = ako_closure(kb, ctx);

  std::map<ConceptId, NodeKind> kinds;
  for (const auto& fc : formulation.concepts) {
    NodeKind kind = NodeKind::chance;
    if (fc.role == Role::alternative) kind = NodeKind::decision;
    if (fc.id == formulation.criterion) kind = NodeKind::value;
    kinds.emplace(fc.id, kind);
  }
  if (!kinds.count(formulation.criterion)) kinds.emplace(formulation.criterion, NodeKind::value);

  // A chance concept folds into its topmost included chance ancestor.
  for (const auto& [id, kind] : kinds) {
    if (kind != NodeKind::chance) continue;
    std::optional<ConceptId> top;
    for (const auto& anc : ako.successors(id)) {
      auto it = kinds.find(anc);
      if (it == kinds.end() || it->second != NodeKind::chance || anc == id) continue;
      const bool maximal = std::none_of(
          ako.successors(anc).begin(), ako.successors(anc).end(), [&](const ConceptId& up) {
            auto jt = kinds.find(up);
            return jt != kinds.end() && jt->second == NodeKind::chance;
          });
      if (maximal && !top) top = anc;
    }
    if (top) build.absorbed.emplace(id, *top);
  }
  auto target_of = [&](const ConceptId& id) {
    auto it = build.absorbed.find(id);
    return it == build.absorbed.end() ? id : it->second;
  };

  std::vector<QpnNode> nodes;
  for (const auto& [id, kind] : kinds) {
    if (build.absorbed.count(id)) continue;
    QpnNode node{id, kind, {}};
    if (kind == NodeKind::decision) {
      node.values = {builtin::present(), builtin::absent()};
    } else if (kind == NodeKind::chance) {
      for (const auto& [child, parent] : build.absorbed) {
        if (parent == id) node.values.push_back(child);
      }
      if (!node.values.empty()) {
        node.values.push_back(builtin::absent());
      } else {
        node.values = property_values(kb, id, builtin::presence(), ctx).values;
      }
    }
    nodes.push_back(std::move(node));
  }

  std::map<std::pair<ConceptId, ConceptId>, QpnEdge> merged;
  for (const auto& vi : formulation.selected) {
    const InteractionAssertion& a = vi.assertion;
    auto exclude = [&](const char* reason) { build.excluded.push_back({a, reason}); };
    if (a.sign == InfluenceSign::unknown && a.prec == Precedence::unknown) {
      exclude("association");
      continue;
    }
    if (!kinds.count(a.source) || !kinds.count(a.target)) {
      exclude("endpoint outside the formulation");
      continue;
    }
    const ConceptId from = target_of(a.source);
    const ConceptId to = target_of(a.target);
    if (from == to) {
      exclude("self loop after absorption");
      continue;
    }
    if (kinds.at(to) == NodeKind::decision) {
      exclude("edge into a decision node");
      continue;
    }
    if (kinds.at(from) == NodeKind::value) {
      exclude("edge out of the value node");
      continue;
    }
    const EvalSign sign = edge_sign(a);
    auto [it, fresh] = merged.try_emplace({from, to}, QpnEdge{from, to, sign, a});
    if (!fresh) it->second.sign = sign_sum(it->second.sign, sign);
  }
  std::vector<QpnEdge> edges;
  for (auto& [key, edge] : merged) edges.push_back(std::move(edge));

  build.model = Qpn(std::move(nodes), std::move(edges));
  check_decision_model(build.model);
  return build;
}

std::string format_build_report(const ModelBuild& build) {
  std::ostringstream out;
  out << "model: " << build.model.nodes().size() << " nodes, " << build.model.edges().size()
      << " edges\n";
  for (const auto& [child, parent] : build.absorbed) {
    out << "  absorbed " << child << " as a value of " << parent << "\n";
  }
  for (const auto& ex : build.excluded) {
    out << "  excluded " << render(ex.assertion) << " (" << ex.reason << ")\n";
  }
  return out.str();
}

}  // namespace dmf
