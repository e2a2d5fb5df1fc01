#include "dmf/qpn_eval.hpp"

#include <algorithm>
#include <map>

namespace dmf {

EvalSign net_influence(const Qpn& model, const ConceptId& from, const ConceptId& to) {
  model.node(from);
  model.node(to);
  if (from == to) return EvalSign::plus;
  // reach[x] = signed sum over paths from -> x, filled in topological order.
  std::map<ConceptId, EvalSign> reach;
  reach[from] = EvalSign::plus;
  for (const auto& id : model.topological_order()) {
    auto it = reach.find(id);
    if (it == reach.end() || it->second == EvalSign::zero) continue;
    if (id == to) break;
    for (const QpnEdge* e : model.out_edges(id)) {
      auto [slot, fresh] = reach.try_emplace(e->to, EvalSign::zero);
      slot->second = sign_sum(slot->second, sign_product(it->second, e->sign));
    }
  }
  auto it = reach.find(to);
  return it == reach.end() ? EvalSign::zero : it->second;
}

Qpn reduce_node(const Qpn& model, const ConceptId& n) {
  if (model.node(n).kind != NodeKind::chance) {
    throw ModelError(ModelErrorKind::not_chance_node, "only chance nodes can be reduced", {n});
  }
  std::vector<QpnNode> nodes;
  for (const auto& node : model.nodes()) {
    if (node.concept_id != n) nodes.push_back(node);
  }
  std::map<std::pair<ConceptId, ConceptId>, QpnEdge> edges;
  auto add = [&](QpnEdge e) {
    auto [it, fresh] = edges.try_emplace({e.from, e.to}, e);
    if (!fresh) {
      it->second.sign = sign_sum(it->second.sign, e.sign);
      it->second.origin.reset();
    }
  };
  for (const auto& e : model.edges()) {
    if (e.from != n && e.to != n) add(e);
  }
  for (const QpnEdge* in : model.in_edges(n)) {
    for (const QpnEdge* out : model.out_edges(n)) {
      add(QpnEdge{in->from, out->to, sign_product(in->sign, out->sign), std::nullopt});
    }
  }
  std::vector<QpnEdge> kept;
  for (auto& [key, e] : edges) kept.push_back(std::move(e));
  return Qpn(std::move(nodes), std::move(kept));
}

std::string_view to_string(Recommendation recommendation) {
  switch (recommendation) {
    case Recommendation::favorable: return "favorable";
    case Recommendation::unfavorable: return "unfavorable";
    case Recommendation::no_effect: return "no-effect";
    case Recommendation::tradeoff: return "tradeoff";
  }
  return "?";
}

Recommendation recommend(EvalSign sign) {
  switch (sign) {
    case EvalSign::plus: return Recommendation::favorable;
    case EvalSign::minus: return Recommendation::unfavorable;
    case EvalSign::zero: return Recommendation::no_effect;
    case EvalSign::ambiguous: return Recommendation::tradeoff;
  }
  return Recommendation::tradeoff;
}

namespace {

int family_rank(EvalSign sign) {
  switch (sign) {
    case EvalSign::plus: return 0;
    case EvalSign::minus: return 1;
    case EvalSign::ambiguous: return 2;
    case EvalSign::zero: return 3;
  }
  return 3;
}

}  // namespace

Evaluation evaluate_model(const Qpn& model) {
  check_decision_model(model);
  Evaluation result{*model.criterion(), {}};
  for (const auto& d : model.nodes_of_kind(NodeKind::decision)) {
    DecisionEvaluation de{d, net_influence(model, d, result.criterion), {}, {}};
    de.recommendation = recommend(de.net);
    for (const QpnEdge* e : model.out_edges(d)) {
      const EvalSign s = sign_product(e->sign, net_influence(model, e->to, result.criterion));
      if (s != EvalSign::zero) de.families.push_back({e->to, s});
    }
    std::sort(de.families.begin(), de.families.end(), [](const auto& a, const auto& b) {
      return std::pair(family_rank(a.sign), a.via) < std::pair(family_rank(b.sign), b.via);
    });
    result.decisions.push_back(std::move(de));
  }
  return result;
}

std::string format_decision(const DecisionEvaluation& evaluation) {
  std::string out = evaluation.decision.str() + ": " + std::string(to_string(evaluation.recommendation));
  if (!evaluation.families.empty()) {
    out += " (";
    for (std::size_t i = 0; i < evaluation.families.size(); ++i) {
      const auto& f = evaluation.families[i];
      if (i) out += ", ";
      out += std::string(pretty_symbol(f.sign)) + " via " + f.via.str() + " path";
    }
    out += ")";
  }
  return out;
}

std::string format_evaluation(const Evaluation& evaluation) {
  std::string out;
  for (const auto& d : evaluation.decisions) out += format_decision(d) + "\n";
  return out;
}

}  // namespace dmf
