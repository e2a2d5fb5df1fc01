#include "dmf/qpn.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace dmf {

std::string_view to_string(ModelErrorKind kind) {
  switch (kind) {
    case ModelErrorKind::cyclic: return "CyclicModel";
    case ModelErrorKind::no_decision_node: return "NoDecisionNode";
    case ModelErrorKind::no_value_node: return "NoValueNode";
    case ModelErrorKind::not_chance_node: return "NotChanceNode";
    case ModelErrorKind::unknown_node: return "UnknownNode";
    case ModelErrorKind::duplicate_node: return "DuplicateNode";
    case ModelErrorKind::duplicate_edge: return "DuplicateEdge";
    case ModelErrorKind::invalid_edge: return "InvalidEdge";
    case ModelErrorKind::syntax: return "SyntaxError";
  }
  return "?";
}

namespace {

std::string model_message(ModelErrorKind kind, const std::string& message,
                          const std::vector<ConceptId>& members, int line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  out += std::string(to_string(kind)) + ": " + message;
  if (!members.empty()) {
    out += " {";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i].str();
    out += "}";
  }
  return out;
}

}  // namespace

ModelError::ModelError(ModelErrorKind kind, const std::string& message,
                       std::vector<ConceptId> members, int line)
    : std::runtime_error(model_message(kind, message, members, line)),
      kind_(kind),
      members_(std::move(members)),
      line_(line) {}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::decision: return "decision";
    case NodeKind::chance: return "chance";
    case NodeKind::value: return "value";
  }
  return "?";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  for (auto kind : {NodeKind::decision, NodeKind::chance, NodeKind::value}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

Qpn::Qpn(std::vector<QpnNode> nodes, std::vector<QpnEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const QpnNode& a, const QpnNode& b) { return a.concept_id < b.concept_id; });
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].concept_id == nodes_[i - 1].concept_id) {
      throw ModelError(ModelErrorKind::duplicate_node, "node declared twice",
                       {nodes_[i].concept_id});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const QpnEdge& a, const QpnEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const QpnEdge& e = edges_[i];
    for (const ConceptId* end : {&e.from, &e.to}) {
      if (!find(*end)) throw ModelError(ModelErrorKind::unknown_node, "edge endpoint", {*end});
    }
    if (e.from == e.to) throw ModelError(ModelErrorKind::invalid_edge, "self edge", {e.from});
    if (e.sign == EvalSign::zero) {
      throw ModelError(ModelErrorKind::invalid_edge, "edge with zero sign", {e.from, e.to});
    }
    if (i > 0 && edges_[i - 1].from == e.from && edges_[i - 1].to == e.to) {
      throw ModelError(ModelErrorKind::duplicate_edge, "parallel edges", {e.from, e.to});
    }
  }
  if (topological_order().size() == nodes_.size()) return;

  // Walk out-edges among the nodes that never became ready until one repeats.
  std::set<ConceptId> stuck;
  {
    const auto sorted = topological_order();
    std::set<ConceptId> done(sorted.begin(), sorted.end());
    for (const auto& n : nodes_) {
      if (!done.count(n.concept_id)) stuck.insert(n.concept_id);
    }
  }
  // Drop stuck nodes with no stuck successor until only cycle-bearing ones remain.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = stuck.begin(); it != stuck.end();) {
      const auto outs = out_edges(*it);
      const bool has_next = std::any_of(outs.begin(), outs.end(),
                                        [&](const QpnEdge* e) { return stuck.count(e->to); });
      if (has_next) {
        ++it;
      } else {
        it = stuck.erase(it);
        changed = true;
      }
    }
  }
  std::vector<ConceptId> walk{*stuck.begin()};
  while (true) {
    const auto outs = out_edges(walk.back());
    const auto next = std::find_if(outs.begin(), outs.end(),
                                   [&](const QpnEdge* e) { return stuck.count(e->to); });
    const ConceptId to = (*next)->to;
    if (auto seen = std::find(walk.begin(), walk.end(), to); seen != walk.end()) {
      std::vector<ConceptId> cycle(seen, walk.end());
      std::sort(cycle.begin(), cycle.end());
      throw ModelError(ModelErrorKind::cyclic, "model contains a directed cycle",
                       std::move(cycle));
    }
    walk.push_back(to);
  }
}

const QpnNode* Qpn::find(const ConceptId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const QpnNode& n, const ConceptId& x) { return n.concept_id < x; });
  return it != nodes_.end() && it->concept_id == id ? &*it : nullptr;
}

const QpnNode& Qpn::node(const ConceptId& id) const {
  if (const QpnNode* n = find(id)) return *n;
  throw ModelError(ModelErrorKind::unknown_node, "not a node of the model", {id});
}

const QpnEdge* Qpn::edge(const ConceptId& from, const ConceptId& to) const {
  for (const auto& e : edges_) {
    if (e.from == from && e.to == to) return &e;
  }
  return nullptr;
}

std::vector<const QpnEdge*> Qpn::out_edges(const ConceptId& id) const {
  std::vector<const QpnEdge*> out;
  for (const auto& e : edges_) {
    if (e.from == id) out.push_back(&e);
  }
  return out;
}

std::vector<const QpnEdge*> Qpn::in_edges(const ConceptId& id) const {
  std::vector<const QpnEdge*> out;
  for (const auto& e : edges_) {
    if (e.to == id) out.push_back(&e);
  }
  return out;
}

std::vector<ConceptId> Qpn::topological_order() const {
  std::map<ConceptId, std::size_t> indegree;
  for (const auto& n : nodes_) indegree[n.concept_id] = 0;
  for (const auto& e : edges_) ++indegree[e.to];
  std::priority_queue<ConceptId, std::vector<ConceptId>, std::greater<>> ready;
  for (const auto& [id, d] : indegree) {
    if (d == 0) ready.push(id);
  }
  std::vector<ConceptId> order;
  while (!ready.empty()) {
    ConceptId id = ready.top();
    ready.pop();
    for (const QpnEdge* e : out_edges(id)) {
      if (--indegree[e->to] == 0) ready.push(e->to);
    }
    order.push_back(std::move(id));
  }
  return order;
}

std::vector<ConceptId> Qpn::nodes_of_kind(NodeKind kind) const {
  std::vector<ConceptId> out;
  for (const auto& n : nodes_) {
    if (n.kind == kind) out.push_back(n.concept_id);
  }
  return out;
}

std::optional<ConceptId> Qpn::criterion() const {
  auto values = nodes_of_kind(NodeKind::value);
  if (values.size() != 1) return std::nullopt;
  return values.front();
}

void check_decision_model(const Qpn& model) {
  const auto values = model.nodes_of_kind(NodeKind::value);
  if (values.empty()) throw ModelError(ModelErrorKind::no_value_node, "model has no value node");
  if (values.size() > 1) {
    throw ModelError(ModelErrorKind::no_value_node, "model needs exactly one value node", values);
  }
  if (!model.out_edges(values.front()).empty()) {
    throw ModelError(ModelErrorKind::invalid_edge, "value node has outgoing edges", values);
  }
  const auto decisions = model.nodes_of_kind(NodeKind::decision);
  if (decisions.empty()) {
    throw ModelError(ModelErrorKind::no_decision_node, "model has no decision node");
  }
  for (const auto& d : decisions) {
    if (!model.in_edges(d).empty()) {
      throw ModelError(ModelErrorKind::invalid_edge, "decision node has incoming edges", {d});
    }
  }
}

}  // namespace dmf
