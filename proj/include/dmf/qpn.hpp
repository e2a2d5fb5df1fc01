#ifndef DMF_QPN_HPP
#define DMF_QPN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmf/concept_id.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/sign.hpp"

namespace dmf {

enum class ModelErrorKind {
  cyclic,
  no_decision_node,
  no_value_node,
  not_chance_node,
  unknown_node,
  duplicate_node,
  duplicate_edge,
  invalid_edge,
  syntax,
};

std::string_view to_string(ModelErrorKind kind);

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, const std::string& message,
             std::vector<ConceptId> members = {}, int line = 0);

  ModelErrorKind kind() const { return kind_; }
  const std::vector<ConceptId>& members() const { return members_; }
  int line() const { return line_; }

 private:
  ModelErrorKind kind_;
  std::vector<ConceptId> members_;
  int line_;
};

enum class NodeKind { decision, chance, value };

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);

struct QpnNode {
  ConceptId concept_id;
  NodeKind kind = NodeKind::chance;
  std::vector<ConceptId> values;

  bool operator==(const QpnNode&) const = default;
};

struct QpnEdge {
  ConceptId from;
  ConceptId to;
  EvalSign sign = EvalSign::plus;
  std::optional<InteractionAssertion> origin;

  /// Structural equality; `origin` is provenance and not compared.
  bool operator==(const QpnEdge& other) const {
    return from == other.from && to == other.to && sign == other.sign;
  }
};

/// A signed DAG over concept nodes.
///
/// The constructor enforces the structural invariants: unique nodes, edge
/// endpoints are nodes, no self edges, no zero signs, at most one edge per
/// ordered pair, acyclic. Nodes and edges are stored sorted, so two models
/// with the same content compare and serialize identically.
class Qpn {
 public:
  Qpn() = default;
  Qpn(std::vector<QpnNode> nodes, std::vector<QpnEdge> edges);

  const std::vector<QpnNode>& nodes() const { return nodes_; }
  const std::vector<QpnEdge>& edges() const { return edges_; }

  const QpnNode* find(const ConceptId& id) const;
  const QpnNode& node(const ConceptId& id) const;  // throws ModelError
  const QpnEdge* edge(const ConceptId& from, const ConceptId& to) const;
  std::vector<const QpnEdge*> out_edges(const ConceptId& id) const;
  std::vector<const QpnEdge*> in_edges(const ConceptId& id) const;

  /// Kahn's algorithm, smallest id first among ready nodes.
  std::vector<ConceptId> topological_order() const;

  std::vector<ConceptId> nodes_of_kind(NodeKind kind) const;
  /// The value node, if there is exactly one.
  std::optional<ConceptId> criterion() const;

  bool operator==(const Qpn& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  std::vector<QpnNode> nodes_;
  std::vector<QpnEdge> edges_;
};

/// Decision-model invariants on top of the structural ones: exactly one value
/// node with no outgoing edges, at least one decision node, no incoming edges
/// into decision nodes. Throws ModelError.
void check_decision_model(const Qpn& model);

}  // namespace dmf

#endif  // DMF_QPN_HPP
