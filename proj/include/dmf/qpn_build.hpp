#ifndef DMF_QPN_BUILD_HPP
#define DMF_QPN_BUILD_HPP

#include <map>
#include <string>
#include <vector>

#include "dmf/context.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/planner.hpp"
#include "dmf/qpn.hpp"

namespace dmf {

struct ExcludedAssertion {
  InteractionAssertion assertion;
  std::string reason;
};

struct ModelBuild {
  Qpn model;
  /// Formulation concepts folded into another node as one of its values.
  std::map<ConceptId, ConceptId> absorbed;
  std::vector<ExcludedAssertion> excluded;
};

/// Builds the decision model for a formulation. Alternatives become decision
/// nodes, the criterion the value node, everything else a chance node. A
/// concept that is a kind of another included chance concept is absorbed as
/// one of its values. Association links, edges into decisions, edges out of
/// the value node and edges collapsed to self loops are left out and listed.
/// Throws ModelError (cyclic, no decision node, no value node).
ModelBuild construct_model(const KnowledgeBase& kb, const ProblemFormulation& formulation,
                           const Context& ctx);

std::string format_build_report(const ModelBuild& build);

}  // namespace dmf

#endif  // DMF_QPN_BUILD_HPP
