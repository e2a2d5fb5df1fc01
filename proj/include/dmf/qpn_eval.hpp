#ifndef DMF_QPN_EVAL_HPP
#define DMF_QPN_EVAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dmf/qpn.hpp"
#include "dmf/sign.hpp"

namespace dmf {

/// Sum over all directed paths from -> to of the product of edge signs.
/// zero iff there is no path; plus when from == to.
EvalSign net_influence(const Qpn& model, const ConceptId& from, const ConceptId& to);

/// Removes chance node `n`, splicing each p -> n -> s into p -> s and merging
/// parallel edges. Throws ModelError(not_chance_node / unknown_node).
Qpn reduce_node(const Qpn& model, const ConceptId& n);

enum class Recommendation { favorable, unfavorable, no_effect, tradeoff };

std::string_view to_string(Recommendation recommendation);
Recommendation recommend(EvalSign sign);

/// Influence carried through one first hop out of a decision node.
struct PathFamily {
  ConceptId via;
  EvalSign sign;
};

struct DecisionEvaluation {
  ConceptId decision;
  EvalSign net;
  Recommendation recommendation;
  std::vector<PathFamily> families;  // non-zero only; +, -, ? then by id
};

struct Evaluation {
  ConceptId criterion;
  std::vector<DecisionEvaluation> decisions;
};

Evaluation evaluate_model(const Qpn& model);

/// e.g. "anticoagulant-therapy: tradeoff (+ via embolism path, − via bleeding path)"
std::string format_decision(const DecisionEvaluation& evaluation);
std::string format_evaluation(const Evaluation& evaluation);

}  // namespace dmf

#endif  // DMF_QPN_EVAL_HPP
