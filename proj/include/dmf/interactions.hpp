#ifndef DMF_INTERACTIONS_HPP
#define DMF_INTERACTIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dmf/categorization.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/trace.hpp"

namespace dmf {

enum class InteractionKind {
  association,
  precedence,
  positive_influence,
  negative_influence,
  cause,
  inhibit,
};

inline constexpr std::array<InteractionKind, 6> kInteractionKinds{
    InteractionKind::association,        InteractionKind::precedence,
    InteractionKind::positive_influence, InteractionKind::negative_influence,
    InteractionKind::cause,              InteractionKind::inhibit,
};

std::string_view to_string(InteractionKind kind);
/// Accepts the hyphenated names; "inhibitor" is an alias of inhibit.
std::optional<InteractionKind> parse_interaction_kind(std::string_view text);

/// Precedence x sign -> kind. Total and bijective:
///   unknown/unknown -> association       known/unknown -> precedence
///   unknown/+       -> positive-influence unknown/-     -> negative-influence
///   known/+         -> cause              known/-       -> inhibit
InteractionKind classify_kind(Precedence prec, InfluenceSign sign);

inline InteractionKind classify(const InteractionAssertion& a) {
  return classify_kind(a.prec, a.sign);
}

/// An interaction as seen from one concept. Assertions made on an AKO
/// ancestor or EQV member are re-pointed at the concept; context and
/// significance are kept.
struct VisibleInteraction {
  InteractionAssertion assertion;
  std::size_t origin = 0;  // index into kb.interactions()
  Derivation how = Derivation::direct;
  std::optional<ConceptId> via;  // the endpoint that was re-pointed

  InteractionKind kind() const { return classify(assertion); }
};

/// Ranking: context specificity desc, significance desc, then source, target
/// and the remaining fields ascending. A strict total order on values.
bool ranks_before(const VisibleInteraction& lhs, const VisibleInteraction& rhs);
void rank(std::vector<VisibleInteraction>& interactions);

/// Interactions visible under one active context. Computes the AKO and EQV
/// closures once so repeated lookups stay cheap.
class InteractionView {
 public:
  InteractionView(const KnowledgeBase& kb, Context active);

  const Context& active() const { return active_; }
  const Relation& ako() const { return ako_; }

  /// Ranked interactions whose source or target is `id`, an AKO ancestor of
  /// it, or an EQV member of its class.
  std::vector<VisibleInteraction> about(const ConceptId& id) const;

  /// The interaction itself followed by the categorical assertions that
  /// justify re-pointing it, if any.
  std::vector<TraceEntry> trace(const ConceptId& id, const VisibleInteraction& vi) const;

 private:
  const KnowledgeBase* kb_;
  Context active_;
  Relation ako_;
  Relation eqv_;
  std::vector<std::size_t> visible_;
};

std::vector<VisibleInteraction> visible_interactions(const KnowledgeBase& kb,
                                                     const ConceptId& id,
                                                     const Context& active);

}  // namespace dmf

#endif  // DMF_INTERACTIONS_HPP
