#include "dmf/interactions.hpp"

#include <algorithm>
#include <tuple>

namespace dmf {

std::string_view to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::association: return "association";
    case InteractionKind::precedence: return "precedence";
    case InteractionKind::positive_influence: return "positive-influence";
    case InteractionKind::negative_influence: return "negative-influence";
    case InteractionKind::cause: return "cause";
    case InteractionKind::inhibit: return "inhibit";
  }
  return "?";
}

std::optional<InteractionKind> parse_interaction_kind(std::string_view text) {
  for (auto kind : kInteractionKinds) {
    if (text == to_string(kind)) return kind;
  }
  if (text == "inhibitor") return InteractionKind::inhibit;
  return std::nullopt;
}

InteractionKind classify_kind(Precedence prec, InfluenceSign sign) {
  const bool known = prec == Precedence::known;
  switch (sign) {
    case InfluenceSign::unknown:
      return known ? InteractionKind::precedence : InteractionKind::association;
    case InfluenceSign::positive:
      return known ? InteractionKind::cause : InteractionKind::positive_influence;
    case InfluenceSign::negative:
      return known ? InteractionKind::inhibit : InteractionKind::negative_influence;
  }
  return InteractionKind::association;
}

bool ranks_before(const VisibleInteraction& lhs, const VisibleInteraction& rhs) {
  const auto& a = lhs.assertion;
  const auto& b = rhs.assertion;
  const auto key = [](const VisibleInteraction& vi) {
    const auto& x = vi.assertion;
    return std::tie(x.source, x.target, x.sign, x.prec, x.context, vi.origin, vi.how);
  };
  if (a.context.specificity() != b.context.specificity()) {
    return a.context.specificity() > b.context.specificity();
  }
  if (a.significance != b.significance) return a.significance > b.significance;
  return key(lhs) < key(rhs);
}

void rank(std::vector<VisibleInteraction>& interactions) {
  std::sort(interactions.begin(), interactions.end(), ranks_before);
}

InteractionView::InteractionView(const KnowledgeBase& kb, Context active)
    : kb_(&kb),
      active_(std::move(active)),
      ako_(categorizer_closure(kb, CategorizerKind::ako, active_)),
      eqv_(categorizer_closure(kb, CategorizerKind::eqv, active_)) {
  const auto& all = kb.interactions();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (context_visible(all[i].context, active_, kb)) visible_.push_back(i);
  }
}

std::vector<VisibleInteraction> InteractionView::about(const ConceptId& id) const {
  const auto& ancestors = ako_.successors(id);
  const auto& equivalents = eqv_.successors(id);
  auto match = [&](const ConceptId& x) -> std::optional<Derivation> {
    if (x == id) return Derivation::direct;
    if (equivalents.count(x)) return Derivation::eqv_substituted;
    if (ancestors.count(x)) return Derivation::inherited;
    return std::nullopt;
  };

  std::vector<VisibleInteraction> out;
  for (std::size_t idx : visible_) {
    const InteractionAssertion& original = kb_->interactions()[idx];
    const auto source = match(original.source);
    const auto target = match(original.target);
    VisibleInteraction vi{original, idx, Derivation::direct, std::nullopt};
    if (source == Derivation::direct || target == Derivation::direct) {
      // about `id` itself; nothing to re-point
    } else if (source) {
      vi.how = *source;
      vi.via = original.source;
      vi.assertion.source = id;
    } else if (target) {
      vi.how = *target;
      vi.via = original.target;
      vi.assertion.target = id;
    } else {
      continue;
    }
    if (vi.assertion.source == vi.assertion.target) continue;
    out.push_back(std::move(vi));
  }
  rank(out);
  return out;
}

std::vector<TraceEntry> InteractionView::trace(const ConceptId& id,
                                               const VisibleInteraction& vi) const {
  std::vector<TraceEntry> out{{vi.how, AssertionStore::interaction, vi.origin,
                               render(kb_->interactions()[vi.origin])}};
  if (vi.via) {
    const Relation& rel = vi.how == Derivation::eqv_substituted ? eqv_ : ako_;
    for (auto& e : rel.explain(id, *vi.via, *kb_)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<VisibleInteraction> visible_interactions(const KnowledgeBase& kb,
                                                     const ConceptId& id,
                                                     const Context& active) {
  kb.at(id);
  return InteractionView(kb, active).about(id);
}

}  // namespace dmf
