#ifndef DMF_CATEGORIZATION_HPP
#define DMF_CATEGORIZATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dmf/concept_id.hpp"
#include "dmf/context.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/trace.hpp"

namespace dmf {

/// The closure of one categorizer under one active context.
///
/// Internally a graph of steps: asserted edges of the categorizer, EQV edges
/// (traversable in both directions, substitution only) and, for AKO, lifted
/// edges between derived concepts. A pair (a, b) is in an AKO/PARTOF closure
/// iff b is reachable from a through at least one non-EQV step; for EQV it is
/// plain reachability among concepts that appear in some EQV assertion.
class Relation {
 public:
  enum class StepKind { asserted, eqv, lifted };

  struct Step {
    ConceptId from;
    ConceptId to;
    StepKind kind;
    std::size_t assertion = 0;  // asserted / eqv: index into kb.categorical()
    std::optional<std::pair<ConceptId, ConceptId>> lifted_from;
  };

  CategorizerKind kind() const { return kind_; }

  bool contains(const ConceptId& a, const ConceptId& b) const;
  /// {b | (a, b) in closure}
  const std::set<ConceptId>& successors(const ConceptId& a) const;
  /// {a | (a, b) in closure}
  const std::set<ConceptId>& predecessors(const ConceptId& b) const;

  std::size_t size() const;
  std::vector<std::pair<ConceptId, ConceptId>> pairs() const;
  const std::vector<Step>& steps() const { return steps_; }

  /// Assertions justifying (a, b); empty iff the pair is not in the closure.
  std::vector<TraceEntry> explain(const ConceptId& a, const ConceptId& b,
                                  const KnowledgeBase& kb) const;

  /// Steps away from `a` along non-EQV steps, for every concept reachable;
  /// EQV hops are free.
  std::map<ConceptId, std::size_t> distances_from(const ConceptId& a) const;

 private:
  friend Relation categorizer_closure(const KnowledgeBase&, CategorizerKind, const Context&);

  explicit Relation(CategorizerKind kind) : kind_(kind) {}
  void add_step(Step step);
  void recompute();
  std::vector<const Step*> find_path(const ConceptId& a, const ConceptId& b) const;

  CategorizerKind kind_;
  std::vector<Step> steps_;
  std::map<ConceptId, std::vector<std::size_t>> out_;
  std::map<ConceptId, std::set<ConceptId>> succ_;
  std::map<ConceptId, std::set<ConceptId>> pred_;
};

/// Closure of `kind` over the assertions visible in `active`. Throws
/// CycleError if the result would contain a reflexive pair (AKO/PARTOF).
Relation categorizer_closure(const KnowledgeBase& kb, CategorizerKind kind,
                             const Context& active);

inline Relation ako_closure(const KnowledgeBase& kb, const Context& active) {
  return categorizer_closure(kb, CategorizerKind::ako, active);
}

/// True iff every condition of `assertion_ctx` is in `active`, is EQV to a
/// member of it, or is a universal-context AKO ancestor of a member.
bool context_visible(const Context& assertion_ctx, const Context& active,
                     const KnowledgeBase& kb);

/// {presence} plus properties declared on `id` and its universal AKO
/// ancestors; a derived concept p-of-c also takes the properties of p.
std::set<ConceptId> applicable_properties(const KnowledgeBase& kb, const ConceptId& id);

struct PropertyValues {
  std::vector<ConceptId> values;
  std::optional<ConceptId> inherited_from;  // set when not assigned directly
  std::vector<std::string> warnings;
};

/// Direct assignment, else the nearest AKO ancestor's (ties go to the
/// lexicographically smallest ancestor, with a warning). `presence` defaults
/// to [present, absent]. Throws KbError when the property is unknown on the
/// concept and all its ancestors.
PropertyValues property_values(const KnowledgeBase& kb, const ConceptId& id,
                               const ConceptId& property, const Context& active);

}  // namespace dmf

#endif  // DMF_CATEGORIZATION_HPP
