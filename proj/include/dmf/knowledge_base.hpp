#ifndef DMF_KNOWLEDGE_BASE_HPP
#define DMF_KNOWLEDGE_BASE_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmf/concept_id.hpp"
#include "dmf/context.hpp"

namespace dmf {

class KbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CategorizerKind { ako, partof, eqv };

std::string_view to_string(CategorizerKind kind);
std::optional<CategorizerKind> parse_categorizer(std::string_view text);

/// A categorizer closure contains a pair (x, x). Carries the concepts on the
/// offending cycle, sorted.
class CycleError : public KbError {
 public:
  CycleError(CategorizerKind kind, std::vector<ConceptId> members);
  CategorizerKind kind() const { return kind_; }
  const std::vector<ConceptId>& members() const { return members_; }

 private:
  CategorizerKind kind_;
  std::vector<ConceptId> members_;
};

enum class InfluenceSign { positive, negative, unknown };
enum class Precedence { known, unknown };

std::string_view symbol(InfluenceSign sign);  // "+", "-", "?"
std::optional<InfluenceSign> parse_influence_sign(std::string_view text);
std::string_view to_string(Precedence prec);
std::optional<Precedence> parse_precedence(std::string_view text);

/// `property`-of-`of`: the concept a derived concept was formed from. The
/// `of` concept is the derived concept's CXT parent.
struct DerivedOrigin {
  ConceptId property;
  ConceptId of;

  auto operator<=>(const DerivedOrigin&) const = default;
  bool operator==(const DerivedOrigin&) const = default;
};

struct Concept {
  ConceptId id;
  std::optional<DerivedOrigin> derived;
  std::set<ConceptId> properties;
  bool builtin = false;

  bool operator==(const Concept&) const = default;
};

struct PropertyAssignment {
  ConceptId concept_id;
  ConceptId property;
  std::vector<ConceptId> values;

  auto operator<=>(const PropertyAssignment&) const = default;
  bool operator==(const PropertyAssignment&) const = default;
};

struct CategoricalAssertion {
  CategorizerKind kind;
  ConceptId a;
  ConceptId b;
  Context context;

  auto operator<=>(const CategoricalAssertion&) const = default;
  bool operator==(const CategoricalAssertion&) const = default;
};

struct InteractionAssertion {
  ConceptId source;
  ConceptId target;
  InfluenceSign sign;
  Precedence prec;
  Context context;
  double significance = 0.5;

  auto operator<=>(const InteractionAssertion&) const = default;
  bool operator==(const InteractionAssertion&) const = default;
};

/// KB-file rendering, e.g. "ako cardiomyopathy disease" or
/// "link a -> b sign=+ prec=known sig=0.5 @ old-age".
std::string render(const CategoricalAssertion& assertion);
std::string render(const InteractionAssertion& assertion);
std::string format_significance(double significance);

/// "<property>-of-<of>".
ConceptId derived_name(const ConceptId& property, const ConceptId& of);

class Relation;

/// Concepts with their properties, categorical and interaction assertions.
///
/// Built by the parser (or programmatically) and then finalized; finalize()
/// caches the universal-context AKO and EQV closures used for context
/// visibility. All const members are safe for concurrent use.
class KnowledgeBase {
 public:
  KnowledgeBase();

  bool contains(const ConceptId& id) const { return concepts_.count(id) != 0; }
  const Concept* find(const ConceptId& id) const;
  const Concept& at(const ConceptId& id) const;

  const std::map<ConceptId, Concept>& concepts() const { return concepts_; }
  const std::vector<CategoricalAssertion>& categorical() const { return categorical_; }
  const std::vector<InteractionAssertion>& interactions() const { return interactions_; }
  const std::map<std::pair<ConceptId, ConceptId>, PropertyAssignment>& assignments() const {
    return assignments_;
  }
  const PropertyAssignment* find_assignment(const ConceptId& concept_id,
                                            const ConceptId& property) const;

  /// Distinct non-universal contexts attached to assertions.
  std::set<Context> declared_contexts() const;

  /// Derived concepts formed from `property`, keyed by the concept they are
  /// derived from.
  std::map<ConceptId, ConceptId> derived_by_property(const ConceptId& property) const;

  const Relation& universal_ako() const;
  const Relation& universal_eqv() const;
  bool finalized() const { return universal_ako_ != nullptr; }

  Concept& add_concept(const ConceptId& id, std::optional<DerivedOrigin> derived = {});
  void set_origin(const ConceptId& id, DerivedOrigin origin);
  void add_property(const ConceptId& concept_id, const ConceptId& property);
  void assign(PropertyAssignment assignment);
  void add_categorical(CategoricalAssertion assertion);
  void add_interaction(InteractionAssertion assertion);

  /// Recomputes the cached universal closures. Throws CycleError.
  void finalize();

 private:
  std::map<ConceptId, Concept> concepts_;
  std::map<std::pair<ConceptId, ConceptId>, PropertyAssignment> assignments_;
  std::vector<CategoricalAssertion> categorical_;
  std::vector<InteractionAssertion> interactions_;
  std::shared_ptr<const Relation> universal_ako_;
  std::shared_ptr<const Relation> universal_eqv_;
};

/// Registers "<property>-of-<of>" (idempotent) and returns its id. Throws
/// KbError when `of` is undeclared or the property does not apply to it.
ConceptId derive_concept(KnowledgeBase& kb, const ConceptId& property, const ConceptId& of);

/// Same concepts, assignments, and assertion multisets.
bool equivalent(const KnowledgeBase& lhs, const KnowledgeBase& rhs);

}  // namespace dmf

#endif  // DMF_KNOWLEDGE_BASE_HPP
