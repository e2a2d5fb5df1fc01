#ifndef DMF_PLANNER_HPP
#define DMF_PLANNER_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmf/concept_id.hpp"
#include "dmf/context.hpp"
#include "dmf/interactions.hpp"
#include "dmf/knowledge_base.hpp"

namespace dmf {

/// Clinical categories of background information, each bound to a reserved
/// root concept of the same name.
enum class Category {
  general_history,
  sign_or_symptom,
  laboratory_finding,
  disease,
  alternative,
  complication,
};

inline constexpr std::array<Category, 6> kCategories{
    Category::general_history, Category::sign_or_symptom, Category::laboratory_finding,
    Category::disease,         Category::alternative,     Category::complication,
};

/// "general-history", "sign-or-symptom", ...
std::string_view to_string(Category category);
ConceptId root_concept(Category category);

inline const ConceptId& default_criterion() {
  static const ConceptId id("quality-adjusted-life-expectancy");
  return id;
}

struct CaseDescription {
  std::vector<ConceptId> inputs;
  std::vector<ConceptId> oracle_conditions;
  ConceptId criterion = default_criterion();
};

/// `input NAME`, `condition NAME`, `criterion NAME` (at most one), `#`
/// comments. When `kb` is given every id must be declared in it. Throws
/// LoadError.
CaseDescription parse_case(std::string_view text, const KnowledgeBase* kb = nullptr);

struct BackgroundTable {
  std::map<Category, std::vector<ConceptId>> rows;
  std::vector<ConceptId> unclassified;
  std::vector<std::string> warnings;

  const std::vector<ConceptId>& row(Category category) const;
};

/// Places each input in every category whose root it is a kind of (universal
/// context); inputs matching none are unclassified.
BackgroundTable characterize_background(const KnowledgeBase& kb, const CaseDescription& input);

class EmptyContextError : public std::runtime_error {
 public:
  EmptyContextError()
      : std::runtime_error("EmptyContext: no suspected disease and no oracle condition") {}
};

struct DomainContext {
  std::set<ConceptId> suspected_diseases;
  std::set<ConceptId> conditions;

  Context as_context() const;
};

DomainContext establish_context(const KnowledgeBase& kb, const BackgroundTable& table,
                                const std::vector<ConceptId>& oracle_conditions);

enum class Role { disease, finding, alternative, outcome, criterion, condition };

std::string_view to_string(Role role);

struct FormulationConcept {
  ConceptId id;
  Role role;

  bool operator==(const FormulationConcept&) const = default;
};

struct FormulationOptions {
  int depth_bound = 3;
  double significance_threshold = 0.0;
};

struct ProblemFormulation {
  std::vector<FormulationConcept> concepts;  // discovery order
  std::vector<VisibleInteraction> selected;  // traversal order
  ConceptId criterion = default_criterion();
  Context context;
  std::vector<std::string> warnings;

  bool contains(const ConceptId& id) const;
  std::optional<Role> role_of(const ConceptId& id) const;
  std::set<ConceptId> concept_set() const;
};

/// Breadth-first expansion from the seeds (diseases, alternatives, findings,
/// conditions) along outgoing visible interactions with significance >= the
/// threshold, up to `depth_bound` hops; then AKO children of everything
/// collected and finally the criterion. Warns DisconnectedCriterion when no
/// selected path reaches the criterion.
ProblemFormulation formulate_problem(const KnowledgeBase& kb, const DomainContext& ctx,
                                     const BackgroundTable& table, const ConceptId& criterion,
                                     const FormulationOptions& options = {});

std::string format_background(const BackgroundTable& table);
std::string format_formulation(const ProblemFormulation& formulation);

}  // namespace dmf

#endif  // DMF_PLANNER_HPP
