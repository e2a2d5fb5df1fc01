#ifndef DMF_QUERY_HPP
#define DMF_QUERY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dmf/concept_id.hpp"
#include "dmf/context.hpp"
#include "dmf/interactions.hpp"
#include "dmf/knowledge_base.hpp"
#include "dmf/trace.hpp"

namespace dmf {

enum class Direction { up, down };

std::optional<Direction> parse_direction(std::string_view text);

/// Either a yes/no verdict with its trace, or a result set whose members each
/// carry their own trace. Closed world: anything not derivable is no / absent.
struct QueryAnswer {
  enum class Form { verdict, result_set };

  Form form = Form::verdict;
  bool yes = false;
  std::vector<TraceEntry> trace;
  std::map<ConceptId, std::vector<TraceEntry>> members;

  std::set<ConceptId> result_set() const;
};

/// Q1: is (a, b) in the closure of `categorizer`?
QueryAnswer q1(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               const ConceptId& b, CategorizerKind categorizer);

/// Q2: up = {b | (a, b) in closure}; down = {b | (b, a) in closure}.
QueryAnswer q2(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               CategorizerKind categorizer, Direction direction);

/// Q3: concepts related to `a` by an interaction of `kind`, in either
/// direction.
QueryAnswer q3(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               InteractionKind kind);

/// Q4: is there an interaction of `kind` directed from a to b?
QueryAnswer q4(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               const ConceptId& b, InteractionKind kind);

/// "yes"/"no" or one member per line, each followed by indented trace lines.
std::string format_answer(const QueryAnswer& answer);

}  // namespace dmf

#endif  // DMF_QUERY_HPP
