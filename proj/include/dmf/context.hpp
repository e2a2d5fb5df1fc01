#ifndef DMF_CONTEXT_HPP
#define DMF_CONTEXT_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dmf/concept_id.hpp"

namespace dmf {

/// A set of condition concepts. The empty set is the universal context.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<ConceptId> conditions) : conditions_(conditions) {}
  explicit Context(const std::vector<ConceptId>& conditions)
      : conditions_(conditions.begin(), conditions.end()) {}
  explicit Context(std::set<ConceptId> conditions) : conditions_(std::move(conditions)) {}

  static Context universal() { return {}; }

  bool is_universal() const { return conditions_.empty(); }
  std::size_t specificity() const { return conditions_.size(); }
  bool contains(const ConceptId& c) const { return conditions_.count(c) != 0; }
  const std::set<ConceptId>& conditions() const { return conditions_; }

  Context with(const ConceptId& c) const;
  Context merged(const Context& other) const;

  /// Sorted conditions joined by '+'; "universal" for the empty context.
  std::string display() const;

  auto operator<=>(const Context&) const = default;
  bool operator==(const Context&) const = default;

 private:
  std::set<ConceptId> conditions_;
};

/// Parses "c1+c2+..."; empty text or "universal" is the universal context.
std::optional<Context> parse_context(std::string_view text);

}  // namespace dmf

#endif  // DMF_CONTEXT_HPP
