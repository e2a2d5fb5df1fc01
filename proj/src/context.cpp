#include "dmf/context.hpp"

namespace dmf {

Context Context::with(const ConceptId& c) const {
  Context out = *this;
  out.conditions_.insert(c);
  return out;
}

Context Context::merged(const Context& other) const {
  Context out = *this;
  out.conditions_.insert(other.conditions_.begin(), other.conditions_.end());
  return out;
}

std::string Context::display() const {
  if (conditions_.empty()) return "universal";
  std::string out;
  for (const auto& c : conditions_) {
    if (!out.empty()) out += '+';
    out += c.str();
  }
  return out;
}

std::optional<Context> parse_context(std::string_view text) {
  if (text.empty() || text == "universal") return Context{};
  std::set<ConceptId> conditions;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    const std::size_t end = plus == std::string_view::npos ? text.size() : plus;
    auto id = ConceptId::parse(text.substr(start, end - start));
    if (!id) return std::nullopt;
    conditions.insert(*id);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Context(std::move(conditions));
}

}  // namespace dmf
