#include "dmf/concept_id.hpp"

#include <cctype>
#include <stdexcept>

namespace dmf {

std::string normalize_concept_name(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back('-');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool is_canonical_concept_name(std::string_view name) {
  if (name.empty() || name.front() == '-' || name.back() == '-') return false;
  char prev = '\0';
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
    if (c == '-' && prev == '-') return false;
    prev = c;
  }
  return true;
}

ConceptId::ConceptId(std::string_view text) : name_(normalize_concept_name(text)) {
  if (!is_canonical_concept_name(name_)) {
    throw std::invalid_argument("invalid concept name '" + std::string(text) + "'");
  }
}

std::optional<ConceptId> ConceptId::parse(std::string_view text) {
  std::string name = normalize_concept_name(text);
  if (!is_canonical_concept_name(name)) return std::nullopt;
  return ConceptId(Trusted{}, std::move(name));
}

std::ostream& operator<<(std::ostream& os, const ConceptId& id) {
  return os << id.str();
}

}  // namespace dmf
