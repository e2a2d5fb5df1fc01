#ifndef DMF_CONCEPT_ID_HPP
#define DMF_CONCEPT_ID_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dmf {

/// Lowercases and turns runs of whitespace into single hyphens.
std::string normalize_concept_name(std::string_view text);

/// True iff `name` is already canonical: [a-z0-9]+ groups joined by single
/// hyphens.
bool is_canonical_concept_name(std::string_view name);

/// Canonical name of a concept, e.g. `anticoagulant-therapy`.
class ConceptId {
 public:
  /// Normalizes then validates; throws std::invalid_argument on bad text.
  explicit ConceptId(std::string_view text);

  static std::optional<ConceptId> parse(std::string_view text);

  const std::string& str() const { return name_; }

  auto operator<=>(const ConceptId&) const = default;
  bool operator==(const ConceptId&) const = default;

 private:
  struct Trusted {};
  ConceptId(Trusted, std::string name) : name_(std::move(name)) {}

  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const ConceptId& id);

/// Built-in concepts available in every knowledge base.
namespace builtin {
inline const ConceptId& presence() {
  static const ConceptId id("presence");
  return id;
}
inline const ConceptId& present() {
  static const ConceptId id("present");
  return id;
}
inline const ConceptId& absent() {
  static const ConceptId id("absent");
  return id;
}
}  // namespace builtin

}  // namespace dmf

template <>
struct std::hash<dmf::ConceptId> {
  std::size_t operator()(const dmf::ConceptId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

#endif  // DMF_CONCEPT_ID_HPP
