#ifndef DMF_KB_PARSER_HPP
#define DMF_KB_PARSER_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dmf/knowledge_base.hpp"

namespace dmf {

struct Diagnostic {
  int line = 0;  // 1-based; 0 when not tied to a line
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

/// Every problem found while loading; never accompanied by a partial result.
class LoadError : public KbError {
 public:
  explicit LoadError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Line-oriented KB text:
///
///   concept NAME
///   property NAME.PROP
///   value NAME.PROP = V1,V2,...
///   ako A B [@ C1+C2+...]        (also partof, eqv)
///   link A -> B sign=(+|-|?) prec=(known|unknown) [sig=FLOAT] [@ C1+...]
///
/// `#` starts a comment. A reference of the form P-of-C, where P is a declared
/// concept and C resolves, registers the derived concept implicitly.
KnowledgeBase parse_kb(std::string_view text);

KnowledgeBase load_kb(const std::filesystem::path& path);

/// Canonical text: concepts, properties and values sorted; assertions in
/// insertion order. parse_kb(serialize_kb(kb)) is equivalent to kb.
std::string serialize_kb(const KnowledgeBase& kb);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace dmf

#endif  // DMF_KB_PARSER_HPP
