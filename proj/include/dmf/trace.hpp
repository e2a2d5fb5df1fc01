#ifndef DMF_TRACE_HPP
#define DMF_TRACE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace dmf {

/// How an assertion contributed to an answer.
enum class Derivation { direct, inherited, transitive, lifted, eqv_substituted };

std::string_view to_string(Derivation how);

/// Which assertion store an entry points into.
enum class AssertionStore { categorical, interaction };

struct TraceEntry {
  Derivation how;
  AssertionStore store;
  std::size_t index;  // position in KnowledgeBase::categorical() / interactions()
  std::string text;   // the assertion rendered in KB-file syntax

  bool operator==(const TraceEntry&) const = default;
};

std::string format_trace_entry(const TraceEntry& entry);

}  // namespace dmf

#endif  // DMF_TRACE_HPP
