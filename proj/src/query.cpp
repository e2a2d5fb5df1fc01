#include "dmf/query.hpp"

#include "dmf/categorization.hpp"

namespace dmf {

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "up") return Direction::up;
  if (text == "down") return Direction::down;
  return std::nullopt;
}

std::set<ConceptId> QueryAnswer::result_set() const {
  std::set<ConceptId> out;
  for (const auto& [id, _] : members) out.insert(id);
  return out;
}

namespace {

QueryAnswer verdict(std::vector<TraceEntry> trace) {
  QueryAnswer answer;
  answer.yes = !trace.empty();
  answer.trace = std::move(trace);
  return answer;
}

void append(std::vector<TraceEntry>& into, std::vector<TraceEntry> from) {
  for (auto& e : from) {
    bool seen = false;
    for (const auto& existing : into) {
      seen = seen || (existing.store == e.store && existing.index == e.index);
    }
    if (!seen) into.push_back(std::move(e));
  }
}

}  // namespace

QueryAnswer q1(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               const ConceptId& b, CategorizerKind categorizer) {
  kb.at(a);
  kb.at(b);
  const Relation rel = categorizer_closure(kb, categorizer, active);
  return verdict(rel.explain(a, b, kb));
}

QueryAnswer q2(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               CategorizerKind categorizer, Direction direction) {
  kb.at(a);
  const Relation rel = categorizer_closure(kb, categorizer, active);
  QueryAnswer answer;
  answer.form = QueryAnswer::Form::result_set;
  if (direction == Direction::up) {
    for (const auto& b : rel.successors(a)) answer.members[b] = rel.explain(a, b, kb);
  } else {
    for (const auto& b : rel.predecessors(a)) answer.members[b] = rel.explain(b, a, kb);
  }
  return answer;
}

QueryAnswer q3(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               InteractionKind kind) {
  kb.at(a);
  const InteractionView view(kb, active);
  QueryAnswer answer;
  answer.form = QueryAnswer::Form::result_set;
  for (const auto& vi : view.about(a)) {
    if (vi.kind() != kind) continue;
    const ConceptId& other =
        vi.assertion.source == a ? vi.assertion.target : vi.assertion.source;
    append(answer.members[other], view.trace(a, vi));
  }
  return answer;
}

QueryAnswer q4(const KnowledgeBase& kb, const Context& active, const ConceptId& a,
               const ConceptId& b, InteractionKind kind) {
  kb.at(a);
  kb.at(b);
  const InteractionView view(kb, active);
  std::vector<TraceEntry> trace;
  for (const auto& vi : view.about(a)) {
    if (vi.kind() == kind && vi.assertion.source == a && vi.assertion.target == b) {
      append(trace, view.trace(a, vi));
    }
  }
  return verdict(std::move(trace));
}

std::string format_answer(const QueryAnswer& answer) {
  std::string out;
  auto trace_lines = [&out](const std::vector<TraceEntry>& trace) {
    for (const auto& e : trace) out += "  " + format_trace_entry(e) + "\n";
  };
  if (answer.form == QueryAnswer::Form::verdict) {
    out += answer.yes ? "yes\n" : "no\n";
    trace_lines(answer.trace);
    return out;
  }
  if (answer.members.empty()) return "(none)\n";
  for (const auto& [id, trace] : answer.members) {
    out += id.str() + "\n";
    trace_lines(trace);
  }
  return out;
}

}  // namespace dmf
