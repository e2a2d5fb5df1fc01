#include "dmf/knowledge_base.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dmf/categorization.hpp"

namespace dmf {

std::string_view to_string(Derivation how) {
  switch (how) {
    case Derivation::direct: return "direct";
    case Derivation::inherited: return "inherited";
    case Derivation::transitive: return "transitive";
    case Derivation::lifted: return "lifted";
    case Derivation::eqv_substituted: return "eqv-substituted";
  }
  return "?";
}

std::string format_trace_entry(const TraceEntry& entry) {
  return "[" + std::string(to_string(entry.how)) + "] " + entry.text;
}

std::string_view to_string(CategorizerKind kind) {
  switch (kind) {
    case CategorizerKind::ako: return "ako";
    case CategorizerKind::partof: return "partof";
    case CategorizerKind::eqv: return "eqv";
  }
  return "?";
}

std::optional<CategorizerKind> parse_categorizer(std::string_view text) {
  if (text == "ako" || text == "AKO") return CategorizerKind::ako;
  if (text == "partof" || text == "PARTOF") return CategorizerKind::partof;
  if (text == "eqv" || text == "EQV") return CategorizerKind::eqv;
  return std::nullopt;
}

namespace {

std::string cycle_message(CategorizerKind kind, const std::vector<ConceptId>& members) {
  std::string out = std::string(to_string(kind)) + " cycle {";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i].str();
  }
  return out + "}";
}

}  // namespace

CycleError::CycleError(CategorizerKind kind, std::vector<ConceptId> members)
    : KbError(cycle_message(kind, members)), kind_(kind), members_(std::move(members)) {}

std::string_view symbol(InfluenceSign sign) {
  switch (sign) {
    case InfluenceSign::positive: return "+";
    case InfluenceSign::negative: return "-";
    case InfluenceSign::unknown: return "?";
  }
  return "?";
}

std::optional<InfluenceSign> parse_influence_sign(std::string_view text) {
  if (text == "+") return InfluenceSign::positive;
  if (text == "-") return InfluenceSign::negative;
  if (text == "?") return InfluenceSign::unknown;
  return std::nullopt;
}

std::string_view to_string(Precedence prec) {
  return prec == Precedence::known ? "known" : "unknown";
}

std::optional<Precedence> parse_precedence(std::string_view text) {
  if (text == "known") return Precedence::known;
  if (text == "unknown") return Precedence::unknown;
  return std::nullopt;
}

std::string format_significance(double significance) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, significance);
  return std::string(buf, res.ptr);
}

std::string render(const CategoricalAssertion& assertion) {
  std::string out = std::string(to_string(assertion.kind)) + " " + assertion.a.str() + " " +
                    assertion.b.str();
  if (!assertion.context.is_universal()) out += " @ " + assertion.context.display();
  return out;
}

std::string render(const InteractionAssertion& assertion) {
  std::string out = "link " + assertion.source.str() + " -> " + assertion.target.str() +
                    " sign=" + std::string(symbol(assertion.sign)) +
                    " prec=" + std::string(to_string(assertion.prec)) +
                    " sig=" + format_significance(assertion.significance);
  if (!assertion.context.is_universal()) out += " @ " + assertion.context.display();
  return out;
}

ConceptId derived_name(const ConceptId& property, const ConceptId& of) {
  return ConceptId(property.str() + "-of-" + of.str());
}

KnowledgeBase::KnowledgeBase() {
  for (const ConceptId* id : {&builtin::presence(), &builtin::present(), &builtin::absent()}) {
    add_concept(*id).builtin = true;
  }
}

const Concept* KnowledgeBase::find(const ConceptId& id) const {
  auto it = concepts_.find(id);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept& KnowledgeBase::at(const ConceptId& id) const {
  if (const Concept* c = find(id)) return *c;
  throw KbError("undeclared concept '" + id.str() + "'");
}

const PropertyAssignment* KnowledgeBase::find_assignment(const ConceptId& concept_id,
                                                         const ConceptId& property) const {
  auto it = assignments_.find({concept_id, property});
  return it == assignments_.end() ? nullptr : &it->second;
}

std::set<Context> KnowledgeBase::declared_contexts() const {
  std::set<Context> out;
  for (const auto& a : categorical_) {
    if (!a.context.is_universal()) out.insert(a.context);
  }
  for (const auto& a : interactions_) {
    if (!a.context.is_universal()) out.insert(a.context);
  }
  return out;
}

std::map<ConceptId, ConceptId> KnowledgeBase::derived_by_property(
    const ConceptId& property) const {
  std::map<ConceptId, ConceptId> out;
  for (const auto& [id, c] : concepts_) {
    if (c.derived && c.derived->property == property) out.emplace(c.derived->of, id);
  }
  return out;
}

const Relation& KnowledgeBase::universal_ako() const {
  if (!universal_ako_) throw KbError("knowledge base is not finalized");
  return *universal_ako_;
}

const Relation& KnowledgeBase::universal_eqv() const {
  if (!universal_eqv_) throw KbError("knowledge base is not finalized");
  return *universal_eqv_;
}

Concept& KnowledgeBase::add_concept(const ConceptId& id, std::optional<DerivedOrigin> derived) {
  auto [it, inserted] = concepts_.try_emplace(id, Concept{id, std::move(derived), {}, false});
  if (!inserted) throw KbError("duplicate concept '" + id.str() + "'");
  return it->second;
}

void KnowledgeBase::set_origin(const ConceptId& id, DerivedOrigin origin) {
  auto it = concepts_.find(id);
  if (it == concepts_.end()) throw KbError("undeclared concept '" + id.str() + "'");
  it->second.derived = std::move(origin);
}

void KnowledgeBase::add_property(const ConceptId& concept_id, const ConceptId& property) {
  auto it = concepts_.find(concept_id);
  if (it == concepts_.end()) throw KbError("undeclared concept '" + concept_id.str() + "'");
  if (!contains(property)) throw KbError("undeclared property concept '" + property.str() + "'");
  it->second.properties.insert(property);
}

void KnowledgeBase::assign(PropertyAssignment assignment) {
  auto key = std::make_pair(assignment.concept_id, assignment.property);
  if (assignments_.count(key)) {
    throw KbError("duplicate value assignment for " + assignment.concept_id.str() + "." +
                  assignment.property.str());
  }
  assignments_.emplace(std::move(key), std::move(assignment));
}

void KnowledgeBase::add_categorical(CategoricalAssertion assertion) {
  categorical_.push_back(std::move(assertion));
}

void KnowledgeBase::add_interaction(InteractionAssertion assertion) {
  interactions_.push_back(std::move(assertion));
}

void KnowledgeBase::finalize() {
  universal_ako_.reset();
  universal_eqv_.reset();
  auto eqv = std::make_shared<const Relation>(
      categorizer_closure(*this, CategorizerKind::eqv, Context::universal()));
  auto ako = std::make_shared<const Relation>(
      categorizer_closure(*this, CategorizerKind::ako, Context::universal()));
  universal_eqv_ = std::move(eqv);
  universal_ako_ = std::move(ako);
}

ConceptId derive_concept(KnowledgeBase& kb, const ConceptId& property, const ConceptId& of) {
  if (!kb.contains(of)) throw KbError("undeclared concept '" + of.str() + "'");
  const ConceptId id = derived_name(property, of);
  if (const Concept* existing = kb.find(id)) {
    if (existing->derived != DerivedOrigin{property, of}) {
      throw KbError("'" + id.str() + "' is already declared with a different origin");
    }
    return id;
  }
  if (!kb.contains(property)) {
    throw KbError("undeclared property concept '" + property.str() + "'");
  }
  if (!kb.finalized()) kb.finalize();
  if (!applicable_properties(kb, of).count(property)) {
    throw KbError("property '" + property.str() + "' is not applicable to '" + of.str() + "'");
  }
  kb.add_concept(id, DerivedOrigin{property, of});
  kb.finalize();
  return id;
}

bool equivalent(const KnowledgeBase& lhs, const KnowledgeBase& rhs) {
  if (lhs.concepts() != rhs.concepts()) return false;
  if (lhs.assignments() != rhs.assignments()) return false;
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(lhs.categorical()) == sorted(rhs.categorical()) &&
         sorted(lhs.interactions()) == sorted(rhs.interactions());
}

}  // namespace dmf
