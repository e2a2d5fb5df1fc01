#include "dmf/planner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dmf/categorization.hpp"
#include "dmf/kb_parser.hpp"

namespace dmf {

std::string_view to_string(Category category) {
  switch (category) {
    case Category::general_history: return "general-history";
    case Category::sign_or_symptom: return "sign-or-symptom";
    case Category::laboratory_finding: return "laboratory-finding";
    case Category::disease: return "disease";
    case Category::alternative: return "alternative";
    case Category::complication: return "complication";
  }
  return "?";
}

ConceptId root_concept(Category category) { return ConceptId(to_string(category)); }

std::string_view to_string(Role role) {
  switch (role) {
    case Role::disease: return "disease";
    case Role::finding: return "finding";
    case Role::alternative: return "alternative";
    case Role::outcome: return "outcome";
    case Role::criterion: return "criterion";
    case Role::condition: return "condition";
  }
  return "?";
}

CaseDescription parse_case(std::string_view text, const KnowledgeBase* kb) {
  CaseDescription out;
  std::vector<Diagnostic> diags;
  bool criterion_seen = false;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    std::getline(words, rest);
    auto id = ConceptId::parse(rest);
    if (!id) {
      diags.push_back({no, "invalid concept name '" + rest + "'"});
      continue;
    }
    if (kb && !kb->contains(*id)) {
      diags.push_back({no, "undeclared concept '" + id->str() + "'"});
      continue;
    }
    if (keyword == "input") {
      out.inputs.push_back(*id);
    } else if (keyword == "condition") {
      out.oracle_conditions.push_back(*id);
    } else if (keyword == "criterion") {
      if (criterion_seen) diags.push_back({no, "more than one criterion"});
      criterion_seen = true;
      out.criterion = *id;
    } else {
      diags.push_back({no, "unknown statement '" + keyword + "'"});
    }
  }
  if (diags.empty() && out.inputs.empty()) diags.push_back({0, "case has no input concepts"});
  if (kb && diags.empty() && !kb->contains(out.criterion)) {
    diags.push_back({0, "criterion '" + out.criterion.str() + "' is not declared"});
  }
  if (!diags.empty()) throw LoadError(std::move(diags));
  return out;
}

const std::vector<ConceptId>& BackgroundTable::row(Category category) const {
  static const std::vector<ConceptId> empty;
  auto it = rows.find(category);
  return it == rows.end() ? empty : it->second;
}

BackgroundTable characterize_background(const KnowledgeBase& kb, const CaseDescription& input) {
  BackgroundTable table;
  for (Category category : kCategories) {
    table.rows[category];
    if (!kb.contains(root_concept(category))) {
      table.warnings.push_back("category root '" + std::string(to_string(category)) +
                               "' is not declared");
    }
  }
  const Relation& ako = kb.universal_ako();
  for (const ConceptId& c : input.inputs) {
    std::vector<Category> matches;
    for (Category category : kCategories) {
      if (ako.contains(c, root_concept(category))) matches.push_back(category);
    }
    if (matches.empty()) {
      table.unclassified.push_back(c);
      table.warnings.push_back("'" + c.str() + "' matches no category");
      continue;
    }
    if (matches.size() > 1) {
      std::string names;
      for (Category m : matches) names += " " + std::string(to_string(m));
      table.warnings.push_back("'" + c.str() + "' matches several categories:" + names);
    }
    for (Category m : matches) table.rows[m].push_back(c);
  }
  return table;
}

Context DomainContext::as_context() const {
  std::set<ConceptId> all = suspected_diseases;
  all.insert(conditions.begin(), conditions.end());
  return Context(std::move(all));
}

DomainContext establish_context(const KnowledgeBase& kb, const BackgroundTable& table,
                                const std::vector<ConceptId>& oracle_conditions) {
  DomainContext ctx;
  const auto& diseases = table.row(Category::disease);
  ctx.suspected_diseases.insert(diseases.begin(), diseases.end());
  for (const auto& c : oracle_conditions) {
    kb.at(c);
    ctx.conditions.insert(c);
  }
  if (ctx.suspected_diseases.empty() && ctx.conditions.empty()) throw EmptyContextError();
  return ctx;
}

bool ProblemFormulation::contains(const ConceptId& id) const {
  return role_of(id).has_value();
}

std::optional<Role> ProblemFormulation::role_of(const ConceptId& id) const {
  for (const auto& c : concepts) {
    if (c.id == id) return c.role;
  }
  return std::nullopt;
}

std::set<ConceptId> ProblemFormulation::concept_set() const {
  std::set<ConceptId> out;
  for (const auto& c : concepts) out.insert(c.id);
  return out;
}

namespace {

Role role_for(const KnowledgeBase& kb, const DomainContext& ctx, const BackgroundTable& table,
              const ConceptId& criterion, const ConceptId& id) {
  if (id == criterion) return Role::criterion;
  if (ctx.conditions.count(id)) return Role::condition;
  auto in_row = [&](Category category) {
    const auto& row = table.row(category);
    return std::find(row.begin(), row.end(), id) != row.end();
  };
  auto kind_of = [&](Category category) {
    return in_row(category) || kb.universal_ako().contains(id, root_concept(category));
  };
  if (kind_of(Category::alternative)) return Role::alternative;
  if (kind_of(Category::disease)) return Role::disease;
  if (kind_of(Category::sign_or_symptom) || kind_of(Category::laboratory_finding)) {
    return Role::finding;
  }
  return Role::outcome;
}

}  // namespace

ProblemFormulation formulate_problem(const KnowledgeBase& kb, const DomainContext& ctx,
                                     const BackgroundTable& table, const ConceptId& criterion,
                                     const FormulationOptions& options) {
  kb.at(criterion);
  ProblemFormulation out;
  out.criterion = criterion;
  out.context = ctx.as_context();
  const InteractionView view(kb, out.context);

  std::vector<ConceptId> seeds;
  auto add_seed = [&seeds](const ConceptId& c) {
    if (std::find(seeds.begin(), seeds.end(), c) == seeds.end()) seeds.push_back(c);
  };
  for (Category category : {Category::disease, Category::alternative, Category::sign_or_symptom,
                            Category::laboratory_finding}) {
    for (const auto& c : table.row(category)) add_seed(c);
  }
  for (const auto& c : ctx.conditions) add_seed(c);

  std::map<ConceptId, int> depth;
  std::vector<ConceptId> order;
  std::deque<ConceptId> queue;
  for (const auto& s : seeds) {
    depth.emplace(s, 0);
    order.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const ConceptId c = queue.front();
    queue.pop_front();
    if (depth.at(c) >= options.depth_bound) continue;
    for (const auto& vi : view.about(c)) {
      if (vi.assertion.source != c) continue;
      if (vi.assertion.significance < options.significance_threshold) continue;
      out.selected.push_back(vi);
      const ConceptId& t = vi.assertion.target;
      if (depth.emplace(t, depth.at(c) + 1).second) {
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }

  // AKO children become candidate outcome values of the concept they refine.
  // Conditions only scope the context, so their specializations are skipped.
  const std::size_t collected = order.size();
  for (std::size_t i = 0; i < collected; ++i) {
    if (ctx.conditions.count(order[i]) || order[i] == criterion) continue;
    for (const auto& child : view.ako().predecessors(order[i])) {
      if (depth.emplace(child, -1).second) order.push_back(child);
    }
  }
  if (depth.emplace(criterion, -1).second) order.push_back(criterion);

  for (const auto& id : order) {
    out.concepts.push_back({id, role_for(kb, ctx, table, criterion, id)});
  }

  std::set<ConceptId> reached(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& vi : out.selected) {
      if (reached.count(vi.assertion.source) && reached.insert(vi.assertion.target).second) {
        grew = true;
      }
    }
  }
  if (!reached.count(criterion)) {
    out.warnings.push_back("DisconnectedCriterion: no selected interaction path reaches '" +
                           criterion.str() + "'");
  }
  return out;
}

std::string format_background(const BackgroundTable& table) {
  std::ostringstream out;
  auto list = [&out](const std::vector<ConceptId>& ids) {
    if (ids.empty()) {
      out << " -";
      return;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? ", " : " ") << ids[i];
  };
  for (Category category : kCategories) {
    out << to_string(category) << ":";
    list(table.row(category));
    out << "\n";
  }
  out << "unclassified:";
  list(table.unclassified);
  out << "\n";
  return out.str();
}

std::string format_formulation(const ProblemFormulation& formulation) {
  std::ostringstream out;
  out << "context: " << formulation.context.display() << "\n";
  out << "criterion: " << formulation.criterion << "\n";
  out << "concepts (" << formulation.concepts.size() << "):\n";
  for (const auto& c : formulation.concepts) out << "  " << c.id << " [" << to_string(c.role) << "]\n";
  out << "selected interactions (" << formulation.selected.size() << "):\n";
  for (const auto& vi : formulation.selected) {
    out << "  " << render(vi.assertion) << " (" << to_string(vi.kind());
    if (vi.how != Derivation::direct) out << ", " << to_string(vi.how) << " from " << *vi.via;
    out << ")\n";
  }
  return out.str();
}

}  // namespace dmf
