#include "dmf/categorization.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dmf {

namespace {

const std::set<ConceptId>& empty_set() {
  static const std::set<ConceptId> empty;
  return empty;
}

}  // namespace

bool Relation::contains(const ConceptId& a, const ConceptId& b) const {
  auto it = succ_.find(a);
  return it != succ_.end() && it->second.count(b) != 0;
}

const std::set<ConceptId>& Relation::successors(const ConceptId& a) const {
  auto it = succ_.find(a);
  return it == succ_.end() ? empty_set() : it->second;
}

const std::set<ConceptId>& Relation::predecessors(const ConceptId& b) const {
  auto it = pred_.find(b);
  return it == pred_.end() ? empty_set() : it->second;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (const auto& [_, s] : succ_) n += s.size();
  return n;
}

std::vector<std::pair<ConceptId, ConceptId>> Relation::pairs() const {
  std::vector<std::pair<ConceptId, ConceptId>> out;
  for (const auto& [a, s] : succ_) {
    for (const auto& b : s) out.emplace_back(a, b);
  }
  return out;
}

void Relation::add_step(Step step) {
  out_[step.from].push_back(steps_.size());
  steps_.push_back(std::move(step));
}

// Reachability over (concept, crossed-a-non-EQV-step) states.
void Relation::recompute() {
  succ_.clear();
  pred_.clear();
  for (const auto& [start, _] : out_) {
    std::set<std::pair<ConceptId, bool>> seen{{start, false}};
    std::deque<std::pair<ConceptId, bool>> queue{{start, false}};
    while (!queue.empty()) {
      auto [node, flag] = queue.front();
      queue.pop_front();
      auto it = out_.find(node);
      if (it == out_.end()) continue;
      for (std::size_t idx : it->second) {
        const Step& step = steps_[idx];
        const bool next_flag =
            kind_ == CategorizerKind::eqv || flag || step.kind != StepKind::eqv;
        if (!seen.emplace(step.to, next_flag).second) continue;
        queue.emplace_back(step.to, next_flag);
        if (next_flag) {
          succ_[start].insert(step.to);
          pred_[step.to].insert(start);
        }
      }
    }
  }
}

std::vector<const Relation::Step*> Relation::find_path(const ConceptId& a,
                                                       const ConceptId& b) const {
  using State = std::pair<ConceptId, bool>;
  std::map<State, std::pair<State, const Step*>> parent;
  std::deque<State> queue{{a, false}};
  std::set<State> seen{{a, false}};
  const State goal{b, true};
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    if (cur == goal) break;
    auto it = out_.find(cur.first);
    if (it == out_.end()) continue;
    for (std::size_t idx : it->second) {
      const Step& step = steps_[idx];
      const bool next_flag = kind_ == CategorizerKind::eqv || cur.second ||
                             step.kind != StepKind::eqv;
      State next{step.to, next_flag};
      if (!seen.insert(next).second) continue;
      parent.emplace(next, std::make_pair(cur, &step));
      queue.push_back(next);
    }
  }
  if (!parent.count(goal)) return {};
  std::vector<const Step*> path;
  State cur = goal;
  while (!(cur.first == a && !cur.second)) {
    const auto& [prev, step] = parent.at(cur);
    path.push_back(step);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<TraceEntry> Relation::explain(const ConceptId& a, const ConceptId& b,
                                          const KnowledgeBase& kb) const {
  if (!contains(a, b)) return {};
  const auto path = find_path(a, b);
  const auto hops = std::count_if(path.begin(), path.end(),
                                  [](const Step* s) { return s->kind != StepKind::eqv; });
  std::vector<TraceEntry> out;
  auto push = [&out](TraceEntry entry) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const TraceEntry& e) {
      return e.store == entry.store && e.index == entry.index;
    });
    if (!seen) out.push_back(std::move(entry));
  };
  for (const Step* step : path) {
    switch (step->kind) {
      case StepKind::asserted:
        push({hops == 1 ? Derivation::direct : Derivation::transitive,
              AssertionStore::categorical, step->assertion,
              render(kb.categorical()[step->assertion])});
        break;
      case StepKind::eqv: {
        Derivation how = Derivation::eqv_substituted;
        if (kind_ == CategorizerKind::eqv) {
          how = path.size() == 1 ? Derivation::direct : Derivation::transitive;
        }
        push({how, AssertionStore::categorical, step->assertion,
              render(kb.categorical()[step->assertion])});
        break;
      }
      case StepKind::lifted:
        for (TraceEntry e : explain(step->lifted_from->first, step->lifted_from->second, kb)) {
          e.how = Derivation::lifted;
          push(std::move(e));
        }
        break;
    }
  }
  return out;
}

std::map<ConceptId, std::size_t> Relation::distances_from(const ConceptId& a) const {
  std::map<ConceptId, std::size_t> dist{{a, 0}};
  std::deque<ConceptId> queue{a};
  while (!queue.empty()) {
    ConceptId node = queue.front();
    queue.pop_front();
    const std::size_t d = dist.at(node);
    auto it = out_.find(node);
    if (it == out_.end()) continue;
    for (std::size_t idx : it->second) {
      const Step& step = steps_[idx];
      const std::size_t cost = step.kind == StepKind::eqv ? 0 : 1;
      auto [pos, inserted] = dist.emplace(step.to, d + cost);
      if (!inserted && pos->second <= d + cost) continue;
      pos->second = d + cost;
      if (cost == 0) {
        queue.push_front(step.to);
      } else {
        queue.push_back(step.to);
      }
    }
  }
  return dist;
}

Relation categorizer_closure(const KnowledgeBase& kb, CategorizerKind kind,
                             const Context& active) {
  Relation rel(kind);
  const auto& assertions = kb.categorical();
  for (std::size_t i = 0; i < assertions.size(); ++i) {
    const CategoricalAssertion& a = assertions[i];
    if (a.kind != kind && a.kind != CategorizerKind::eqv) continue;
    const bool visible = active.is_universal() ? a.context.is_universal()
                                               : context_visible(a.context, active, kb);
    if (!visible) continue;
    if (a.kind == CategorizerKind::eqv) {
      rel.add_step({a.a, a.b, Relation::StepKind::eqv, i, std::nullopt});
      rel.add_step({a.b, a.a, Relation::StepKind::eqv, i, std::nullopt});
    } else {
      rel.add_step({a.a, a.b, Relation::StepKind::asserted, i, std::nullopt});
    }
  }

  rel.recompute();
  if (kind == CategorizerKind::ako) {
    // (x, y) in closure and p-of-x, p-of-y both exist => (p-of-x, p-of-y).
    std::map<ConceptId, std::vector<std::pair<ConceptId, ConceptId>>> by_property;
    for (const auto& [id, c] : kb.concepts()) {
      if (c.derived) by_property[c.derived->property].emplace_back(c.derived->of, id);
    }
    std::set<std::pair<ConceptId, ConceptId>> lifted;
    for (bool added = true; added;) {
      added = false;
      for (const auto& [property, group] : by_property) {
        for (const auto& [x, dx] : group) {
          for (const auto& [y, dy] : group) {
            if (x == y || !rel.contains(x, y) || !lifted.emplace(dx, dy).second) continue;
            rel.add_step({dx, dy, Relation::StepKind::lifted, 0, std::make_pair(x, y)});
            added = true;
          }
        }
      }
      if (added) rel.recompute();
    }
  }

  if (kind != CategorizerKind::eqv) {
    for (const auto& [x, succ] : rel.succ_) {
      if (!succ.count(x)) continue;
      std::vector<ConceptId> members{x};
      for (const auto& y : succ) {
        if (y != x && rel.contains(y, x)) members.push_back(y);
      }
      std::sort(members.begin(), members.end());
      throw CycleError(kind, std::move(members));
    }
  }
  return rel;
}

bool context_visible(const Context& assertion_ctx, const Context& active,
                     const KnowledgeBase& kb) {
  if (assertion_ctx.is_universal()) return true;
  const Relation& ako = kb.universal_ako();
  const Relation& eqv = kb.universal_eqv();
  for (const ConceptId& c : assertion_ctx.conditions()) {
    if (active.contains(c)) continue;
    const bool covered =
        std::any_of(active.conditions().begin(), active.conditions().end(),
                    [&](const ConceptId& m) { return ako.contains(m, c) || eqv.contains(m, c); });
    if (!covered) return false;
  }
  return true;
}

std::set<ConceptId> applicable_properties(const KnowledgeBase& kb, const ConceptId& id) {
  std::set<ConceptId> out{builtin::presence()};
  const Concept& c = kb.at(id);
  out.insert(c.properties.begin(), c.properties.end());
  auto absorb = [&](const std::set<ConceptId>& others) {
    for (const auto& other : others) {
      const auto& props = kb.at(other).properties;
      out.insert(props.begin(), props.end());
    }
  };
  absorb(kb.universal_ako().successors(id));
  absorb(kb.universal_eqv().successors(id));
  if (c.derived && c.derived->property != id) {
    const auto inherited = applicable_properties(kb, c.derived->property);
    out.insert(inherited.begin(), inherited.end());
  }
  return out;
}

PropertyValues property_values(const KnowledgeBase& kb, const ConceptId& id,
                               const ConceptId& property, const Context& active) {
  kb.at(id);
  if (const PropertyAssignment* direct = kb.find_assignment(id, property)) {
    return {direct->values, std::nullopt, {}};
  }

  const Relation rel = ako_closure(kb, active);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<ConceptId> nearest;
  for (const auto& [ancestor, d] : rel.distances_from(id)) {
    if (!rel.contains(id, ancestor) || !kb.find_assignment(ancestor, property)) continue;
    if (d < best) {
      best = d;
      nearest.clear();
    }
    if (d == best) nearest.push_back(ancestor);
  }
  if (!nearest.empty()) {
    PropertyValues out{kb.find_assignment(nearest.front(), property)->values, nearest.front(), {}};
    if (nearest.size() > 1) {
      std::string others;
      for (std::size_t i = 1; i < nearest.size(); ++i) others += " " + nearest[i].str();
      out.warnings.push_back(id.str() + "." + property.str() + ": equally near ancestors;" +
                             " using " + nearest.front().str() + " over" + others);
    }
    return out;
  }

  if (property == builtin::presence()) {
    return {{builtin::present(), builtin::absent()}, std::nullopt, {}};
  }
  if (applicable_properties(kb, id).count(property)) return {};
  throw KbError("property '" + property.str() + "' is unknown on '" + id.str() +
                "' and all its ancestors");
}

}  // namespace dmf
