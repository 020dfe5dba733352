#include "sopra/model.hpp"

#include <algorithm>

namespace sopra {

void KnowledgeBase::add(Activity a) {
  auto id = a.id;
  if (a.label.empty()) a.label = a.id;
  activities.insert_or_assign(std::move(id), std::move(a));
}

void KnowledgeBase::add(Agent a) {
  auto id = a.id;
  agents.insert_or_assign(std::move(id), std::move(a));
}

void KnowledgeBase::add(ContextCue c) {
  auto id = c.id;
  contextCues.insert_or_assign(std::move(id), std::move(c));
}

void KnowledgeBase::add(Value v) {
  auto id = v.id;
  if (v.label.empty()) v.label = v.id;
  values.insert_or_assign(std::move(id), std::move(v));
}

void KnowledgeBase::add(Implementation i) {
  implementations.insert_or_assign({i.child, i.parent}, i.type);
}

void KnowledgeBase::add(Belief b) {
  beliefs.insert_or_assign({b.agent, b.activity}, std::move(b));
}

void KnowledgeBase::add(HabitualTrigger t) {
  habitualTriggers.insert_or_assign({t.activity, t.cue}, std::move(t));
}

void KnowledgeBase::add(RelatedValue r) {
  relatedValues.insert_or_assign({r.activity, r.value, r.provenance}, std::move(r));
}

void KnowledgeBase::add(AdheredValue a) {
  adheredValues.insert_or_assign({a.agent, a.value}, std::move(a));
}

void KnowledgeBase::addSame(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  sameLinks.emplace(std::move(a), std::move(b));
}

const Activity& getActivity(const KnowledgeBase& kb, const std::string& id) {
  auto it = kb.activities.find(id);
  if (it == kb.activities.end()) throw ReferenceError("unknown activity \"" + id + "\"");
  return it->second;
}

const Agent& getAgent(const KnowledgeBase& kb, const std::string& id) {
  auto it = kb.agents.find(id);
  if (it == kb.agents.end()) throw ReferenceError("unknown agent \"" + id + "\"");
  return it->second;
}

bool resolvesAsCue(const KnowledgeBase& kb, const std::string& id) {
  return kb.contextCues.count(id) > 0 || kb.agents.count(id) > 0 || kb.activities.count(id) > 0;
}

std::vector<std::string> parentsOf(const KnowledgeBase& kb, const std::string& activity) {
  std::vector<std::string> out;
  auto begin = kb.implementations.lower_bound({activity, std::string()});
  for (auto it = begin; it != kb.implementations.end() && it->first.first == activity; ++it)
    out.push_back(it->first.second);
  return out;
}

std::set<std::string> children(const KnowledgeBase& kb, const std::string& parent) {
  getActivity(kb, parent);
  std::set<std::string> out;
  for (const auto& [edge, type] : kb.implementations)
    if (edge.second == parent) out.insert(edge.first);
  return out;
}

bool isLeaf(const KnowledgeBase& kb, const std::string& activity) {
  for (const auto& [edge, type] : kb.implementations)
    if (edge.second == activity) return false;
  return true;
}

std::vector<std::string> rootCandidates(const KnowledgeBase& kb) {
  std::vector<std::string> out;
  for (const auto& [id, a] : kb.activities)
    if (parentsOf(kb, id).empty()) out.push_back(id);
  return out;
}

std::vector<std::string> ancestors(const KnowledgeBase& kb, const std::string& activity) {
  getActivity(kb, activity);
  std::vector<std::string> path;
  std::string current = activity;
  while (true) {
    auto parents = parentsOf(kb, current);
    if (parents.empty()) return path;
    if (parents.size() > 1)
      throw PreconditionError("activity \"" + current + "\" has several parents; run tree validation first");
    current = parents.front();
    path.push_back(current);
    if (path.size() > kb.activities.size())
      throw PreconditionError("activity hierarchy contains a cycle; run tree validation first");
  }
}

}  // namespace sopra
