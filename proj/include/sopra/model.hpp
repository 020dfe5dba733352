#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sopra {

/// Thrown when an operation names an entity the knowledge base does not declare.
class ReferenceError : public std::runtime_error {
public:
  explicit ReferenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation is invoked on a knowledge base that fails the
/// operation's precondition (e.g. the activity hierarchy is not a tree).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

enum class ActivityType { Action, AbstractAction, TopAction };
enum class ImplType { AllOf, PartOf };
enum class CueKind { Object, Location, Agent, Activity };
enum class Provenance { Asserted, Inferred };

/// A node of the activity hierarchy. The activity type is derived from tree
/// position; a declared type coming from an input file is kept only so the
/// validator can cross-check it.
struct Activity {
  std::string id;
  std::string label;
  std::optional<ActivityType> declaredType;

  bool operator==(const Activity&) const = default;
};

struct Agent {
  std::string id;
  double habitRate = 0.0;  // stored, not consumed by the static model

  bool operator==(const Agent&) const = default;
};

struct ContextCue {
  std::string id;
  CueKind kind = CueKind::Object;

  bool operator==(const ContextCue&) const = default;
};

struct Value {
  std::string id;
  std::string label;

  bool operator==(const Value&) const = default;
};

/// Directed edge of the activity tree: child implements parent.
struct Implementation {
  std::string child;
  std::string parent;
  ImplType type = ImplType::AllOf;

  bool operator==(const Implementation&) const = default;
};

struct Belief {
  std::string agent;
  std::string activity;
  double personalStrength = 0.0;
  double sharedStrength = 0.0;

  bool operator==(const Belief&) const = default;
};

struct HabitualTrigger {
  std::string activity;
  std::string cue;
  double strength = 0.0;

  bool operator==(const HabitualTrigger&) const = default;
};

struct RelatedValue {
  std::string activity;
  std::string value;
  double strength = 0.0;
  Provenance provenance = Provenance::Asserted;

  bool operator==(const RelatedValue&) const = default;
};

struct AdheredValue {
  std::string agent;
  std::string value;
  double strength = 0.0;

  bool operator==(const AdheredValue&) const = default;
};

/// The complete loaded world. Collections are keyed and ordered so that every
/// traversal of a knowledge base is deterministic. A KnowledgeBase is treated
/// as immutable once validated: all query, inference and decision operations
/// take it by const reference and never mutate it.
struct KnowledgeBase {
  std::map<std::string, Activity> activities;
  std::map<std::string, Agent> agents;
  std::map<std::string, ContextCue> contextCues;
  std::map<std::string, Value> values;

  // (child, parent) -> edge type; a child may appear under several parents
  // here, the validator flags that as a TREE violation.
  std::map<std::pair<std::string, std::string>, ImplType> implementations;
  // (agent, activity)
  std::map<std::pair<std::string, std::string>, Belief> beliefs;
  // (activity, cue)
  std::map<std::pair<std::string, std::string>, HabitualTrigger> habitualTriggers;
  // (activity, value, provenance): the same pair may carry both an asserted
  // and an inferred strength.
  std::map<std::tuple<std::string, std::string, Provenance>, RelatedValue> relatedValues;
  // (agent, value)
  std::map<std::pair<std::string, std::string>, AdheredValue> adheredValues;
  // unordered pairs stored with a <= b; closure is computed on demand
  std::set<std::pair<std::string, std::string>> sameLinks;

  void add(Activity a);
  void add(Agent a);
  void add(ContextCue c);
  void add(Value v);
  void add(Implementation i);
  void add(Belief b);
  void add(HabitualTrigger t);
  void add(RelatedValue r);
  void add(AdheredValue a);
  void addSame(std::string a, std::string b);

  bool operator==(const KnowledgeBase&) const = default;
};

const Activity& getActivity(const KnowledgeBase& kb, const std::string& id);
const Agent& getAgent(const KnowledgeBase& kb, const std::string& id);

/// True when `id` names a context cue, either declared directly or through the
/// agent/activity specializations of ContextCue.
bool resolvesAsCue(const KnowledgeBase& kb, const std::string& id);

/// All parents of an activity (more than one only in invalid hierarchies).
std::vector<std::string> parentsOf(const KnowledgeBase& kb, const std::string& activity);

/// C(p): the child ids over all implementations with parent = p, both edge types.
std::set<std::string> children(const KnowledgeBase& kb, const std::string& parent);

bool isLeaf(const KnowledgeBase& kb, const std::string& activity);

/// Activities without a parent; a valid hierarchy has exactly one.
std::vector<std::string> rootCandidates(const KnowledgeBase& kb);

/// The unique path of parents from `activity` (exclusive) up to the root
/// (inclusive); empty for the root. Requires a hierarchy that passed tree
/// validation.
std::vector<std::string> ancestors(const KnowledgeBase& kb, const std::string& activity);

}  // namespace sopra
