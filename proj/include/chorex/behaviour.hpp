#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chorex/names.hpp"

namespace chorex {

struct Behaviour;
using BehaviourPtr = std::shared_ptr<const Behaviour>;

// One process's program. Continuations are immutable and shared; a behaviour
// value is never mutated after construction.
struct Terminated {};

// Tail call of a local procedure. Calls carry no continuation, which is what
// restricts the language to tail recursion.
struct Call {
  std::string procedure;
  std::vector<ProcessName> args;
};

struct Send {
  ProcessName to;
  std::string expr;  // opaque text, never evaluated
  BehaviourPtr cont;
};

struct Receive {
  ProcessName from;
  BehaviourPtr cont;
};

struct Select {
  ProcessName to;
  std::string label;
  BehaviourPtr cont;
};

struct Offer {
  ProcessName from;
  std::vector<std::pair<std::string, BehaviourPtr>> branches;
};

// Introducer side of a three-way introduction: tells `left` and `right` each
// other's names.
struct Introduce {
  ProcessName left;
  ProcessName right;
  BehaviourPtr cont;
};

// Receiving side of an introduction: `binder` is bound in the continuation.
struct ReceiveIntro {
  ProcessName from;
  ProcessName binder;
  BehaviourPtr cont;
};

struct Conditional {
  std::string expr;
  BehaviourPtr then_branch;
  BehaviourPtr else_branch;
};

// `binder` names the new process; it is bound both in the child body and in
// the continuation.
struct Spawn {
  ProcessName binder;
  BehaviourPtr child;
  BehaviourPtr cont;
};

struct Behaviour {
  std::variant<Terminated, Call, Send, Receive, Select, Offer, Introduce,
               ReceiveIntro, Conditional, Spawn>
      node;
};

// Construction helpers. All behaviours are built through these.
BehaviourPtr terminated();
BehaviourPtr call(std::string procedure, std::vector<ProcessName> args = {});
BehaviourPtr send(ProcessName to, std::string expr, BehaviourPtr cont);
BehaviourPtr receive(ProcessName from, BehaviourPtr cont);
BehaviourPtr select(ProcessName to, std::string label, BehaviourPtr cont);
BehaviourPtr offer(ProcessName from,
                   std::vector<std::pair<std::string, BehaviourPtr>> branches);
BehaviourPtr introduce(ProcessName left, ProcessName right, BehaviourPtr cont);
BehaviourPtr receive_intro(ProcessName from, ProcessName binder,
                           BehaviourPtr cont);
BehaviourPtr conditional(std::string expr, BehaviourPtr then_branch,
                         BehaviourPtr else_branch);
BehaviourPtr spawn(ProcessName binder, BehaviourPtr child, BehaviourPtr cont);

bool equal(const BehaviourPtr& a, const BehaviourPtr& b);
bool is_terminated(const BehaviourPtr& b);

// Every name occurring in the tree, free or bound, including binders.
NameSet occurring_names(const BehaviourPtr& b);

// Capture-aware free-name substitution: occurrences bound by a Spawn or
// ReceiveIntro binder are untouched, and a binder shadows its own name in its
// scope (child body and continuation for Spawn, continuation for
// ReceiveIntro). A replacement name is allowed to collide with a binder;
// the language permits a variable to occur both free and bound.
BehaviourPtr apply_renaming(const BehaviourPtr& b, const NameMap& m);
inline BehaviourPtr apply_renaming(const BehaviourPtr& b,
                                   const ProcessRenaming& m) {
  return apply_renaming(b, m.map);
}

struct FreshNameClash : std::runtime_error {
  explicit FreshNameClash(const std::string& what) : std::runtime_error(what) {}
};

// Renames every binder called `old` together with the occurrences it binds.
// Throws FreshNameClash when `fresh` already occurs in the tree. A tree
// without such a binder is returned unchanged.
BehaviourPtr alpha_rename_binder(const BehaviourPtr& b, const ProcessName& old,
                                 const ProcessName& fresh);

// Structural fingerprint with process names erased (exprs and labels kept);
// used to prune candidate pairings during equivalence search.
std::string shape_key(const BehaviourPtr& b);

struct ProcedureDef {
  std::string name;
  std::vector<ProcessName> params;
  BehaviourPtr body;

  bool operator==(const ProcedureDef& o) const {
    return name == o.name && params == o.params && equal(body, o.body);
  }
};

using ProcedureMap = std::map<std::string, ProcedureDef>;
using ProcedureMapPtr = std::shared_ptr<const ProcedureMap>;

struct Process {
  ProcessName name;
  ProcedureMapPtr procedures;  // shared: spawned children inherit the parent's
  BehaviourPtr main;
  bool marked = false;

  bool terminated() const { return is_terminated(main); }
  bool operator==(const Process& o) const;
};

struct Network {
  std::map<ProcessName, Process> processes;

  NameSet live_names() const {
    NameSet out;
    for (const auto& [n, p] : processes)
      if (!p.terminated()) out.insert(n);
    return out;
  }
  bool all_terminated() const {
    for (const auto& [n, p] : processes)
      if (!p.terminated()) return false;
    return true;
  }
  bool operator==(const Network&) const = default;
};

}  // namespace chorex
