#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chorex {

// Process names and process variables share one representation; whether an
// identifier denotes an actual process or a local variable is decided by the
// variable mapping at use sites. Names containing '/' are reserved for
// processes spawned at runtime.
struct ProcessName {
  std::string text;

  ProcessName() = default;
  ProcessName(std::string t) : text(std::move(t)) {}
  ProcessName(const char* t) : text(t) {}

  bool spawned() const { return text.find('/') != std::string::npos; }
  bool empty() const { return text.empty(); }

  auto operator<=>(const ProcessName&) const = default;
};

using NameMap = std::map<ProcessName, ProcessName>;
using NameSet = std::set<ProcessName>;

// A renaming of processes, recorded on loop-closing edges. Injective when it
// proves two nodes behaviourally equivalent; non-injective when it witnesses
// a resource leak.
struct ProcessRenaming {
  NameMap map;

  ProcessRenaming() = default;
  explicit ProcessRenaming(NameMap m) : map(std::move(m)) {}

  // Names outside the stated domain are left unchanged.
  ProcessName apply(const ProcessName& n) const {
    auto it = map.find(n);
    return it == map.end() ? n : it->second;
  }

  bool is_identity() const {
    for (const auto& [from, to] : map)
      if (from != to) return false;
    return true;
  }

  bool is_injective() const {
    NameSet seen;
    for (const auto& [from, to] : map)
      if (!seen.insert(to).second) return false;
    return true;
  }

  // The pairs that actually change a name, in domain order.
  std::vector<std::pair<ProcessName, ProcessName>> non_identity_pairs() const {
    std::vector<std::pair<ProcessName, ProcessName>> out;
    for (const auto& [from, to] : map)
      if (from != to) out.emplace_back(from, to);
    return out;
  }

  // Defined only for injective renamings.
  ProcessRenaming inverse() const {
    NameMap inv;
    for (const auto& [from, to] : map) inv[to] = from;
    return ProcessRenaming{std::move(inv)};
  }

  bool operator==(const ProcessRenaming&) const = default;
};

// The variable mapping gamma: (owner process, local variable) -> actual
// process name. Replaces the concrete connection graph in the abstract
// semantics. gamma(p, p) = p holds for every process p in the network.
struct VariableMapping {
  std::map<std::pair<ProcessName, ProcessName>, ProcessName> entries;

  std::optional<ProcessName> lookup(const ProcessName& owner,
                                    const ProcessName& var) const {
    auto it = entries.find({owner, var});
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  void bind(const ProcessName& owner, const ProcessName& var,
            const ProcessName& target) {
    entries[{owner, var}] = target;
  }

  // True when the owner has some variable resolving to the given process;
  // this is the abstract counterpart of "connected in the communication
  // graph".
  bool knows(const ProcessName& owner, const ProcessName& target) const {
    for (auto it = entries.lower_bound({owner, ProcessName{""}});
         it != entries.end() && it->first.first == owner; ++it)
      if (it->second == target) return true;
    return false;
  }

  bool operator==(const VariableMapping&) const = default;
};

}  // namespace chorex
