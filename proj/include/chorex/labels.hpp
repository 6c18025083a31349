#pragma once

#include <string>
#include <variant>

#include "chorex/names.hpp"

namespace chorex {

// Transition labels of the abstract semantics. All names are actual process
// names, resolved through the variable mapping before the label is formed.
struct ComLabel {
  ProcessName sender;
  std::string expr;
  ProcessName receiver;
  bool operator==(const ComLabel&) const = default;
};

struct SelLabel {
  ProcessName sender;
  ProcessName receiver;
  std::string label;
  bool operator==(const SelLabel&) const = default;
};

struct ThenLabel {
  ProcessName process;
  std::string expr;
  bool operator==(const ThenLabel&) const = default;
};

struct ElseLabel {
  ProcessName process;
  std::string expr;
  bool operator==(const ElseLabel&) const = default;
};

struct IntroLabel {
  ProcessName introducer;
  ProcessName left;
  ProcessName right;
  bool operator==(const IntroLabel&) const = default;
};

struct SpawnLabel {
  ProcessName parent;
  ProcessName child;
  bool operator==(const SpawnLabel&) const = default;
};

struct TransitionLabel {
  std::variant<ComLabel, SelLabel, ThenLabel, ElseLabel, IntroLabel, SpawnLabel>
      v;
  bool operator==(const TransitionLabel&) const = default;
};

std::string to_string(const TransitionLabel& l);
NameSet label_process_names(const TransitionLabel& l);

// Rewrites every name through the map, leaving unmapped names alone.
TransitionLabel rename_label(const TransitionLabel& l, const NameMap& m);

inline bool operator<(const TransitionLabel& a, const TransitionLabel& b) {
  return to_string(a) < to_string(b);
}

}  // namespace chorex
