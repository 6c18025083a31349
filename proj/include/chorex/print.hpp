#pragma once

#include <string>

#include "chorex/behaviour.hpp"
#include "chorex/choreography.hpp"

namespace chorex {

// Canonical formatting: one action per line, 4-space indent. Parsing the
// output yields an AST equal to the input.
std::string print_network(const Network& n);
std::string print_choreography(const Choreography& c);

std::string print_behaviour(const BehaviourPtr& b, int indent = 0);
std::string print_chor_body(const ChorBodyPtr& b, int indent = 0);

// Single-line forms, used in diagnostics and DOT node labels.
std::string print_behaviour_inline(const BehaviourPtr& b);
std::string print_network_inline(const Network& n);

}  // namespace chorex
