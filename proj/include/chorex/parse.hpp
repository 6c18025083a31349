#pragma once

#include <string>
#include <variant>

#include "chorex/behaviour.hpp"
#include "chorex/choreography.hpp"

namespace chorex {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
};

struct ParseError {
  SourceSpan span;
  std::string expected;
  std::string found;

  std::string message() const {
    return span.file + ":" + std::to_string(span.line) + ":" +
           std::to_string(span.column) + ": expected " + expected +
           ", found " + found;
  }
};

template <class T>
using Parsed = std::variant<T, ParseError>;

// Parses network source. Binders within one behaviour tree are made pairwise
// distinct by alpha-renaming; duplicate process/procedure names, duplicate
// offer labels, non-tail calls and unknown free names are rejected.
Parsed<Network> parse_network(const std::string& src,
                              const std::string& file = "<input>");

Parsed<Choreography> parse_choreography(const std::string& src,
                                        const std::string& file = "<input>");

}  // namespace chorex
