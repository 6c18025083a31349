#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "chorex/names.hpp"

namespace chorex {

struct ChorBody;
using ChorBodyPtr = std::shared_ptr<const ChorBody>;

// Global interaction terms. The structure mirrors the transition labels:
// every edge of a symbolic execution graph reads back as one of these.
struct CTerminated {};

struct CCall {
  std::string procedure;
  std::vector<ProcessName> args;
};

struct CCom {
  ProcessName from;
  std::string expr;
  ProcessName to;
  ChorBodyPtr cont;
};

struct CSel {
  ProcessName from;
  ProcessName to;
  std::string label;
  ChorBodyPtr cont;
};

struct CCond {
  ProcessName process;
  std::string expr;
  ChorBodyPtr then_branch;
  ChorBodyPtr else_branch;
};

// `child` is a binder: occurrences in the continuation denote the spawned
// process.
struct CSpawn {
  ProcessName parent;
  ProcessName child;
  ChorBodyPtr cont;
};

struct CIntro {
  ProcessName introducer;
  ProcessName left;
  ProcessName right;
  ChorBodyPtr cont;
};

struct ChorBody {
  std::variant<CTerminated, CCall, CCom, CSel, CCond, CSpawn, CIntro> node;
};

ChorBodyPtr c_terminated();
ChorBodyPtr c_call(std::string procedure, std::vector<ProcessName> args = {});
ChorBodyPtr c_com(ProcessName from, std::string expr, ProcessName to,
                  ChorBodyPtr cont);
ChorBodyPtr c_sel(ProcessName from, ProcessName to, std::string label,
                  ChorBodyPtr cont);
ChorBodyPtr c_cond(ProcessName process, std::string expr,
                   ChorBodyPtr then_branch, ChorBodyPtr else_branch);
ChorBodyPtr c_spawn(ProcessName parent, ProcessName child, ChorBodyPtr cont);
ChorBodyPtr c_intro(ProcessName introducer, ProcessName left, ProcessName right,
                    ChorBodyPtr cont);

bool equal(const ChorBodyPtr& a, const ChorBodyPtr& b);
bool is_terminated(const ChorBodyPtr& b);
NameSet occurring_names(const ChorBodyPtr& b);

// Free-name substitution; CSpawn binders shadow their name in the
// continuation.
ChorBodyPtr apply_renaming(const ChorBodyPtr& b, const NameMap& m);

// Renames spawn binders named `old` (and their bound occurrences) to `fresh`.
ChorBodyPtr rename_spawn_binder(const ChorBodyPtr& b, const ProcessName& old,
                                const ProcessName& fresh);

struct ChorProcedure {
  std::vector<ProcessName> params;
  ChorBodyPtr body;

  bool operator==(const ChorProcedure& o) const {
    return params == o.params && equal(body, o.body);
  }
};

struct Choreography {
  std::map<std::string, ChorProcedure> procedures;
  ChorBodyPtr main;

  bool operator==(const Choreography& o) const {
    return procedures == o.procedures && equal(main, o.main);
  }
};

// Structural equality up to a consistent renaming of procedure names,
// used by golden tests that compare extracted output (X1, X2, ...) against a
// reference with human-chosen names.
bool equal_up_to_procedure_names(const Choreography& a, const Choreography& b);

}  // namespace chorex
