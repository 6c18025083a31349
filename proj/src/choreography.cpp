#include "chorex/choreography.hpp"

namespace chorex {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ChorBodyPtr mk(ChorBody b) {
  return std::make_shared<const ChorBody>(std::move(b));
}
}  // namespace

ChorBodyPtr c_terminated() {
  static const ChorBodyPtr t = mk({CTerminated{}});
  return t;
}
ChorBodyPtr c_call(std::string procedure, std::vector<ProcessName> args) {
  return mk({CCall{std::move(procedure), std::move(args)}});
}
ChorBodyPtr c_com(ProcessName from, std::string expr, ProcessName to,
                  ChorBodyPtr cont) {
  return mk({CCom{std::move(from), std::move(expr), std::move(to),
                  std::move(cont)}});
}
ChorBodyPtr c_sel(ProcessName from, ProcessName to, std::string label,
                  ChorBodyPtr cont) {
  return mk({CSel{std::move(from), std::move(to), std::move(label),
                  std::move(cont)}});
}
ChorBodyPtr c_cond(ProcessName process, std::string expr,
                   ChorBodyPtr then_branch, ChorBodyPtr else_branch) {
  return mk({CCond{std::move(process), std::move(expr), std::move(then_branch),
                   std::move(else_branch)}});
}
ChorBodyPtr c_spawn(ProcessName parent, ProcessName child, ChorBodyPtr cont) {
  return mk({CSpawn{std::move(parent), std::move(child), std::move(cont)}});
}
ChorBodyPtr c_intro(ProcessName introducer, ProcessName left, ProcessName right,
                    ChorBodyPtr cont) {
  return mk({CIntro{std::move(introducer), std::move(left), std::move(right),
                    std::move(cont)}});
}

bool is_terminated(const ChorBodyPtr& b) {
  return std::holds_alternative<CTerminated>(b->node);
}

bool equal(const ChorBodyPtr& a, const ChorBodyPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [](const CTerminated&, const CTerminated&) { return true; },
          [](const CCall& x, const CCall& y) {
            return x.procedure == y.procedure && x.args == y.args;
          },
          [](const CCom& x, const CCom& y) {
            return x.from == y.from && x.expr == y.expr && x.to == y.to &&
                   equal(x.cont, y.cont);
          },
          [](const CSel& x, const CSel& y) {
            return x.from == y.from && x.to == y.to && x.label == y.label &&
                   equal(x.cont, y.cont);
          },
          [](const CCond& x, const CCond& y) {
            return x.process == y.process && x.expr == y.expr &&
                   equal(x.then_branch, y.then_branch) &&
                   equal(x.else_branch, y.else_branch);
          },
          [](const CSpawn& x, const CSpawn& y) {
            return x.parent == y.parent && x.child == y.child &&
                   equal(x.cont, y.cont);
          },
          [](const CIntro& x, const CIntro& y) {
            return x.introducer == y.introducer && x.left == y.left &&
                   x.right == y.right && equal(x.cont, y.cont);
          },
          [](const auto&, const auto&) { return false; },
      },
      a->node, b->node);
}

namespace {

void collect(const ChorBodyPtr& b, NameSet& out) {
  std::visit(overloaded{
                 [&](const CTerminated&) {},
                 [&](const CCall& c) {
                   for (const auto& a : c.args) out.insert(a);
                 },
                 [&](const CCom& c) {
                   out.insert(c.from);
                   out.insert(c.to);
                   collect(c.cont, out);
                 },
                 [&](const CSel& s) {
                   out.insert(s.from);
                   out.insert(s.to);
                   collect(s.cont, out);
                 },
                 [&](const CCond& c) {
                   out.insert(c.process);
                   collect(c.then_branch, out);
                   collect(c.else_branch, out);
                 },
                 [&](const CSpawn& s) {
                   out.insert(s.parent);
                   out.insert(s.child);
                   collect(s.cont, out);
                 },
                 [&](const CIntro& i) {
                   out.insert(i.introducer);
                   out.insert(i.left);
                   out.insert(i.right);
                   collect(i.cont, out);
                 },
             },
             b->node);
}

}  // namespace

NameSet occurring_names(const ChorBodyPtr& b) {
  NameSet out;
  collect(b, out);
  return out;
}

ChorBodyPtr apply_renaming(const ChorBodyPtr& b, const NameMap& m) {
  if (m.empty()) return b;
  auto sub = [&](const ProcessName& n) {
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
  };
  return std::visit(
      overloaded{
          [&](const CTerminated&) { return b; },
          [&](const CCall& c) {
            std::vector<ProcessName> args;
            for (const auto& a : c.args) args.push_back(sub(a));
            return c_call(c.procedure, std::move(args));
          },
          [&](const CCom& c) {
            return c_com(sub(c.from), c.expr, sub(c.to),
                         apply_renaming(c.cont, m));
          },
          [&](const CSel& s) {
            return c_sel(sub(s.from), sub(s.to), s.label,
                         apply_renaming(s.cont, m));
          },
          [&](const CCond& c) {
            return c_cond(sub(c.process), c.expr,
                          apply_renaming(c.then_branch, m),
                          apply_renaming(c.else_branch, m));
          },
          [&](const CSpawn& s) {
            NameMap inner = m;
            inner.erase(s.child);
            return c_spawn(sub(s.parent), s.child,
                           apply_renaming(s.cont, inner));
          },
          [&](const CIntro& i) {
            return c_intro(sub(i.introducer), sub(i.left), sub(i.right),
                           apply_renaming(i.cont, m));
          },
      },
      b->node);
}

ChorBodyPtr rename_spawn_binder(const ChorBodyPtr& b, const ProcessName& old,
                                const ProcessName& fresh) {
  return std::visit(
      overloaded{
          [&](const CTerminated&) { return b; },
          [&](const CCall&) { return b; },
          [&](const CCom& c) {
            return c_com(c.from, c.expr, c.to,
                         rename_spawn_binder(c.cont, old, fresh));
          },
          [&](const CSel& s) {
            return c_sel(s.from, s.to, s.label,
                         rename_spawn_binder(s.cont, old, fresh));
          },
          [&](const CCond& c) {
            return c_cond(c.process, c.expr,
                          rename_spawn_binder(c.then_branch, old, fresh),
                          rename_spawn_binder(c.else_branch, old, fresh));
          },
          [&](const CSpawn& s) {
            if (s.child == old)
              return c_spawn(s.parent, fresh,
                             apply_renaming(s.cont, NameMap{{old, fresh}}));
            return c_spawn(s.parent, s.child,
                           rename_spawn_binder(s.cont, old, fresh));
          },
          [&](const CIntro& i) {
            return c_intro(i.introducer, i.left, i.right,
                           rename_spawn_binder(i.cont, old, fresh));
          },
      },
      b->node);
}

namespace {

bool equal_mod(const ChorBodyPtr& a, const ChorBodyPtr& b,
               std::map<std::string, std::string>& procmap) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [](const CTerminated&, const CTerminated&) { return true; },
          [&](const CCall& x, const CCall& y) {
            if (x.args != y.args) return false;
            auto it = procmap.find(x.procedure);
            if (it == procmap.end()) {
              procmap[x.procedure] = y.procedure;
              return true;
            }
            return it->second == y.procedure;
          },
          [&](const CCom& x, const CCom& y) {
            return x.from == y.from && x.expr == y.expr && x.to == y.to &&
                   equal_mod(x.cont, y.cont, procmap);
          },
          [&](const CSel& x, const CSel& y) {
            return x.from == y.from && x.to == y.to && x.label == y.label &&
                   equal_mod(x.cont, y.cont, procmap);
          },
          [&](const CCond& x, const CCond& y) {
            return x.process == y.process && x.expr == y.expr &&
                   equal_mod(x.then_branch, y.then_branch, procmap) &&
                   equal_mod(x.else_branch, y.else_branch, procmap);
          },
          [&](const CSpawn& x, const CSpawn& y) {
            return x.parent == y.parent && x.child == y.child &&
                   equal_mod(x.cont, y.cont, procmap);
          },
          [&](const CIntro& x, const CIntro& y) {
            return x.introducer == y.introducer && x.left == y.left &&
                   x.right == y.right && equal_mod(x.cont, y.cont, procmap);
          },
          [](const auto&, const auto&) { return false; },
      },
      a->node, b->node);
}

}  // namespace

bool equal_up_to_procedure_names(const Choreography& a, const Choreography& b) {
  if (a.procedures.size() != b.procedures.size()) return false;
  std::map<std::string, std::string> procmap;
  if (!equal_mod(a.main, b.main, procmap)) return false;
  // Procedure bodies are compared following the name correspondence found so
  // far; new correspondences may be discovered along the way.
  std::set<std::string> done;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [an, bn] : std::map<std::string, std::string>(procmap)) {
      if (done.count(an)) continue;
      auto ai = a.procedures.find(an);
      auto bi = b.procedures.find(bn);
      if (ai == a.procedures.end() || bi == b.procedures.end()) return false;
      if (ai->second.params != bi->second.params) return false;
      if (!equal_mod(ai->second.body, bi->second.body, procmap)) return false;
      done.insert(an);
      progress = true;
    }
  }
  // Every procedure must be covered by the correspondence; unreferenced
  // procedures would make the comparison ambiguous.
  return done.size() == a.procedures.size();
}

}  // namespace chorex
