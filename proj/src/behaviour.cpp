#include "chorex/behaviour.hpp"

#include <algorithm>

namespace chorex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BehaviourPtr mk(Behaviour b) {
  return std::make_shared<const Behaviour>(std::move(b));
}

}  // namespace

BehaviourPtr terminated() {
  static const BehaviourPtr t = mk({Terminated{}});
  return t;
}
BehaviourPtr call(std::string procedure, std::vector<ProcessName> args) {
  return mk({Call{std::move(procedure), std::move(args)}});
}
BehaviourPtr send(ProcessName to, std::string expr, BehaviourPtr cont) {
  return mk({Send{std::move(to), std::move(expr), std::move(cont)}});
}
BehaviourPtr receive(ProcessName from, BehaviourPtr cont) {
  return mk({Receive{std::move(from), std::move(cont)}});
}
BehaviourPtr select(ProcessName to, std::string label, BehaviourPtr cont) {
  return mk({Select{std::move(to), std::move(label), std::move(cont)}});
}
BehaviourPtr offer(ProcessName from,
                   std::vector<std::pair<std::string, BehaviourPtr>> branches) {
  return mk({Offer{std::move(from), std::move(branches)}});
}
BehaviourPtr introduce(ProcessName left, ProcessName right, BehaviourPtr cont) {
  return mk({Introduce{std::move(left), std::move(right), std::move(cont)}});
}
BehaviourPtr receive_intro(ProcessName from, ProcessName binder,
                           BehaviourPtr cont) {
  return mk({ReceiveIntro{std::move(from), std::move(binder), std::move(cont)}});
}
BehaviourPtr conditional(std::string expr, BehaviourPtr then_branch,
                         BehaviourPtr else_branch) {
  return mk({Conditional{std::move(expr), std::move(then_branch),
                         std::move(else_branch)}});
}
BehaviourPtr spawn(ProcessName binder, BehaviourPtr child, BehaviourPtr cont) {
  return mk({Spawn{std::move(binder), std::move(child), std::move(cont)}});
}

bool is_terminated(const BehaviourPtr& b) {
  return std::holds_alternative<Terminated>(b->node);
}

bool equal(const BehaviourPtr& a, const BehaviourPtr& b) {
  if (a == b) return true;  // shared subtrees
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [](const Terminated&, const Terminated&) { return true; },
          [](const Call& x, const Call& y) {
            return x.procedure == y.procedure && x.args == y.args;
          },
          [](const Send& x, const Send& y) {
            return x.to == y.to && x.expr == y.expr && equal(x.cont, y.cont);
          },
          [](const Receive& x, const Receive& y) {
            return x.from == y.from && equal(x.cont, y.cont);
          },
          [](const Select& x, const Select& y) {
            return x.to == y.to && x.label == y.label && equal(x.cont, y.cont);
          },
          [](const Offer& x, const Offer& y) {
            if (x.from != y.from || x.branches.size() != y.branches.size())
              return false;
            for (size_t i = 0; i < x.branches.size(); ++i)
              if (x.branches[i].first != y.branches[i].first ||
                  !equal(x.branches[i].second, y.branches[i].second))
                return false;
            return true;
          },
          [](const Introduce& x, const Introduce& y) {
            return x.left == y.left && x.right == y.right &&
                   equal(x.cont, y.cont);
          },
          [](const ReceiveIntro& x, const ReceiveIntro& y) {
            return x.from == y.from && x.binder == y.binder &&
                   equal(x.cont, y.cont);
          },
          [](const Conditional& x, const Conditional& y) {
            return x.expr == y.expr && equal(x.then_branch, y.then_branch) &&
                   equal(x.else_branch, y.else_branch);
          },
          [](const Spawn& x, const Spawn& y) {
            return x.binder == y.binder && equal(x.child, y.child) &&
                   equal(x.cont, y.cont);
          },
          [](const auto&, const auto&) { return false; },
      },
      a->node, b->node);
}

bool Process::operator==(const Process& o) const {
  if (name != o.name || marked != o.marked) return false;
  if (!equal(main, o.main)) return false;
  if (procedures == o.procedures) return true;
  return *procedures == *o.procedures;
}

namespace {

void collect_names(const BehaviourPtr& b, NameSet& out) {
  std::visit(overloaded{
                 [&](const Terminated&) {},
                 [&](const Call& c) {
                   for (const auto& a : c.args) out.insert(a);
                 },
                 [&](const Send& s) {
                   out.insert(s.to);
                   collect_names(s.cont, out);
                 },
                 [&](const Receive& r) {
                   out.insert(r.from);
                   collect_names(r.cont, out);
                 },
                 [&](const Select& s) {
                   out.insert(s.to);
                   collect_names(s.cont, out);
                 },
                 [&](const Offer& o) {
                   out.insert(o.from);
                   for (const auto& [l, br] : o.branches) collect_names(br, out);
                 },
                 [&](const Introduce& i) {
                   out.insert(i.left);
                   out.insert(i.right);
                   collect_names(i.cont, out);
                 },
                 [&](const ReceiveIntro& r) {
                   out.insert(r.from);
                   out.insert(r.binder);
                   collect_names(r.cont, out);
                 },
                 [&](const Conditional& c) {
                   collect_names(c.then_branch, out);
                   collect_names(c.else_branch, out);
                 },
                 [&](const Spawn& s) {
                   out.insert(s.binder);
                   collect_names(s.child, out);
                   collect_names(s.cont, out);
                 },
             },
             b->node);
}

BehaviourPtr rename(const BehaviourPtr& b, const NameMap& m) {
  if (m.empty()) return b;
  auto sub = [&](const ProcessName& n) {
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
  };
  // Drops the binder's name from the active map inside its scope.
  auto shadowed = [&](const ProcessName& binder) {
    NameMap inner = m;
    inner.erase(binder);
    return inner;
  };
  return std::visit(
      overloaded{
          [&](const Terminated&) { return b; },
          [&](const Call& c) {
            std::vector<ProcessName> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(sub(a));
            return call(c.procedure, std::move(args));
          },
          [&](const Send& s) {
            return send(sub(s.to), s.expr, rename(s.cont, m));
          },
          [&](const Receive& r) {
            return receive(sub(r.from), rename(r.cont, m));
          },
          [&](const Select& s) {
            return select(sub(s.to), s.label, rename(s.cont, m));
          },
          [&](const Offer& o) {
            std::vector<std::pair<std::string, BehaviourPtr>> branches;
            branches.reserve(o.branches.size());
            for (const auto& [l, br] : o.branches)
              branches.emplace_back(l, rename(br, m));
            return offer(sub(o.from), std::move(branches));
          },
          [&](const Introduce& i) {
            return introduce(sub(i.left), sub(i.right), rename(i.cont, m));
          },
          [&](const ReceiveIntro& r) {
            NameMap inner = shadowed(r.binder);
            return receive_intro(sub(r.from), r.binder, rename(r.cont, inner));
          },
          [&](const Conditional& c) {
            return conditional(c.expr, rename(c.then_branch, m),
                               rename(c.else_branch, m));
          },
          [&](const Spawn& s) {
            NameMap inner = shadowed(s.binder);
            return spawn(s.binder, rename(s.child, inner),
                         rename(s.cont, inner));
          },
      },
      b->node);
}

// Renames binders named `old` (and the occurrences they bind) to `fresh`.
BehaviourPtr rename_binders(const BehaviourPtr& b, const ProcessName& old,
                            const ProcessName& fresh) {
  return std::visit(
      overloaded{
          [&](const Terminated&) { return b; },
          [&](const Call&) { return b; },
          [&](const Send& s) {
            return send(s.to, s.expr, rename_binders(s.cont, old, fresh));
          },
          [&](const Receive& r) {
            return receive(r.from, rename_binders(r.cont, old, fresh));
          },
          [&](const Select& s) {
            return select(s.to, s.label, rename_binders(s.cont, old, fresh));
          },
          [&](const Offer& o) {
            std::vector<std::pair<std::string, BehaviourPtr>> branches;
            for (const auto& [l, br] : o.branches)
              branches.emplace_back(l, rename_binders(br, old, fresh));
            return offer(o.from, std::move(branches));
          },
          [&](const Introduce& i) {
            return introduce(i.left, i.right,
                             rename_binders(i.cont, old, fresh));
          },
          [&](const ReceiveIntro& r) {
            if (r.binder == old) {
              NameMap m{{old, fresh}};
              return receive_intro(r.from, fresh, rename(r.cont, m));
            }
            return receive_intro(r.from, r.binder,
                                 rename_binders(r.cont, old, fresh));
          },
          [&](const Conditional& c) {
            return conditional(c.expr, rename_binders(c.then_branch, old, fresh),
                               rename_binders(c.else_branch, old, fresh));
          },
          [&](const Spawn& s) {
            if (s.binder == old) {
              NameMap m{{old, fresh}};
              return spawn(fresh, rename(s.child, m), rename(s.cont, m));
            }
            return spawn(s.binder, rename_binders(s.child, old, fresh),
                         rename_binders(s.cont, old, fresh));
          },
      },
      b->node);
}

void shape(const BehaviourPtr& b, std::string& out) {
  std::visit(overloaded{
                 [&](const Terminated&) { out += "0"; },
                 [&](const Call& c) {
                   out += "X(";
                   out += c.procedure;
                   out += '/';
                   out += std::to_string(c.args.size());
                   out += ')';
                 },
                 [&](const Send& s) {
                   out += "!";
                   out += s.expr;
                   out += ';';
                   shape(s.cont, out);
                 },
                 [&](const Receive& r) {
                   out += "?;";
                   shape(r.cont, out);
                 },
                 [&](const Select& s) {
                   out += "+";
                   out += s.label;
                   out += ';';
                   shape(s.cont, out);
                 },
                 [&](const Offer& o) {
                   out += "&{";
                   for (const auto& [l, br] : o.branches) {
                     out += l;
                     out += ':';
                     shape(br, out);
                     out += ',';
                   }
                   out += '}';
                 },
                 [&](const Introduce& i) {
                   out += "<->;";
                   shape(i.cont, out);
                 },
                 [&](const ReceiveIntro& r) {
                   out += "?x;";
                   shape(r.cont, out);
                 },
                 [&](const Conditional& c) {
                   out += "if ";
                   out += c.expr;
                   out += '{';
                   shape(c.then_branch, out);
                   out += "}{";
                   shape(c.else_branch, out);
                   out += '}';
                 },
                 [&](const Spawn& s) {
                   out += "spawn{";
                   shape(s.child, out);
                   out += "}{";
                   shape(s.cont, out);
                   out += '}';
                 },
             },
             b->node);
}

}  // namespace

NameSet occurring_names(const BehaviourPtr& b) {
  NameSet out;
  collect_names(b, out);
  return out;
}

BehaviourPtr apply_renaming(const BehaviourPtr& b, const NameMap& m) {
  return rename(b, m);
}

BehaviourPtr alpha_rename_binder(const BehaviourPtr& b, const ProcessName& old,
                                 const ProcessName& fresh) {
  if (occurring_names(b).count(fresh))
    throw FreshNameClash("alpha_rename_binder: name '" + fresh.text +
                         "' already occurs in the behaviour");
  return rename_binders(b, old, fresh);
}

std::string shape_key(const BehaviourPtr& b) {
  std::string out;
  shape(b, out);
  return out;
}

}  // namespace chorex
