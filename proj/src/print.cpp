#include "chorex/print.hpp"

#include <sstream>

namespace chorex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string ind(int n) { return std::string(4 * n, ' '); }

std::string arglist(const std::vector<ProcessName>& args) {
  std::string out = "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].text;
  }
  out += ")";
  return out;
}

void pb(const BehaviourPtr& b, int k, std::string& out) {
  std::visit(
      overloaded{
          [&](const Terminated&) { out += ind(k) + "0"; },
          [&](const Call& c) { out += ind(k) + c.procedure + arglist(c.args); },
          [&](const Send& s) {
            out += ind(k) + s.to.text + "!" + s.expr + ";\n";
            pb(s.cont, k, out);
          },
          [&](const Receive& r) {
            out += ind(k) + r.from.text + "?;\n";
            pb(r.cont, k, out);
          },
          [&](const Select& s) {
            out += ind(k) + s.to.text + "+" + s.label + ";\n";
            pb(s.cont, k, out);
          },
          [&](const Offer& o) {
            out += ind(k) + o.from.text + "&{\n";
            for (size_t i = 0; i < o.branches.size(); ++i) {
              out += ind(k + 1) + o.branches[i].first + ":\n";
              pb(o.branches[i].second, k + 2, out);
              out += (i + 1 < o.branches.size()) ? ",\n" : "\n";
            }
            out += ind(k) + "}";
          },
          [&](const Introduce& i) {
            out += ind(k) + i.left.text + "<->" + i.right.text + ";\n";
            pb(i.cont, k, out);
          },
          [&](const ReceiveIntro& r) {
            out += ind(k) + r.from.text + "?" + r.binder.text + ";\n";
            pb(r.cont, k, out);
          },
          [&](const Conditional& c) {
            out += ind(k) + "if " + c.expr + " then {\n";
            pb(c.then_branch, k + 1, out);
            out += "\n" + ind(k) + "} else {\n";
            pb(c.else_branch, k + 1, out);
            out += "\n" + ind(k) + "}";
          },
          [&](const Spawn& s) {
            out += ind(k) + "spawn " + s.binder.text + " with {\n";
            pb(s.child, k + 1, out);
            out += "\n" + ind(k) + "} continue {\n";
            pb(s.cont, k + 1, out);
            out += "\n" + ind(k) + "}";
          },
      },
      b->node);
}

void pbi(const BehaviourPtr& b, std::string& out) {
  std::visit(
      overloaded{
          [&](const Terminated&) { out += "0"; },
          [&](const Call& c) { out += c.procedure + arglist(c.args); },
          [&](const Send& s) {
            out += s.to.text + "!" + s.expr + "; ";
            pbi(s.cont, out);
          },
          [&](const Receive& r) {
            out += r.from.text + "?; ";
            pbi(r.cont, out);
          },
          [&](const Select& s) {
            out += s.to.text + "+" + s.label + "; ";
            pbi(s.cont, out);
          },
          [&](const Offer& o) {
            out += o.from.text + "&{";
            for (size_t i = 0; i < o.branches.size(); ++i) {
              if (i) out += ", ";
              out += o.branches[i].first + ": ";
              pbi(o.branches[i].second, out);
            }
            out += "}";
          },
          [&](const Introduce& i) {
            out += i.left.text + "<->" + i.right.text + "; ";
            pbi(i.cont, out);
          },
          [&](const ReceiveIntro& r) {
            out += r.from.text + "?" + r.binder.text + "; ";
            pbi(r.cont, out);
          },
          [&](const Conditional& c) {
            out += "if " + c.expr + " then { ";
            pbi(c.then_branch, out);
            out += " } else { ";
            pbi(c.else_branch, out);
            out += " }";
          },
          [&](const Spawn& s) {
            out += "spawn " + s.binder.text + " with { ";
            pbi(s.child, out);
            out += " } continue { ";
            pbi(s.cont, out);
            out += " }";
          },
      },
      b->node);
}

void pc(const ChorBodyPtr& b, int k, std::string& out) {
  std::visit(
      overloaded{
          [&](const CTerminated&) { out += ind(k) + "0"; },
          [&](const CCall& c) { out += ind(k) + c.procedure + arglist(c.args); },
          [&](const CCom& c) {
            out += ind(k) + c.from.text + "." + c.expr + " -> " + c.to.text +
                   ";\n";
            pc(c.cont, k, out);
          },
          [&](const CSel& s) {
            out += ind(k) + s.from.text + " -> " + s.to.text + "[" + s.label +
                   "];\n";
            pc(s.cont, k, out);
          },
          [&](const CCond& c) {
            out += ind(k) + "if " + c.process.text + "." + c.expr +
                   " then {\n";
            pc(c.then_branch, k + 1, out);
            out += "\n" + ind(k) + "} else {\n";
            pc(c.else_branch, k + 1, out);
            out += "\n" + ind(k) + "}";
          },
          [&](const CSpawn& s) {
            out += ind(k) + s.parent.text + " spawns " + s.child.text + ";\n";
            pc(s.cont, k, out);
          },
          [&](const CIntro& i) {
            out += ind(k) + i.introducer.text + "." + i.left.text + " <-> " +
                   i.right.text + ";\n";
            pc(i.cont, k, out);
          },
      },
      b->node);
}

}  // namespace

std::string print_behaviour(const BehaviourPtr& b, int indent) {
  std::string out;
  pb(b, indent, out);
  return out;
}

std::string print_behaviour_inline(const BehaviourPtr& b) {
  std::string out;
  pbi(b, out);
  return out;
}

std::string print_chor_body(const ChorBodyPtr& b, int indent) {
  std::string out;
  pc(b, indent, out);
  return out;
}

std::string print_network(const Network& n) {
  std::string out;
  bool first = true;
  for (const auto& [name, p] : n.processes) {
    if (!first) out += " |\n";
    first = false;
    out += name.text + " {\n";
    for (const auto& [pname, def] : *p.procedures) {
      out += ind(1) + "def " + pname + arglist(def.params) + " {\n";
      out += print_behaviour(def.body, 2);
      out += "\n" + ind(1) + "}\n";
    }
    out += ind(1) + "main {\n";
    out += print_behaviour(p.main, 2);
    out += "\n" + ind(1) + "}\n";
    out += "}";
  }
  out += "\n";
  return out;
}

std::string print_network_inline(const Network& n) {
  std::string out;
  bool first = true;
  for (const auto& [name, p] : n.processes) {
    if (!first) out += " | ";
    first = false;
    out += name.text + ": " + print_behaviour_inline(p.main);
  }
  return out;
}

std::string print_choreography(const Choreography& c) {
  std::string out;
  for (const auto& [name, def] : c.procedures) {
    out += "def " + name + arglist(def.params) + " {\n";
    out += print_chor_body(def.body, 1);
    out += "\n}\n";
  }
  out += "main {\n";
  out += print_chor_body(c.main, 1);
  out += "\n}\n";
  return out;
}

}  // namespace chorex
