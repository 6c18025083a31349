#include "chorex/labels.hpp"

namespace chorex {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string to_string(const TransitionLabel& l) {
  return std::visit(
      overloaded{
          [](const ComLabel& c) {
            return c.sender.text + "." + c.expr + " -> " + c.receiver.text;
          },
          [](const SelLabel& s) {
            return s.sender.text + " -> " + s.receiver.text + "[" + s.label +
                   "]";
          },
          [](const ThenLabel& t) {
            return t.process.text + "." + t.expr + " then";
          },
          [](const ElseLabel& e) {
            return e.process.text + "." + e.expr + " else";
          },
          [](const IntroLabel& i) {
            return i.introducer.text + "." + i.left.text + " <-> " +
                   i.right.text;
          },
          [](const SpawnLabel& s) {
            return s.parent.text + " spawns " + s.child.text;
          },
      },
      l.v);
}

NameSet label_process_names(const TransitionLabel& l) {
  return std::visit(
      overloaded{
          [](const ComLabel& c) { return NameSet{c.sender, c.receiver}; },
          [](const SelLabel& s) { return NameSet{s.sender, s.receiver}; },
          [](const ThenLabel& t) { return NameSet{t.process}; },
          [](const ElseLabel& e) { return NameSet{e.process}; },
          [](const IntroLabel& i) {
            return NameSet{i.introducer, i.left, i.right};
          },
          [](const SpawnLabel& s) { return NameSet{s.parent, s.child}; },
      },
      l.v);
}

TransitionLabel rename_label(const TransitionLabel& l, const NameMap& m) {
  auto sub = [&](const ProcessName& n) {
    auto it = m.find(n);
    return it == m.end() ? n : it->second;
  };
  return std::visit(
      overloaded{
          [&](const ComLabel& c) {
            return TransitionLabel{
                ComLabel{sub(c.sender), c.expr, sub(c.receiver)}};
          },
          [&](const SelLabel& s) {
            return TransitionLabel{
                SelLabel{sub(s.sender), sub(s.receiver), s.label}};
          },
          [&](const ThenLabel& t) {
            return TransitionLabel{ThenLabel{sub(t.process), t.expr}};
          },
          [&](const ElseLabel& e) {
            return TransitionLabel{ElseLabel{sub(e.process), e.expr}};
          },
          [&](const IntroLabel& i) {
            return TransitionLabel{
                IntroLabel{sub(i.introducer), sub(i.left), sub(i.right)}};
          },
          [&](const SpawnLabel& s) {
            return TransitionLabel{SpawnLabel{sub(s.parent), sub(s.child)}};
          },
      },
      l.v);
}

}  // namespace chorex
