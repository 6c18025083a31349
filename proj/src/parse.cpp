#include "chorex/parse.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace chorex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Tok {
  Name,     // identifier, may contain '/'
  String,   // quoted text, stored with quotes
  Zero,     // the literal 0
  KwDef, KwMain, KwIf, KwThen, KwElse, KwSpawn, KwWith, KwContinue, KwStop,
  KwSpawns,
  Bang, Quest, Plus, Amp, Dot, Comma, Semi, Colon, Bar,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Arrow,   // ->
  DArrow,  // <->
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Name: return "identifier";
    case Tok::String: return "string";
    case Tok::Zero: return "'0'";
    case Tok::KwDef: return "'def'";
    case Tok::KwMain: return "'main'";
    case Tok::KwIf: return "'if'";
    case Tok::KwThen: return "'then'";
    case Tok::KwElse: return "'else'";
    case Tok::KwSpawn: return "'spawn'";
    case Tok::KwWith: return "'with'";
    case Tok::KwContinue: return "'continue'";
    case Tok::KwStop: return "'stop'";
    case Tok::KwSpawns: return "'spawns'";
    case Tok::Bang: return "'!'";
    case Tok::Quest: return "'?'";
    case Tok::Plus: return "'+'";
    case Tok::Amp: return "'&'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Bar: return "'|'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct ParseFail {
  ParseError err;
};

[[noreturn]] void fail(const SourceSpan& at, const std::string& expected,
                       const std::string& found) {
  throw ParseFail{ParseError{at, expected, found}};
}

class Lexer {
 public:
  Lexer(const std::string& src, std::string file)
      : src_(src), file_(std::move(file)) {
    tokenize();
  }

  const Token& peek(int ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  Token expect(Tok kind) {
    if (peek().kind != kind)
      fail(peek().span, tok_name(kind), describe(peek()));
    return next();
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

 private:
  void tokenize() {
    size_t i = 0;
    int line = 1, col = 1;
    auto here = [&] { return SourceSpan{file_, line, col}; };
    auto adv = [&](size_t n) {
      for (size_t k = 0; k < n; ++k, ++i) {
        if (src_[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
    };
    while (i < src_.size()) {
      char c = src_[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        adv(1);
        continue;
      }
      if (c == '/' && i + 1 < src_.size() && src_[i + 1] == '/') {
        while (i < src_.size() && src_[i] != '\n') adv(1);
        continue;
      }
      SourceSpan sp = here();
      if (std::isalpha((unsigned char)c) || c == '_') {
        size_t j = i;
        while (j < src_.size()) {
          char d = src_[j];
          if (std::isalnum((unsigned char)d) || d == '_') {
            ++j;
          } else if (d == '/' && j + 1 < src_.size() &&
                     (std::isalnum((unsigned char)src_[j + 1]) ||
                      src_[j + 1] == '_')) {
            // names may contain single slashes; '//' starts a comment
            j += 2;
          } else {
            break;
          }
        }
        std::string word = src_.substr(i, j - i);
        adv(j - i);
        Tok k = Tok::Name;
        if (word == "def") k = Tok::KwDef;
        else if (word == "main") k = Tok::KwMain;
        else if (word == "if") k = Tok::KwIf;
        else if (word == "then") k = Tok::KwThen;
        else if (word == "else") k = Tok::KwElse;
        else if (word == "spawn") k = Tok::KwSpawn;
        else if (word == "with") k = Tok::KwWith;
        else if (word == "continue") k = Tok::KwContinue;
        else if (word == "stop") k = Tok::KwStop;
        else if (word == "spawns") k = Tok::KwSpawns;
        toks_.push_back({k, word, sp});
        continue;
      }
      if (c == '"') {
        size_t j = i + 1;
        while (j < src_.size() && src_[j] != '"' && src_[j] != '\n') ++j;
        if (j >= src_.size() || src_[j] != '"')
          fail(sp, "closing '\"'", "end of line");
        std::string text = src_.substr(i, j - i + 1);  // quotes kept
        adv(j - i + 1);
        toks_.push_back({Tok::String, text, sp});
        continue;
      }
      if (c == '0' &&
          (i + 1 >= src_.size() ||
           (!std::isalnum((unsigned char)src_[i + 1]) && src_[i + 1] != '_'))) {
        adv(1);
        toks_.push_back({Tok::Zero, "0", sp});
        continue;
      }
      auto punct = [&](Tok k, size_t len) {
        std::string text = src_.substr(i, len);
        adv(len);
        toks_.push_back({k, text, sp});
      };
      if (c == '<' && i + 2 < src_.size() && src_[i + 1] == '-' &&
          src_[i + 2] == '>') {
        punct(Tok::DArrow, 3);
        continue;
      }
      if (c == '-' && i + 1 < src_.size() && src_[i + 1] == '>') {
        punct(Tok::Arrow, 2);
        continue;
      }
      switch (c) {
        case '!': punct(Tok::Bang, 1); continue;
        case '?': punct(Tok::Quest, 1); continue;
        case '+': punct(Tok::Plus, 1); continue;
        case '&': punct(Tok::Amp, 1); continue;
        case '.': punct(Tok::Dot, 1); continue;
        case ',': punct(Tok::Comma, 1); continue;
        case ';': punct(Tok::Semi, 1); continue;
        case ':': punct(Tok::Colon, 1); continue;
        case '|': punct(Tok::Bar, 1); continue;
        case '{': punct(Tok::LBrace, 1); continue;
        case '}': punct(Tok::RBrace, 1); continue;
        case '(': punct(Tok::LParen, 1); continue;
        case ')': punct(Tok::RParen, 1); continue;
        case '[': punct(Tok::LBracket, 1); continue;
        case ']': punct(Tok::RBracket, 1); continue;
        default:
          fail(sp, "a token", std::string("'") + c + "'");
      }
    }
    toks_.push_back({Tok::End, "", here()});
  }

  const std::string& src_;
  std::string file_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// ---------- network grammar ----------

class NetParser {
 public:
  explicit NetParser(Lexer& lx) : lx_(lx) {}

  Network parse() {
    Network n;
    while (true) {
      Process p = parse_process();
      if (n.processes.count(p.name))
        fail(lx_.peek().span, "distinct process names",
             "duplicate process '" + p.name.text + "'");
      n.processes.emplace(p.name, std::move(p));
      if (!lx_.accept(Tok::Bar)) break;
    }
    lx_.expect(Tok::End);
    if (n.processes.empty())
      fail(lx_.peek().span, "at least one process", "empty network");
    return n;
  }

 private:
  Process parse_process() {
    Token name = lx_.expect(Tok::Name);
    lx_.expect(Tok::LBrace);
    auto procs = std::make_shared<ProcedureMap>();
    while (lx_.peek().kind == Tok::KwDef) {
      lx_.next();
      Token pn = lx_.expect(Tok::Name);
      std::vector<ProcessName> params = parse_namelist();
      lx_.expect(Tok::LBrace);
      BehaviourPtr body = parse_behaviour();
      lx_.expect(Tok::RBrace);
      NameSet seen;
      for (const auto& p : params)
        if (!seen.insert(p).second)
          fail(pn.span, "distinct parameters",
               "duplicate parameter '" + p.text + "'");
      if (procs->count(pn.text))
        fail(pn.span, "distinct procedure names",
             "duplicate procedure '" + pn.text + "'");
      procs->emplace(pn.text,
                     ProcedureDef{pn.text, std::move(params), std::move(body)});
    }
    lx_.expect(Tok::KwMain);
    lx_.expect(Tok::LBrace);
    BehaviourPtr main = parse_behaviour();
    lx_.expect(Tok::RBrace);
    lx_.expect(Tok::RBrace);
    return Process{ProcessName{name.text}, std::move(procs), std::move(main),
                   false};
  }

  std::vector<ProcessName> parse_namelist() {
    lx_.expect(Tok::LParen);
    std::vector<ProcessName> names;
    if (lx_.peek().kind == Tok::Name) {
      names.emplace_back(lx_.next().text);
      while (lx_.accept(Tok::Comma)) names.emplace_back(lx_.expect(Tok::Name).text);
    }
    lx_.expect(Tok::RParen);
    return names;
  }

  std::string parse_expr() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Name || t.kind == Tok::String) return lx_.next().text;
    fail(t.span, "expression (identifier or string)", Lexer::describe(t));
  }

  BehaviourPtr parse_behaviour() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::Zero:
      case Tok::KwStop:
        lx_.next();
        return terminated();
      case Tok::KwIf: {
        lx_.next();
        std::string e = parse_expr();
        lx_.expect(Tok::KwThen);
        lx_.expect(Tok::LBrace);
        BehaviourPtr tb = parse_behaviour();
        lx_.expect(Tok::RBrace);
        lx_.expect(Tok::KwElse);
        lx_.expect(Tok::LBrace);
        BehaviourPtr eb = parse_behaviour();
        lx_.expect(Tok::RBrace);
        return conditional(std::move(e), std::move(tb), std::move(eb));
      }
      case Tok::KwSpawn: {
        lx_.next();
        Token binder = lx_.expect(Tok::Name);
        lx_.expect(Tok::KwWith);
        lx_.expect(Tok::LBrace);
        BehaviourPtr child = parse_behaviour();
        lx_.expect(Tok::RBrace);
        lx_.expect(Tok::KwContinue);
        lx_.expect(Tok::LBrace);
        BehaviourPtr cont = parse_behaviour();
        lx_.expect(Tok::RBrace);
        return spawn(ProcessName{binder.text}, std::move(child),
                     std::move(cont));
      }
      case Tok::Name:
        return parse_action();
      default:
        fail(t.span, "a behaviour", Lexer::describe(t));
    }
  }

  BehaviourPtr parse_action() {
    Token head = lx_.expect(Tok::Name);
    ProcessName hn{head.text};
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        std::vector<ProcessName> args = parse_namelist();
        if (lx_.peek().kind == Tok::Semi)
          fail(lx_.peek().span, "procedure call in tail position",
               "';' after call");
        return call(head.text, std::move(args));
      }
      case Tok::Bang: {
        lx_.next();
        std::string e = parse_expr();
        lx_.expect(Tok::Semi);
        return send(hn, std::move(e), parse_behaviour());
      }
      case Tok::Quest: {
        lx_.next();
        if (lx_.peek().kind == Tok::Name) {
          Token binder = lx_.next();
          lx_.expect(Tok::Semi);
          return receive_intro(hn, ProcessName{binder.text}, parse_behaviour());
        }
        lx_.expect(Tok::Semi);
        return receive(hn, parse_behaviour());
      }
      case Tok::Plus: {
        lx_.next();
        Token label = lx_.expect(Tok::Name);
        lx_.expect(Tok::Semi);
        return select(hn, label.text, parse_behaviour());
      }
      case Tok::Amp: {
        lx_.next();
        lx_.expect(Tok::LBrace);
        std::vector<std::pair<std::string, BehaviourPtr>> branches;
        std::set<std::string> labels;
        while (true) {
          Token label = lx_.expect(Tok::Name);
          if (!labels.insert(label.text).second)
            fail(label.span, "distinct offer labels",
                 "duplicate label '" + label.text + "'");
          lx_.expect(Tok::Colon);
          branches.emplace_back(label.text, parse_behaviour());
          if (!lx_.accept(Tok::Comma)) break;
        }
        lx_.expect(Tok::RBrace);
        return offer(hn, std::move(branches));
      }
      case Tok::DArrow: {
        lx_.next();
        Token right = lx_.expect(Tok::Name);
        lx_.expect(Tok::Semi);
        return introduce(hn, ProcessName{right.text}, parse_behaviour());
      }
      default:
        fail(t.span, "'(', '!', '?', '+', '&' or '<->'", Lexer::describe(t));
    }
  }

  Lexer& lx_;
};

// ---------- choreography grammar ----------

class ChorParser {
 public:
  explicit ChorParser(Lexer& lx) : lx_(lx) {}

  Choreography parse() {
    Choreography c;
    while (lx_.peek().kind == Tok::KwDef) {
      lx_.next();
      Token pn = lx_.expect(Tok::Name);
      std::vector<ProcessName> params = parse_namelist();
      NameSet seen;
      for (const auto& p : params)
        if (!seen.insert(p).second)
          fail(pn.span, "distinct parameters",
               "duplicate parameter '" + p.text + "'");
      lx_.expect(Tok::LBrace);
      ChorBodyPtr body = parse_body();
      lx_.expect(Tok::RBrace);
      if (c.procedures.count(pn.text))
        fail(pn.span, "distinct procedure names",
             "duplicate procedure '" + pn.text + "'");
      c.procedures.emplace(pn.text,
                           ChorProcedure{std::move(params), std::move(body)});
    }
    lx_.expect(Tok::KwMain);
    lx_.expect(Tok::LBrace);
    c.main = parse_body();
    lx_.expect(Tok::RBrace);
    lx_.expect(Tok::End);
    return c;
  }

 private:
  std::vector<ProcessName> parse_namelist() {
    lx_.expect(Tok::LParen);
    std::vector<ProcessName> names;
    if (lx_.peek().kind == Tok::Name) {
      names.emplace_back(lx_.next().text);
      while (lx_.accept(Tok::Comma)) names.emplace_back(lx_.expect(Tok::Name).text);
    }
    lx_.expect(Tok::RParen);
    return names;
  }

  std::string parse_expr() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Name || t.kind == Tok::String) return lx_.next().text;
    fail(t.span, "expression (identifier or string)", Lexer::describe(t));
  }

  ChorBodyPtr parse_body() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::Zero:
      case Tok::KwStop:
        lx_.next();
        return c_terminated();
      case Tok::KwIf: {
        lx_.next();
        Token p = lx_.expect(Tok::Name);
        lx_.expect(Tok::Dot);
        std::string e = parse_expr();
        lx_.expect(Tok::KwThen);
        lx_.expect(Tok::LBrace);
        ChorBodyPtr tb = parse_body();
        lx_.expect(Tok::RBrace);
        lx_.expect(Tok::KwElse);
        lx_.expect(Tok::LBrace);
        ChorBodyPtr eb = parse_body();
        lx_.expect(Tok::RBrace);
        return c_cond(ProcessName{p.text}, std::move(e), std::move(tb),
                      std::move(eb));
      }
      case Tok::Name:
        return parse_interaction();
      default:
        fail(t.span, "a choreography body", Lexer::describe(t));
    }
  }

  ChorBodyPtr parse_interaction() {
    Token head = lx_.expect(Tok::Name);
    ProcessName hn{head.text};
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        std::vector<ProcessName> args = parse_namelist();
        if (lx_.peek().kind == Tok::Semi)
          fail(lx_.peek().span, "procedure call in tail position",
               "';' after call");
        return c_call(head.text, std::move(args));
      }
      case Tok::Dot: {
        lx_.next();
        // p.e -> q  or  p.q <-> r; lookahead after the middle token decides.
        const Token& mid = lx_.peek();
        if (mid.kind == Tok::String) {
          std::string e = lx_.next().text;
          lx_.expect(Tok::Arrow);
          Token q = lx_.expect(Tok::Name);
          lx_.expect(Tok::Semi);
          return c_com(hn, std::move(e), ProcessName{q.text}, parse_body());
        }
        Token m = lx_.expect(Tok::Name);
        if (lx_.accept(Tok::DArrow)) {
          Token r = lx_.expect(Tok::Name);
          lx_.expect(Tok::Semi);
          return c_intro(hn, ProcessName{m.text}, ProcessName{r.text},
                         parse_body());
        }
        lx_.expect(Tok::Arrow);
        Token q = lx_.expect(Tok::Name);
        lx_.expect(Tok::Semi);
        return c_com(hn, m.text, ProcessName{q.text}, parse_body());
      }
      case Tok::Arrow: {
        lx_.next();
        Token q = lx_.expect(Tok::Name);
        lx_.expect(Tok::LBracket);
        Token label = lx_.expect(Tok::Name);
        lx_.expect(Tok::RBracket);
        lx_.expect(Tok::Semi);
        return c_sel(hn, ProcessName{q.text}, label.text, parse_body());
      }
      case Tok::KwSpawns: {
        lx_.next();
        Token q = lx_.expect(Tok::Name);
        lx_.expect(Tok::Semi);
        return c_spawn(hn, ProcessName{q.text}, parse_body());
      }
      default:
        fail(t.span, "'(', '.', '->' or 'spawns'", Lexer::describe(t));
    }
  }

  Lexer& lx_;
};

// ---------- post-parse passes ----------

// Makes all Spawn/ReceiveIntro binders within one behaviour tree pairwise
// distinct, renaming later duplicates to base_1, base_2, ...
BehaviourPtr distinct_binders(BehaviourPtr b) {
  NameSet used = occurring_names(b);
  NameSet seen;
  std::function<void(const BehaviourPtr&, std::vector<ProcessName>&)> scan =
      [&](const BehaviourPtr& cur, std::vector<ProcessName>& dups) {
        std::visit(overloaded{
                       [&](const Terminated&) {},
                       [&](const Call&) {},
                       [&](const Send& s) { scan(s.cont, dups); },
                       [&](const Receive& r) { scan(r.cont, dups); },
                       [&](const Select& s) { scan(s.cont, dups); },
                       [&](const Offer& o) {
                         for (const auto& [l, br] : o.branches) scan(br, dups);
                       },
                       [&](const Introduce& i) { scan(i.cont, dups); },
                       [&](const ReceiveIntro& r) {
                         if (!seen.insert(r.binder).second)
                           dups.push_back(r.binder);
                         scan(r.cont, dups);
                       },
                       [&](const Conditional& c) {
                         scan(c.then_branch, dups);
                         scan(c.else_branch, dups);
                       },
                       [&](const Spawn& s) {
                         if (!seen.insert(s.binder).second)
                           dups.push_back(s.binder);
                         scan(s.child, dups);
                         scan(s.cont, dups);
                       },
                   },
                   cur->node);
      };

  // Renaming one duplicate can be done per occurrence: rename the second
  // binder found in a depth-first walk, then rescan.
  while (true) {
    seen.clear();
    std::vector<ProcessName> dups;
    scan(b, dups);
    if (dups.empty()) return b;
    const ProcessName& old = dups.front();
    int k = 1;
    ProcessName fresh;
    do {
      fresh = ProcessName{old.text + "_" + std::to_string(k++)};
    } while (used.count(fresh));
    used.insert(fresh);
    // Renames the *last* duplicate binder in depth-first order: walk and
    // rename only the second-and-later binder occurrences of `old`.
    int count = 0;
    std::function<BehaviourPtr(const BehaviourPtr&)> fix =
        [&](const BehaviourPtr& cur) -> BehaviourPtr {
      return std::visit(
          overloaded{
              [&](const Terminated&) { return cur; },
              [&](const Call&) { return cur; },
              [&](const Send& s) { return send(s.to, s.expr, fix(s.cont)); },
              [&](const Receive& r) { return receive(r.from, fix(r.cont)); },
              [&](const Select& s) {
                return select(s.to, s.label, fix(s.cont));
              },
              [&](const Offer& o) {
                std::vector<std::pair<std::string, BehaviourPtr>> branches;
                for (const auto& [l, br] : o.branches)
                  branches.emplace_back(l, fix(br));
                return offer(o.from, std::move(branches));
              },
              [&](const Introduce& i) {
                return introduce(i.left, i.right, fix(i.cont));
              },
              [&](const ReceiveIntro& r) {
                if (r.binder == old && ++count > 1)
                  return receive_intro(r.from, fresh,
                                       apply_renaming(r.cont,
                                                      NameMap{{old, fresh}}));
                return receive_intro(r.from, r.binder, fix(r.cont));
              },
              [&](const Conditional& c) {
                return conditional(c.expr, fix(c.then_branch),
                                   fix(c.else_branch));
              },
              [&](const Spawn& s) {
                if (s.binder == old && ++count > 1)
                  return spawn(fresh,
                               apply_renaming(s.child, NameMap{{old, fresh}}),
                               apply_renaming(s.cont, NameMap{{old, fresh}}));
                return spawn(s.binder, fix(s.child), fix(s.cont));
              },
          },
          cur->node);
    };
    b = fix(b);
  }
}

// Free names of a behaviour under a set of already-bound names.
void free_names(const BehaviourPtr& b, NameSet bound, NameSet& out) {
  auto record = [&](const ProcessName& n) {
    if (!bound.count(n)) out.insert(n);
  };
  std::visit(overloaded{
                 [&](const Terminated&) {},
                 [&](const Call& c) {
                   for (const auto& a : c.args) record(a);
                 },
                 [&](const Send& s) {
                   record(s.to);
                   free_names(s.cont, bound, out);
                 },
                 [&](const Receive& r) {
                   record(r.from);
                   free_names(r.cont, bound, out);
                 },
                 [&](const Select& s) {
                   record(s.to);
                   free_names(s.cont, bound, out);
                 },
                 [&](const Offer& o) {
                   record(o.from);
                   for (const auto& [l, br] : o.branches)
                     free_names(br, bound, out);
                 },
                 [&](const Introduce& i) {
                   record(i.left);
                   record(i.right);
                   free_names(i.cont, bound, out);
                 },
                 [&](const ReceiveIntro& r) {
                   record(r.from);
                   NameSet b2 = bound;
                   b2.insert(r.binder);
                   free_names(r.cont, b2, out);
                 },
                 [&](const Conditional& c) {
                   free_names(c.then_branch, bound, out);
                   free_names(c.else_branch, bound, out);
                 },
                 [&](const Spawn& s) {
                   NameSet b2 = bound;
                   b2.insert(s.binder);
                   free_names(s.child, b2, out);
                   free_names(s.cont, b2, out);
                 },
             },
             b->node);
}

void check_free_names(const Network& n, const std::string& file) {
  NameSet global;
  for (const auto& [name, p] : n.processes) global.insert(name);
  for (const auto& [name, p] : n.processes) {
    auto check = [&](const BehaviourPtr& body, const NameSet& bound,
                     const std::string& where) {
      NameSet free;
      free_names(body, bound, free);
      for (const auto& f : free)
        if (!global.count(f))
          fail(SourceSpan{file, 1, 1},
               "a parameter or known process name in " + where,
               "unknown name '" + f.text + "'");
    };
    for (const auto& [pn, def] : *p.procedures) {
      NameSet params(def.params.begin(), def.params.end());
      check(def.body, params, "procedure '" + pn + "' of '" + name.text + "'");
    }
    check(p.main, {}, "main of '" + name.text + "'");
  }
}

}  // namespace

Parsed<Network> parse_network(const std::string& src, const std::string& file) {
  try {
    Lexer lx(src, file);
    NetParser p(lx);
    Network n = p.parse();
    for (auto& [name, proc] : n.processes) {
      auto procs = std::make_shared<ProcedureMap>();
      for (const auto& [pn, def] : *proc.procedures)
        procs->emplace(pn, ProcedureDef{def.name, def.params,
                                        distinct_binders(def.body)});
      proc.procedures = std::move(procs);
      proc.main = distinct_binders(proc.main);
    }
    check_free_names(n, file);
    return n;
  } catch (const ParseFail& f) {
    return f.err;
  }
}

Parsed<Choreography> parse_choreography(const std::string& src,
                                        const std::string& file) {
  try {
    Lexer lx(src, file);
    ChorParser p(lx);
    return p.parse();
  } catch (const ParseFail& f) {
    return f.err;
  }
}

}  // namespace chorex
