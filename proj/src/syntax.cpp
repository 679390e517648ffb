#include "edgepat/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "edgepat/passes.hpp"

namespace edgepat {

ParseError::ParseError(std::string message, SourceSpan span, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), span_(span), expected_(std::move(expected)) {}

namespace {

// ── Lexer ───────────────────────────────────────────────────────────────────

enum class Tok {
  End,
  LParen,
  RParen,
  Bang,
  AndAnd,
  OrOr,
  Arrow,
  Question,
  Colon,
  Next,
  Always,
  Eventually,
  Until,
  Weak,
  True,
  False,
  Up,
  Down,
  Any,
  Ident,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Bang: return "'!'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Arrow: return "'->'";
    case Tok::Question: return "'?'";
    case Tok::Colon: return "':'";
    case Tok::Next: return "'X'";
    case Tok::Always: return "'[]'";
    case Tok::Eventually: return "'<>'";
    case Tok::Until: return "'U'";
    case Tok::Weak: return "'W'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Up: return "'up'";
    case Tok::Down: return "'down'";
    case Tok::Any: return "'any'";
    case Tok::Ident: return "identifier";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), {i, i + len}});
    i += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '!') push(Tok::Bang, 1);
    else if (c == '?') push(Tok::Question, 1);
    else if (c == ':') push(Tok::Colon, 1);
    else if (starts("&&")) push(Tok::AndAnd, 2);
    else if (starts("||")) push(Tok::OrOr, 2);
    else if (starts("->")) push(Tok::Arrow, 2);
    else if (starts("[]")) push(Tok::Always, 2);
    else if (starts("<>")) push(Tok::Eventually, 2);
    else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      const std::string_view word = s.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "X") k = Tok::Next;
      else if (word == "U") k = Tok::Until;
      else if (word == "W") k = Tok::Weak;
      else if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      else if (word == "up") k = Tok::Up;
      else if (word == "down") k = Tok::Down;
      else if (word == "any") k = Tok::Any;
      push(k, j - i);
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", {i, i + 1},
                       {"operator", "identifier", "'('"});
    }
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

// ── Parser ──────────────────────────────────────────────────────────────────

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse_all() {
    Formula f = ite();
    if (peek().kind != Tok::End)
      fail({"'&&'", "'||'", "'->'", "'?'", "'U'", "'W'", "'P'", "end of input"});
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::ostringstream msg;
    msg << "syntax error at offset " << t.span.start << ": unexpected "
        << (t.kind == Tok::Ident ? "identifier '" + t.text + "'" : std::string(describe(t.kind)))
        << "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? ", " : "") << expected[i];
    throw ParseError(msg.str(), t.span, std::move(expected));
  }

  void expect(Tok k) {
    if (peek().kind != k) fail({describe(k)});
    take();
  }

  bool at_precedes() const { return peek().kind == Tok::Ident && peek().text == "P"; }

  Formula ite() {
    Formula c = imp();
    if (peek().kind != Tok::Question) return c;
    take();
    Formula t = ite();
    expect(Tok::Colon);
    Formula e = ite();
    return Formula::if_then_else(std::move(c), std::move(t), std::move(e));
  }

  Formula imp() {
    Formula a = disj();
    if (peek().kind != Tok::Arrow) return a;
    take();
    return Formula::implication(std::move(a), imp());
  }

  Formula disj() {
    Formula a = conj();
    if (peek().kind != Tok::OrOr) return a;
    take();
    return Formula::disjunction(std::move(a), disj());
  }

  Formula conj() {
    Formula a = binop();
    if (peek().kind != Tok::AndAnd) return a;
    take();
    return Formula::conjunction(std::move(a), conj());
  }

  Formula binop() {
    Formula a = unary();
    if (peek().kind == Tok::Until) {
      take();
      return Formula::until(std::move(a), binop());
    }
    if (peek().kind == Tok::Weak) {
      take();
      return Formula::weak_until(std::move(a), binop());
    }
    if (at_precedes()) {
      take();
      return Formula::precedes(std::move(a), binop());
    }
    return a;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bang: take(); return Formula::negation(unary());
      case Tok::Next: take(); return Formula::next(unary());
      case Tok::Always: take(); return Formula::always(unary());
      case Tok::Eventually: take(); return Formula::eventually(unary());
      case Tok::Up:
      case Tok::Down:
      case Tok::Any: {
        const Tok k = take().kind;
        expect(Tok::LParen);
        Formula inner = ite();
        expect(Tok::RParen);
        if (k == Tok::Up) return Formula::edge_up(std::move(inner));
        if (k == Tok::Down) return Formula::edge_down(std::move(inner));
        return Formula::edge_any(std::move(inner));
      }
      case Tok::True: take(); return Formula::top();
      case Tok::False: take(); return Formula::bottom();
      case Tok::Ident: {
        if (peek(1).kind == Tok::LParen) {
          throw ParseError("unknown operator '" + t.text + "'", t.span, {"'up'", "'down'", "'any'"});
        }
        return Formula::atom(take().text);
      }
      case Tok::LParen: {
        take();
        Formula inner = ite();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({"'!'", "'X'", "'[]'", "'<>'", "'up'", "'down'", "'any'", "'true'", "'false'",
              "identifier", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ── Canonical printer ───────────────────────────────────────────────────────

int level(const Formula& f) {
  switch (f.op()) {
    case Op::IfThenElse: return 0;
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Until:
    case Op::WeakUntil:
    case Op::Precedes: return 4;
    case Op::Not:
    case Op::Next:
    case Op::Always:
    case Op::Eventually: return 5;
    default: return 6;
  }
}

void print(std::ostream& os, const Formula& f);

void print_at(std::ostream& os, const Formula& f, bool parens) {
  if (parens) os << '(';
  print(os, f);
  if (parens) os << ')';
}

void print(std::ostream& os, const Formula& f) {
  const int lv = level(f);
  switch (f.op()) {
    case Op::Const: os << (f.value() ? "true" : "false"); return;
    case Op::Atom: os << f.name(); return;
    case Op::Not: os << '!'; print_at(os, f.child(0), level(f.child(0)) < 5); return;
    case Op::Next: os << "X "; print_at(os, f.child(0), level(f.child(0)) < 5); return;
    case Op::Always: os << "[] "; print_at(os, f.child(0), level(f.child(0)) < 5); return;
    case Op::Eventually: os << "<> "; print_at(os, f.child(0), level(f.child(0)) < 5); return;
    case Op::EdgeUp: os << "up("; print(os, f.child(0)); os << ')'; return;
    case Op::EdgeDown: os << "down("; print(os, f.child(0)); os << ')'; return;
    case Op::EdgeAny: os << "any("; print(os, f.child(0)); os << ')'; return;
    case Op::IfThenElse:
      print_at(os, f.child(0), level(f.child(0)) < 1);
      os << " ? ";
      print(os, f.child(1));
      os << " : ";
      print(os, f.child(2));
      return;
    default: break;
  }
  const char* sym = "";
  switch (f.op()) {
    case Op::Implies: sym = " -> "; break;
    case Op::Or: sym = " || "; break;
    case Op::And: sym = " && "; break;
    case Op::Until: sym = " U "; break;
    case Op::WeakUntil: sym = " W "; break;
    case Op::Precedes: sym = " P "; break;
    default: break;
  }
  const auto& kids = f.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) os << sym;
    const bool last = i + 1 == kids.size();
    const int kl = level(kids[i]);
    print_at(os, kids[i], last ? kl < lv : kl <= lv);
  }
}

// ── SPIN printer ────────────────────────────────────────────────────────────

void print_spin_rec(std::ostream& os, const Formula& f);

void spin_operand(std::ostream& os, const Formula& f) {
  const bool bare = f.is(Op::Atom) || f.is(Op::Const);
  if (!bare) os << '(';
  print_spin_rec(os, f);
  if (!bare) os << ')';
}

void print_spin_rec(std::ostream& os, const Formula& f) {
  switch (f.op()) {
    case Op::Const: os << (f.value() ? "true" : "false"); return;
    case Op::Atom: os << f.name(); return;
    case Op::Not: os << "! "; spin_operand(os, f.child(0)); return;
    case Op::Next: os << "X "; spin_operand(os, f.child(0)); return;
    case Op::Always: os << "[] "; spin_operand(os, f.child(0)); return;
    case Op::Eventually: os << "<> "; spin_operand(os, f.child(0)); return;
    default: break;
  }
  const char* sym = "";
  switch (f.op()) {
    case Op::Implies: sym = " -> "; break;
    case Op::Or: sym = " || "; break;
    case Op::And: sym = " && "; break;
    case Op::Until: sym = " U "; break;
    default: throw std::logic_error("print_spin: operator survived lowering");
  }
  // n-ary nodes print as right-nested binary chains.
  const auto& kids = f.children();
  spin_operand(os, kids[0]);
  os << sym;
  if (kids.size() == 2) {
    spin_operand(os, kids[1]);
  } else {
    std::vector<Formula> rest(kids.begin() + 1, kids.end());
    spin_operand(os, Formula::make(f.op(), std::move(rest)));
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print_canonical(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::string print_spin(const Formula& f) {
  std::ostringstream os;
  print_spin_rec(os, lower(f));
  return os.str();
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  if (!std::all_of(name.begin(), name.end(), ident_char)) return false;
  static const char* reserved[] = {"X", "U", "W", "true", "false", "up", "down", "any"};
  for (const char* r : reserved)
    if (name == r) return false;
  return true;
}

}  // namespace edgepat
