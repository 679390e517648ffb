#include "edgepat/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace edgepat {

struct Formula::Node {
  Op op = Op::Const;
  bool value = false;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t expected_arity(Op op) {
  switch (op) {
    case Op::Const:
    case Op::Atom:
      return 0;
    case Op::Not:
    case Op::Next:
    case Op::Always:
    case Op::Eventually:
    case Op::EdgeUp:
    case Op::EdgeDown:
    case Op::EdgeAny:
      return 1;
    case Op::IfThenElse:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Const: return "Const";
    case Op::Atom: return "Atom";
    case Op::Not: return "Not";
    case Op::And: return "And";
    case Op::Or: return "Or";
    case Op::Implies: return "Implies";
    case Op::IfThenElse: return "IfThenElse";
    case Op::Next: return "Next";
    case Op::Always: return "Always";
    case Op::Eventually: return "Eventually";
    case Op::Until: return "Until";
    case Op::WeakUntil: return "WeakUntil";
    case Op::Precedes: return "Precedes";
    case Op::EdgeUp: return "EdgeUp";
    case Op::EdgeDown: return "EdgeDown";
    case Op::EdgeAny: return "EdgeAny";
  }
  return "?";
}

Formula::Formula() : Formula(constant(false)) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->value = true;
    n->hash = mix(static_cast<std::size_t>(Op::Const), 1);
    return Formula(std::shared_ptr<const Node>(std::move(n)));
  }();
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->hash = mix(static_cast<std::size_t>(Op::Const), 0);
    return Formula(std::shared_ptr<const Node>(std::move(n)));
  }();
  return value ? t : f;
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->hash = mix(static_cast<std::size_t>(Op::Atom), std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::make(Op op, std::vector<Formula> kids) {
  if (op == Op::Const || op == Op::Atom)
    throw std::invalid_argument("Formula::make cannot build leaves");
  if (op == Op::And || op == Op::Or) {
    if (kids.size() < 2) throw std::invalid_argument("And/Or need at least two children");
  } else if (kids.size() != expected_arity(op)) {
    throw std::invalid_argument(std::string("wrong arity for ") + std::string(op_name(op)));
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  std::size_t h = static_cast<std::size_t>(op) * 0x100000001b3ULL;
  for (const auto& k : kids) {
    h = mix(h, k.hash());
    n->size += k.size();
    n->depth = std::max(n->depth, k.depth() + 1);
  }
  n->hash = h;
  n->kids = std::move(kids);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::negation(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
Formula Formula::disjunction(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }

Formula Formula::conjunction(std::vector<Formula> kids) {
  if (kids.empty()) return top();
  if (kids.size() == 1) return kids.front();
  return make(Op::And, std::move(kids));
}

Formula Formula::disjunction(std::vector<Formula> kids) {
  if (kids.empty()) return bottom();
  if (kids.size() == 1) return kids.front();
  return make(Op::Or, std::move(kids));
}

Formula Formula::implication(Formula a, Formula b) { return make(Op::Implies, {std::move(a), std::move(b)}); }
Formula Formula::if_then_else(Formula c, Formula t, Formula e) {
  return make(Op::IfThenElse, {std::move(c), std::move(t), std::move(e)});
}
Formula Formula::next(Formula f) { return make(Op::Next, {std::move(f)}); }
Formula Formula::always(Formula f) { return make(Op::Always, {std::move(f)}); }
Formula Formula::eventually(Formula f) { return make(Op::Eventually, {std::move(f)}); }
Formula Formula::until(Formula a, Formula b) { return make(Op::Until, {std::move(a), std::move(b)}); }
Formula Formula::weak_until(Formula a, Formula b) { return make(Op::WeakUntil, {std::move(a), std::move(b)}); }
Formula Formula::precedes(Formula a, Formula b) { return make(Op::Precedes, {std::move(a), std::move(b)}); }
Formula Formula::edge_up(Formula f) { return make(Op::EdgeUp, {std::move(f)}); }
Formula Formula::edge_down(Formula f) { return make(Op::EdgeDown, {std::move(f)}); }
Formula Formula::edge_any(Formula f) { return make(Op::EdgeAny, {std::move(f)}); }

Op Formula::op() const noexcept { return node_->op; }
bool Formula::value() const noexcept { return node_->value; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::vector<Formula>& Formula::children() const noexcept { return node_->kids; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (a.op()) {
    case Op::Const:
      return a.value() == b.value() ? 0 : (a.value() ? 1 : -1);
    case Op::Atom:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    default:
      break;
  }
  const auto& ka = a.children();
  const auto& kb = b.children();
  const std::size_t n = std::min(ka.size(), kb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(ka[i], kb[i]); c != 0) return c;
  }
  if (ka.size() == kb.size()) return 0;
  return ka.size() < kb.size() ? -1 : 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is(Op::Atom)) {
      if (seen.insert(g.name()).second) out.push_back(g.name());
      return;
    }
    for (const auto& k : g.children()) walk(k);
  };
  walk(f);
  return out;
}

}  // namespace edgepat
