// ============================================================================
// edgepat/formula.hpp: LTL formula AST with edge operators and sugar
// ============================================================================
//
// A Formula is an immutable tree shared through reference counting.  Copies
// are cheap and safe to hand to other threads.  Equality and ordering are
// structural.
//
//   Leaves     : Const, Atom
//   Boolean    : Not, And, Or, Implies, IfThenElse
//   Temporal   : Next, Always, Eventually, Until
//   Sugar      : WeakUntil  (a W b = [] a || a U b)
//                Precedes   (a P b = !(!a U b))
//   Edges      : EdgeUp     (up(a)   = !a && X a)
//                EdgeDown   (down(a) = a && X !a)
//                EdgeAny    (any(a)  = up(a) || down(a))
//
// And/Or built by the parser are binary.  The normaliser used by the
// stuttering prover builds flattened n-ary And/Or nodes; everything else in
// the library accepts both.
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace edgepat {

enum class Op : std::uint8_t {
  Const,
  Atom,
  Not,
  And,
  Or,
  Implies,
  IfThenElse,
  Next,
  Always,
  Eventually,
  Until,
  WeakUntil,
  Precedes,
  EdgeUp,
  EdgeDown,
  EdgeAny,
};

std::string_view op_name(Op op);

class Formula {
 public:
  // Default-constructed formula is the constant false.
  Formula();

  // ── Factories ────────────────────────────────────────────────────────────
  static Formula constant(bool value);
  static Formula top() { return constant(true); }
  static Formula bottom() { return constant(false); }
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  // n-ary forms; 0 children gives the unit, 1 child returns it unchanged.
  static Formula conjunction(std::vector<Formula> kids);
  static Formula disjunction(std::vector<Formula> kids);
  static Formula implication(Formula a, Formula b);
  static Formula if_then_else(Formula c, Formula t, Formula e);
  static Formula next(Formula f);
  static Formula always(Formula f);
  static Formula eventually(Formula f);
  static Formula until(Formula a, Formula b);
  static Formula weak_until(Formula a, Formula b);
  static Formula precedes(Formula a, Formula b);
  static Formula edge_up(Formula f);
  static Formula edge_down(Formula f);
  static Formula edge_any(Formula f);

  // Generic rebuild with the same operator and new children.
  static Formula make(Op op, std::vector<Formula> kids);

  // ── Accessors ────────────────────────────────────────────────────────────
  Op op() const noexcept;
  bool value() const noexcept;             // Const only
  const std::string& name() const noexcept;  // Atom only
  const std::vector<Formula>& children() const noexcept;
  const Formula& child(std::size_t i) const { return children().at(i); }
  std::size_t arity() const noexcept { return children().size(); }

  bool is(Op o) const noexcept { return op() == o; }
  bool is_const(bool v) const noexcept { return is(Op::Const) && value() == v; }

  std::size_t size() const;   // node count
  std::size_t depth() const;  // leaves have depth 0
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Total structural order; used for canonical child sorting.
  friend bool operator<(const Formula& a, const Formula& b);
  friend int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Distinct atom names in first-occurrence order (pre-order, left to right).
std::vector<std::string> atoms_of(const Formula& f);

// Replace atoms by formulas.  Atoms without an entry are kept.
template <typename Map>
Formula substitute(const Formula& f, const Map& binding) {
  if (f.is(Op::Atom)) {
    auto it = binding.find(f.name());
    return it == binding.end() ? f : it->second;
  }
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const auto& k : f.children()) kids.push_back(substitute(k, binding));
  return Formula::make(f.op(), std::move(kids));
}

}  // namespace edgepat
