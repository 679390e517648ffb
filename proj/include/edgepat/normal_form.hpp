// ============================================================================
// edgepat/normal_form.hpp: the prover's normalisation layer
// ============================================================================
//
// normalize() rewrites a formula into an equivalent one that uses only
//
//   Const, Atom, Not, And, Or, Next, Always, Eventually, Until, EdgeUp
//
// with these shape guarantees:
//   - negation only sits on Atom, EdgeUp or Until (negation normal form,
//     !X a = X !a, ![] a = <>!a, !<>a = []!a);
//   - And/Or are flattened, sorted, duplicate-free, with units removed;
//   - all Next operands of one And/Or are merged into a single Next
//     (X a && X b = X (a && b), likewise for ||);
//   - a -> b, ite, W and P are expanded; down(a) = up(!a) and
//     any(a) = up(a) || up(!a).
//
// Constants are folded where the identity is exact (X true = true,
// a U false = false, true U b = <>b, up(true) = false, ...).  No other
// simplification is attempted; in particular a || !a is left alone.
// ============================================================================

#pragma once

#include <optional>
#include <vector>

#include "edgepat/formula.hpp"

namespace edgepat::nf {

Formula normalize(const Formula& f);

// Smart constructors over normalised operands; results stay normalised.
Formula negate(const Formula& f);
Formula conj(std::vector<Formula> kids);
Formula disj(std::vector<Formula> kids);
Formula next(const Formula& f);
Formula always(const Formula& f);
Formula eventually(const Formula& f);
Formula until(const Formula& a, const Formula& b);
Formula up(const Formula& f);

// !up(a) = a || X !a
Formula unfold_not_up(const Formula& a);
// up(a) = !a && X a
Formula unfold_up(const Formula& a);

using Literals = std::vector<Formula>;

// Clause / term lists of a normalised formula.  Literals are the maximal
// non-And/Or subformulas.  Returns nullopt beyond `limit` clauses.
std::optional<std::vector<Literals>> cnf(const Formula& f, std::size_t limit = 512);
std::optional<std::vector<Literals>> dnf(const Formula& f, std::size_t limit = 512);

inline bool is_up_literal(const Formula& f) { return f.is(Op::EdgeUp); }
inline bool is_not_up_literal(const Formula& f) {
  return f.is(Op::Not) && f.child(0).is(Op::EdgeUp);
}

}  // namespace edgepat::nf
