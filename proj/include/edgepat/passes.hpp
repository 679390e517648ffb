// Lowering passes from the extended language to base LTL.
#pragma once

#include <vector>

#include "edgepat/formula.hpp"

namespace edgepat {

// a W b -> [] a || (a U b);  a P b -> !(!a U b);
// c ? t : e -> (c && t) || (!c && e).  Implications and edges are kept.
Formula eliminate_sugar(const Formula& f);

// up(a) -> !a && X a;  down(a) -> a && X !a;
// any(a) -> (!a && X a) || (a && X !a).
Formula eliminate_edges(const Formula& f);

// Both passes: the result uses only Const, Atom, Not, And, Or, Implies,
// Next, Always, Eventually and Until.
inline Formula lower(const Formula& f) { return eliminate_edges(eliminate_sugar(f)); }

// Post-order enumeration, children before parents, structural duplicates
// reported once (first occurrence).
std::vector<Formula> subformulas(const Formula& f);

bool has_sugar(const Formula& f);
bool has_edges(const Formula& f);

}  // namespace edgepat
