#include "edgepat/passes.hpp"

#include <functional>
#include <unordered_set>

namespace edgepat {

namespace {

Formula rebuild(const Formula& f, const std::function<Formula(const Formula&)>& self) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const auto& k : f.children()) kids.push_back(self(k));
  return Formula::make(f.op(), std::move(kids));
}

bool contains(const Formula& f, std::initializer_list<Op> ops) {
  for (Op o : ops)
    if (f.is(o)) return true;
  for (const auto& k : f.children())
    if (contains(k, ops)) return true;
  return false;
}

}  // namespace

Formula eliminate_sugar(const Formula& f) {
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    switch (g.op()) {
      case Op::WeakUntil: {
        auto a = go(g.child(0));
        auto b = go(g.child(1));
        return Formula::disjunction(Formula::always(a), Formula::until(a, b));
      }
      case Op::Precedes: {
        auto a = go(g.child(0));
        auto b = go(g.child(1));
        return Formula::negation(Formula::until(Formula::negation(a), b));
      }
      case Op::IfThenElse: {
        auto c = go(g.child(0));
        auto t = go(g.child(1));
        auto e = go(g.child(2));
        return Formula::disjunction(Formula::conjunction(c, t),
                                    Formula::conjunction(Formula::negation(c), e));
      }
      default:
        return rebuild(g, go);
    }
  };
  return go(f);
}

Formula eliminate_edges(const Formula& f) {
  auto up = [](const Formula& a) {
    return Formula::conjunction(Formula::negation(a), Formula::next(a));
  };
  auto down = [](const Formula& a) {
    return Formula::conjunction(a, Formula::next(Formula::negation(a)));
  };
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    switch (g.op()) {
      case Op::EdgeUp:
        return up(go(g.child(0)));
      case Op::EdgeDown:
        return down(go(g.child(0)));
      case Op::EdgeAny: {
        auto a = go(g.child(0));
        return Formula::disjunction(up(a), down(a));
      }
      default:
        return rebuild(g, go);
    }
  };
  return go(f);
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    for (const auto& k : g.children()) walk(k);
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

bool has_sugar(const Formula& f) {
  return contains(f, {Op::WeakUntil, Op::Precedes, Op::IfThenElse});
}

bool has_edges(const Formula& f) { return contains(f, {Op::EdgeUp, Op::EdgeDown, Op::EdgeAny}); }

}  // namespace edgepat
