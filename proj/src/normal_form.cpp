#include "edgepat/normal_form.hpp"

#include <algorithm>

namespace edgepat::nf {

namespace {

Formula junction(Op op, std::vector<Formula> kids) {
  const bool is_and = op == Op::And;
  std::vector<Formula> flat;
  std::vector<Formula> nexts;
  auto absorb = [&](auto&& self, const Formula& k) -> bool {
    if (k.is(op)) {
      for (const auto& g : k.children())
        if (!self(self, g)) return false;
      return true;
    }
    if (k.is(Op::Const)) return k.value() == is_and;  // unit dropped, zero aborts
    if (k.is(Op::Next)) {
      nexts.push_back(k.child(0));
      return true;
    }
    flat.push_back(k);
    return true;
  };
  for (const auto& k : kids)
    if (!absorb(absorb, k)) return Formula::constant(!is_and);
  if (!nexts.empty()) {
    Formula merged = next(is_and ? conj(std::move(nexts)) : disj(std::move(nexts)));
    if (merged.is(Op::Const)) {
      if (merged.value() != is_and) return merged;
    } else {
      flat.push_back(merged);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return Formula::constant(is_and);
  if (flat.size() == 1) return flat.front();
  return Formula::make(op, std::move(flat));
}

// Cartesian product of literal lists: (a || b) && (c) for cnf of an Or.
std::optional<std::vector<Literals>> product(const std::vector<std::vector<Literals>>& parts,
                                             std::size_t limit) {
  std::vector<Literals> acc{Literals{}};
  for (const auto& part : parts) {
    std::vector<Literals> next_acc;
    if (acc.size() * part.size() > limit) return std::nullopt;
    for (const auto& a : acc)
      for (const auto& b : part) {
        Literals c = a;
        c.insert(c.end(), b.begin(), b.end());
        next_acc.push_back(std::move(c));
      }
    acc = std::move(next_acc);
  }
  return acc;
}

std::optional<std::vector<Literals>> normal_lists(const Formula& f, Op outer, std::size_t limit) {
  const Op inner = outer == Op::And ? Op::Or : Op::And;
  if (f.is(Op::Const)) {
    // cnf(true) = {} ; cnf(false) = {{}} and dually for dnf.
    const bool empty_outer = f.value() == (outer == Op::And);
    return empty_outer ? std::vector<Literals>{} : std::vector<Literals>{Literals{}};
  }
  if (f.is(outer)) {
    std::vector<Literals> out;
    for (const auto& k : f.children()) {
      auto sub = normal_lists(k, outer, limit);
      if (!sub) return std::nullopt;
      out.insert(out.end(), sub->begin(), sub->end());
      if (out.size() > limit) return std::nullopt;
    }
    return out;
  }
  if (f.is(inner)) {
    std::vector<std::vector<Literals>> parts;
    for (const auto& k : f.children()) {
      auto sub = normal_lists(k, outer, limit);
      if (!sub) return std::nullopt;
      parts.push_back(std::move(*sub));
    }
    return product(parts, limit);
  }
  return std::vector<Literals>{Literals{f}};
}

}  // namespace

Formula negate(const Formula& f) {
  switch (f.op()) {
    case Op::Const: return Formula::constant(!f.value());
    case Op::Not: return f.child(0);
    case Op::And: {
      std::vector<Formula> k;
      for (const auto& c : f.children()) k.push_back(negate(c));
      return disj(std::move(k));
    }
    case Op::Or: {
      std::vector<Formula> k;
      for (const auto& c : f.children()) k.push_back(negate(c));
      return conj(std::move(k));
    }
    case Op::Next: return next(negate(f.child(0)));
    case Op::Always: return eventually(negate(f.child(0)));
    case Op::Eventually: return always(negate(f.child(0)));
    case Op::Atom:
    case Op::Until:
    case Op::EdgeUp: return Formula::negation(f);
    default: return negate(normalize(f));
  }
}

Formula conj(std::vector<Formula> kids) { return junction(Op::And, std::move(kids)); }
Formula disj(std::vector<Formula> kids) { return junction(Op::Or, std::move(kids)); }

Formula next(const Formula& f) { return f.is(Op::Const) ? f : Formula::next(f); }
Formula always(const Formula& f) { return f.is(Op::Const) ? f : Formula::always(f); }
Formula eventually(const Formula& f) { return f.is(Op::Const) ? f : Formula::eventually(f); }

Formula until(const Formula& a, const Formula& b) {
  if (b.is(Op::Const)) return b;
  if (a.is_const(false)) return b;
  if (a.is_const(true)) return eventually(b);
  return Formula::until(a, b);
}

Formula up(const Formula& f) { return f.is(Op::Const) ? Formula::bottom() : Formula::edge_up(f); }

Formula unfold_not_up(const Formula& a) { return disj({a, next(negate(a))}); }
Formula unfold_up(const Formula& a) { return conj({negate(a), next(a)}); }

Formula normalize(const Formula& f) {
  switch (f.op()) {
    case Op::Const:
    case Op::Atom: return f;
    case Op::Not: return negate(normalize(f.child(0)));
    case Op::And:
    case Op::Or: {
      std::vector<Formula> k;
      for (const auto& c : f.children()) k.push_back(normalize(c));
      return f.is(Op::And) ? conj(std::move(k)) : disj(std::move(k));
    }
    case Op::Implies: return disj({negate(normalize(f.child(0))), normalize(f.child(1))});
    case Op::IfThenElse: {
      const Formula c = normalize(f.child(0));
      return disj({conj({c, normalize(f.child(1))}), conj({negate(c), normalize(f.child(2))})});
    }
    case Op::Next: return next(normalize(f.child(0)));
    case Op::Always: return always(normalize(f.child(0)));
    case Op::Eventually: return eventually(normalize(f.child(0)));
    case Op::Until: return until(normalize(f.child(0)), normalize(f.child(1)));
    case Op::WeakUntil: {
      const Formula a = normalize(f.child(0));
      return disj({always(a), until(a, normalize(f.child(1)))});
    }
    case Op::Precedes:
      return negate(until(negate(normalize(f.child(0))), normalize(f.child(1))));
    case Op::EdgeUp: return up(normalize(f.child(0)));
    case Op::EdgeDown: return up(negate(normalize(f.child(0))));
    case Op::EdgeAny: {
      const Formula a = normalize(f.child(0));
      return disj({up(a), up(negate(a))});
    }
  }
  return f;
}

std::optional<std::vector<Literals>> cnf(const Formula& f, std::size_t limit) {
  return normal_lists(f, Op::And, limit);
}

std::optional<std::vector<Literals>> dnf(const Formula& f, std::size_t limit) {
  return normal_lists(f, Op::Or, limit);
}

}  // namespace edgepat::nf
