#include "edgepat/eval.hpp"

#include <stdexcept>
#include <unordered_map>

#include "edgepat/passes.hpp"

namespace edgepat {

// ── Reference evaluator ─────────────────────────────────────────────────────

namespace {

using Values = std::vector<char>;

class Reference {
 public:
  explicit Reference(const LassoTrace& t) : t_(t), n_(t.span()) {}

  Values run(const Formula& f) {
    switch (f.op()) {
      case Op::Const:
        return Values(n_, f.value());
      case Op::Atom: {
        const std::size_t a = t_.alphabet().require(f.name());
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = t_.holds({i}, a);
        return v;
      }
      case Op::Not: {
        Values v = run(f.child(0));
        for (auto& x : v) x = !x;
        return v;
      }
      case Op::And:
      case Op::Or: {
        const bool is_and = f.is(Op::And);
        Values v(n_, is_and);
        for (const auto& k : f.children()) {
          const Values c = run(k);
          for (std::size_t i = 0; i < n_; ++i) v[i] = is_and ? (v[i] && c[i]) : (v[i] || c[i]);
        }
        return v;
      }
      case Op::Implies: {
        const Values a = run(f.child(0));
        const Values b = run(f.child(1));
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = !a[i] || b[i];
        return v;
      }
      case Op::IfThenElse: {
        const Values c = run(f.child(0));
        const Values a = run(f.child(1));
        const Values b = run(f.child(2));
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = c[i] ? a[i] : b[i];
        return v;
      }
      case Op::Next: {
        const Values a = run(f.child(0));
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = a[t_.successor(i)];
        return v;
      }
      case Op::Always:
        return fixpoint(Values(n_, 1), run(f.child(0)), /*greatest=*/true);
      case Op::Eventually:
        return fixpoint(Values(n_, 1), run(f.child(0)), false);
      case Op::Until:
        return fixpoint(run(f.child(0)), run(f.child(1)), false);
      case Op::WeakUntil:
      case Op::Precedes:
        return run(eliminate_sugar(f));
      case Op::EdgeUp:
      case Op::EdgeDown:
      case Op::EdgeAny:
        return run(eliminate_edges(f));
    }
    throw std::logic_error("unhandled operator");
  }

 private:
  // Least fixpoint of X = goal || (stay && X X), or for `greatest` the
  // greatest fixpoint of X = goal && X X (stay unused).
  Values fixpoint(const Values& stay, const Values& goal, bool greatest) {
    Values x = greatest ? Values(n_, 1) : goal;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = n_; k-- > 0;) {
        const char nx = x[t_.successor(k)];
        const char v = greatest ? (goal[k] && nx) : (goal[k] || (stay[k] && nx));
        if (v != x[k]) {
          x[k] = v;
          changed = true;
        }
      }
    }
    return x;
  }

  const LassoTrace& t_;
  std::size_t n_;
};

}  // namespace

std::vector<bool> eval_positions(const Formula& f, const LassoTrace& t) {
  const Values v = Reference(t).run(f);
  return {v.begin(), v.end()};
}

bool eval(const Formula& f, const LassoTrace& t, Position i) {
  return eval_positions(f, t)[t.canonical(i)];
}

// ── Compiled mask evaluator ─────────────────────────────────────────────────

CompiledFormula::CompiledFormula(const Formula& f, const Alphabet& alphabet)
    : atom_count_(alphabet.size()) {
  std::unordered_map<Formula, std::uint32_t, FormulaHash> slots;
  auto emit = [&](Instr in) {
    code_.push_back(in);
    return static_cast<std::uint32_t>(code_.size() - 1);
  };
  auto compile = [&](auto&& self, const Formula& g) -> std::uint32_t {
    if (auto it = slots.find(g); it != slots.end()) return it->second;
    std::uint32_t slot = 0;
    switch (g.op()) {
      case Op::Const:
        slot = emit({g.value() ? Code::True : Code::False});
        break;
      case Op::Atom:
        slot = emit({Code::Atom, static_cast<std::uint32_t>(alphabet.require(g.name()))});
        break;
      case Op::Not:
        slot = emit({Code::Not, self(self, g.child(0))});
        break;
      case Op::Next:
        slot = emit({Code::Next, self(self, g.child(0))});
        break;
      case Op::Always:
        slot = emit({Code::Always, self(self, g.child(0))});
        break;
      case Op::Eventually:
        slot = emit({Code::Eventually, self(self, g.child(0))});
        break;
      case Op::Implies: {
        const auto a = self(self, g.child(0));
        const auto b = self(self, g.child(1));
        slot = emit({Code::Implies, a, b});
        break;
      }
      case Op::Until: {
        const auto a = self(self, g.child(0));
        const auto b = self(self, g.child(1));
        slot = emit({Code::Until, a, b});
        break;
      }
      case Op::And:
      case Op::Or: {
        const Code c = g.is(Op::And) ? Code::And : Code::Or;
        slot = self(self, g.child(0));
        for (std::size_t i = 1; i < g.arity(); ++i) slot = emit({c, slot, self(self, g.child(i))});
        break;
      }
      default:
        throw std::logic_error("CompiledFormula: formula was not lowered");
    }
    slots.emplace(g, slot);
    return slot;
  };
  root_ = compile(compile, lower(f));
}

std::uint64_t CompiledFormula::eval_states(const State* states, std::size_t n,
                                           std::size_t loop_start) const {
  std::uint64_t masks[Alphabet::kMaxAtoms] = {};
  for (std::size_t i = 0; i < n; ++i) {
    State s = states[i];
    for (std::size_t a = 0; s != 0 && a < atom_count_; ++a, s >>= 1)
      masks[a] |= (s & 1U) << i;
  }
  return eval_masks(masks, n, loop_start);
}

std::uint64_t CompiledFormula::eval_masks(const std::uint64_t* atom_masks, std::size_t n,
                                          std::size_t loop_start) const {
  if (n == 0 || n > 64 || loop_start >= n) throw std::invalid_argument("bad lasso shape");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const std::size_t last = n - 1;
  auto next = [&](std::uint64_t m) {
    return (m >> 1) | (((m >> loop_start) & 1U) << last);
  };
  // Small formulas dominate; avoid heap traffic for them.
  std::uint64_t local[128] = {};
  std::vector<std::uint64_t> heap;
  std::uint64_t* val = local;
  if (code_.size() > 128) {
    heap.resize(code_.size());
    val = heap.data();
  }
  for (std::size_t pc = 0; pc < code_.size(); ++pc) {
    const Instr& in = code_[pc];
    std::uint64_t r = 0;
    switch (in.code) {
      case Code::True: r = full; break;
      case Code::False: r = 0; break;
      case Code::Atom: r = atom_masks[in.a] & full; break;
      case Code::Not: r = ~val[in.a] & full; break;
      case Code::And: r = val[in.a] & val[in.b]; break;
      case Code::Or: r = val[in.a] | val[in.b]; break;
      case Code::Implies: r = (~val[in.a] | val[in.b]) & full; break;
      case Code::Next: r = next(val[in.a]); break;
      case Code::Always: {
        const std::uint64_t goal = val[in.a];
        r = goal;
        for (std::uint64_t nx; (nx = goal & next(r)) != r;) r = nx;
        break;
      }
      case Code::Eventually: {
        const std::uint64_t goal = val[in.a];
        r = goal;
        for (std::uint64_t nx; (nx = goal | next(r)) != r;) r = nx;
        break;
      }
      case Code::Until: {
        const std::uint64_t stay = val[in.a];
        const std::uint64_t goal = val[in.b];
        r = goal;
        for (std::uint64_t nx; (nx = goal | (stay & next(r))) != r;) r = nx;
        break;
      }
    }
    val[pc] = r;
  }
  return val[root_];
}

std::uint64_t CompiledFormula::eval_trace(const LassoTrace& t) const {
  if (t.span() > 64) throw std::invalid_argument("CompiledFormula supports at most 64 positions");
  std::vector<State> states = t.unroll(t.span());
  return eval_states(states.data(), states.size(), t.loop_start());
}

}  // namespace edgepat
