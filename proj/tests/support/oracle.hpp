// Bounded-unrolling oracle: evaluates a formula directly from the operator
// definitions on an explicitly unrolled word.  Shares no code with the
// fixpoint evaluators.
//
// The word is unrolled to 3*(prefix+loop) states.  Positions past the
// unrolled part are folded back into the loop, and every scan for U, W, P,
// [] and <> stops after prefix+loop steps, by which point every suffix class
// reachable from the start position has been visited.
#pragma once

#include <vector>

#include "edgepat/formula.hpp"
#include "edgepat/trace.hpp"

namespace edgepat::testing {

class UnrollOracle {
 public:
  explicit UnrollOracle(const LassoTrace& t)
      : alphabet_(t.alphabet()), p_(t.prefix().size()), l_(t.loop().size()),
        word_(t.unroll(3 * (t.prefix().size() + t.loop().size()))) {}

  bool holds(const Formula& f, std::size_t j) const {
    switch (f.op()) {
      case Op::Const: return f.value();
      case Op::Atom: return (state(j) >> alphabet_.require(f.name())) & 1U;
      case Op::Not: return !holds(f.child(0), j);
      case Op::And: {
        for (const auto& k : f.children())
          if (!holds(k, j)) return false;
        return true;
      }
      case Op::Or: {
        for (const auto& k : f.children())
          if (holds(k, j)) return true;
        return false;
      }
      case Op::Implies: return !holds(f.child(0), j) || holds(f.child(1), j);
      case Op::IfThenElse: return holds(f.child(0), j) ? holds(f.child(1), j) : holds(f.child(2), j);
      case Op::Next: return holds(f.child(0), j + 1);
      case Op::Always:
        for (std::size_t k = j; k <= j + horizon(); ++k)
          if (!holds(f.child(0), k)) return false;
        return true;
      case Op::Eventually:
        for (std::size_t k = j; k <= j + horizon(); ++k)
          if (holds(f.child(0), k)) return true;
        return false;
      case Op::Until: return until(f.child(0), f.child(1), j, false);
      case Op::WeakUntil: return until(f.child(0), f.child(1), j, true);
      case Op::Precedes: {
        // a P b: b never holds unless a held strictly earlier
        for (std::size_t k = j; k <= j + horizon(); ++k) {
          if (holds(f.child(1), k)) return false;
          if (holds(f.child(0), k)) return true;
        }
        return true;
      }
      case Op::EdgeUp: return !holds(f.child(0), j) && holds(f.child(0), j + 1);
      case Op::EdgeDown: return holds(f.child(0), j) && !holds(f.child(0), j + 1);
      case Op::EdgeAny: return holds(f.child(0), j) != holds(f.child(0), j + 1);
    }
    return false;
  }

 private:
  std::size_t horizon() const { return p_ + l_; }

  State state(std::size_t j) const {
    while (j >= word_.size()) j -= l_;
    return word_[j];
  }

  bool until(const Formula& a, const Formula& b, std::size_t j, bool weak) const {
    for (std::size_t k = j; k <= j + horizon(); ++k) {
      if (holds(b, k)) return true;
      if (!holds(a, k)) return false;
    }
    return weak;
  }

  Alphabet alphabet_;
  std::size_t p_;
  std::size_t l_;
  std::vector<State> word_;
};

// Duplicates position i of a finite word.
inline std::vector<State> duplicate(std::vector<State> w, std::size_t i) {
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), w[i]);
  return w;
}

}  // namespace edgepat::testing
