// ============================================================================
// edgepat/eval.hpp: exact LTL evaluation over lasso traces
// ============================================================================
//
// Two evaluators with identical semantics:
//
//   eval / eval_positions   reference implementation.  Walks the formula
//                           and computes, per node, the truth value at each
//                           distinct position; Until/Eventually are least
//                           fixpoints and Always a greatest fixpoint along
//                           the successor function of the lasso.
//
//   CompiledFormula         the kernel used by the falsifier and the law
//                           verifier.  The lowered formula is flattened to a
//                           post-order program over 64-bit position masks
//                           (bit i = truth at position i), so a trace with
//                           at most 64 distinct positions is evaluated with a
//                           handful of word operations per node.
// ============================================================================

#pragma once

#include <cstdint>
#include <vector>

#include "edgepat/formula.hpp"
#include "edgepat/trace.hpp"

namespace edgepat {

// Truth of f at position i of the induced word.  Positions past the
// prefix+loop window wrap into the loop.  Throws AlphabetError when f names
// an atom the trace does not declare.
bool eval(const Formula& f, const LassoTrace& t, Position i);

// Truth at each distinct position 0 .. t.span()-1.
std::vector<bool> eval_positions(const Formula& f, const LassoTrace& t);

class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Alphabet& alphabet);

  // Mask of positions (0 .. n-1) where the formula holds on the lasso with
  // `n` distinct positions whose loop starts at `loop_start`.  n <= 64.
  std::uint64_t eval_states(const State* states, std::size_t n, std::size_t loop_start) const;
  // Same, with atom valuations given as position masks (one per atom).
  std::uint64_t eval_masks(const std::uint64_t* atom_masks, std::size_t n,
                           std::size_t loop_start) const;

  std::uint64_t eval_trace(const LassoTrace& t) const;

  std::size_t atom_count() const noexcept { return atom_count_; }
  std::size_t program_size() const noexcept { return code_.size(); }

 private:
  enum class Code : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Next, Always, Eventually, Until };
  struct Instr {
    Code code;
    std::uint32_t a = 0;  // child slot or atom index
    std::uint32_t b = 0;
  };
  std::vector<Instr> code_;
  std::uint32_t root_ = 0;
  std::size_t atom_count_ = 0;
};

}  // namespace edgepat
