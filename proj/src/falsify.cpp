#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

#include "edgepat/eval.hpp"
#include "edgepat/stutter.hpp"

namespace edgepat {

namespace {

// Writes the word of (states, n, loop_start) with position i repeated into
// out; returns the new loop start.  Same representation as stutter_at.
std::size_t stutter_states(const State* states, std::size_t n, std::size_t loop_start,
                           std::size_t i, State* out) {
  if (i < loop_start) {
    std::copy(states, states + i + 1, out);
    std::copy(states + i, states + n, out + i + 1);
    return loop_start + 1;
  }
  const std::size_t k = i - loop_start;
  const std::size_t len = n - loop_start;
  std::copy(states, states + i + 1, out);
  out[i + 1] = states[i];
  for (std::size_t j = 0; j < len; ++j) out[i + 2 + j] = states[loop_start + (k + 1 + j) % len];
  return i + 2;
}

CusVerdict witness_verdict(const Formula& f, const TraceSpace& space, std::uint64_t index,
                           std::size_t k) {
  Counterexample cex{space.at(index), k, false, false};
  const CompiledFormula cf(f, space.alphabet());
  cex.original = cf.eval_trace(cex.trace) & 1U;
  cex.stuttered = cf.eval_trace(stutter_at(cex.trace, {k})) & 1U;
  return CusVerdict::refuted(std::move(cex));
}

}  // namespace

Alphabet default_alphabet(const Formula& f) {
  auto names = atoms_of(f);
  std::sort(names.begin(), names.end());
  return Alphabet(std::move(names));
}

CusVerdict falsify(const Formula& f, Bounds bounds, int workers) {
  return falsify(f, default_alphabet(f), bounds, workers);
}

CusVerdict falsify(const Formula& f, const Alphabet& alphabet, Bounds bounds, int workers) {
  const TraceSpace space(alphabet, bounds.max_prefix, bounds.max_loop);
  const CompiledFormula cf(f, alphabet);
  const std::uint64_t total = space.size();
  // key = trace index * 64 + stutter index; smallest key wins.
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 2048) num_threads(threads)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(total); ++si) {
    const auto i = static_cast<std::uint64_t>(si);
    if (i * 64 >= best.load(std::memory_order_relaxed)) continue;
    State states[64];
    State stuttered[64];
    const auto shape = space.decode(i, states);
    const std::size_t n = shape.prefix + shape.loop;
    const bool v = cf.eval_states(states, n, shape.prefix) & 1U;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t ls = stutter_states(states, n, shape.prefix, k, stuttered);
      const std::size_t m = k < shape.prefix ? n + 1 : k + 2 + shape.loop;
      if (m > 64) continue;
      if (static_cast<bool>(cf.eval_states(stuttered, m, ls) & 1U) != v) {
        const std::uint64_t key = i * 64 + k;
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (key < cur && !best.compare_exchange_weak(cur, key)) {
        }
        break;
      }
    }
  }

  const std::uint64_t key = best.load();
  if (key == kNone) return CusVerdict::unknown();
  return witness_verdict(f, space, key / 64, key % 64);
}

CusVerdict falsify_reference(const Formula& f, const Alphabet& alphabet, Bounds bounds) {
  for (const LassoTrace& t : enumerate_traces(alphabet, bounds.max_prefix, bounds.max_loop)) {
    const bool v = eval(f, t, {0});
    for (std::size_t k = 0; k < t.span(); ++k) {
      const LassoTrace s = stutter_at(t, {k});
      const bool w = eval(f, s, {0});
      if (v != w) return CusVerdict::refuted({t, k, v, w});
    }
  }
  return CusVerdict::unknown();
}

}  // namespace edgepat
