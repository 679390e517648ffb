// Times the falsifier on a few catalog cells: the reference implementation
// (LassoTrace per trace, tree evaluator) against the mask kernel at 1 and N
// workers.
//
//   bench_falsify [prefix loop [workers]]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "edgepat/catalog.hpp"
#include "edgepat/stutter.hpp"

using namespace edgepat;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  Bounds b{3, 2};
  if (argc >= 3) b = {std::strtoul(argv[1], nullptr, 10), std::strtoul(argv[2], nullptr, 10)};
  const int workers = argc >= 4 ? std::atoi(argv[3]) : omp_get_max_threads();

  std::printf("bounds (%zu,%zu), %d workers\n", b.max_prefix, b.max_loop, workers);
  std::printf("%-26s %12s %12s %12s\n", "cell", "reference", "kernel x1", "kernel xN");
  for (const char* key : {"absence.globally.2", "existence.between.3", "precedence.after_until.3",
                          "response.before.1", "response.between.3"}) {
    const Formula f = template_of(parse_cell_key(key));
    const Alphabet ab = default_alphabet(f);
    const double r = time_ms([&] { falsify_reference(f, ab, b); });
    const double s = time_ms([&] { falsify(f, ab, b, 1); });
    const double p = time_ms([&] { falsify(f, ab, b, workers); });
    std::printf("%-26s %10.1f ms %10.1f ms %10.1f ms\n", key, r, s, p);
  }
  return 0;
}
