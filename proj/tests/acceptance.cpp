// Acceptance checks.  One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgepat/catalog.hpp"
#include "edgepat/eval.hpp"
#include "edgepat/laws.hpp"
#include "edgepat/stutter.hpp"
#include "edgepat/syntax.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace edgepat;
using edgepat::testing::FormulaGen;
using edgepat::testing::GenOptions;
using edgepat::testing::UnrollOracle;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. every catalog cell proved by the prover, no counterexample at (3,2)
Outcome catalog_sweep() {
  const auto t0 = Clock::now();
  std::size_t proved = 0, clean = 0;
  std::vector<std::string> bad;
  for (const auto& c : all_cells()) {
    const Formula f = template_of(c);
    const bool p = check_syntactic(f).is_proved();
    const CusVerdict s = falsify(f, Bounds{3, 2});
    proved += p;
    clean += !s.is_refuted();
    if (!p || s.is_refuted()) {
      std::string why = cell_key(c) + (p ? "" : " unproved");
      if (s.is_refuted()) why += " refuted on " + to_string(s.counterexample()->trace);
      bad.push_back(why);
    }
  }
  std::ostringstream os;
  os << proved << "/90 proved, " << clean << "/90 without counterexample at (3,2), " << seconds_since(t0) << " s";
  for (const auto& b : bad) os << "\n      " << b;
  return {bad.empty() && all_cells().size() == 90, os.str()};
}

// 2. Response-Chain counterexample
Outcome response_chain() {
  const Formula f = parse("[]((S && X <>T) -> X <>(T && <>P))");
  const Alphabet ab = default_alphabet(f);  // P, S, T
  const CusVerdict v = falsify(f, ab, Bounds{2, 1});
  if (!v.is_refuted()) return {false, "not refuted at (2,1)"};
  const Counterexample& c = *v.counterexample();
  const State s0 = (State{1} << ab.require("S")) | (State{1} << ab.require("T"));
  const auto word = c.trace.unroll(8);
  bool ok = word[0] == s0;
  for (std::size_t i = 1; i < word.size(); ++i) ok = ok && word[i] == 0;
  ok = ok && c.stutter_index == 0 && c.original && !c.stuttered;
  ok = ok && eval(f, c.trace, {0}) && !eval(f, stutter_at(c.trace, {0}), {0});
  const CusVerdict wide = falsify(f, ab, Bounds{3, 2});
  ok = ok && wide.is_refuted();
  std::ostringstream os;
  os << "trace " << to_string(c.trace) << " over (P,S,T), stutter index " << c.stutter_index << ", value "
     << c.original << " -> " << c.stuttered << "; also refuted at (3,2) on " << to_string(wide.counterexample()->trace);
  return {ok, os.str()};
}

// 3. all laws at (3,2) over A, B
Outcome law_suite() {
  const auto t0 = Clock::now();
  std::size_t passed = 0;
  std::ostringstream fails;
  for (const auto& l : law_list()) {
    const LawResult r = verify_law(l, Alphabet({"A", "B"}), Bounds{3, 2});
    if (r.passed()) {
      ++passed;
    } else {
      fails << "\n      " << l.name << ": " << print_canonical(l.left) << " = " << r.witness->left << ", "
            << print_canonical(l.right) << " = " << r.witness->right << " at position " << r.witness->position
            << " of " << to_string(r.witness->trace);
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << passed << "/" << law_list().size() << " laws hold, " << secs << " s" << fails.str();
  return {passed == 23 && law_list().size() == 23 && secs < 120, os.str()};
}

// 4. derivation fixtures
Outcome derivation() {
  const auto& fx = derivation_fixtures();
  bool ok = fx.size() == 3;
  std::ostringstream os;
  for (const auto& d : fx) {
    const bool in_bounds = d.witness.prefix().size() <= 3 && d.witness.loop().size() <= 2 &&
                           d.witness.loop().size() >= 1;
    const bool b = eval(d.buggy, d.witness, {0});
    const bool f = eval(d.final_formula, d.witness, {0});
    const bool cond = eval(d.failure_condition, d.witness, {0});
    const bool one = in_bounds && b != f && cond;
    ok = ok && one;
    os << d.name << " " << (one ? "differs" : "DOES NOT differ") << " on " << to_string(d.witness) << "; ";
  }
  if (!fx.empty()) {
    const bool p = check_syntactic(fx.front().final_formula).is_proved();
    const bool s = !falsify(fx.front().final_formula, Bounds{3, 2}).is_refuted();
    ok = ok && p && s;
    os << "final formula " << (p ? "proved" : "NOT proved") << (s ? "" : ", REFUTED");
  }
  return {ok, os.str()};
}

// 5. schema validation and the broken-schema self-test
Outcome schema_validation() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream os;
  std::uint64_t inst = 0, reps = 0;
  for (const auto& r : validate_schemas(Bounds{3, 2})) {
    inst += r.instantiations;
    reps += r.representatives;
    if (!r.passed()) {
      ok = false;
      os << "\n      " << r.name << " fails: " << print_canonical(*r.failing_instance) << " on "
         << to_string(r.counterexample->trace);
    }
  }
  const SchemaReport bad = validate_schema(broken_schema(), Bounds{3, 2});
  ok = ok && !bad.passed();
  std::ostringstream head;
  head << schemas().size() << " schemas, " << inst << " instantiations (" << reps << " orbit representatives), "
       << "broken schema " << (bad.passed() ? "NOT refuted" : "refuted") << ", " << seconds_since(t0) << " s";
  return {ok, head.str() + os.str()};
}

// 6. fixpoint evaluators vs the unrolling oracle, depth <= 4, 2 atoms, (2,2)
//
// There are far too many depth-4 formulas to list, so the check runs on
// semantic classes.  Both evaluators are compositional on a fixed trace: the
// value of op(f, g, h) at every position depends only on the position masks
// of f, g, h.  Hence evaluating op(x, y, z) on a trace of the same shape whose
// atoms x, y, z carry those masks gives the value of op(f, g, h).  For each
// trace, the set of (fixpoint mask, oracle mask) pairs of all formulas of
// depth <= d is computed by closing the leaf pairs under every operator d
// times; a formula where the evaluators disagree shows up as an unequal pair.
// The closure is cross-checked by direct evaluation of every depth <= 2
// formula without if-then-else and a random sample up to depth 4.

std::uint64_t oracle_mask(const UnrollOracle& o, const Formula& f, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < n; ++j) m |= std::uint64_t{o.holds(f, j)} << j;
  return m;
}

std::uint64_t ref_mask(const Formula& f, const LassoTrace& t) {
  std::uint64_t m = 0;
  const auto v = eval_positions(f, t);
  for (std::size_t j = 0; j < v.size(); ++j) m |= std::uint64_t{v[j]} << j;
  return m;
}

LassoTrace masks_to_trace(const Alphabet& xyz, std::size_t p, std::size_t n, const std::uint64_t* m) {
  std::vector<State> pre, loop;
  for (std::size_t j = 0; j < n; ++j) {
    State s = 0;
    for (std::size_t a = 0; a < 3; ++a) s |= ((m[a] >> j) & 1U) << a;
    (j < p ? pre : loop).push_back(s);
  }
  return LassoTrace(xyz, std::move(pre), std::move(loop));
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  const Alphabet ab({"a", "b"});
  const Alphabet xyz({"x", "y", "z"});
  const TraceSpace space(ab, 2, 2);
  const Formula x = Formula::atom("x"), y = Formula::atom("y"), z = Formula::atom("z");
  const std::vector<Formula> leaves = {Formula::atom("a"), Formula::atom("b"), Formula::top(), Formula::bottom()};

  struct Template {
    Formula f;
    int arity;
    CompiledFormula c;
  };
  std::vector<Template> ops;
  auto add = [&](Formula f, int arity) { ops.push_back({f, arity, CompiledFormula(f, xyz)}); };
  add(Formula::negation(x), 1);
  add(Formula::next(x), 1);
  add(Formula::always(x), 1);
  add(Formula::eventually(x), 1);
  add(Formula::edge_up(x), 1);
  add(Formula::edge_down(x), 1);
  add(Formula::edge_any(x), 1);
  add(Formula::conjunction(x, y), 2);
  add(Formula::disjunction(x, y), 2);
  add(Formula::implication(x, y), 2);
  add(Formula::until(x, y), 2);
  add(Formula::weak_until(x, y), 2);
  add(Formula::precedes(x, y), 2);
  add(Formula::if_then_else(x, y, z), 3);

  std::uint64_t closure_pairs = 0, closure_mismatch = 0;
  std::uint64_t classes_at_depth[5] = {0, 0, 0, 0, 0};
  for (std::uint64_t ti = 0; ti < space.size(); ++ti) {
    const LassoTrace t = space.at(ti);
    const std::size_t n = t.span(), p = t.loop_start();
    const UnrollOracle oracle(t);
    // pair = (fixpoint mask, oracle mask); the reference evaluator must agree
    // with the compiled one and is folded into the fixpoint side.
    std::set<std::pair<std::uint64_t, std::uint64_t>> have;
    for (const auto& l : leaves) {
      const std::uint64_t e = CompiledFormula(l, ab).eval_trace(t);
      if (ref_mask(l, t) != e) ++closure_mismatch;
      have.insert({e, oracle_mask(oracle, l, n)});
    }
    classes_at_depth[0] += have.size();
    for (int d = 1; d <= 4; ++d) {
      const std::vector<std::pair<std::uint64_t, std::uint64_t>> cur(have.begin(), have.end());
      const std::size_t k = cur.size();
      for (const auto& op : ops) {
        const std::size_t ny = op.arity >= 2 ? k : 1, nz = op.arity >= 3 ? k : 1;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < ny; ++j)
            for (std::size_t h = 0; h < nz; ++h) {
              const std::uint64_t em[3] = {cur[i].first, cur[j].first, cur[h].first};
              const std::uint64_t om[3] = {cur[i].second, cur[j].second, cur[h].second};
              const std::uint64_t e = op.c.eval_masks(em, n, p);
              if (ref_mask(op.f, masks_to_trace(xyz, p, n, em)) != e) ++closure_mismatch;
              const LassoTrace ot = masks_to_trace(xyz, p, n, om);
              const std::uint64_t o = oracle_mask(UnrollOracle(ot), op.f, n);
              ++closure_pairs;
              have.insert({e, o});
            }
      }
      classes_at_depth[d] += have.size();
    }
    for (const auto& [e, o] : have) closure_mismatch += e != o;
  }

  // Direct: every depth <= 2 formula over a, b without if-then-else.
  const auto direct = testing::all_formulas(
      {Formula::atom("a"), Formula::atom("b")}, 2,
      {Op::Not, Op::Next, Op::Always, Op::Eventually, Op::EdgeUp, Op::EdgeDown, Op::EdgeAny},
      {Op::And, Op::Or, Op::Implies, Op::Until, Op::WeakUntil, Op::Precedes});
  // Random: depth <= 4 with every operator and constants.
  std::vector<Formula> sample;
  FormulaGen gen(20240601, GenOptions{{"a", "b"}, true, true, true});
  for (int i = 0; i < 4000; ++i) sample.push_back(gen(4));

  std::uint64_t direct_checks = 0, direct_mismatch = 0;
  std::vector<LassoTrace> traces;
  for (const auto& t : space) traces.push_back(t);
  std::vector<UnrollOracle> oracles;
  for (const auto& t : traces) oracles.emplace_back(t);
  const std::vector<Formula>* sets[] = {&direct, &sample};
  for (const auto* set : sets) {
    for (const auto& f : *set) {
      const CompiledFormula c(f, ab);
      for (std::size_t i = 0; i < traces.size(); ++i) {
        const std::uint64_t e = c.eval_trace(traces[i]);
        const std::uint64_t o = oracle_mask(oracles[i], f, traces[i].span());
        std::uint64_t r = e;
        if (set == &sample) r = ref_mask(f, traces[i]);
        ++direct_checks;
        direct_mismatch += (e != o) || (r != e);
      }
    }
  }

  // Number of distinct formula trees of depth <= 4 covered by the closure.
  double count = 4;
  for (int d = 0; d < 4; ++d) count = 4 + 7 * count + 6 * count * count + count * count * count;

  std::ostringstream os;
  os << space.size() << " traces; closure over ~1e" << static_cast<int>(std::log10(count))
     << " formulas of depth <= 4: " << closure_pairs << " operator applications, classes per trace by depth";
  for (auto c : classes_at_depth) os << " " << static_cast<double>(c) / static_cast<double>(space.size());
  os << ", " << closure_mismatch << " mismatches; direct: " << direct.size() << " depth<=2 formulas + "
     << sample.size() << " random depth<=4, " << direct_checks << " formula/trace pairs, " << direct_mismatch
     << " mismatches; " << seconds_since(t0) << " s";
  return {closure_mismatch == 0 && direct_mismatch == 0, os.str()};
}

// 7. parse(print(f)) == f on generated formulas
Outcome roundtrip() {
  FormulaGen gen(7, GenOptions{{"a", "b", "req", "ack_2", "P", "Q", "R", "S", "X1"}, true, true, true});
  std::size_t ok = 0;
  std::string first_bad;
  for (int i = 0; i < 10000; ++i) {
    const Formula f = gen(1 + i % 7);
    bool same = false;
    try {
      same = parse(print_canonical(f)) == f;
    } catch (const ParseError&) {
    }
    if (same)
      ++ok;
    else if (first_bad.empty())
      first_bad = print_canonical(f);
  }
  std::string d = std::to_string(ok) + "/10000 formulas round-trip";
  if (!first_bad.empty()) d += "; first failure: " + first_bad;
  return {ok == 10000, d};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 catalog-cus-sweep", catalog_sweep},       {"2 response-chain-refutation", response_chain},
      {"3 law-suite", law_suite},                   {"4 derivation-fixtures", derivation},
      {"5 schema-validation", schema_validation},   {"6 oracle-agreement", oracle_agreement},
      {"7 parser-roundtrip", roundtrip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
  }
  std::cout << (failed ? "acceptance FAILED" : "acceptance passed") << std::endl;
  return failed;
}
