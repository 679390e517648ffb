#include <algorithm>
#include <map>

#include "doctest.h"

#include "edgepat/catalog.hpp"
#include "edgepat/eval.hpp"
#include "edgepat/laws.hpp"
#include "edgepat/passes.hpp"
#include "edgepat/stutter.hpp"
#include "edgepat/syntax.hpp"
#include "support/generators.hpp"

using namespace edgepat;
using edgepat::testing::FormulaGen;
using edgepat::testing::GenOptions;

namespace {

Formula F(const char* s) { return parse(s); }

bool has_rule(const CusVerdict& v, const std::string& prefix) {
  for (const auto& r : v.rules())
    if (r.rfind(prefix, 0) == 0) return true;
  return false;
}

void check_witness(const Formula& f, const CusVerdict& v) {
  REQUIRE(v.is_refuted());
  const auto& c = *v.counterexample();
  CHECK(eval(f, c.trace, {0}) == c.original);
  CHECK(eval(f, stutter_at(c.trace, {c.stutter_index}), {0}) == c.stuttered);
  CHECK(c.original != c.stuttered);
}

}  // namespace

TEST_CASE("prover examples") {
  CHECK(check_syntactic(F("a && !b")).is_proved());
  CHECK(check_syntactic(F("X a")).is_unknown());
  CHECK(check_syntactic(F("X a || !X a")).is_unknown());
  CHECK(check_syntactic(F("[] !up(P)")).is_proved());
  CHECK(check_syntactic(F("<>(up(A) && X B && C)")).is_proved());
  CHECK(check_syntactic(F("[](up(A) -> X B || C)")).is_proved());
  CHECK(check_syntactic(F("(!up(A) || X B || C) U (up(D) && X E && F)")).is_proved());
  CHECK(check_syntactic(F("a U X b")).is_unknown());

  const CusVerdict v = check_syntactic(F("[](up(Q) && !up(R) && <>up(R) -> X !(!up(R) U P))"));
  REQUIRE(v.is_proved());
  CHECK(v.rules().front() == "normalize");
  CHECK(has_rule(v, "schema:until-edge-state-goal"));
  CHECK(has_rule(v, "unfold-up"));
  CHECK(has_rule(v, "schema:always-edge"));
  CHECK(v.derivation().size() == v.rules().size());
}

TEST_CASE("falsifier examples") {
  const Alphabet a({"a"});
  const CusVerdict x = falsify(F("X a"), a, Bounds{2, 1}, 1);
  check_witness(F("X a"), x);
  CHECK(x.counterexample()->trace == LassoTrace(a, {1}, {0}));
  CHECK(x.counterexample()->stutter_index == 0);

  CHECK(falsify(F("[] a"), a, Bounds{3, 2}, 1).is_unknown());

  const Formula chain = F("[]((S && X <>T) -> X <>(T && <>P))");
  const Alphabet pst({"P", "S", "T"});
  const CusVerdict c = falsify(chain, pst, Bounds{2, 1}, 2);
  check_witness(chain, c);
  const State st = (State{1} << 1) | (State{1} << 2);
  CHECK(c.counterexample()->trace == LassoTrace(pst, {st}, {0}));
  CHECK(c.counterexample()->stutter_index == 0);
  CHECK(c.counterexample()->original);
  CHECK_FALSE(c.counterexample()->stuttered);
}

TEST_CASE("check") {
  const CusVerdict p = check(F("[] !up(P)"));
  CHECK(p.is_proved());
  CHECK_FALSE(p.counterexample().has_value());
  CHECK(check(F("X a")).is_refuted());
  CHECK(check(F("X a || !X a"), CheckOptions{Bounds{2, 1}, 1, std::nullopt}).is_unknown());

  const auto j = verdict_to_json(check(F("X a")));
  CHECK(j["verdict"] == "refuted");
  CHECK(j["counterexample"].contains("trace"));
  CHECK(j["counterexample"]["stutter_index"] == 0);
  CHECK(verdict_to_json(p)["verdict"] == "proved");
  CHECK(verdict_to_json(p)["counterexample"].is_null());
}

TEST_CASE("parallel falsifier agrees with the reference") {
  FormulaGen gen(77, GenOptions{{"a", "b"}, true, true, true});
  const Alphabet ab({"a", "b"});
  for (int k = 0; k < 150; ++k) {
    const Formula f = gen(3);
    const CusVerdict ref = falsify_reference(f, ab, Bounds{2, 2});
    for (int w : {1, 2}) {
      const CusVerdict par = falsify(f, ab, Bounds{2, 2}, w);
      REQUIRE(par.kind() == ref.kind());
      if (ref.is_refuted()) {
        CHECK(par.counterexample()->trace == ref.counterexample()->trace);
        CHECK(par.counterexample()->stutter_index == ref.counterexample()->stutter_index);
        check_witness(f, par);
      }
    }
  }
}

TEST_CASE("falsify is monotone in bounds") {
  FormulaGen gen(5, GenOptions{{"a", "b"}, false, true, true});
  const Alphabet ab({"a", "b"});
  int refuted = 0;
  for (int k = 0; k < 120; ++k) {
    const Formula f = gen(3);
    const CusVerdict small = falsify(f, ab, Bounds{1, 1}, 1);
    if (!small.is_refuted()) continue;
    ++refuted;
    for (Bounds b : {Bounds{2, 1}, Bounds{1, 2}, Bounds{3, 2}}) CHECK(falsify(f, ab, b, 1).is_refuted());
  }
  CHECK(refuted > 10);
}

TEST_CASE("renaming and polarity flips preserve the verdict") {
  // Orbit reduction in schema validation relies on this.
  FormulaGen gen(11, GenOptions{{"a", "b", "c"}, false, true, true});
  const Alphabet abc({"a", "b", "c"});
  const std::map<std::string, Formula> rename{{"a", F("b")}, {"b", F("c")}, {"c", F("a")}};
  const std::map<std::string, Formula> flip{{"b", F("!b")}};
  for (int k = 0; k < 150; ++k) {
    const Formula f = gen(3);
    const bool base = falsify(f, abc, Bounds{2, 2}, 1).is_refuted();
    CHECK(falsify(substitute(f, rename), abc, Bounds{2, 2}, 1).is_refuted() == base);
    CHECK(falsify(substitute(f, flip), abc, Bounds{2, 2}, 1).is_refuted() == base);
  }
}

TEST_CASE("orbit reduction matches full enumeration on a small schema") {
  const RuleSchema s{"eventually-edge", "<>(up(A) && X B && C)", ""};
  const SchemaReport r = validate_schema(s, Bounds{3, 2}, 0);
  CHECK(r.passed());
  CHECK(r.instantiations == 216);
  CHECK(r.representatives == 11);

  // Every literal instance over a, b, c, checked directly.
  const Formula t = F(s.template_text.c_str());
  const std::vector<Formula> lits = {F("a"), F("b"), F("c"), F("!a"), F("!b"), F("!c")};
  const Alphabet abc({"a", "b", "c"});
  std::size_t n = 0;
  for (const auto& A : lits)
    for (const auto& B : lits)
      for (const auto& C : lits) {
        const std::map<std::string, Formula> m{{"A", A}, {"B", B}, {"C", C}};
        CHECK(falsify(substitute(t, m), abc, Bounds{3, 2}, 0).is_unknown());
        ++n;
      }
  CHECK(n == r.instantiations);
}

TEST_CASE("schema table") {
  const auto& all = schemas();
  CHECK(all.size() >= 4);
  for (const auto& s : all) CHECK_NOTHROW(parse(s.template_text));
  const SchemaReport bad = validate_schema(broken_schema(), Bounds{3, 2}, 0);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.failing_instance.has_value());
  CHECK(bad.counterexample->original != bad.counterexample->stuttered);
}

TEST_CASE("prover soundness on random formulas") {
  FormulaGen gen(2024, GenOptions{{"a", "b", "c"}, true, true, true});
  int proved = 0;
  for (int k = 0; k < 1500; ++k) {
    const Formula f = gen(4);
    if (!check_syntactic(f).is_proved()) continue;
    ++proved;
    CHECK_MESSAGE(!falsify(f, Bounds{2, 2}, 0).is_refuted(), print_canonical(f));
  }
  MESSAGE("proved " << proved << " of 1500");
  CHECK(proved > 100);
}

TEST_CASE("prover soundness on law sides") {
  for (const auto& law : law_list())
    for (const Formula& f : {law.left, law.right})
      if (check_syntactic(f).is_proved()) CHECK_MESSAGE(!falsify(f, Bounds{3, 2}, 0).is_refuted(), law.name);
}

TEST_CASE("sugar-free catalog formulas are proved as well") {
  for (const auto& c : all_cells()) {
    const Formula t = template_of(c);
    CHECK_MESSAGE(check_syntactic(eliminate_sugar(t)).is_proved() == check_syntactic(t).is_proved(),
                  cell_key(c));
  }
}
