#include "doctest.h"

#include "edgepat/eval.hpp"
#include "edgepat/passes.hpp"
#include "edgepat/syntax.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace edgepat;

namespace {
Formula F(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("eliminate_sugar rewrites W, P and ite") {
  CHECK(eliminate_sugar(F("a W b")) == F("[] a || a U b"));
  CHECK(eliminate_sugar(F("a P b")) == F("!(!a U b)"));
  CHECK(eliminate_sugar(F("c ? x : y")) == F("(c && x) || (!c && y)"));
  CHECK(eliminate_sugar(F("[] a")) == F("[] a"));
  CHECK_FALSE(has_sugar(eliminate_sugar(F("(a W b) P (c ? a : b)"))));
}

TEST_CASE("eliminate_edges expands the three edges") {
  CHECK(eliminate_edges(F("up(a)")) == F("!a && X a"));
  CHECK(eliminate_edges(F("down(a)")) == F("a && X !a"));
  CHECK(eliminate_edges(F("any(a)")) == F("(!a && X a) || (a && X !a)"));
  CHECK(eliminate_edges(F("<> p")) == F("<> p"));
  CHECK_FALSE(has_edges(eliminate_edges(F("up(down(any(a)))"))));
}

TEST_CASE("subformulas lists children before parents") {
  auto s = subformulas(F("a && b"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == F("a"));
  CHECK(s[1] == F("b"));
  CHECK(s[2] == F("a && b"));

  s = subformulas(F("[] up(a)"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == F("a"));
  CHECK(s[1] == F("up(a)"));
  CHECK(s[2] == F("[] up(a)"));

  s = subformulas(F("p"));
  REQUIRE(s.size() == 1);

  // shared subterms appear once
  CHECK(subformulas(F("a U a")).size() == 2);
}

TEST_CASE("formula basics") {
  CHECK(F("a && b").depth() == 1);
  CHECK(F("[] up(a)").size() == 3);
  CHECK(Formula() == Formula::bottom());
  CHECK(compare(F("a"), F("b")) < 0);
  CHECK(F("a U b") != F("b U a"));
  CHECK_THROWS(Formula::atom(""));
  CHECK(atoms_of(F("b U (a && b)")) == std::vector<std::string>{"b", "a"});
}

TEST_CASE("passes are idempotent") {
  testing::FormulaGen gen(101, {{"a", "b", "c"}});
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(5);
    const Formula s = eliminate_sugar(f);
    CHECK(eliminate_sugar(s) == s);
    const Formula e = eliminate_edges(f);
    CHECK(eliminate_edges(e) == e);
    CHECK(lower(lower(f)) == lower(f));
  }
}

TEST_CASE("lowering preserves meaning on every small trace") {
  // every position of every trace over 3 atoms with prefix <= 3, loop <= 2
  const Alphabet ab({"a", "b", "c"});
  const TraceSpace space(ab, 3, 2);
  testing::FormulaGen gen(202, {{"a", "b", "c"}});
  std::size_t mismatches = 0;
  State st[64];
  for (int i = 0; i < 400; ++i) {
    const Formula f = gen(4);
    const Formula s = eliminate_sugar(f);
    const Formula e = eliminate_edges(s);
    const CompiledFormula cf(f, ab), cs(s, ab), ce(e, ab);
    const bool with_oracle = i % 8 == 0;
    for (std::uint64_t k = 0; k < space.size(); ++k) {
      const auto shape = space.decode(k, st);
      const std::size_t n = shape.prefix + shape.loop;
      const std::uint64_t m = cf.eval_states(st, n, shape.prefix);
      if (m != cs.eval_states(st, n, shape.prefix) || m != ce.eval_states(st, n, shape.prefix)) ++mismatches;
      if (!with_oracle) continue;
      const testing::UnrollOracle oracle(space.at(k));
      for (std::size_t j = 0; j < n; ++j) {
        const bool o = oracle.holds(f, j);
        if (o != static_cast<bool>((m >> j) & 1U) || o != oracle.holds(e, j)) ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}
