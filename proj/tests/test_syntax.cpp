#include <regex>

#include "doctest.h"

#include "edgepat/syntax.hpp"
#include "support/generators.hpp"

using namespace edgepat;

namespace {
Formula A(const char* n) { return Formula::atom(n); }
}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("[] !up(P)") == Formula::always(Formula::negation(Formula::edge_up(A("P")))));
  CHECK(parse("a U b U c") == Formula::until(A("a"), Formula::until(A("b"), A("c"))));
  CHECK(parse("a W b P c") == Formula::weak_until(A("a"), Formula::precedes(A("b"), A("c"))));
  const Formula prec = Formula::always(Formula::implication(
      Formula::conjunction(A("Q"), Formula::eventually(A("R"))),
      Formula::until(Formula::negation(A("P")), Formula::disjunction(A("S"), A("R")))));
  CHECK(parse("[](Q && <>R -> (!P U (S || R)))") == prec);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("a && b || c") == Formula::disjunction(Formula::conjunction(A("a"), A("b")), A("c")));
  CHECK(parse("a -> b -> c") == Formula::implication(A("a"), Formula::implication(A("b"), A("c"))));
  CHECK(parse("!a U b") == Formula::until(Formula::negation(A("a")), A("b")));
  CHECK(parse("X a U b") == Formula::until(Formula::next(A("a")), A("b")));
  CHECK(parse("a U b && c") == Formula::conjunction(Formula::until(A("a"), A("b")), A("c")));
  CHECK(parse("c ? a : b -> d") ==
        Formula::if_then_else(A("c"), A("a"), Formula::implication(A("b"), A("d"))));
  CHECK(parse("true && false") == Formula::conjunction(Formula::top(), Formula::bottom()));
  CHECK(parse("any(a) && down(b)") ==
        Formula::conjunction(Formula::edge_any(A("a")), Formula::edge_down(A("b"))));
}

TEST_CASE("P is an atom in operand position and precedes in infix position") {
  CHECK(parse("P") == A("P"));
  CHECK(parse("up(R) P P") == Formula::precedes(Formula::edge_up(A("R")), A("P")));
  CHECK(parse("P P P") == Formula::precedes(A("P"), A("P")) );
}

TEST_CASE("syntax errors carry a span and expected tokens") {
  try {
    parse("a && ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().start == 5);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse("(a || b");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().start == 7);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "')'") != e.expected().end());
  }
  CHECK_THROWS_AS(parse("foo(a)"), ParseError);
  CHECK_THROWS_AS(parse("a $ b"), ParseError);
  CHECK_THROWS_AS(parse("U"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("up a"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
}

TEST_CASE("canonical printer") {
  CHECK(print_canonical(Formula::always(A("a"))) == "[] a");
  CHECK(print_canonical(Formula::edge_up(A("a"))) == "up(a)");
  CHECK(print_canonical(Formula::until(Formula::disjunction(A("a"), A("b")), A("c"))) == "(a || b) U c");
  CHECK(print_canonical(parse("[] !up(P)")) == "[] !up(P)");
  CHECK(print_canonical(parse("(a U b) U c")) == "(a U b) U c");
  CHECK(print_canonical(parse("a U (b U c)")) == "a U b U c");
}

TEST_CASE("SPIN printer lowers and fully parenthesises") {
  CHECK(print_spin(parse("up(a)")) == "(! a) && (X a)");
  CHECK(print_spin(parse("a P b")) == "! ((! a) U b)");
  CHECK(print_spin(Formula::top()) == "true");
  CHECK(print_spin(parse("[] a")) == "[] a");
}

TEST_CASE("SPIN output avoids the extended tokens") {
  const std::regex banned(R"(\b(W|P|up|down|any)\b|[?:])");
  testing::FormulaGen gen(7, {{"a", "b", "c"}});
  for (int i = 0; i < 2000; ++i) {
    const std::string s = print_spin(gen(5));
    CHECK_FALSE(std::regex_search(s, banned));
  }
}

TEST_CASE("parse(print_canonical(f)) == f") {
  testing::FormulaGen gen(99, {{"a", "b", "P", "x_1"}});
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen(6);
    const std::string text = print_canonical(f);
    const Formula g = parse(text);
    CHECK_MESSAGE(g == f, text);
  }
}

TEST_CASE("atom names") {
  CHECK(is_valid_atom_name("door_open"));
  CHECK(is_valid_atom_name("P"));
  CHECK_FALSE(is_valid_atom_name("U"));
  CHECK_FALSE(is_valid_atom_name("up"));
  CHECK_FALSE(is_valid_atom_name("1a"));
}
