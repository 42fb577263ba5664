#include <doctest.h>

#include "gen_support.hpp"
#include "ltlnorm/errors.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"

using namespace ltlnorm;

TEST_CASE("basic shapes") {
  CHECK(parse("a U b") == f_until(f_atom("a"), f_atom("b")));
  CHECK(parse("G F a") == f_gf(f_atom("a")));
  CHECK(parse("F G a") == f_fg(f_atom("a")));
  CHECK(parse("1") == f_true());
  CHECK(parse("false") == f_false());
  CHECK(parse("F x") == f_eventually(f_atom("x")));
  CHECK(parse("G x") == f_always(f_atom("x")));
  CHECK(parse("a_1b") == f_atom("a_1b"));
}

TEST_CASE("negation is pushed to atoms") {
  CHECK(parse("!(a U b)") == f_release(f_neg_atom("a"), f_neg_atom("b")));
  CHECK(parse("!!a") == f_atom("a"));
  CHECK(parse("!(a & b)") == f_or(f_neg_atom("a"), f_neg_atom("b")));
  CHECK(parse("!(a W b)") ==
        f_strong_release(f_neg_atom("a"), f_neg_atom("b")));
  CHECK(parse("!X a") == f_next(f_neg_atom("a")));
  CHECK(parse("!(G F a)") == f_fg(f_neg_atom("a")));
  CHECK(parse("!1") == f_false());
}

TEST_CASE("parsed negation agrees with the oracle") {
  // !(a U b) must behave like the negation of a U b on every lasso word
  Formula f = parse("a U b");
  Formula nf = parse("!(a U b)");
  LassoEnumerator en(collect_atoms(f), 3, 3);
  while (auto w = en.next()) CHECK(evaluate(*w, f) != evaluate(*w, nf));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("a | b & c") == f_or(f_atom("a"), f_and(f_atom("b"), f_atom("c"))));
  CHECK(parse("a & b U c") == f_and(f_atom("a"), f_until(f_atom("b"), f_atom("c"))));
  CHECK(parse("a U b U c") ==
        f_until(f_atom("a"), f_until(f_atom("b"), f_atom("c"))));
  CHECK(parse("a U b W c") ==
        f_until(f_atom("a"), f_weak_until(f_atom("b"), f_atom("c"))));
  CHECK(parse("X a U b") == f_until(f_next(f_atom("a")), f_atom("b")));
  CHECK(parse("a M b") == f_strong_release(f_atom("a"), f_atom("b")));
  CHECK(parse("(a | b) & c") == f_and(f_or(f_atom("a"), f_atom("b")), f_atom("c")));
}

TEST_CASE("limit fusion is syntactic and adjacent-only") {
  CHECK(parse("G F G F a") == f_gf(f_gf(f_atom("a"))));
  CHECK(parse("X G F a") == f_next(f_gf(f_atom("a"))));
  // not adjacent: no fusion at parse time
  Formula g = parse("G (F a & true)");
  CHECK(g == f_release(f_false(), f_and(f_eventually(f_atom("a")), f_true())));
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse("a W ("), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("a ? b"), ParseError);
  CHECK_THROWS_AS(parse("a U"), ParseError);
  CHECK_THROWS_AS(parse("Q"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
  try {
    parse("a & ?");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  // the placeholder is reserved and rejected
  CHECK_THROWS_AS(parse("▫ W a"), ParseError);
}

TEST_CASE("render examples") {
  CHECK(render(f_until(f_atom("a"), f_atom("b"))) == "a U b");
  CHECK(render(f_gf(f_atom("a"))) == "G F a");
  CHECK(render(f_and(f_or(f_atom("a"), f_atom("b")), f_atom("c"))) ==
        "(a | b) & c");
  CHECK(render(f_weak_until(f_false(), f_false())) == "false W false");
  CHECK(render(f_eventually(f_atom("a"))) == "F a");
  CHECK(render(f_until(f_atom("a"), f_eventually(f_atom("b")))) == "a U F b");
}

TEST_CASE("parse after render is the identity") {
  testing::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(30), 3);
    CAPTURE(render(f));
    CHECK(parse(render(f)) == f);
  }
}
