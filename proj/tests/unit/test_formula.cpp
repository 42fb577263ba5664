#include <doctest.h>

#include "gen_support.hpp"
#include "ltlnorm/errors.hpp"
#include "ltlnorm/formula.hpp"

using namespace ltlnorm;

TEST_CASE("node counts include constants and count limit operators once") {
  CHECK(f_atom("a").node_count() == 1);
  CHECK(f_true().node_count() == 1);
  CHECK(f_gf(f_atom("a")).node_count() == 2);
  CHECK(f_fg(f_and(f_atom("a"), f_false())).node_count() == 4);
  CHECK(f_weak_until(f_false(), f_false()).node_count() == 3);
}

TEST_CASE("structural equality is by shape, not identity") {
  Formula a1 = f_until(f_atom("a"), f_atom("b"));
  Formula a2 = f_until(f_atom("a"), f_atom("b"));
  CHECK(a1.id() != a2.id());
  CHECK(a1 == a2);
  CHECK(a1 != f_weak_until(f_atom("a"), f_atom("b")));
  CHECK(f_atom("a") != f_neg_atom("a"));
}

TEST_CASE("negate_nnf dualizes operators") {
  CHECK(negate_nnf(f_atom("a")) == f_neg_atom("a"));
  CHECK(negate_nnf(f_until(f_atom("a"), f_atom("b"))) ==
        f_release(f_neg_atom("a"), f_neg_atom("b")));
  CHECK(negate_nnf(f_gf(f_atom("a"))) == f_fg(f_neg_atom("a")));
  CHECK(negate_nnf(f_weak_until(f_atom("a"), f_atom("b"))) ==
        f_strong_release(f_neg_atom("a"), f_neg_atom("b")));
  CHECK_THROWS_AS(negate_nnf(f_hole()), InvariantError);
}

TEST_CASE("negate_nnf is a structural involution") {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(20), 3);
    CHECK(negate_nnf(negate_nnf(f)) == f);
  }
}

TEST_CASE("subtree facts") {
  Formula f = f_weak_until(f_until(f_atom("a"), f_atom("b")), f_atom("c"));
  CHECK(f.has_stage1_redex());
  CHECK(f.has_u_or_m_outside_limit());
  // the offending U-node hides under a limit: no redex
  Formula g = f_weak_until(f_gf(f_until(f_atom("a"), f_atom("b"))), f_atom("c"));
  CHECK(!g.has_stage1_redex());
  CHECK(g.has_limit_under_temporal());
}

TEST_CASE("contains_subformula and collect_atoms") {
  Formula f = f_until(f_atom("x"), f_gf(f_and(f_atom("y"), f_neg_atom("x"))));
  CHECK(contains_subformula(f, f_atom("y")));
  CHECK(contains_subformula(f, f));
  CHECK(!contains_subformula(f, f_atom("z")));
  CHECK(collect_atoms(f) == std::vector<std::string>{"x", "y"});
}
