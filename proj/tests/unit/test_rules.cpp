#include <doctest.h>

#include "gen_support.hpp"
#include "ltlnorm/context.hpp"
#include "ltlnorm/errors.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"
#include "ltlnorm/rewrite.hpp"

using namespace ltlnorm;

namespace {

Context ctx_of(const Formula& body) {
  struct {
    std::uint64_t n = 0;
    void walk(const Formula& g) {
      if (g.kind() == Kind::Hole) ++n;
      if (is_unary(g.kind())) {
        walk(g.arg());
      } else if (is_binary(g.kind())) {
        walk(g.left());
        walk(g.right());
      }
    }
  } c;
  c.walk(body);
  return Context{body, c.n};
}

}  // namespace

TEST_CASE("rule right-hand sides are built literally") {
  // a W (b U c)  ->  (a U (b U c)) | G a,  with G a spelled a W false
  Formula rhs = apply_rule(RuleId::WU, {ctx_of(f_hole())},
                           {f_atom("a"), f_atom("b"), f_atom("c")});
  CHECK(rhs == f_or(f_until(f_atom("a"), parse("b U c")),
                    f_weak_until(f_atom("a"), f_false())));

  // (GF b) U d -> (GF b & (true U d)) | (false U d)
  Formula rhs3 = apply_rule(RuleId::GF1, {ctx_of(f_until(f_hole(), f_atom("d")))},
                            {f_atom("b")});
  CHECK(rhs3 == f_or(f_and(f_gf(f_atom("b")), f_until(f_true(), f_atom("d"))),
                     f_until(f_false(), f_atom("d"))));

  // GF(a W b) -> GF(a U b) | (FG a & GF true)
  Formula rhs5 =
      apply_rule(RuleId::GF2, {ctx_of(f_hole())}, {f_atom("a"), f_atom("b")});
  CHECK(rhs5 == f_or(f_gf(parse("a U b")),
                     f_and(f_fg(f_atom("a")), f_gf(f_true()))));
}

TEST_CASE("left-hand sides match the rule shapes") {
  CHECK(rule_lhs(RuleId::WU, {ctx_of(f_hole())},
                 {f_atom("a"), f_atom("b"), f_atom("c")}) ==
        parse("a W (b U c)"));
  CHECK(rule_lhs(RuleId::GF2, {ctx_of(f_hole())}, {f_atom("a"), f_atom("b")}) ==
        parse("G F (a W b)"));
  CHECK(rule_lhs(RuleId::UR, {ctx_of(f_next(f_hole()))},
                 {f_atom("p"), f_atom("a"), f_atom("b")}) ==
        parse("(X (a U b)) R p"));
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_AS(apply_rule(RuleId::WU, {}, {f_atom("a")}), ShapeError);
  CHECK_THROWS_AS(
      apply_rule(RuleId::WU, {ctx_of(f_hole())}, {f_atom("a"), f_atom("b")}),
      ShapeError);
  CHECK_THROWS_AS(
      apply_rule(RuleId::GF1, {ctx_of(f_atom("x"))}, {f_atom("a")}),
      ShapeError);  // context without a hole
  CHECK_THROWS_AS(
      apply_rule(RuleId::GF1, {ctx_of(f_hole())}, {f_hole()}),
      ShapeError);  // parts must be placeholder-free
}

TEST_CASE("every rule is sound on random instantiations") {
  // acceptance runs the full load; this is the per-rule smoke version
  for (int r = 0; r < kRuleCount; ++r) {
    RuleId rule = static_cast<RuleId>(r);
    testing::Rng rng(1000 + r);
    for (int i = 0; i < 25; ++i) {
      testing::RuleInstance inst =
          testing::instantiate_rule(rule, rng, 5, 2, 1 + rng.below(2));
      EquivVerdict v = bounded_equiv(inst.lhs, inst.rhs, 2, 2);
      CAPTURE(rule_name(rule));
      CAPTURE(render(inst.lhs));
      CAPTURE(render(inst.rhs));
      if (!v.equivalent) CAPTURE(v.witness->to_string());
      REQUIRE(v.equivalent);
    }
  }
}

TEST_CASE("the W-expansion behind rule WU holds") {
  CHECK(bounded_equiv(parse("a W b"), parse("(a U b) | G a"), 3, 3).equivalent);
}
