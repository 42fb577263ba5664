#include <doctest.h>

#include "gen_support.hpp"
#include "ltlnorm/generators.hpp"
#include "ltlnorm/hierarchy.hpp"
#include "ltlnorm/measures.hpp"
#include "ltlnorm/normal_form.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"
#include "ltlnorm/rewrite.hpp"

using namespace ltlnorm;

namespace {

NormalizeOptions raw_opts() {
  NormalizeOptions o;
  o.simplify = false;
  return o;
}

}  // namespace

TEST_CASE("stage 1 on the alternation core, literal rule output") {
  RewriteTrace tr;
  Formula out = stage1(parse("(a0 U a1) W a2"), raw_opts(), tr);
  // (GF a1 & (a0 W a1) W a2) | ((a0 U a1) U (a2 | false W false))
  Formula expect =
      f_or(f_and(f_gf(f_atom("a1")), parse("(a0 W a1) W a2")),
           f_until(parse("a0 U a1"),
                   f_or(f_atom("a2"), f_weak_until(f_false(), f_false()))));
  CHECK(out == expect);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].rule == RuleId::UW);
  CHECK(tr.steps[0].stage == 1);
  CHECK(tr.steps[0].redex_text() == "(a0 U a1) W a2");
}

TEST_CASE("stage 1 leaves settled formulas alone") {
  NormalizeOptions opts;
  RewriteTrace tr;
  CHECK(stage1(parse("a W b"), opts, tr) == parse("a W b"));
  Formula shielded = parse("a W (G F (b U c))");
  CHECK(stage1(shielded, opts, tr) == shielded);
  CHECK(count_ubw(shielded) == 0);
  CHECK(tr.steps.empty());
  CHECK(bounded_equiv(shielded, stage1(shielded, opts, tr), 2, 2).equivalent);
}

TEST_CASE("stage 1 output is always in the first staged form") {
  testing::Rng rng(71);
  NormalizeOptions opts;
  for (int i = 0; i < 250; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(18), 2);
    RewriteTrace tr;
    Formula out = stage1(f, opts, tr);
    CAPTURE(render(f));
    CHECK(is_stage_form(out, 1));
    CHECK(bounded_equiv(f, out, 2, 2).equivalent);
  }
}

TEST_CASE("stage 2 literal and simplified forms") {
  SUBCASE("X (FG a), literal rule (4) shape") {
    RewriteTrace tr;
    Formula out = stage2(parse("X F G a"), raw_opts(), tr);
    CHECK(out == f_or(f_and(f_fg(f_atom("a")), f_next(f_true())),
                      f_next(f_false())));
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].rule == RuleId::FG1);
  }
  SUBCASE("(GF b) U d simplifies to (GF b & F d) | d") {
    NormalizeOptions opts;
    RewriteTrace tr;
    Formula in = parse("(G F b) U d");
    Formula out = stage2(in, opts, tr);
    // false U d folds to d (k = 0 is the only candidate position)
    CHECK(out == f_or(f_and(f_gf(f_atom("b")), f_eventually(f_atom("d"))),
                      f_atom("d")));
    CHECK(bounded_equiv(in, out, 3, 3).equivalent);
    // the variant without the bare-d disjunct is NOT equivalent
    CHECK(!bounded_equiv(in, f_and(f_gf(f_atom("b")), f_eventually(f_atom("d"))),
                         3, 3)
               .equivalent);
  }
  SUBCASE("no limit under a temporal node: unchanged") {
    NormalizeOptions opts;
    RewriteTrace tr;
    Formula f = parse("G F a & b");
    CHECK(stage2(f, opts, tr) == f);
    CHECK(tr.steps.empty());
  }
}

TEST_CASE("stage 2 output is in the second staged form") {
  testing::Rng rng(73);
  NormalizeOptions opts;
  for (int i = 0; i < 200; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(16), 2);
    RewriteTrace tr;
    Formula s1 = stage1(f, opts, tr);
    Formula s2 = stage2(s1, opts, tr);
    CAPTURE(render(f));
    CHECK(is_stage_form(s2, 2));
    CHECK(bounded_equiv(f, s2, 2, 2).equivalent);
  }
}

TEST_CASE("stage 3 pulls W out of GF") {
  NormalizeOptions opts;
  RewriteTrace tr;
  SUBCASE("literal") {
    Formula out = stage3(parse("G F (a W b)"), raw_opts(), tr);
    CHECK(out == f_or(f_gf(parse("a U b")),
                      f_and(f_fg(f_atom("a")), f_gf(f_true()))));
  }
  SUBCASE("simplified") {
    Formula in = parse("G F (a W b)");
    Formula out = stage3(in, opts, tr);
    CHECK(out == f_or(f_gf(parse("a U b")), f_fg(f_atom("a"))));
    CHECK(bounded_equiv(in, out, 3, 3).equivalent);
  }
  SUBCASE("FG over U") {
    Formula in = parse("F G (a U b)");
    Formula out = stage3(in, opts, tr);
    CHECK(out == f_and(f_gf(f_atom("b")), f_fg(parse("a W b"))));
    CHECK(bounded_equiv(in, out, 3, 3).equivalent);
  }
  SUBCASE("no obstacle") {
    Formula f = parse("G F (a U b)");
    CHECK(stage3(f, opts, tr) == f);
  }
}

TEST_CASE("normalize: the alternation family needs exactly two rules") {
  NormalizeOptions opts;
  NormalizeResult r = normalize(parse("((a0 U a1) W a2) U a3"), opts);
  REQUIRE(r.trace.steps.size() == 2);
  CHECK(r.trace.steps[0].rule == RuleId::UW);
  CHECK(r.trace.steps[1].rule == RuleId::GF1);
  CHECK(is_normal_form(r.formula).pass);
  CHECK(bounded_equiv(parse("((a0 U a1) W a2) U a3"), r.formula, 3, 3)
            .equivalent);
  // matches the worked rewrite end to end
  CHECK(render(r.formula) ==
        "G F a1 & ((a0 W a1) W a2 | (a0 U a1) U a2) U a3 | ((a0 U a1) U a2) U "
        "a3");
}

TEST_CASE("normalize: already normal input comes back untouched") {
  NormalizeResult r = normalize(parse("a U b"));
  CHECK(r.formula == parse("a U b"));
  CHECK(r.trace.steps.empty());
}

TEST_CASE("normalize handles R and M natively") {
  testing::Rng rng(79);
  NormalizeOptions opts;
  for (int i = 0; i < 120; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(14), 2);
    NormalizeResult r = normalize(f, opts);
    CAPTURE(render(f));
    CHECK(is_normal_form(r.formula).pass);
    CHECK(bounded_equiv(f, r.formula, 2, 2).equivalent);
    CHECK(is_sigma2_gf_combination(r.formula));
  }
}

TEST_CASE("stage_limit truncates the pipeline") {
  Formula f = parse("((a0 U a1) W a2) U a3");
  NormalizeOptions opts;
  opts.stage_limit = 1;
  NormalizeResult r1 = normalize(f, opts);
  CHECK(is_stage_form(r1.formula, 1));
  CHECK(!is_stage_form(r1.formula, 2));
  opts.stage_limit = 2;
  NormalizeResult r2 = normalize(f, opts);
  CHECK(is_stage_form(r2.formula, 2));
  CHECK(r2.after_stage1.has_value());
  CHECK(*r2.after_stage1 == r1.formula);
}

TEST_CASE("no-simplify runs still reach the normal form") {
  testing::Rng rng(83);
  for (int i = 0; i < 60; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(10), 2);
    NormalizeResult r = normalize(f, raw_opts());
    CAPTURE(render(f));
    CHECK(is_normal_form(r.formula).pass);
    CHECK(bounded_equiv(f, r.formula, 2, 2).equivalent);
  }
}

TEST_CASE("broad replacement keeps the contract") {
  testing::Rng rng(89);
  NormalizeOptions opts;
  opts.broad_replacement = true;
  for (int i = 0; i < 120; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(14), 2);
    NormalizeResult r = normalize(f, opts);
    CAPTURE(render(f));
    CHECK(is_normal_form(r.formula).pass);
    CHECK(bounded_equiv(f, r.formula, 2, 2).equivalent);
  }
}

TEST_CASE("dual normal form") {
  NormalizeOptions opts;
  CHECK(normalize_dual(parse("a W b"), opts) == parse("a W b"));
  CHECK(normalize_dual(parse("G F a"), opts) == parse("G F a"));
  Formula in = parse("a U (b W c)");
  Formula out = normalize_dual(in, opts);
  CHECK(is_dual_normal_form(out).pass);
  CHECK(bounded_equiv(in, out, 3, 3).equivalent);

  testing::Rng rng(97);
  for (int i = 0; i < 80; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(12), 2);
    Formula d = normalize_dual(f, opts);
    CAPTURE(render(f));
    CHECK(is_dual_normal_form(d).pass);
    CHECK(bounded_equiv(f, d, 2, 2).equivalent);
  }
}

TEST_CASE("nested alternation family normalizes and verifies") {
  NormalizeOptions opts;
  for (unsigned n = 0; n <= 4; ++n) {
    Formula f = family_wu_nested(n);
    NormalizeResult r = normalize(f, opts);
    CHECK(is_normal_form(r.formula).pass);
    CHECK(bounded_equiv(f, r.formula, 2, 2,
                        EquivMode::sampled(300, 1234 + n))
              .equivalent);
  }
}
