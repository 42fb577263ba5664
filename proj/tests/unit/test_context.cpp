#include <doctest.h>

#include "gen_support.hpp"
#include "ltlnorm/context.hpp"
#include "ltlnorm/errors.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"

using namespace ltlnorm;

TEST_CASE("abstracting every occurrence") {
  Formula f = parse("(b U c) & X (b U c)");
  Context ctx = abstract_occurrences(f, parse("b U c"), Scope::All);
  CHECK(ctx.hole_count == 2);
  CHECK(ctx.body == f_and(f_hole(), f_next(f_hole())));
}

TEST_CASE("limit-scoped occurrences are kept") {
  Formula f = parse("(b U c) & G F (b U c)");
  Context ctx = abstract_occurrences(f, parse("b U c"), Scope::NotUnderLimit);
  CHECK(ctx.hole_count == 1);
  CHECK(ctx.body == f_and(f_hole(), f_gf(parse("b U c"))));
}

TEST_CASE("missing target") {
  CHECK_THROWS_AS(
      abstract_occurrences(parse("a W b"), parse("c U d"), Scope::All),
      TargetNotFoundError);
}

TEST_CASE("fill substitutes every placeholder") {
  Context ctx{f_weak_until(f_hole(), f_until(f_atom("a"), f_hole())), 2};
  Formula filled = fill(ctx, f_next(f_atom("b")));
  CHECK(filled == parse("(X b) W (a U X b)"));

  CHECK(fill(Context{f_hole(), 1}, parse("a W b")) == parse("a W b"));
  CHECK(fill(Context{f_and(f_hole(), f_next(f_hole())), 2}, f_atom("a")) ==
        parse("a & X a"));
}

TEST_CASE("fill undoes abstraction") {
  testing::Rng rng(5);
  int exercised = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = testing::random_nnf(rng, 1 + rng.below(24), 2);
    // pick a random subformula as the target
    std::vector<Formula> subs;
    struct {
      std::vector<Formula>* out;
      void walk(const Formula& g) {
        out->push_back(g);
        if (is_unary(g.kind())) {
          walk(g.arg());
        } else if (is_binary(g.kind())) {
          walk(g.left());
          walk(g.right());
        }
      }
    } collector{&subs};
    collector.walk(f);
    Formula target = subs[rng.below(subs.size())];
    Context ctx = abstract_occurrences(f, target, Scope::All);
    ++exercised;
    CHECK(fill(ctx, target) == f);
  }
  CHECK(exercised == 300);
}

namespace {

// f entails g on every lasso word within the bounds.
bool bounded_implies(const Formula& f, const Formula& g, unsigned P, unsigned L) {
  std::vector<std::string> atoms = collect_atoms(f);
  for (const auto& a : collect_atoms(g))
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
      atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end());
  Evaluator ev({f, g}, atoms);
  LassoEnumerator en(atoms, P, L);
  while (auto w = en.next()) {
    ev.run(*w);
    if (ev.root_value(0) && !ev.root_value(1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("substitution is monotone in positive contexts") {
  // psi entails psi' (up to the bound) implies ctx[psi] entails ctx[psi']
  testing::Rng rng(29);
  int pairs_found = 0;
  for (int i = 0; i < 400 && pairs_found < 60; ++i) {
    Formula psi = testing::random_nnf(rng, 1 + rng.below(5), 2);
    Formula psi2 = testing::random_nnf(rng, 1 + rng.below(5), 2);
    if (!bounded_implies(psi, psi2, 3, 3)) continue;
    ++pairs_found;
    Context ctx = testing::random_context(rng, 1 + rng.below(8), 2, 1 + rng.below(2));
    Formula a = fill(ctx, psi);
    Formula b = fill(ctx, psi2);
    CAPTURE(render(ctx.body));
    CAPTURE(render(psi));
    CAPTURE(render(psi2));
    CHECK(bounded_implies(a, b, 3, 3));
  }
  CHECK(pairs_found >= 60);
}

TEST_CASE("replacement preserves per-word equivalence") {
  // psi and psi' equivalent on a word class implies ctx[psi], ctx[psi']
  // agree there too; with full bounded equivalence as the word class
  testing::Rng rng(31);
  int pairs = 0;
  for (int i = 0; i < 300 && pairs < 40; ++i) {
    Formula psi = testing::random_nnf(rng, 1 + rng.below(5), 2);
    Formula psi2 = testing::random_nnf(rng, 1 + rng.below(5), 2);
    if (!bounded_equiv(psi, psi2, 2, 2).equivalent) continue;
    ++pairs;
    Context ctx = testing::random_context(rng, 1 + rng.below(8), 2, 1 + rng.below(2));
    CHECK(bounded_equiv(fill(ctx, psi), fill(ctx, psi2), 2, 2).equivalent);
  }
  CHECK(pairs >= 40);
}
