#include "ltlnorm/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "ltlnorm/errors.hpp"

namespace ltlnorm {

namespace {

Formula numbered_atom(unsigned i) { return f_atom("a" + std::to_string(i)); }

}  // namespace

Formula family_wu_star(unsigned n) {
  if (n < 2) throw Error("family_wu_star needs n >= 2");
  Formula f = f_weak_until(f_until(numbered_atom(0), numbered_atom(1)),
                           numbered_atom(2));
  for (unsigned i = 3; i <= n; ++i) f = f_until(f, numbered_atom(i));
  return f;
}

Formula family_wu_nested(unsigned n) {
  Formula f = numbered_atom(0);
  for (unsigned k = 0; k < n; ++k)
    f = f_weak_until(f_until(f, numbered_atom(2 * k + 1)),
                     numbered_atom(2 * k + 2));
  return f;
}

namespace {

struct Gen {
  std::mt19937_64 rng;
  const RandomSpec& spec;

  std::uint64_t below(std::uint64_t n) { return n ? rng() % n : 0; }

  Formula leaf() {
    Formula a = numbered_atom(
        static_cast<unsigned>(below(spec.atom_count ? spec.atom_count : 1)));
    if (below(4) == 0) return f_neg_atom(a.name());
    return a;
  }

  Formula gen(std::uint64_t budget) {
    const auto& w = spec.weights;
    const double unary_w = w.next + w.gf + w.fg;
    const double binary_w = w.and_op + w.or_op + w.until + w.weak_until +
                            w.release + w.strong_release;
    if (budget <= 1) return leaf();
    if (budget == 2 || binary_w <= 0) {
      if (unary_w <= 0) return leaf();
      return unary(budget - 1);
    }
    // weight-proportional pick over all operators
    double total = unary_w + binary_w;
    double r = (double)(rng() >> 11) / 9007199254740992.0 * total;
    if (r < unary_w) return unary(budget - 1);
    r -= unary_w;
    std::uint64_t lbudget = 1 + below(budget - 2);
    Formula l = gen(lbudget);
    Formula rr = gen(budget - 1 - lbudget);
    const std::pair<double, Kind> choices[] = {
        {w.and_op, Kind::And},         {w.or_op, Kind::Or},
        {w.until, Kind::Until},        {w.weak_until, Kind::WeakUntil},
        {w.release, Kind::Release},    {w.strong_release, Kind::StrongRelease}};
    for (auto [wt, kind] : choices) {
      if (r < wt) return make_binary(kind, l, rr);
      r -= wt;
    }
    return make_binary(Kind::StrongRelease, l, rr);
  }

  Formula unary(std::uint64_t childBudget) {
    const auto& w = spec.weights;
    double total = w.next + w.gf + w.fg;
    Formula c = gen(childBudget);
    double r = (double)(rng() >> 11) / 9007199254740992.0 * total;
    if (r < w.next) return f_next(c);
    r -= w.next;
    if (r < w.gf) return f_gf(c);
    return f_fg(c);
  }
};

}  // namespace

Formula random_formula(const RandomSpec& spec) {
  const auto& w = spec.weights;
  double total = w.and_op + w.or_op + w.next + w.until + w.weak_until +
                 w.release + w.strong_release + w.gf + w.fg;
  if (!(total > 0) || w.and_op < 0 || w.or_op < 0 || w.next < 0 ||
      w.until < 0 || w.weak_until < 0 || w.release < 0 ||
      w.strong_release < 0 || w.gf < 0 || w.fg < 0)
    throw Error("operator weights must be nonnegative and not all zero");
  if (spec.target_size < 1) throw Error("target_size must be at least 1");
  if (spec.target_size == 1)
    return numbered_atom(0);  // single-node request: a plain atom
  Gen g{std::mt19937_64(spec.seed), spec};
  return g.gen(spec.target_size);
}

}  // namespace ltlnorm
