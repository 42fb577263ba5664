#pragma once

#include <cstdint>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// The left-spine alternation family: (..(((a0 U a1) W a2) U a3)..) U an for
// n >= 2; exactly 2n+1 nodes. Throws Error for n < 2.
Formula family_wu_star(unsigned n);

// The nested alternation family: f0 = a0, f_{k+1} = (f_k U a_{2k+1}) W
// a_{2k+2}; exactly 4n+1 nodes. (Atoms are numbered consecutively, two fresh
// ones per level.)
Formula family_wu_nested(unsigned n);

struct RandomSpec {
  std::uint64_t seed = 1;
  std::uint64_t target_size = 25;
  unsigned atom_count = 4;
  // Operator weights; non-negative, not all zero. Limit operators default to
  // zero so plain LTL comes out unless asked for.
  struct Weights {
    double and_op = 1, or_op = 1, next = 1, until = 1, weak_until = 1,
           release = 1, strong_release = 1, gf = 0, fg = 0;
  } weights;
};

// Seed-deterministic random NNF formula with node count within 20% of
// target_size (exact whenever the weights allow the budget to be split).
// Leaves are atoms, negated with probability 1/4; a target of 1 yields a
// positive atom.
Formula random_formula(const RandomSpec& spec);

}  // namespace ltlnorm
