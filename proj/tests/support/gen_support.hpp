#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ltlnorm/context.hpp"
#include "ltlnorm/formula.hpp"
#include "ltlnorm/rewrite.hpp"

namespace ltlnorm::testing {

// Deterministic helpers for property-style tests.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? eng() % n : 0; }
  bool coin() { return eng() & 1; }
};

// Random NNF formula over `atoms` atoms with roughly `size` nodes; limit
// operators included with small weight.
Formula random_nnf(Rng& rng, std::uint64_t size, unsigned atoms,
                   bool with_limits = true);

// Random context: a random formula with `holes` positive placeholder
// occurrences spliced in at random positions.
Context random_context(Rng& rng, std::uint64_t size, unsigned atoms,
                       unsigned holes);

// Random instantiation of a rule's slots: the context plus the parts in the
// apply_rule calling convention.
struct RuleInstance {
  std::vector<Context> ctxs;
  std::vector<Formula> parts;
  Formula lhs;
  Formula rhs;
};
RuleInstance instantiate_rule(RuleId rule, Rng& rng, std::uint64_t slot_size,
                              unsigned atoms, unsigned holes);

}  // namespace ltlnorm::testing
