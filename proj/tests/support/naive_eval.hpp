#pragma once

#include <cstddef>

#include "ltlnorm/formula.hpp"
#include "ltlnorm/oracle.hpp"

namespace ltlnorm::testing {

// Independent reference semantics, deliberately kept apart from the
// position-table evaluator it is used to check. Limit operators are first
// expanded into their G F / F G form, then U/W/R/M are unrolled with
// weak/strong defaults at a fuel horizon of |prefix| + 2|loop| + depth on
// the explicitly expanded word.
bool naive_evaluate(const LassoWord& w, const Formula& f);

// Expansion used by the reference: GF x -> false R (true U x),
// FG x -> true U (false R x).
Formula expand_limit_operators(const Formula& f);

std::size_t formula_depth(const Formula& f);

}  // namespace ltlnorm::testing
