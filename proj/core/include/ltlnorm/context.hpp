#pragma once

#include <cstdint>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// A formula over Ap plus the reserved placeholder atom, with at least one
// placeholder occurrence. All occurrences are positive by construction: the
// placeholder is a distinct node kind that negate_nnf refuses to touch and
// the parser cannot produce.
struct Context {
  Formula body;
  std::uint64_t hole_count = 0;
};

enum class Scope {
  All,             // every occurrence
  NotUnderLimit,   // only occurrences with no limit node above them
};

// Replaces every occurrence of `target` in `f` (within `scope`) by the
// placeholder. Throws TargetNotFoundError if there is none.
Context abstract_occurrences(const Formula& f, const Formula& target,
                             Scope scope = Scope::All);

// Substitutes g for every placeholder occurrence.
Formula fill(const Context& ctx, const Formula& g);

// fill for a bare formula-with-holes (fill(ctx, g) == substitute(ctx.body, g)).
Formula substitute_holes(const Formula& body, const Formula& g);

}  // namespace ltlnorm
