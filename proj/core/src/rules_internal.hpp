#pragma once

#include "ltlnorm/formula.hpp"
#include "ltlnorm/rewrite.hpp"

namespace ltlnorm {
namespace detail_rules {

Formula g_of(Formula x);
Kind redex_kind(RuleId rule);
Kind swapped_kind(RuleId rule);
Formula build_rhs(RuleId rule, const Formula& phi, const Formula& orig,
                  const Formula& swapped, const Formula& tru,
                  const Formula& fls, const Formula& psi1, const Formula& psi2);

}  // namespace detail_rules
}  // namespace ltlnorm
