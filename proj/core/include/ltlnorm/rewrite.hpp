#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlnorm/context.hpp"
#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// The rule catalog. The first six are the U/W/limit rules, the remaining
// eight extend them to R and M (R handled like W, M like U).
//
//  WU   p1 W p2[a U b]   ==  p1 U p2[a U b]  |  G p1
//  UW   p1[a U b] W p2   ==  (GF b & p1[a W b] W p2) | p1[a U b] U (p2 | G p1[false])
//  GF1  p[GF a]          ==  (GF a & p[true]) | p[false]
//  FG1  p[FG a]          ==  (FG a & p[true]) | p[false]
//  GF2  GF p[a W b]      ==  GF p[a U b] | (FG a & GF p[true])
//  FG2  FG p[a U b]      ==  (GF b & FG p[a W b]) | FG p[false]
//  MW   p1[a M b] W p2   ==  (GF a & p1[a R b] W p2) | p1[a M b] U (p2 | G p1[false])
//  WM   p1 W p2[a M b]   ==  p1 U p2[a M b]  |  G p1
//  UR   p1[a U b] R p2   ==  p1[a U b] M p2  |  G p2
//  MR   p1[a M b] R p2   ==  p1[a M b] M p2  |  G p2
//  RU   p1 R p2[a U b]   ==  (GF b & p1 R p2[a W b]) | (p1 | G p2[false]) M p2[a U b]
//  RM   p1 R p2[a M b]   ==  (GF a & p1 R p2[a R b]) | (p1 | G p2[false]) M p2[a M b]
//  GFR  GF p[a R b]      ==  GF p[a M b] | (FG b & GF p[true])
//  FGM  FG p[a M b]      ==  (GF a & FG p[a R b]) | FG p[false]
//
// G x is built as x W false, the shape the stage-1 procedure produces.
enum class RuleId : std::uint8_t {
  WU, UW, GF1, FG1, GF2, FG2, MW, WM, UR, MR, RU, RM, GFR, FGM,
};
inline constexpr int kRuleCount = 14;
const char* rule_name(RuleId r);

// Builds the rule's right-hand side literally (no simplification).
// Calling convention: exactly one context, and parts as follows.
//   WU/WM/UR/MR/UW/MW/RU/RM: parts = {other phi slot, psi1, psi2}
//   GF1/FG1:                 parts = {psi}
//   GF2/FG2/GFR/FGM:         parts = {psi1, psi2}
// Throws ShapeError when the arity is wrong, a part carries a placeholder,
// or the context has no hole.
Formula apply_rule(RuleId rule, const std::vector<Context>& ctxs,
                   const std::vector<Formula>& parts);

// The matching left-hand side, for round-trip testing of rule instances.
Formula rule_lhs(RuleId rule, const std::vector<Context>& ctxs,
                 const std::vector<Formula>& parts);

// Eager simplifier: constant propagation through every operator that the
// rewrite rules emit constants into, limit-operator collapses, idempotence,
// and re-fusion of G-F / F-G adjacencies uncovered by constant folding.
// Equivalence-preserving, idempotent, never increases the node count.
Formula simplify(const Formula& f);

namespace detail {
// simplify with a caller-owned memo table, shared across one normalization
// run so repeated eager passes stay linear in new nodes.
Formula simplify_memo(const Formula& f, FormulaIdMap<Formula>& memo);
}  // namespace detail

// One rewrite-rule application. `redex` is the matched subformula before any
// simplification; `result_nodes` is the node count of the subformula that
// replaced it (after eager simplification, before deeper rewrites).
struct RewriteStep {
  int stage;
  RuleId rule;
  Formula redex;
  std::uint64_t result_nodes;

  std::string redex_text() const;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct NormalizeOptions {
  bool dual = false;
  bool broad_replacement = false;
  bool simplify = true;
  int stage_limit = 3;
};

// The three stages. Each expects its precondition (stage2 wants stage-1 form,
// stage3 wants stage-2 form), appends its rule applications to `trace`, and
// returns an equivalent formula in the next staged form.
Formula stage1(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace);
Formula stage2(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace);
Formula stage3(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace);

struct NormalizeResult {
  Formula formula;
  RewriteTrace trace;
  std::optional<Formula> after_stage1;
  std::optional<Formula> after_stage2;
  std::array<std::chrono::nanoseconds, 3> stage_times{};
};

// Runs stage1 -> stage2 -> stage3 (truncated at opts.stage_limit; opts.dual
// routes through the dual form). Size bounds, staged-form postconditions and
// termination metrics are checked on every run; a violation throws
// InvariantError. A cooperative deadline, when given, aborts the run with
// TimeoutError at the next rule application.
NormalizeResult normalize(
    const Formula& f, const NormalizeOptions& opts = {},
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

// Dual normal form: no W-node under a U-node, conditions 2-3 unchanged.
// Computed as negate_nnf(normalize(negate_nnf(f))).
Formula normalize_dual(const Formula& f, const NormalizeOptions& opts = {});

}  // namespace ltlnorm
