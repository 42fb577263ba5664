#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "ltlnorm/errors.hpp"
#include "ltlnorm/measures.hpp"
#include "ltlnorm/normal_form.hpp"
#include "ltlnorm/printer.hpp"
#include "ltlnorm/rewrite.hpp"
#include "rules_internal.hpp"

namespace ltlnorm {

namespace {

using detail_rules::g_of;

constexpr std::uint64_t kStepBudget = 2'000'000;

// ---------------------------------------------------------------------------
// helpers

struct FormulaStructHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct FormulaStructEq {
  bool operator()(const Formula& a, const Formula& b) const { return a == b; }
};
using FormulaSet =
    std::unordered_set<Formula, FormulaStructHash, FormulaStructEq>;

// value <= base^exponent * multiplier, without overflowing.
bool within_pow(std::uint64_t value, std::uint64_t base, std::uint64_t exponent,
                std::uint64_t multiplier) {
  // value is a real node count, so value < 2^63; base >= 3.
  if (exponent >= 40) return true;
  unsigned __int128 bound = multiplier ? multiplier : 1;
  const unsigned __int128 cap = (unsigned __int128)1 << 100;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    bound *= base;
    if (bound > cap) return true;
  }
  return (unsigned __int128)value <= bound;
}

std::uint64_t count_limit_occurrences(const Formula& f,
                                      std::map<const void*, std::uint64_t>& memo) {
  if (!f.has_limit()) return 0;
  auto it = memo.find(f.id());
  if (it != memo.end()) return it->second;
  std::uint64_t n = is_limit(f.kind()) ? 1 : 0;
  if (is_unary(f.kind())) {
    n += count_limit_occurrences(f.arg(), memo);
  } else if (is_binary(f.kind())) {
    n += count_limit_occurrences(f.left(), memo);
    n += count_limit_occurrences(f.right(), memo);
  }
  memo.emplace(f.id(), n);
  return n;
}

std::uint64_t count_limit_occurrences(const Formula& f) {
  std::map<const void*, std::uint64_t> memo;
  return count_limit_occurrences(f, memo);
}

// ---------------------------------------------------------------------------
// redex selection

// Distinct U/M- (or W/R-) subformulas with at least one occurrence not under
// a limit node, in preorder first-occurrence order.
void collect_candidates(const Formula& f, bool want_wr, bool skip_limits,
                        std::set<const void*>& visited, FormulaSet& seen,
                        std::vector<Formula>& out) {
  if (skip_limits && is_limit(f.kind())) return;
  if (!visited.insert(f.id()).second) return;
  bool match = want_wr ? is_w_or_r(f.kind()) : is_u_or_m(f.kind());
  if (match && seen.insert(f).second) out.push_back(f);
  if (is_unary(f.kind())) {
    collect_candidates(f.arg(), want_wr, skip_limits, visited, seen, out);
  } else if (is_binary(f.kind())) {
    collect_candidates(f.left(), want_wr, skip_limits, visited, seen, out);
    collect_candidates(f.right(), want_wr, skip_limits, visited, seen, out);
  }
}

// Maximal candidate in the subformula order; leftmost-outermost first
// preorder occurrence breaks ties between incomparable maxima.
Formula select_maximal(const Formula& f, bool want_wr, bool skip_limits) {
  std::set<const void*> visited;
  FormulaSet seen;
  std::vector<Formula> cands;
  collect_candidates(f, want_wr, skip_limits, visited, seen, cands);
  if (cands.empty()) throw InvariantError("no redex candidate found");
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].node_count() > cands[b].node_count();
  });
  std::vector<std::size_t> maximal;
  for (std::size_t idx : order) {
    bool covered = false;
    for (std::size_t m : maximal) {
      if (contains_subformula(cands[m], cands[idx])) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(idx);
  }
  return cands[*std::min_element(maximal.begin(), maximal.end())];
}

void collect_limit_candidates(const Formula& f, bool under_temporal,
                              std::set<std::pair<const void*, bool>>& visited,
                              FormulaSet& seen, std::vector<Formula>& out) {
  if (!visited.insert({f.id(), under_temporal}).second) return;
  if (under_temporal && is_limit(f.kind()) && seen.insert(f).second)
    out.push_back(f);
  bool t = under_temporal || is_temporal(f.kind());
  if (is_unary(f.kind())) {
    collect_limit_candidates(f.arg(), t, visited, seen, out);
  } else if (is_binary(f.kind())) {
    collect_limit_candidates(f.left(), t, visited, seen, out);
    collect_limit_candidates(f.right(), t, visited, seen, out);
  }
}

// The lowest limit subformula under a temporal node: minimal in the
// subformula order, leftmost on ties.
Formula select_minimal_limit(const Formula& f) {
  std::set<std::pair<const void*, bool>> visited;
  FormulaSet seen;
  std::vector<Formula> cands;
  collect_limit_candidates(f, false, visited, seen, cands);
  if (cands.empty()) throw InvariantError("no limit redex found");
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].node_count() < cands[b].node_count();
  });
  std::vector<std::size_t> minimal;
  for (std::size_t idx : order) {
    bool covers = false;
    for (std::size_t m : minimal) {
      if (contains_subformula(cands[idx], cands[m])) {
        covers = true;
        break;
      }
    }
    if (!covers) minimal.push_back(idx);
  }
  return cands[*std::min_element(minimal.begin(), minimal.end())];
}

// ---------------------------------------------------------------------------
// occurrence replacement (narrow = one redex formula, broad = every node
// sharing the anchor side, per the optimization remark)

struct Replacer {
  Kind match_kind;
  bool anchor_left;   // which side must equal the anchor under broad matching
  Formula anchor;     // psi1 (left) or psi2 (right)
  Formula redex;      // the selected redex, for narrow matching
  bool broad = false;
  bool skip_limits = false;

  bool matches(const Formula& f) const {
    if (f.kind() != match_kind) return false;
    if (!broad) return f == redex;
    return anchor_left ? f.left() == anchor : f.right() == anchor;
  }
};

enum class ReplMode { Swapped, Constant };

Formula replace_rec(const Formula& f, const Replacer& r, ReplMode mode,
                    Kind swapped, const Formula& constant, bool under_limit,
                    std::map<std::pair<const void*, bool>, Formula>& memo) {
  if (r.skip_limits && is_limit(f.kind())) return f;
  bool scope_ok = !r.skip_limits || !under_limit;
  if (scope_ok && r.matches(f)) {
    if (mode == ReplMode::Constant) return constant;
    return make_binary(swapped, f.left(), f.right());
  }
  if (is_leaf(f.kind())) return f;
  auto key = std::make_pair(f.id(), under_limit);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Formula out;
  bool ul = under_limit || is_limit(f.kind());
  if (is_unary(f.kind())) {
    Formula a = replace_rec(f.arg(), r, mode, swapped, constant, ul, memo);
    out = a.id() == f.arg().id() ? f : make_unary(f.kind(), a);
  } else {
    Formula l = replace_rec(f.left(), r, mode, swapped, constant, ul, memo);
    Formula rr = replace_rec(f.right(), r, mode, swapped, constant, ul, memo);
    out = (l.id() == f.left().id() && rr.id() == f.right().id())
              ? f
              : make_binary(f.kind(), l, rr);
  }
  memo.emplace(key, out);
  return out;
}

Formula replace_occurrences(const Formula& f, const Replacer& r, ReplMode mode,
                            Kind swapped_kind_, const Formula& constant) {
  std::map<std::pair<const void*, bool>, Formula> memo;
  return replace_rec(f, r, mode, swapped_kind_, constant, false, memo);
}

// ---------------------------------------------------------------------------
// the normalizer

struct Normalizer {
  const NormalizeOptions& opts;
  RewriteTrace& trace;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t steps = 0;

  FormulaIdMap<Formula> simp_memo;
  FormulaIdMap<Formula> s1_memo;
  FormulaIdMap<Formula> gf_memo, fg_memo;

  Formula simp(const Formula& f) {
    return opts.simplify ? detail::simplify_memo(f, simp_memo) : f;
  }

  void record(int stage, RuleId rule, const Formula& redex,
              const Formula& local_result) {
    if (++steps > kStepBudget)
      throw InvariantError("rewrite step budget exhausted");
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw TimeoutError("normalization deadline exceeded");
    trace.steps.push_back(
        RewriteStep{stage, rule, redex, local_result.node_count()});
  }

  void require(bool ok, const char* what) {
    if (!ok) throw InvariantError(std::string("invariant violated: ") + what);
  }

  void check_rank_decrease(const Formula& redex,
                           std::initializer_list<Formula> pieces) {
    if (opts.broad_replacement) return;  // guarded by the step budget instead
    std::uint64_t r = rank(redex);
    for (const Formula& p : pieces)
      require(rank(p) < r, "stage-1 rank must decrease");
  }

  // ---- stage 1 ----------------------------------------------------------

  Formula stage1(const Formula& f) {
    if (!f.has_stage1_redex()) return f;
    auto it = s1_memo.find(f);
    if (it != s1_memo.end()) return it->second;
    Formula out;
    switch (f.kind()) {
      case Kind::And:
      case Kind::Or:
      case Kind::Until:
      case Kind::StrongRelease:
        out = simp(make_binary(f.kind(), stage1(f.left()), stage1(f.right())));
        break;
      case Kind::Next:
        out = simp(make_unary(f.kind(), stage1(f.arg())));
        break;
      case Kind::WeakUntil:
        out = stage1_weak(f);
        break;
      case Kind::Release:
        out = stage1_release(f);
        break;
      default:
        // leaves and limit nodes have no stage-1 redex
        out = f;
        break;
    }
    s1_memo.emplace(f, out);
    return out;
  }

  // phi = phi1 W phi2 with ubw > 0. Case order per the stage-1 procedure:
  // U/M-nodes in phi2 first (rules WU/WM), then in phi1 (rules UW/MW).
  Formula stage1_weak(const Formula& f) {
    const Formula& phi1 = f.left();
    const Formula& phi2 = f.right();
    if (phi2.has_u_or_m_outside_limit()) {
      Formula witness = select_maximal(phi2, /*want_wr=*/false, true);
      RuleId rule =
          witness.kind() == Kind::Until ? RuleId::WU : RuleId::WM;
      Formula rhs = f_or(f_until(phi1, phi2), g_of(phi1));
      check_rank_decrease(f, {phi1, phi2, g_of(phi1)});
      Formula rhs_s = simp(rhs);
      record(1, rule, f, rhs_s);
      return stage1(rhs_s);
    }
    // phi1 holds the offending U/M-node
    Formula witness = select_maximal(phi1, /*want_wr=*/false, true);
    bool is_u = witness.kind() == Kind::Until;
    RuleId rule = is_u ? RuleId::UW : RuleId::MW;
    Replacer rep{witness.kind(), /*anchor_left=*/!is_u,
                 is_u ? witness.right() : witness.left(), witness,
                 opts.broad_replacement, /*skip_limits=*/true};
    Kind swapped = is_u ? Kind::WeakUntil : Kind::Release;
    Formula weakened =
        replace_occurrences(phi1, rep, ReplMode::Swapped, swapped, Formula());
    Formula falsed =
        replace_occurrences(phi1, rep, ReplMode::Constant, swapped, f_false());
    Formula rho1 = f_weak_until(weakened, phi2);
    Formula rho3 = f_or(phi2, g_of(falsed));
    Formula gf_side = f_gf(is_u ? witness.right() : witness.left());
    Formula rhs = f_or(f_and(gf_side, rho1), f_until(phi1, rho3));
    check_rank_decrease(f, {rho1, phi1, rho3});
    Formula rhs_s = simp(rhs);
    record(1, rule, f, rhs_s);
    return stage1(rhs_s);
  }

  // phi = phi1 R phi2 with ubw > 0, handled like W with the slots mirrored:
  // U/M-nodes in phi1 first (rules UR/MR), then in phi2 (rules RU/RM).
  Formula stage1_release(const Formula& f) {
    const Formula& phi1 = f.left();
    const Formula& phi2 = f.right();
    if (phi1.has_u_or_m_outside_limit()) {
      Formula witness = select_maximal(phi1, false, true);
      RuleId rule =
          witness.kind() == Kind::Until ? RuleId::UR : RuleId::MR;
      Formula rhs = f_or(f_strong_release(phi1, phi2), g_of(phi2));
      check_rank_decrease(f, {phi1, phi2, g_of(phi2)});
      Formula rhs_s = simp(rhs);
      record(1, rule, f, rhs_s);
      return stage1(rhs_s);
    }
    Formula witness = select_maximal(phi2, false, true);
    bool is_u = witness.kind() == Kind::Until;
    RuleId rule = is_u ? RuleId::RU : RuleId::RM;
    Replacer rep{witness.kind(), !is_u,
                 is_u ? witness.right() : witness.left(), witness,
                 opts.broad_replacement, true};
    Kind swapped = is_u ? Kind::WeakUntil : Kind::Release;
    Formula weakened =
        replace_occurrences(phi2, rep, ReplMode::Swapped, swapped, Formula());
    Formula falsed =
        replace_occurrences(phi2, rep, ReplMode::Constant, swapped, f_false());
    Formula rho1 = f_release(phi1, weakened);
    Formula rho2 = f_or(phi1, g_of(falsed));
    Formula gf_side = f_gf(is_u ? witness.right() : witness.left());
    Formula rhs = f_or(f_and(gf_side, rho1), f_strong_release(rho2, phi2));
    check_rank_decrease(f, {rho1, rho2, phi2});
    Formula rhs_s = simp(rhs);
    record(1, rule, f, rhs_s);
    return stage1(rhs_s);
  }

  // ---- stage 2 ----------------------------------------------------------

  Formula stage2(const Formula& f) {
    if (!f.has_limit_under_temporal()) return f;
    Formula psi = select_minimal_limit(f);
    Context ctx = abstract_occurrences(f, psi, Scope::All);
    Formula tru = fill(ctx, f_true());
    Formula fls = fill(ctx, f_false());
    RuleId rule = psi.kind() == Kind::LimitGF ? RuleId::GF1 : RuleId::FG1;
    if (!opts.broad_replacement) {
      std::uint64_t before = count_limit_occurrences(f);
      require(count_limit_occurrences(tru) < before &&
                  count_limit_occurrences(fls) < before,
              "stage-2 limit occurrence count must decrease");
    }
    Formula rhs_s = simp(f_or(f_and(psi, tru), fls));
    record(2, rule, f, rhs_s);
    Formula out =
        simp(f_or(f_and(psi, stage2(simp(tru))), stage2(simp(fls))));
    return out;
  }

  // ---- stage 3 ----------------------------------------------------------

  Formula stage3(const Formula& f) {
    switch (f.kind()) {
      case Kind::And:
      case Kind::Or:
        return simp(make_binary(f.kind(), stage3(f.left()), stage3(f.right())));
      case Kind::LimitGF:
        return norm_limit(f.arg(), /*gf=*/true);
      case Kind::LimitFG:
        return norm_limit(f.arg(), /*gf=*/false);
      default:
        // in stage-2 form everything else is limit-free with ubw = 0
        return f;
    }
  }

  // Normalizes GF arg / FG arg for a limit-free argument; recursion per the
  // obstacle argument. Result size is asserted against the per-limit-formula
  // bound 3^#(arg) * #(arg).
  Formula norm_limit(const Formula& arg, bool gf) {
    auto& memo = gf ? gf_memo : fg_memo;
    auto it = memo.find(arg);
    if (it != memo.end()) return it->second;
    Formula out = gf ? norm_gf_raw(arg) : norm_fg_raw(arg);
    require(within_pow(out.node_count(), 3, arg.node_count(), arg.node_count()),
            "stage-3 per-limit-formula size bound");
    memo.emplace(arg, out);
    return out;
  }

  Formula norm_gf_raw(const Formula& arg) {
    if (!arg.has_w_or_r()) return simp(f_gf(arg));
    Formula witness = select_maximal(arg, /*want_wr=*/true, false);
    bool is_w = witness.kind() == Kind::WeakUntil;
    RuleId rule = is_w ? RuleId::GF2 : RuleId::GFR;
    Replacer rep{witness.kind(), /*anchor_left=*/is_w,
                 is_w ? witness.left() : witness.right(), witness,
                 opts.broad_replacement, /*skip_limits=*/false};
    Kind swapped = is_w ? Kind::Until : Kind::StrongRelease;
    Formula strengthened =
        replace_occurrences(arg, rep, ReplMode::Swapped, swapped, Formula());
    Formula trued =
        replace_occurrences(arg, rep, ReplMode::Constant, swapped, f_true());
    Formula fg_side = is_w ? witness.left() : witness.right();
    if (!opts.broad_replacement) {
      std::uint64_t before = count_gf_obstacles(arg);
      require(count_gf_obstacles(strengthened) < before &&
                  count_fg_obstacles(fg_side) < before &&
                  count_gf_obstacles(trued) < before,
              "stage-3 obstacle count must decrease (GF)");
    }
    Formula redex = f_gf(arg);
    Formula rhs = f_or(f_gf(strengthened), f_and(f_fg(fg_side), f_gf(trued)));
    Formula rhs_s = simp(rhs);
    record(3, rule, redex, rhs_s);
    Formula out = simp(f_or(norm_limit(simp_arg(strengthened), true),
                            f_and(norm_limit(simp_arg(fg_side), false),
                                  norm_limit(simp_arg(trued), true))));
    return out;
  }

  Formula norm_fg_raw(const Formula& arg) {
    if (!arg.has_u_or_m()) return simp(f_fg(arg));
    Formula witness = select_maximal(arg, /*want_wr=*/false, false);
    bool is_u = witness.kind() == Kind::Until;
    RuleId rule = is_u ? RuleId::FG2 : RuleId::FGM;
    Replacer rep{witness.kind(), /*anchor_left=*/!is_u,
                 is_u ? witness.right() : witness.left(), witness,
                 opts.broad_replacement, /*skip_limits=*/false};
    Kind swapped = is_u ? Kind::WeakUntil : Kind::Release;
    Formula weakened =
        replace_occurrences(arg, rep, ReplMode::Swapped, swapped, Formula());
    Formula falsed =
        replace_occurrences(arg, rep, ReplMode::Constant, swapped, f_false());
    Formula gf_side = is_u ? witness.right() : witness.left();
    if (!opts.broad_replacement) {
      std::uint64_t before = count_fg_obstacles(arg);
      require(count_fg_obstacles(weakened) < before &&
                  count_gf_obstacles(gf_side) < before &&
                  count_fg_obstacles(falsed) < before,
              "stage-3 obstacle count must decrease (FG)");
    }
    Formula redex = f_fg(arg);
    Formula rhs = f_or(f_and(f_gf(gf_side), f_fg(weakened)), f_fg(falsed));
    Formula rhs_s = simp(rhs);
    record(3, rule, redex, rhs_s);
    Formula out = simp(f_or(f_and(norm_limit(simp_arg(gf_side), true),
                                  norm_limit(simp_arg(weakened), false)),
                            norm_limit(simp_arg(falsed), false)));
    return out;
  }

  // Stage-3 recursion passes bare limit arguments around; simplifying them
  // keeps the memo keyed on settled nodes.
  Formula simp_arg(const Formula& f) { return simp(f); }
};

void check_limit_property(const Formula& result, const Formula& input) {
  // every GF-subformula's argument and every FG-subformula of the result
  // must be a subformula of the input
  std::set<const void*> visited;
  std::vector<Formula> work{result};
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (!f.has_limit()) continue;
    if (!visited.insert(f.id()).second) continue;
    if (f.kind() == Kind::LimitGF) {
      if (!contains_subformula(input, f.arg()))
        throw InvariantError(
            "stage-1 limit property violated: GF argument is not an input "
            "subformula: " + render(f.arg()));
    } else if (f.kind() == Kind::LimitFG) {
      if (!contains_subformula(input, f))
        throw InvariantError(
            "stage-1 limit property violated: FG subformula is not an input "
            "subformula: " + render(f));
    }
    if (is_unary(f.kind())) {
      work.push_back(f.arg());
    } else if (is_binary(f.kind())) {
      work.push_back(f.left());
      work.push_back(f.right());
    }
  }
}

}  // namespace

Formula stage1(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace) {
  Normalizer n{opts, trace, {}};
  return n.stage1(f);
}

Formula stage2(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace) {
  Normalizer n{opts, trace, {}};
  return n.stage2(f);
}

Formula stage3(const Formula& f, const NormalizeOptions& opts,
               RewriteTrace& trace) {
  Normalizer n{opts, trace, {}};
  return n.stage3(f);
}

NormalizeResult normalize(
    const Formula& f, const NormalizeOptions& opts,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (opts.stage_limit < 1 || opts.stage_limit > 3)
    throw Error("stage_limit must be 1, 2 or 3");
  if (!f.valid()) throw Error("normalize: invalid formula");
  if (f.has_hole()) throw Error("normalize: formula has placeholders");

  if (opts.dual) {
    NormalizeOptions inner = opts;
    inner.dual = false;
    NormalizeResult r = normalize(negate_nnf(f), inner, deadline);
    r.formula = negate_nnf(r.formula);
    if (r.after_stage1) r.after_stage1 = negate_nnf(*r.after_stage1);
    if (r.after_stage2) r.after_stage2 = negate_nnf(*r.after_stage2);
    if (opts.stage_limit == 3 && !is_dual_normal_form(r.formula).pass)
      throw InvariantError("dual normalization missed the dual normal form");
    return r;
  }

  NormalizeResult res;
  Normalizer n{opts, res.trace, deadline};
  using clock = std::chrono::steady_clock;

  Formula g0 = opts.simplify ? detail::simplify_memo(f, n.simp_memo) : f;

  auto t0 = clock::now();
  Formula g1 = n.stage1(g0);
  res.stage_times[0] = clock::now() - t0;
  if (!is_stage_form(g1, 1))
    throw InvariantError("stage 1 output is not in the first staged form");
  if (!within_pow(g1.node_count(), 4, 2 * g0.node_count(), g0.node_count()))
    throw InvariantError("stage-1 size bound violated");
  // Broad replacement may swap non-maximal sites, which can leave rewritten
  // material inside later GF arguments; the property is only promised for
  // the narrow strategy.
  if (!opts.broad_replacement) check_limit_property(g1, g0);
  res.after_stage1 = g1;
  if (opts.stage_limit == 1) {
    res.formula = g1;
    return res;
  }

  std::uint64_t gfba1 = count_gfba(g1);
  std::uint64_t limit_size1 = max_limit_subformula_size(g1);
  auto t1 = clock::now();
  Formula g2 = n.stage2(g1);
  res.stage_times[1] = clock::now() - t1;
  if (!is_stage_form(g2, 2))
    throw InvariantError("stage 2 output is not in the second staged form");
  if (!within_pow(g2.node_count(), 3, gfba1, g1.node_count()))
    throw InvariantError("stage-2 size bound violated");
  if (max_limit_subformula_size(g2) > limit_size1)
    throw InvariantError("stage-2 grew a limit subformula");
  res.after_stage2 = g2;
  if (opts.stage_limit == 2) {
    res.formula = g2;
    return res;
  }

  auto t2 = clock::now();
  Formula g3 = n.stage3(g2);
  res.stage_times[2] = clock::now() - t2;
  NormalFormVerdict v = is_normal_form(g3);
  if (!v.pass)
    throw InvariantError("normalize missed the normal form (condition " +
                         std::to_string(v.condition) + " at " + v.path + ")");
  if (!within_pow(g3.node_count(), 4, 7 * f.node_count(), 1))
    throw InvariantError("overall size bound violated");
  res.formula = g3;
  return res;
}

Formula normalize_dual(const Formula& f, const NormalizeOptions& opts) {
  NormalizeOptions o = opts;
  o.dual = true;
  return normalize(f, o).formula;
}

}  // namespace ltlnorm
