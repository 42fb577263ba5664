#include "ltlnorm/errors.hpp"
#include "ltlnorm/printer.hpp"
#include "ltlnorm/rewrite.hpp"

namespace ltlnorm {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::WU: return "WU";
    case RuleId::UW: return "UW";
    case RuleId::GF1: return "GF1";
    case RuleId::FG1: return "FG1";
    case RuleId::GF2: return "GF2";
    case RuleId::FG2: return "FG2";
    case RuleId::MW: return "MW";
    case RuleId::WM: return "WM";
    case RuleId::UR: return "UR";
    case RuleId::MR: return "MR";
    case RuleId::RU: return "RU";
    case RuleId::RM: return "RM";
    case RuleId::GFR: return "GFR";
    case RuleId::FGM: return "FGM";
  }
  return "?";
}

std::string RewriteStep::redex_text() const { return render(redex); }

namespace detail_rules {

Formula g_of(Formula x) { return f_weak_until(std::move(x), f_false()); }

// The matched operator of each rule's redex.
Kind redex_kind(RuleId rule) {
  switch (rule) {
    case RuleId::WU:
    case RuleId::UW:
    case RuleId::UR:
    case RuleId::RU:
    case RuleId::FG2: return Kind::Until;
    case RuleId::MW:
    case RuleId::WM:
    case RuleId::MR:
    case RuleId::RM:
    case RuleId::FGM: return Kind::StrongRelease;
    case RuleId::GF2: return Kind::WeakUntil;
    case RuleId::GFR: return Kind::Release;
    case RuleId::GF1: return Kind::LimitGF;
    case RuleId::FG1: return Kind::LimitFG;
  }
  throw ShapeError("unknown rule");
}

// Weakening applied inside the kept copy: U -> W, M -> R (and for the stage-3
// limit rules the strengthening W -> U, R -> M).
Kind swapped_kind(RuleId rule) {
  switch (rule) {
    case RuleId::UW:
    case RuleId::RU:
    case RuleId::FG2: return Kind::WeakUntil;
    case RuleId::MW:
    case RuleId::RM:
    case RuleId::FGM: return Kind::Release;
    case RuleId::GF2: return Kind::Until;
    case RuleId::GFR: return Kind::StrongRelease;
    default: throw ShapeError("rule has no swapped copy");
  }
}

// Literal right-hand sides of Tables 1 and 2. `orig` / `swapped` / `tru` /
// `fls` are the context filled with the redex, its swapped copy, true and
// false; unused slots may be invalid.
Formula build_rhs(RuleId rule, const Formula& phi, const Formula& orig,
                  const Formula& swapped, const Formula& tru,
                  const Formula& fls, const Formula& psi1,
                  const Formula& psi2) {
  switch (rule) {
    case RuleId::WU:
    case RuleId::WM:
      return f_or(f_until(phi, orig), g_of(phi));
    case RuleId::UW:
      return f_or(f_and(f_gf(psi2), f_weak_until(swapped, phi)),
                  f_until(orig, f_or(phi, g_of(fls))));
    case RuleId::MW:
      return f_or(f_and(f_gf(psi1), f_weak_until(swapped, phi)),
                  f_until(orig, f_or(phi, g_of(fls))));
    case RuleId::GF1:
      return f_or(f_and(f_gf(psi1), tru), fls);
    case RuleId::FG1:
      return f_or(f_and(f_fg(psi1), tru), fls);
    case RuleId::GF2:
      return f_or(f_gf(swapped), f_and(f_fg(psi1), f_gf(tru)));
    case RuleId::FG2:
      return f_or(f_and(f_gf(psi2), f_fg(swapped)), f_fg(fls));
    case RuleId::UR:
    case RuleId::MR:
      return f_or(f_strong_release(orig, phi), g_of(phi));
    case RuleId::RU:
      return f_or(f_and(f_gf(psi2), f_release(phi, swapped)),
                  f_strong_release(f_or(phi, g_of(fls)), orig));
    case RuleId::RM:
      return f_or(f_and(f_gf(psi1), f_release(phi, swapped)),
                  f_strong_release(f_or(phi, g_of(fls)), orig));
    case RuleId::GFR:
      return f_or(f_gf(swapped), f_and(f_fg(psi2), f_gf(tru)));
    case RuleId::FGM:
      return f_or(f_and(f_gf(psi1), f_fg(swapped)), f_fg(fls));
  }
  throw ShapeError("unknown rule");
}

}  // namespace detail_rules

namespace {

using namespace detail_rules;

struct Instance {
  Context ctx;
  Formula phi;  // the non-context slot, invalid for the one-slot rules
  Formula psi1, psi2;
};

std::size_t expected_parts(RuleId rule) {
  switch (rule) {
    case RuleId::GF1:
    case RuleId::FG1: return 1;
    case RuleId::GF2:
    case RuleId::FG2:
    case RuleId::GFR:
    case RuleId::FGM: return 2;
    default: return 3;
  }
}

Instance check_shape(RuleId rule, const std::vector<Context>& ctxs,
                     const std::vector<Formula>& parts) {
  if (ctxs.size() != 1)
    throw ShapeError(std::string(rule_name(rule)) +
                     ": expected exactly one context");
  if (!ctxs[0].body.valid() || !ctxs[0].body.has_hole())
    throw ShapeError(std::string(rule_name(rule)) +
                     ": context has no placeholder");
  if (parts.size() != expected_parts(rule))
    throw ShapeError(std::string(rule_name(rule)) + ": expected " +
                     std::to_string(expected_parts(rule)) + " parts, got " +
                     std::to_string(parts.size()));
  for (const Formula& p : parts) {
    if (!p.valid() || p.has_hole())
      throw ShapeError(std::string(rule_name(rule)) +
                       ": parts must be placeholder-free formulas");
  }
  Instance in;
  in.ctx = ctxs[0];
  if (parts.size() == 1) {
    in.psi1 = parts[0];
  } else if (parts.size() == 2) {
    in.psi1 = parts[0];
    in.psi2 = parts[1];
  } else {
    in.phi = parts[0];
    in.psi1 = parts[1];
    in.psi2 = parts[2];
  }
  return in;
}

Formula redex_of(RuleId rule, const Instance& in) {
  Kind k = redex_kind(rule);
  if (k == Kind::LimitGF) return f_gf(in.psi1);
  if (k == Kind::LimitFG) return f_fg(in.psi1);
  return make_binary(k, in.psi1, in.psi2);
}

}  // namespace

Formula apply_rule(RuleId rule, const std::vector<Context>& ctxs,
                   const std::vector<Formula>& parts) {
  Instance in = check_shape(rule, ctxs, parts);
  Formula orig, swapped, tru, fls;
  switch (rule) {
    case RuleId::GF1:
    case RuleId::FG1:
      tru = fill(in.ctx, f_true());
      fls = fill(in.ctx, f_false());
      break;
    case RuleId::GF2:
    case RuleId::GFR:
      swapped = fill(in.ctx, make_binary(swapped_kind(rule), in.psi1, in.psi2));
      tru = fill(in.ctx, f_true());
      break;
    case RuleId::FG2:
    case RuleId::FGM:
      swapped = fill(in.ctx, make_binary(swapped_kind(rule), in.psi1, in.psi2));
      fls = fill(in.ctx, f_false());
      break;
    case RuleId::WU:
    case RuleId::WM:
    case RuleId::UR:
    case RuleId::MR:
      orig = fill(in.ctx, redex_of(rule, in));
      break;
    case RuleId::UW:
    case RuleId::MW:
    case RuleId::RU:
    case RuleId::RM:
      orig = fill(in.ctx, redex_of(rule, in));
      swapped = fill(in.ctx, make_binary(swapped_kind(rule), in.psi1, in.psi2));
      fls = fill(in.ctx, f_false());
      break;
  }
  return build_rhs(rule, in.phi, orig, swapped, tru, fls, in.psi1, in.psi2);
}

Formula rule_lhs(RuleId rule, const std::vector<Context>& ctxs,
                 const std::vector<Formula>& parts) {
  Instance in = check_shape(rule, ctxs, parts);
  Formula filled = fill(in.ctx, redex_of(rule, in));
  switch (rule) {
    case RuleId::WU:
    case RuleId::WM: return f_weak_until(in.phi, filled);
    case RuleId::UW:
    case RuleId::MW: return f_weak_until(filled, in.phi);
    case RuleId::UR:
    case RuleId::MR: return f_release(filled, in.phi);
    case RuleId::RU:
    case RuleId::RM: return f_release(in.phi, filled);
    case RuleId::GF1:
    case RuleId::FG1: return filled;
    case RuleId::GF2:
    case RuleId::GFR: return f_gf(filled);
    case RuleId::FG2:
    case RuleId::FGM: return f_fg(filled);
  }
  throw ShapeError("unknown rule");
}

}  // namespace ltlnorm
