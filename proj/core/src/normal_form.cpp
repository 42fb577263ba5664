#include "ltlnorm/normal_form.hpp"

#include "ltlnorm/errors.hpp"
#include "ltlnorm/hierarchy.hpp"
#include "ltlnorm/measures.hpp"

namespace ltlnorm {

namespace {

struct Ancestors {
  bool under_w = false;      // some W/R strictly above
  bool under_u = false;      // some U/M strictly above (dual condition 1)
  bool under_temporal = false;
  bool under_gf = false;
  bool under_fg = false;
};

// Preorder search for the first node violating `condition`; fills `path`.
bool find_violation(const Formula& f, int condition, bool dual, Ancestors a,
                    std::string& path) {
  Kind k = f.kind();
  switch (condition) {
    case 1:
      if (!dual && a.under_w && is_u_or_m(k)) return true;
      if (dual && a.under_u && is_w_or_r(k)) return true;
      break;
    case 2:
      if (a.under_temporal && is_limit(k)) return true;
      break;
    case 3:
      if (a.under_gf && is_w_or_r(k)) return true;
      if (a.under_fg && is_u_or_m(k)) return true;
      break;
  }
  Ancestors b = a;
  b.under_w |= is_w_or_r(k);
  b.under_u |= is_u_or_m(k);
  b.under_temporal |= is_temporal(k);
  b.under_gf |= k == Kind::LimitGF;
  b.under_fg |= k == Kind::LimitFG;
  std::size_t mark = path.size();
  if (is_unary(k)) {
    path += ".arg";
    if (find_violation(f.arg(), condition, dual, b, path)) return true;
    path.resize(mark);
  } else if (is_binary(k)) {
    path += ".left";
    if (find_violation(f.left(), condition, dual, b, path)) return true;
    path.resize(mark);
    path += ".right";
    if (find_violation(f.right(), condition, dual, b, path)) return true;
    path.resize(mark);
  }
  return false;
}

NormalFormVerdict check(const Formula& f, bool dual) {
  for (int cond = 1; cond <= 3; ++cond) {
    std::string path;
    if (find_violation(f, cond, dual, {}, path)) {
      NormalFormVerdict v;
      v.pass = false;
      v.condition = cond;
      v.path = path;
      return v;
    }
  }
  return {};
}

}  // namespace

NormalFormVerdict is_normal_form(const Formula& f) { return check(f, false); }

NormalFormVerdict is_dual_normal_form(const Formula& f) {
  return check(f, true);
}

bool is_stage_form(const Formula& f, int stage) {
  if (stage != 1 && stage != 2)
    throw Error("is_stage_form: stage must be 1 or 2");
  if (f.has_stage1_redex()) return false;
  if (stage == 2) return count_gfba(f) == 0;
  return true;
}

bool is_sigma2_gf_combination(const Formula& f) {
  Kind k = f.kind();
  if (k == Kind::And || k == Kind::Or)
    return is_sigma2_gf_combination(f.left()) &&
           is_sigma2_gf_combination(f.right());
  if (k == Kind::LimitGF && in_sigma(f.arg(), 1)) return true;
  return in_sigma(f, 2);
}

}  // namespace ltlnorm
