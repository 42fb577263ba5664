#pragma once

#include <string>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// Result of a normal-form check. When it fails, `condition` names the first
// violated requirement (checked in order 1..3) and `path` locates the
// offending node as a chain of ".left"/".right"/".arg" selectors from the
// root ("" is the root itself).
//
// Conditions (M counts with U, R counts with W):
//   1. no U-node under a W-node
//   2. no limit node under another temporal node
//   3. no W-node under a GF-node, no U-node under an FG-node
struct NormalFormVerdict {
  bool pass = true;
  int condition = 0;
  std::string path;

  explicit operator bool() const { return pass; }
};

NormalFormVerdict is_normal_form(const Formula& f);

// Dual form: condition 1 becomes "no W-node under a U-node"; 2 and 3 as above.
NormalFormVerdict is_dual_normal_form(const Formula& f);

// Staged forms: stage 1 holds iff ubw = 0; stage 2 iff ubw = 0 and gfba = 0.
bool is_stage_form(const Formula& f, int stage);

// Structural decomposition check behind the normal form: a positive Boolean
// combination of Sigma_2 formulas and GF x with x in Sigma_1.
bool is_sigma2_gf_combination(const Formula& f);

}  // namespace ltlnorm
