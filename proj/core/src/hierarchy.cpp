#include "ltlnorm/hierarchy.hpp"

#include <algorithm>
#include <map>

#include "ltlnorm/errors.hpp"

namespace ltlnorm {

namespace {

using Levels = HierarchyLevels;

unsigned umax(unsigned a, unsigned b) { return a > b ? a : b; }

// Bottom-up least membership levels.
//
// A temporal node enters Delta_i only through Sigma_i or Pi_i; only the
// Boolean connectives can combine a Sigma side and a Pi side into a smaller
// Delta. Limit operators are classified through their expansion:
//   GF x = false R (true U x),  FG x = true U (false R x).
Levels levels_rec(const Formula& f, std::map<const void*, Levels>& memo) {
  auto it = memo.find(f.id());
  if (it != memo.end()) return it->second;
  Levels out;
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
    case Kind::NegAtom:
    case Kind::Hole:
      out = {0, 0, 0};
      break;
    case Kind::And:
    case Kind::Or: {
      Levels l = levels_rec(f.left(), memo);
      Levels r = levels_rec(f.right(), memo);
      out.sigma = umax(l.sigma, r.sigma);
      out.pi = umax(l.pi, r.pi);
      out.delta = umax(l.delta, r.delta);
      break;
    }
    case Kind::Next: {
      Levels c = levels_rec(f.arg(), memo);
      out.sigma = umax(c.sigma, 1);
      out.pi = umax(c.pi, 1);
      out.delta = std::min(out.sigma, out.pi);
      break;
    }
    case Kind::Until:
    case Kind::StrongRelease: {
      Levels l = levels_rec(f.left(), memo);
      Levels r = levels_rec(f.right(), memo);
      out.sigma = umax(umax(l.sigma, r.sigma), 1);
      out.pi = out.sigma + 1;
      out.delta = out.sigma;
      break;
    }
    case Kind::WeakUntil:
    case Kind::Release: {
      Levels l = levels_rec(f.left(), memo);
      Levels r = levels_rec(f.right(), memo);
      out.pi = umax(umax(l.pi, r.pi), 1);
      out.sigma = out.pi + 1;
      out.delta = out.pi;
      break;
    }
    case Kind::LimitGF: {
      Levels c = levels_rec(f.arg(), memo);
      out.pi = umax(c.sigma, 1) + 1;
      out.sigma = out.pi + 1;
      out.delta = out.pi;
      break;
    }
    case Kind::LimitFG: {
      Levels c = levels_rec(f.arg(), memo);
      out.sigma = umax(c.pi, 1) + 1;
      out.pi = out.sigma + 1;
      out.delta = out.sigma;
      break;
    }
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

HierarchyLevels hierarchy_levels(const Formula& f) {
  std::map<const void*, Levels> memo;
  return levels_rec(f, memo);
}

HierarchyClass classify(const Formula& f) {
  Levels lv = hierarchy_levels(f);
  unsigned sp = std::min(lv.sigma, lv.pi);
  if (lv.delta < sp) return {HierarchyClass::Shape::Delta, lv.delta};
  if (lv.sigma < lv.pi) return {HierarchyClass::Shape::Sigma, lv.sigma};
  if (lv.pi < lv.sigma) return {HierarchyClass::Shape::Pi, lv.pi};
  return {HierarchyClass::Shape::Delta, lv.delta};
}

bool in_sigma(const Formula& f, unsigned level) {
  return hierarchy_levels(f).sigma <= level;
}
bool in_pi(const Formula& f, unsigned level) {
  return hierarchy_levels(f).pi <= level;
}
bool in_delta(const Formula& f, unsigned level) {
  return hierarchy_levels(f).delta <= level;
}

std::string to_string(const HierarchyClass& c) {
  const char* s = c.shape == HierarchyClass::Shape::Sigma  ? "Sigma"
                  : c.shape == HierarchyClass::Shape::Pi   ? "Pi"
                                                           : "Delta";
  return std::string(s) + " " + std::to_string(c.level);
}

}  // namespace ltlnorm
