#pragma once

#include <string>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// A class of the syntactic-future hierarchy. Level 0 is canonicalized to
// Delta (Sigma_0 = Pi_0 = Delta_0), as is any level where the formula sits in
// both Sigma_i and Pi_i.
struct HierarchyClass {
  enum class Shape { Sigma, Pi, Delta };
  Shape shape = Shape::Delta;
  unsigned level = 0;

  bool operator==(const HierarchyClass&) const = default;
};

std::string to_string(const HierarchyClass& c);

// Least levels of membership: sigma = min{i : f in Sigma_i}, pi and delta
// likewise. Limit operators classify through their G F / F G expansion.
struct HierarchyLevels {
  unsigned sigma = 0;
  unsigned pi = 0;
  unsigned delta = 0;
};

HierarchyLevels hierarchy_levels(const Formula& f);

// The least class of the hierarchy containing f.
HierarchyClass classify(const Formula& f);

// f in Sigma_level / Pi_level / Delta_level (inclusion-aware).
bool in_sigma(const Formula& f, unsigned level);
bool in_pi(const Formula& f, unsigned level);
bool in_delta(const Formula& f, unsigned level);

}  // namespace ltlnorm
