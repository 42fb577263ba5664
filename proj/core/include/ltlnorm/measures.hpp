#pragma once

#include <cstdint>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// The four size measures of a formula.
//   nodes     - syntax-tree nodes, every node counts one (constants and limit
//               operators included)
//   dag_nodes - structurally distinct subformulas
//   ubw       - U/M-nodes under some W/R-node but not under any limit node
//   gfba      - distinct limit subformulas occurring strictly inside a
//               temporal subformula
struct Measures {
  std::uint64_t nodes = 0;
  std::uint64_t dag_nodes = 0;
  std::uint64_t ubw = 0;
  std::uint64_t gfba = 0;
};

Measures measures(const Formula& f);

std::uint64_t count_dag_nodes(const Formula& f);
std::uint64_t count_ubw(const Formula& f);
std::uint64_t count_gfba(const Formula& f);

// rank = nodes + ubw; the stage-1 termination metric.
std::uint64_t rank(const Formula& f);

// Largest node count among limit subformulas; 0 if there are none.
std::uint64_t max_limit_subformula_size(const Formula& f);

// Obstacle counts, the stage-3 termination metric. For GF x: W/R-nodes plus
// U/M-nodes under a W/R-node inside x. For FG x the dual.
std::uint64_t count_gf_obstacles(const Formula& arg);
std::uint64_t count_fg_obstacles(const Formula& arg);

}  // namespace ltlnorm
