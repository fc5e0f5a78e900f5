#pragma once

#include <cstdint>

#include "gainflow/cnf.hpp"
#include "gainflow/paft.hpp"

namespace gainflow {

struct PaftGridParams {
  int width = 3;
  int height = 3;
  // Probability that a transition at a non-terminal vertex is forbidden.
  double forbid_density = 0.3;
};

// Grid graph on vertices r<row>c<col>, s at the top-left and t at the
// bottom-right corner, rotation east/north/west/south at every vertex.
// Forbidden transitions are drawn at non-terminal vertices, then
// degree_reduce runs, so the result has non-terminal degrees 3 and 4 and a
// planar rotation.
PaftInstance generate_paft_grid(const PaftGridParams& params, std::uint64_t seed);

struct RandomCnfParams {
  int variables = 4;
  int clauses = 4;
};

// Clauses over three distinct variables with random signs.
CnfFormula generate_cnf(const RandomCnfParams& params, std::uint64_t seed);

struct RandomNetworkParams {
  int vertices = 6;
  int edges = 10;
  int gain_low = -3;
  int gain_high = 3;
  int capacity_high = 5;
  int cost_high = 3;
};

// Vertices n0..n{k-1}, source n0, sink n{k-1}, no edge into the source or
// out of the sink, no self-loops. Gains are drawn from [gain_low, gain_high]
// and then capped by vertex potentials (gain <= p(head) - p(tail)), so no
// cycle has positive total gain.
AdditiveNetwork generate_network(const RandomNetworkParams& params, std::uint64_t seed);

}  // namespace gainflow
