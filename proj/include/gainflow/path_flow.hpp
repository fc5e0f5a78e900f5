#pragma once

#include <cstddef>
#include <vector>

#include "gainflow/network.hpp"

namespace gainflow {

// Flow entering edge e_i of the path (1-based); i = k+1 is the flow arriving
// at the last vertex. Equals seed + sum of gains of e_1..e_{i-1}.
Rational accumulate(const AdditiveNetwork& network, const DirectedPath& path, const Rational& seed, std::size_t i);

// All k+1 accumulated values, position 1 first.
std::vector<Rational> accumulated_flows(const AdditiveNetwork& network, const DirectedPath& path,
                                        const Rational& seed);

enum class CapacityMode { PositivityOnly, WithCapacity };

struct PathFlowCheck {
  enum class Status { Feasible, DeadEnd, CapacityViolation };

  Status status = Status::Feasible;
  // 1-based position of the first violation; k+1 denotes arrival.
  std::size_t position = 0;

  bool feasible() const { return status == Status::Feasible; }
  friend bool operator==(const PathFlowCheck&, const PathFlowCheck&) = default;
};

// Positions are scanned in order. At position i the entering flow must be
// strictly positive and, in WithCapacity mode, at most u(e_i); the arrival
// position only needs positivity.
PathFlowCheck check_path_flow(const AdditiveNetwork& network, const PathFlow& flow, CapacityMode mode);

// Sum of c(e_i) times the flow entering e_i. Throws NetworkError when the path
// flow is not feasible in the given mode.
Rational path_cost(const AdditiveNetwork& network, const PathFlow& flow,
                   CapacityMode mode = CapacityMode::WithCapacity);

// Smallest T >= 0 such that every seed > T is positivity-feasible on the path.
Rational path_threshold(const AdditiveNetwork& network, const DirectedPath& path);

}  // namespace gainflow
