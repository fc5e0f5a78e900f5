#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gainflow/network.hpp"

namespace gainflow {

// A directed cycle whose gains sum to a positive value.
class PositiveGainCycleError : public std::runtime_error {
 public:
  explicit PositiveGainCycleError(std::vector<EdgeId> cycle);
  std::vector<EdgeId> cycle;
};

struct ThresholdTable {
  VertexId target;
  // nullopt marks a vertex with no directed path to the target.
  std::map<VertexId, std::optional<Rational>> values;
  // Relaxation rounds that changed at least one value.
  std::size_t rounds = 0;

  const std::optional<Rational>& at(const VertexId& v) const;
};

// Reachability thresholds towards t: for every v, the smallest T >= 0 such
// that some v->t path is positivity-feasible for every seed > T. Computed as
// the fixpoint of T(v) = min over (v,w) of max(0, T(w) - g(v,w)) with at most
// n-1 rounds over the edges in id order. Capacities and costs are ignored.
// Throws PositiveGainCycleError when a positive-gain cycle can reach t.
ThresholdTable threshold_table(const AdditiveNetwork& network, const VertexId& target);

// Any positive-gain cycle in the network, or nullopt. If `reaching` is set,
// only cycles from which that vertex is reachable are reported.
std::optional<std::vector<EdgeId>> find_positive_gain_cycle(const AdditiveNetwork& network,
                                                            const std::optional<VertexId>& reaching = std::nullopt);

}  // namespace gainflow
