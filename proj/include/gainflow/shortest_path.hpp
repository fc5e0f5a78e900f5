#pragma once

#include <optional>

#include "gainflow/network.hpp"

namespace gainflow {

struct ShortestPathResult {
  DirectedPath path;
  Rational seed;
  Rational cost;
};

// Minimum-cost capacity-feasible path flow from s to t for the given seed.
// Simple paths are enumerated depth-first with out-edges in id order, so the
// first minimum found is also the lexicographically smallest edge sequence.
// A prefix is abandoned as soon as its flow leaves (0, capacity]; no feasible
// completion can exist past such a prefix. nullopt means no feasible path.
std::optional<ShortestPathResult> shortest_path(const AdditiveNetwork& network, const VertexId& s, const VertexId& t,
                                                const Rational& seed);

struct ThresholdSeededPath {
  enum class Status { Solved, NoFeasiblePath, Unreachable, ThresholdTooHigh };

  Status status = Status::Unreachable;
  // Reachability threshold of s towards t, when t is reachable.
  std::optional<Rational> threshold;
  std::optional<ShortestPathResult> result;
};

// Picks the seed from the reachability threshold T: seed 1 when T < 1. A
// seed of min{1, T} is never feasible (feasibility needs seed > T), so for
// T >= 1 the call reports ThresholdTooHigh and the caller must pick a seed.
// Propagates PositiveGainCycleError.
ThresholdSeededPath shortest_path_from_threshold(const AdditiveNetwork& network, const VertexId& s,
                                                 const VertexId& t);

}  // namespace gainflow
