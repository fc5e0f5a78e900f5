#include "gainflow/path_flow.hpp"

namespace gainflow {

Rational accumulate(const AdditiveNetwork& network, const DirectedPath& path, const Rational& seed, std::size_t i) {
  validate_path(network, path);
  if (i < 1 || i > path.edges.size() + 1)
    throw NetworkError("accumulation index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(path.edges.size() + 1));
  Rational gamma = seed;
  for (std::size_t j = 0; j + 1 < i; ++j) gamma += network.edge(path.edges[j]).gain;
  return gamma;
}

std::vector<Rational> accumulated_flows(const AdditiveNetwork& network, const DirectedPath& path,
                                        const Rational& seed) {
  validate_path(network, path);
  std::vector<Rational> gammas;
  gammas.reserve(path.edges.size() + 1);
  gammas.push_back(seed);
  for (auto id : path.edges) gammas.push_back(gammas.back() + network.edge(id).gain);
  return gammas;
}

PathFlowCheck check_path_flow(const AdditiveNetwork& network, const PathFlow& flow, CapacityMode mode) {
  const auto gammas = accumulated_flows(network, flow.path, flow.seed);
  const std::size_t k = flow.path.edges.size();
  for (std::size_t i = 0; i <= k; ++i) {
    if (gammas[i].sign() <= 0) return {PathFlowCheck::Status::DeadEnd, i + 1};
    if (i < k && mode == CapacityMode::WithCapacity && gammas[i] > network.edge(flow.path.edges[i]).capacity)
      return {PathFlowCheck::Status::CapacityViolation, i + 1};
  }
  return {};
}

Rational path_cost(const AdditiveNetwork& network, const PathFlow& flow, CapacityMode mode) {
  const auto check = check_path_flow(network, flow, mode);
  if (!check.feasible())
    throw NetworkError("path flow infeasible at position " + std::to_string(check.position));
  const auto gammas = accumulated_flows(network, flow.path, flow.seed);
  Rational cost;
  for (std::size_t i = 0; i < flow.path.edges.size(); ++i) cost += network.edge(flow.path.edges[i]).cost * gammas[i];
  return cost;
}

Rational path_threshold(const AdditiveNetwork& network, const DirectedPath& path) {
  validate_path(network, path);
  Rational threshold;
  Rational prefix;
  for (auto id : path.edges) {
    prefix += network.edge(id).gain;
    threshold = max(threshold, -prefix);
  }
  return threshold;
}

}  // namespace gainflow
