#include "gainflow/threshold.hpp"

#include <algorithm>
#include <sstream>

namespace gainflow {
namespace {

std::string describe_cycle(const std::vector<EdgeId>& cycle) {
  std::ostringstream os;
  os << "positive-gain cycle through edges";
  for (auto e : cycle) os << ' ' << e;
  return os.str();
}

}  // namespace

PositiveGainCycleError::PositiveGainCycleError(std::vector<EdgeId> c)
    : std::runtime_error(describe_cycle(c)), cycle(std::move(c)) {}

const std::optional<Rational>& ThresholdTable::at(const VertexId& v) const {
  auto it = values.find(v);
  if (it == values.end()) throw NetworkError("threshold table has no vertex '" + v + "'");
  return it->second;
}

std::optional<std::vector<EdgeId>> find_positive_gain_cycle(const AdditiveNetwork& network,
                                                            const std::optional<VertexId>& reaching) {
  // Bellman-Ford on weights -g, propagated against edge direction so that
  // dist[v] bounds walks starting at v. A negative cycle is a positive-gain
  // cycle.
  const std::size_t n = network.vertex_count();
  const auto edges = network.edges();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::size_t> next_edge(n, edges.size());
  if (reaching) {
    dist[network.vertex_index(*reaching)] = Rational();
  } else {
    std::fill(dist.begin(), dist.end(), Rational());
  }

  std::optional<std::size_t> witness;
  for (std::size_t round = 0; round < n; ++round) {
    witness.reset();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto tail = network.vertex_index(edges[i].tail);
      const auto head = network.vertex_index(edges[i].head);
      if (!dist[head]) continue;
      Rational candidate = *dist[head] - edges[i].gain;
      if (!dist[tail] || candidate < *dist[tail]) {
        dist[tail] = std::move(candidate);
        next_edge[tail] = i;
        witness = tail;
      }
    }
    if (!witness) return std::nullopt;
  }

  // Walk n steps along the successor edges to land on the cycle, then collect it.
  std::size_t v = *witness;
  for (std::size_t step = 0; step < n; ++step) v = network.vertex_index(edges[next_edge[v]].head);
  std::vector<EdgeId> cycle;
  std::size_t u = v;
  do {
    cycle.push_back(edges[next_edge[u]].id);
    u = network.vertex_index(edges[next_edge[u]].head);
  } while (u != v);
  // Rotate so the smallest edge id leads; keeps reports stable.
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

ThresholdTable threshold_table(const AdditiveNetwork& network, const VertexId& target) {
  const auto target_index = network.vertex_index(target);
  if (auto cycle = find_positive_gain_cycle(network, target)) throw PositiveGainCycleError(std::move(*cycle));

  const std::size_t n = network.vertex_count();
  const auto edges = network.edges();
  std::vector<std::optional<Rational>> values(n);
  values[target_index] = Rational();

  ThresholdTable table{target, {}, 0};
  for (std::size_t round = 0; round + 1 < std::max<std::size_t>(n, 2); ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      const auto tail = network.vertex_index(e.tail);
      const auto head = network.vertex_index(e.head);
      if (!values[head] || tail == target_index) continue;
      Rational candidate = max(Rational(), *values[head] - e.gain);
      if (!values[tail] || candidate < *values[tail]) {
        values[tail] = std::move(candidate);
        changed = true;
      }
    }
    if (!changed) break;
    ++table.rounds;
  }

  const auto vertices = network.vertices();
  for (std::size_t v = 0; v < n; ++v) table.values.emplace(vertices[v], values[v]);
  return table;
}

}  // namespace gainflow
