#pragma once

// Slow, obviously-correct reference routines used as test oracles. Nothing
// here shares code with the library algorithms beyond the basic data types
// and the path-flow primitives.

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gainflow/network.hpp"
#include "gainflow/path_flow.hpp"

namespace gainflow::testing {

// Every simple directed path from s to t, without any pruning.
inline std::vector<DirectedPath> all_simple_paths(const AdditiveNetwork& n, const VertexId& s, const VertexId& t) {
  std::vector<DirectedPath> out;
  std::set<VertexId> on_path{s};
  DirectedPath current;
  std::function<void(const VertexId&)> walk = [&](const VertexId& v) {
    if (v == t) {
      if (!current.edges.empty()) out.push_back(current);
      return;
    }
    for (const auto& e : n.edges()) {
      if (e.tail != v || on_path.contains(e.head)) continue;
      on_path.insert(e.head);
      current.edges.push_back(e.id);
      walk(e.head);
      current.edges.pop_back();
      on_path.erase(e.head);
    }
  };
  walk(s);
  return out;
}

// min over simple v -> t paths of the per-path threshold; nullopt when no path.
inline std::optional<Rational> brute_threshold(const AdditiveNetwork& n, const VertexId& v, const VertexId& t) {
  if (v == t) return Rational(0);
  std::optional<Rational> best;
  for (const auto& p : all_simple_paths(n, v, t)) {
    const auto value = path_threshold(n, p);
    if (!best || value < *best) best = value;
  }
  return best;
}

struct BruteShortest {
  DirectedPath path;
  Rational cost;
};

// Minimum cost over every capacity-feasible simple path; ties go to the
// lexicographically smallest edge sequence.
inline std::optional<BruteShortest> brute_shortest(const AdditiveNetwork& n, const VertexId& s, const VertexId& t,
                                                   const Rational& seed) {
  std::optional<BruteShortest> best;
  for (const auto& p : all_simple_paths(n, s, t)) {
    if (check_path_flow(n, PathFlow{p, seed}, CapacityMode::WithCapacity).status != PathFlowCheck::Status::Feasible)
      continue;
    const auto cost = path_cost(n, PathFlow{p, seed});
    if (!best || cost < best->cost || (cost == best->cost && p.edges < best->path.edges)) best = BruteShortest{p, cost};
  }
  return best;
}

// Edmonds-Karp on the network with gains ignored: super source feeds every
// source, every sink drains into a super sink.
inline Rational classical_max_flow(const AdditiveNetwork& n) {
  const std::size_t count = n.vertex_count() + 2;
  const std::size_t super_s = count - 2;
  const std::size_t super_t = count - 1;
  Rational unbounded(0);
  for (const auto& e : n.edges()) unbounded += e.capacity;
  unbounded += 1;

  std::vector<std::vector<Rational>> residual(count, std::vector<Rational>(count));
  for (const auto& e : n.edges()) residual[n.vertex_index(e.tail)][n.vertex_index(e.head)] += e.capacity;
  for (const auto& v : n.sources()) residual[super_s][n.vertex_index(v)] = unbounded;
  for (const auto& v : n.sinks()) residual[n.vertex_index(v)][super_t] = unbounded;

  Rational total(0);
  while (true) {
    std::vector<std::optional<std::size_t>> parent(count);
    std::deque<std::size_t> queue{super_s};
    parent[super_s] = super_s;
    while (!queue.empty() && !parent[super_t]) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < count; ++w)
        if (!parent[w] && residual[u][w].sign() > 0) {
          parent[w] = u;
          queue.push_back(w);
        }
    }
    if (!parent[super_t]) return total;
    Rational push = unbounded;
    for (auto w = super_t; w != super_s; w = *parent[w]) push = min(push, residual[*parent[w]][w]);
    for (auto w = super_t; w != super_s; w = *parent[w]) {
      residual[*parent[w]][w] -= push;
      residual[w][*parent[w]] += push;
    }
    total += push;
  }
}

struct RandomNetworkShape {
  int vertices = 6;
  int edges = 10;
  int gain_low = -3;
  int gain_high = 3;
  int capacity_high = 6;
  int cost_high = 5;
  // When false, gains are clipped against vertex potentials so no cycle has
  // positive total gain.
  bool allow_positive_cycles = false;
};

// Random network on v0..v{n-1} with source v0 and sink v{n-1}; no edge enters
// the source or leaves the sink.
inline AdditiveNetwork random_network(std::mt19937_64& rng, const RandomNetworkShape& shape) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<VertexId> vertices;
  std::vector<int> potential;
  for (int i = 0; i < shape.vertices; ++i) {
    vertices.push_back("v" + std::to_string(i));
    potential.push_back(pick(-3, 3));
  }
  std::vector<DirectedEdge> edges;
  std::uint32_t id = 1;
  for (int attempts = 0; static_cast<int>(edges.size()) < shape.edges && attempts < 50 * shape.edges; ++attempts) {
    const int a = pick(0, shape.vertices - 2);
    const int b = pick(1, shape.vertices - 1);
    if (a == b) continue;
    int gain = pick(shape.gain_low, shape.gain_high);
    if (!shape.allow_positive_cycles) gain = std::min(gain, potential[b] - potential[a]);
    edges.push_back({EdgeId{id++}, vertices[a], vertices[b], Rational(pick(1, shape.capacity_high)),
                     Rational(pick(0, shape.cost_high)), Rational(gain)});
  }
  return AdditiveNetwork(vertices, std::move(edges), {vertices.front()}, {vertices.back()});
}

}  // namespace gainflow::testing
