#include "gainflow/generators.hpp"

#include <algorithm>
#include <random>

namespace gainflow {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

PaftInstance generate_paft_grid(const PaftGridParams& params, std::uint64_t seed) {
  if (params.width < 1 || params.height < 1 || params.width * params.height < 2)
    throw std::invalid_argument("grid needs at least two vertices");
  if (params.width * params.height > 400) throw std::invalid_argument("grid larger than 400 vertices");
  if (!(params.forbid_density >= 0 && params.forbid_density <= 1))
    throw std::invalid_argument("forbid density must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  auto name = [](int r, int c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
  std::vector<VertexId> vertices;
  std::vector<UndirectedEdge> edges;
  std::map<std::pair<int, int>, EdgeId> east;
  std::map<std::pair<int, int>, EdgeId> south;
  std::uint32_t id = 1;
  for (int r = 0; r < params.height; ++r)
    for (int c = 0; c < params.width; ++c) {
      vertices.push_back(name(r, c));
      if (c + 1 < params.width) {
        east[{r, c}] = EdgeId{id};
        edges.push_back({EdgeId{id++}, name(r, c), name(r, c + 1)});
      }
      if (r + 1 < params.height) {
        south[{r, c}] = EdgeId{id};
        edges.push_back({EdgeId{id++}, name(r, c), name(r + 1, c)});
      }
    }

  const VertexId s = name(0, 0);
  const VertexId t = name(params.height - 1, params.width - 1);
  Rotation rotation;
  std::vector<Transition> forbidden;
  std::bernoulli_distribution forbid(params.forbid_density);
  for (int r = 0; r < params.height; ++r)
    for (int c = 0; c < params.width; ++c) {
      std::vector<EdgeId> order;
      if (auto it = east.find({r, c}); it != east.end()) order.push_back(it->second);
      if (auto it = south.find({r - 1, c}); it != south.end()) order.push_back(it->second);
      if (auto it = east.find({r, c - 1}); it != east.end()) order.push_back(it->second);
      if (auto it = south.find({r, c}); it != south.end()) order.push_back(it->second);
      const VertexId v = name(r, c);
      if (!order.empty()) rotation[v] = order;
      if (v == s || v == t) continue;
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
          if (forbid(rng)) forbidden.emplace_back(sorted[i], sorted[j]);
    }
  return degree_reduce(PaftInstance(std::move(vertices), std::move(edges), std::move(forbidden), s, t, std::move(rotation)));
}

CnfFormula generate_cnf(const RandomCnfParams& params, std::uint64_t seed) {
  if (params.variables < 3 && params.clauses > 0)
    throw std::invalid_argument("clauses need at least three variables");
  if (params.clauses < 0 || params.variables < 0) throw std::invalid_argument("negative size");
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  for (int i = 0; i < params.clauses; ++i) {
    std::vector<int> pool(static_cast<std::size_t>(params.variables));
    for (int x = 0; x < params.variables; ++x) pool[static_cast<std::size_t>(x)] = x + 1;
    Clause clause{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto pick = static_cast<std::size_t>(uniform(rng, static_cast<int>(k), params.variables - 1));
      std::swap(pool[k], pool[pick]);
      clause[k] = uniform(rng, 0, 1) ? pool[k] : -pool[k];
    }
    clauses.push_back(clause);
  }
  return CnfFormula(params.variables, std::move(clauses));
}

AdditiveNetwork generate_network(const RandomNetworkParams& params, std::uint64_t seed) {
  if (params.vertices < 2) throw std::invalid_argument("network needs at least two vertices");
  if (params.edges < 0) throw std::invalid_argument("negative edge count");
  if (params.gain_low > params.gain_high || params.capacity_high < 1 || params.cost_high < 0)
    throw std::invalid_argument("empty parameter range");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> vertices;
  std::vector<int> potential;
  for (int i = 0; i < params.vertices; ++i) {
    vertices.push_back("n" + std::to_string(i));
    potential.push_back(uniform(rng, -3, 3));
  }
  const int last = params.vertices - 1;
  std::vector<DirectedEdge> edges;
  for (int k = 0; k < params.edges; ++k) {
    int a = 0;
    int b = 0;
    // Tail avoids the sink, head avoids the source, and the two differ; with
    // two vertices the only choice is n0 -> n1.
    do {
      a = uniform(rng, 0, last - 1);
      b = uniform(rng, 1, last);
    } while (a == b);
    const int gain = std::min(uniform(rng, params.gain_low, params.gain_high), potential[static_cast<std::size_t>(b)] -
                                                                                   potential[static_cast<std::size_t>(a)]);
    edges.push_back({EdgeId{static_cast<std::uint32_t>(k + 1)}, vertices[static_cast<std::size_t>(a)],
                     vertices[static_cast<std::size_t>(b)], Rational(uniform(rng, 1, params.capacity_high)),
                     Rational(uniform(rng, 0, params.cost_high)), Rational(gain)});
  }
  return AdditiveNetwork(vertices, std::move(edges), {vertices.front()}, {vertices.back()});
}

}  // namespace gainflow
