#include "gainflow/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gainflow {
namespace {

struct HalfEdge {
  std::size_t vertex;
  EdgeId edge;
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

EmbeddingReport verify_rotation(const UndirectedGraph& graph, const Rotation& rotation) {
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    if (!index.emplace(graph.vertices[i], i).second) throw NetworkError("duplicate vertex '" + graph.vertices[i] + "'");

  std::map<VertexId, std::vector<EdgeId>> expected;
  std::map<EdgeId, const UndirectedEdge*> by_id;
  for (const auto& e : graph.edges) {
    if (!index.contains(e.a) || !index.contains(e.b)) throw NetworkError("edge " + to_string(e.id) + " has a dangling endpoint");
    if (!by_id.emplace(e.id, &e).second) throw NetworkError("duplicate edge id " + to_string(e.id));
    expected[e.a].push_back(e.id);
    expected[e.b].push_back(e.id);
  }
  for (const auto& [v, order] : rotation)
    if (!index.contains(v)) throw NetworkError("rotation for unknown vertex '" + v + "'");
  for (auto& [v, ids] : expected) {
    auto it = rotation.find(v);
    if (it == rotation.end()) throw NetworkError("rotation missing for vertex '" + v + "'");
    auto listed = it->second;
    std::sort(listed.begin(), listed.end());
    std::sort(ids.begin(), ids.end());
    if (listed != ids) throw NetworkError("rotation at '" + v + "' does not match its incidences");
  }
  for (const auto& [v, order] : rotation)
    if (!order.empty() && !expected.contains(v)) throw NetworkError("rotation at '" + v + "' lists edges it lacks");

  // Half-edges are rotation occurrences; each edge owns two of them.
  std::vector<HalfEdge> halves;
  std::vector<std::size_t> next_at_vertex;
  std::map<EdgeId, std::vector<std::size_t>> owned;
  for (const auto& [v, order] : rotation) {
    const std::size_t first = halves.size();
    for (std::size_t k = 0; k < order.size(); ++k) {
      owned[order[k]].push_back(halves.size());
      halves.push_back({index.at(v), order[k]});
      next_at_vertex.push_back(first + (k + 1) % order.size());
    }
  }
  std::vector<std::size_t> partner(halves.size());
  for (const auto& [id, pair] : owned) {
    partner[pair[0]] = pair[1];
    partner[pair[1]] = pair[0];
  }

  EmbeddingReport report;
  report.vertices = graph.vertices.size();
  report.edges = graph.edges.size();

  std::vector<std::size_t> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : graph.edges) parent[find(parent, index.at(e.a))] = find(parent, index.at(e.b));

  std::map<std::size_t, long> euler;  // V - E + F per component root
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) euler[find(parent, v)] += 1;
  for (const auto& e : graph.edges) euler[find(parent, index.at(e.a))] -= 1;

  std::vector<bool> seen(halves.size(), false);
  for (std::size_t h = 0; h < halves.size(); ++h) {
    if (seen[h]) continue;
    ++report.faces;
    euler[find(parent, halves[h].vertex)] += 1;
    for (std::size_t cur = h; !seen[cur]; cur = next_at_vertex[partner[cur]]) {
      seen[cur] = true;
      ++report.side_visits;
    }
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (expected.contains(graph.vertices[v])) continue;
    ++report.faces;
    euler[find(parent, v)] += 1;
  }

  report.components = euler.size();
  for (const auto& [root, chi] : euler) {
    const long genus = (2 - chi) / 2;
    report.genus += static_cast<int>(genus);
    if (genus != 0) report.planar = false;
  }
  return report;
}

UndirectedGraph underlying_graph(const AdditiveNetwork& network) {
  UndirectedGraph g;
  g.vertices.assign(network.vertices().begin(), network.vertices().end());
  for (const auto& e : network.edges()) g.edges.push_back({e.id, e.tail, e.head});
  return g;
}

}  // namespace gainflow
