#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "gainflow/network.hpp"

namespace gainflow::testing {

struct EdgeSpec {
  VertexId tail;
  VertexId head;
  Rational capacity;
  Rational cost;
  Rational gain;
};

// Edge ids are assigned 1..m in the given order; vertices are collected from
// the edges plus the terminals.
inline AdditiveNetwork make_network(const std::vector<EdgeSpec>& specs, std::vector<VertexId> sources = {},
                                    std::vector<VertexId> sinks = {}, std::vector<VertexId> extra_vertices = {}) {
  std::set<VertexId> vertices(extra_vertices.begin(), extra_vertices.end());
  std::vector<DirectedEdge> edges;
  std::uint32_t id = 1;
  for (const auto& s : specs) {
    vertices.insert(s.tail);
    vertices.insert(s.head);
    edges.push_back({EdgeId{id++}, s.tail, s.head, s.capacity, s.cost, s.gain});
  }
  vertices.insert(sources.begin(), sources.end());
  vertices.insert(sinks.begin(), sinks.end());
  return AdditiveNetwork({vertices.begin(), vertices.end()}, std::move(edges), std::move(sources), std::move(sinks));
}

// Path v0 -> v1 -> ... with the given gains, capacity 100 and zero cost.
inline AdditiveNetwork make_chain(const std::vector<Rational>& gains) {
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < gains.size(); ++i)
    specs.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), Rational(100), Rational(0), gains[i]});
  return make_network(specs, {"v0"}, {"v" + std::to_string(gains.size())});
}

inline DirectedPath path_of(std::initializer_list<std::uint32_t> ids) {
  DirectedPath p;
  for (auto id : ids) p.edges.push_back(EdgeId{id});
  return p;
}

inline Rational q(const char* text) { return Rational::parse(text); }

}  // namespace gainflow::testing
