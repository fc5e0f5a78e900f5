#pragma once

#include <vector>

#include "gainflow/network.hpp"

namespace gainflow {

struct UndirectedEdge {
  EdgeId id;
  VertexId a;
  VertexId b;

  VertexId other(const VertexId& v) const { return v == a ? b : a; }
  bool touches(const VertexId& v) const { return v == a || v == b; }
  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

// Plain multigraph; parallel edges allowed, vertices and edges kept sorted.
struct UndirectedGraph {
  std::vector<VertexId> vertices;
  std::vector<UndirectedEdge> edges;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

}  // namespace gainflow
