#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gainflow/undirected.hpp"

namespace gainflow {

// Unordered pair of distinct edges, stored with first < second.
struct Transition {
  EdgeId first;
  EdgeId second;

  Transition(EdgeId a, EdgeId b) : first(a < b ? a : b), second(a < b ? b : a) {}
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Path-avoiding-forbidden-transitions instance: an undirected multigraph,
// forbidden transitions, terminals and an optional rotation system. The
// constructor enforces that every forbidden pair shares exactly one vertex,
// that s != t, and that neither terminal is involved in a forbidden
// transition. Self-loops are rejected.
class PaftInstance {
 public:
  PaftInstance(std::vector<VertexId> vertices, std::vector<UndirectedEdge> edges, std::vector<Transition> forbidden,
               VertexId s, VertexId t, std::optional<Rotation> rotation = std::nullopt);

  const UndirectedGraph& graph() const { return graph_; }
  std::span<const VertexId> vertices() const { return graph_.vertices; }
  std::span<const UndirectedEdge> edges() const { return graph_.edges; }
  const std::set<Transition>& forbidden() const { return forbidden_; }
  const VertexId& s() const { return s_; }
  const VertexId& t() const { return t_; }
  const std::optional<Rotation>& rotation() const { return rotation_; }

  bool has_vertex(const VertexId& v) const;
  const UndirectedEdge& edge(EdgeId id) const;
  // Incident edge ids in id order.
  const std::vector<EdgeId>& incident(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return incident(v).size(); }
  bool forbids(EdgeId a, EdgeId b) const { return a != b && forbidden_.contains(Transition(a, b)); }
  // The single vertex two non-parallel edges share, if any.
  std::optional<VertexId> shared_vertex(EdgeId a, EdgeId b) const;
  bool involved(const VertexId& v) const;

  // Throws NetworkError unless every vertex other than s and t has degree 3 or 4.
  void check_gadget_degrees() const;

  friend bool operator==(const PaftInstance& a, const PaftInstance& b);

 private:
  UndirectedGraph graph_;
  std::set<Transition> forbidden_;
  VertexId s_;
  VertexId t_;
  std::optional<Rotation> rotation_;
  std::map<VertexId, std::vector<EdgeId>> incident_;
  std::map<EdgeId, std::size_t> edge_index_;
};

// Removes every non-terminal vertex of degree at most 2, repeatedly, always
// handling the smallest such vertex id first:
//  - degree 0: the vertex is dropped;
//  - degree 1: vertex, edge and transitions using the edge are dropped;
//  - degree 2 with a forbidden pair: vertex, both edges and their transitions;
//  - degree 2 otherwise: the vertex is smoothed into a new edge that inherits
//    the forbidden transitions of both old edges at the far endpoints.
// Smoothing between coincident neighbors would make a loop, which is dropped
// together with its transitions. Transitions that end up between parallel
// edges cannot occur on a simple path and are dropped as well. The rotation,
// if present, is updated in place of the replaced edges.
PaftInstance degree_reduce(const PaftInstance& instance);

}  // namespace gainflow
