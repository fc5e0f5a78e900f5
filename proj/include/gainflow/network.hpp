#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gainflow/rational.hpp"

namespace gainflow {

using VertexId = std::string;

struct EdgeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, EdgeId id) { return os << id.value; }
inline std::string to_string(EdgeId id) { return std::to_string(id.value); }

class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DirectedEdge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  Rational capacity;
  Rational cost;  // per unit of flow entering the edge
  Rational gain;  // added to the flow once, if the edge is used

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Cyclic order of incident edge ids per vertex.
using Rotation = std::map<VertexId, std::vector<EdgeId>>;

struct NetworkOptions {
  bool allow_self_loops = false;
};

// Directed network with additive gains. Immutable after construction; the
// constructor checks every structural invariant and throws NetworkError.
// Vertices are kept sorted by id and edges sorted by edge id, which is the
// canonical order used by every algorithm for tie-breaking.
class AdditiveNetwork {
 public:
  AdditiveNetwork(std::vector<VertexId> vertices, std::vector<DirectedEdge> edges, std::vector<VertexId> sources,
                  std::vector<VertexId> sinks, std::optional<Rotation> rotation = std::nullopt,
                  NetworkOptions options = {});

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const DirectedEdge> edges() const { return edges_; }
  std::span<const VertexId> sources() const { return sources_; }
  std::span<const VertexId> sinks() const { return sinks_; }
  const std::optional<Rotation>& rotation() const { return rotation_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexId& v) const { return vertex_index_.contains(v); }
  bool has_edge(EdgeId e) const { return edge_index_.contains(e.value); }
  std::size_t vertex_index(const VertexId& v) const;
  std::size_t edge_index(EdgeId e) const;
  const DirectedEdge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  bool is_source(const VertexId& v) const;
  bool is_sink(const VertexId& v) const;
  bool is_terminal(const VertexId& v) const { return is_source(v) || is_sink(v); }

  // Edge positions (indices into edges()) by vertex position, in id order.
  std::span<const std::size_t> out_edges(std::size_t vertex) const { return out_[vertex]; }
  std::span<const std::size_t> in_edges(std::size_t vertex) const { return in_[vertex]; }

  friend bool operator==(const AdditiveNetwork& a, const AdditiveNetwork& b);

 private:
  std::vector<VertexId> vertices_;
  std::vector<DirectedEdge> edges_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> sinks_;
  std::optional<Rotation> rotation_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<std::uint32_t, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Ordered edge sequence e_1..e_k forming a simple directed path.
struct DirectedPath {
  std::vector<EdgeId> edges;

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

// Throws NetworkError unless the path is non-empty, references known edges,
// is contiguous and repeats no vertex.
void validate_path(const AdditiveNetwork& network, const DirectedPath& path);

struct PathFlow {
  PathFlow(DirectedPath path, Rational seed);

  DirectedPath path;
  Rational seed;
};

// Per-edge flow; edges missing from the map carry zero.
class GeneralFlow {
 public:
  GeneralFlow() = default;
  explicit GeneralFlow(std::map<EdgeId, Rational> assignment);

  const std::map<EdgeId, Rational>& assignment() const { return assignment_; }
  Rational at(EdgeId e) const;
  // Zero values are dropped so that equal flows compare equal.
  void set(EdgeId e, const Rational& value);

  friend bool operator==(const GeneralFlow&, const GeneralFlow&) = default;

 private:
  std::map<EdgeId, Rational> assignment_;
};

}  // namespace gainflow

template <>
struct std::hash<gainflow::EdgeId> {
  std::size_t operator()(gainflow::EdgeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
