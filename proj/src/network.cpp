#include "gainflow/network.hpp"

#include <algorithm>
#include <set>

namespace gainflow {
namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> ids, const char* what) {
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
    throw NetworkError(std::string("duplicate ") + what + " '" + *dup + "'");
  return ids;
}

}  // namespace

AdditiveNetwork::AdditiveNetwork(std::vector<VertexId> vertices, std::vector<DirectedEdge> edges,
                                 std::vector<VertexId> sources, std::vector<VertexId> sinks,
                                 std::optional<Rotation> rotation, NetworkOptions options)
    : vertices_(sorted_unique(std::move(vertices), "vertex")),
      edges_(std::move(edges)),
      sources_(sorted_unique(std::move(sources), "source")),
      sinks_(sorted_unique(std::move(sinks), "sink")),
      rotation_(std::move(rotation)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw NetworkError("empty vertex id");
    vertex_index_.emplace(vertices_[i], i);
  }

  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!edge_index_.emplace(e.id.value, i).second) throw NetworkError("duplicate edge id " + to_string(e.id));
    if (!has_vertex(e.tail) || !has_vertex(e.head))
      throw NetworkError("edge " + to_string(e.id) + " has a dangling endpoint");
    if (e.tail == e.head && !options.allow_self_loops) throw NetworkError("self-loop on edge " + to_string(e.id));
    if (e.capacity.sign() < 0) throw NetworkError("negative capacity on edge " + to_string(e.id));
    out_[vertex_index(e.tail)].push_back(i);
    in_[vertex_index(e.head)].push_back(i);
  }

  for (const auto& v : sources_)
    if (!has_vertex(v)) throw NetworkError("unknown source '" + v + "'");
  for (const auto& v : sinks_) {
    if (!has_vertex(v)) throw NetworkError("unknown sink '" + v + "'");
    if (std::binary_search(sources_.begin(), sources_.end(), v))
      throw NetworkError("vertex '" + v + "' is both source and sink");
  }

  if (rotation_) {
    for (const auto& [v, order] : *rotation_) {
      if (!has_vertex(v)) throw NetworkError("rotation for unknown vertex '" + v + "'");
      const auto vi = vertex_index(v);
      std::multiset<EdgeId> expected;
      for (auto i : out_[vi]) expected.insert(edges_[i].id);
      for (auto i : in_[vi]) expected.insert(edges_[i].id);
      std::multiset<EdgeId> listed(order.begin(), order.end());
      if (expected != listed) throw NetworkError("rotation at '" + v + "' does not list exactly its incident edges");
    }
    for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
      if (!out_[vi].empty() || !in_[vi].empty()) {
        if (!rotation_->contains(vertices_[vi]))
          throw NetworkError("rotation missing for vertex '" + vertices_[vi] + "'");
      }
    }
  }
}

std::size_t AdditiveNetwork::vertex_index(const VertexId& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw NetworkError("unknown vertex '" + v + "'");
  return it->second;
}

std::size_t AdditiveNetwork::edge_index(EdgeId e) const {
  auto it = edge_index_.find(e.value);
  if (it == edge_index_.end()) throw NetworkError("unknown edge " + to_string(e));
  return it->second;
}

bool AdditiveNetwork::is_source(const VertexId& v) const {
  return std::binary_search(sources_.begin(), sources_.end(), v);
}

bool AdditiveNetwork::is_sink(const VertexId& v) const { return std::binary_search(sinks_.begin(), sinks_.end(), v); }

bool operator==(const AdditiveNetwork& a, const AdditiveNetwork& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.sources_ == b.sources_ && a.sinks_ == b.sinks_ &&
         a.rotation_ == b.rotation_;
}

void validate_path(const AdditiveNetwork& network, const DirectedPath& path) {
  if (path.edges.empty()) throw NetworkError("empty path");
  std::set<VertexId> seen;
  const VertexId* previous_head = nullptr;
  for (auto id : path.edges) {
    const auto& e = network.edge(id);
    if (previous_head) {
      if (*previous_head != e.tail) throw NetworkError("path is not contiguous at edge " + to_string(id));
    } else {
      seen.insert(e.tail);
    }
    if (!seen.insert(e.head).second) throw NetworkError("path repeats vertex '" + e.head + "'");
    previous_head = &e.head;
  }
}

PathFlow::PathFlow(DirectedPath p, Rational s) : path(std::move(p)), seed(std::move(s)) {
  if (seed.sign() <= 0) throw NetworkError("seed flow must be positive");
}

GeneralFlow::GeneralFlow(std::map<EdgeId, Rational> assignment) {
  for (auto& [e, value] : assignment) set(e, value);
}

Rational GeneralFlow::at(EdgeId e) const {
  auto it = assignment_.find(e);
  return it == assignment_.end() ? Rational() : it->second;
}

void GeneralFlow::set(EdgeId e, const Rational& value) {
  if (value.sign() < 0) throw NetworkError("negative flow on edge " + to_string(e));
  if (value.is_zero())
    assignment_.erase(e);
  else
    assignment_[e] = value;
}

}  // namespace gainflow
