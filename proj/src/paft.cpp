#include "gainflow/paft.hpp"

#include <algorithm>

namespace gainflow {

PaftInstance::PaftInstance(std::vector<VertexId> vertices, std::vector<UndirectedEdge> edges,
                           std::vector<Transition> forbidden, VertexId s, VertexId t, std::optional<Rotation> rotation)
    : s_(std::move(s)), t_(std::move(t)), rotation_(std::move(rotation)) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw NetworkError("duplicate vertex in PAFT instance");
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  graph_ = {std::move(vertices), std::move(edges)};

  for (const auto& v : graph_.vertices) incident_[v];
  for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
    const auto& e = graph_.edges[i];
    if (!edge_index_.emplace(e.id, i).second) throw NetworkError("duplicate edge id " + to_string(e.id));
    if (!has_vertex(e.a) || !has_vertex(e.b)) throw NetworkError("edge " + to_string(e.id) + " has a dangling endpoint");
    if (e.a == e.b) throw NetworkError("self-loop on edge " + to_string(e.id));
    incident_[e.a].push_back(e.id);
    incident_[e.b].push_back(e.id);
  }

  if (!has_vertex(s_) || !has_vertex(t_)) throw NetworkError("unknown terminal");
  if (s_ == t_) throw NetworkError("s and t coincide");

  for (const auto& tr : forbidden) {
    if (tr.first == tr.second) throw NetworkError("forbidden transition repeats edge " + to_string(tr.first));
    const auto shared = shared_vertex(tr.first, tr.second);
    if (!shared)
      throw NetworkError("forbidden edges " + to_string(tr.first) + " and " + to_string(tr.second) +
                         " do not share exactly one vertex");
    if (*shared == s_ || *shared == t_)
      throw NetworkError("terminal '" + *shared + "' is involved in a forbidden transition");
    forbidden_.insert(tr);
  }

  if (rotation_) {
    for (const auto& [v, order] : *rotation_) {
      if (!has_vertex(v)) throw NetworkError("rotation for unknown vertex '" + v + "'");
      auto listed = order;
      auto expected = incident_.at(v);
      std::sort(listed.begin(), listed.end());
      if (listed != expected) throw NetworkError("rotation at '" + v + "' does not list exactly its incident edges");
    }
    for (const auto& [v, inc] : incident_)
      if (!inc.empty() && !rotation_->contains(v)) throw NetworkError("rotation missing for vertex '" + v + "'");
  }
}

bool PaftInstance::has_vertex(const VertexId& v) const {
  return std::binary_search(graph_.vertices.begin(), graph_.vertices.end(), v);
}

const UndirectedEdge& PaftInstance::edge(EdgeId id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw NetworkError("unknown edge " + to_string(id));
  return graph_.edges[it->second];
}

const std::vector<EdgeId>& PaftInstance::incident(const VertexId& v) const {
  auto it = incident_.find(v);
  if (it == incident_.end()) throw NetworkError("unknown vertex '" + v + "'");
  return it->second;
}

std::optional<VertexId> PaftInstance::shared_vertex(EdgeId a, EdgeId b) const {
  const auto& x = edge(a);
  const auto& y = edge(b);
  const bool share_a = y.touches(x.a);
  const bool share_b = y.touches(x.b);
  if (share_a == share_b) return std::nullopt;
  return share_a ? x.a : x.b;
}

bool PaftInstance::involved(const VertexId& v) const {
  return std::any_of(forbidden_.begin(), forbidden_.end(),
                     [&](const Transition& tr) { return shared_vertex(tr.first, tr.second) == v; });
}

void PaftInstance::check_gadget_degrees() const {
  for (const auto& v : graph_.vertices) {
    if (v == s_ || v == t_) continue;
    const auto d = degree(v);
    if (d != 3 && d != 4)
      throw NetworkError("vertex '" + v + "' has degree " + std::to_string(d) + "; gadgets need degree 3 or 4");
  }
}

bool operator==(const PaftInstance& a, const PaftInstance& b) {
  return a.graph_ == b.graph_ && a.forbidden_ == b.forbidden_ && a.s_ == b.s_ && a.t_ == b.t_ &&
         a.rotation_ == b.rotation_;
}

namespace {

struct WorkingInstance {
  std::set<VertexId> vertices;
  std::map<EdgeId, UndirectedEdge> edges;
  std::set<Transition> forbidden;
  std::optional<Rotation> rotation;
  std::uint32_t next_id = 1;

  std::vector<EdgeId> incident(const VertexId& v) const {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : edges)
      if (e.touches(v)) out.push_back(id);
    return out;
  }

  void drop_edge(EdgeId id) {
    const auto e = edges.at(id);
    edges.erase(id);
    std::erase_if(forbidden, [&](const Transition& tr) { return tr.first == id || tr.second == id; });
    if (rotation) {
      for (const auto& v : {e.a, e.b}) {
        auto it = rotation->find(v);
        if (it != rotation->end()) std::erase(it->second, id);
      }
    }
  }

  void drop_vertex(const VertexId& v) {
    vertices.erase(v);
    if (rotation) rotation->erase(v);
  }

  bool parallel(EdgeId a, EdgeId b) const {
    const auto& x = edges.at(a);
    const auto& y = edges.at(b);
    return (x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a);
  }

  void smooth(const VertexId& v, EdgeId first, EdgeId second) {
    const VertexId w = edges.at(first).other(v);
    const VertexId u = edges.at(second).other(v);
    if (w == u) {
      drop_edge(first);
      drop_edge(second);
      drop_vertex(v);
      return;
    }
    const EdgeId merged{next_id++};
    edges.emplace(merged, UndirectedEdge{merged, w, u});
    std::set<Transition> rewritten;
    for (const auto& tr : forbidden) {
      auto replace = [&](EdgeId id) { return id == first || id == second ? merged : id; };
      const EdgeId a = replace(tr.first);
      const EdgeId b = replace(tr.second);
      if (a == b) continue;
      rewritten.insert(Transition(a, b));
    }
    forbidden = std::move(rewritten);
    std::erase_if(forbidden, [&](const Transition& tr) { return parallel(tr.first, tr.second); });
    if (rotation) {
      std::replace((*rotation)[w].begin(), (*rotation)[w].end(), first, merged);
      std::replace((*rotation)[u].begin(), (*rotation)[u].end(), second, merged);
    }
    edges.erase(first);
    edges.erase(second);
    drop_vertex(v);
  }
};

}  // namespace

PaftInstance degree_reduce(const PaftInstance& instance) {
  WorkingInstance work;
  work.vertices.insert(instance.vertices().begin(), instance.vertices().end());
  for (const auto& e : instance.edges()) {
    work.edges.emplace(e.id, e);
    work.next_id = std::max(work.next_id, e.id.value + 1);
  }
  work.forbidden = instance.forbidden();
  work.rotation = instance.rotation();

  while (true) {
    std::optional<VertexId> target;
    std::vector<EdgeId> incident;
    for (const auto& v : work.vertices) {
      if (v == instance.s() || v == instance.t()) continue;
      incident = work.incident(v);
      if (incident.size() <= 2) {
        target = v;
        break;
      }
    }
    if (!target) break;
    const VertexId v = *target;
    if (incident.size() == 2 && !work.forbidden.contains(Transition(incident[0], incident[1]))) {
      work.smooth(v, incident[0], incident[1]);
      continue;
    }
    for (auto id : incident) work.drop_edge(id);
    work.drop_vertex(v);
  }

  std::vector<UndirectedEdge> edges;
  for (const auto& [id, e] : work.edges) edges.push_back(e);
  return PaftInstance({work.vertices.begin(), work.vertices.end()}, std::move(edges),
                      {work.forbidden.begin(), work.forbidden.end()}, instance.s(), instance.t(),
                      std::move(work.rotation));
}

}  // namespace gainflow
