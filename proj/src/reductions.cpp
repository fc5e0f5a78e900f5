#include "gainflow/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "gainflow/path_flow.hpp"

namespace gainflow {
namespace {

// Edge of the crossing center; ports are numbered 1..4, 0 is the center.
struct CrossingEdge {
  int tail;
  int head;
  Rational capacity;
  Rational gain;
  std::string role;
};

// Opposite pairs (1,4) and (2,3). Entering B+1 through a narrow in-edge
// leaves 1, which only a narrow exit (gain 0, capacity 1) lets through; the
// wide in-edges leave 3, which a wide exit (gain -2) brings down to 1 and a
// narrow exit rejects by capacity.
std::vector<CrossingEdge> crossing_edges(const GadgetParams& params) {
  const Rational& B = params.B;
  const Rational full = B + 1;
  return {
      {1, 0, full, -B, "crossing-in-narrow"},
      {4, 0, full, -B, "crossing-in-narrow"},
      {2, 0, full, -(B - 2), "crossing-in-wide"},
      {3, 0, full, -(B - 2), "crossing-in-wide"},
      {0, 1, Rational(1), Rational(0), "crossing-out-narrow"},
      {0, 4, Rational(1), Rational(0), "crossing-out-narrow"},
      {0, 2, full, Rational(-2), "crossing-out-wide"},
      {0, 3, full, Rational(-2), "crossing-out-wide"},
  };
}

std::string vertex_element(const VertexId& v) { return "v:" + v; }
std::string edge_element(EdgeId e) { return "e:" + to_string(e); }

class PaftBuilder {
 public:
  PaftBuilder(const PaftInstance& instance, const GadgetParams& params) : instance_(instance), params_(params) {
    for (const auto& v : instance.vertices()) {
      if (!instance.involved(v)) continue;
      involved_.insert(v);
    }
  }

  ReducedNetwork build() {
    const Rational& B = params_.B;
    const Rational full = B + 1;

    add_vertex(reduced_source, {"extra", "super-source"});
    add_vertex(reduced_sink, {"extra", "super-sink"});
    for (const auto& v : instance_.vertices()) {
      if (!involved_.contains(v)) {
        add_vertex(plain(v), {vertex_element(v), "plain-vertex"});
        continue;
      }
      for (auto e : instance_.incident(v)) add_vertex(port(v, e), {vertex_element(v), "port"});
    }

    add_edge(reduced_source, entry(instance_.s(), std::nullopt), full, 0, B, {"extra", "source-edge"});
    add_edge(exit_vertex(instance_.t()), reduced_sink, full, 0, 0, {"extra", "sink-edge"});

    for (const auto& e : instance_.edges()) {
      directed_copy(e.a, e.b, e.id);
      directed_copy(e.b, e.a, e.id);
    }

    for (const auto& v : instance_.vertices())
      if (involved_.contains(v)) gadget(v);

    OriginMap origins = std::move(origins_);
    origins.notes.push_back(
        "plain-gadget subdivision costs are +1 and -(B+1): a full B+1 transit is free and a transit entering B+1-x "
        "costs B*x");
    origins.notes.push_back("forbidden transits through a crossing center are blocked by dead-end or capacity");
    return {AdditiveNetwork({vertices_.begin(), vertices_.end()}, std::move(edges_), {reduced_source}, {reduced_sink}),
            std::move(origins)};
  }

 private:
  static VertexId plain(const VertexId& v) { return "p:" + v; }
  static VertexId port(const VertexId& v, EdgeId e) { return "g:" + v + ":" + to_string(e); }

  // Vertex where flow arriving at v along edge e enters v's gadget.
  VertexId entry(const VertexId& v, std::optional<EdgeId> e) const {
    if (!involved_.contains(v)) return plain(v);
    return port(v, *e);
  }

  // s and t are never involved, so their gadget is a single vertex.
  VertexId exit_vertex(const VertexId& v) const { return plain(v); }

  void add_vertex(const VertexId& v, Origin origin) {
    vertices_.insert(v);
    origins_.vertices.emplace(v, std::move(origin));
  }

  void add_edge(const VertexId& tail, const VertexId& head, const Rational& capacity, const Rational& cost,
                const Rational& gain, Origin origin) {
    const EdgeId id{next_id_++};
    edges_.push_back({id, tail, head, capacity, cost, gain});
    origins_.edges.emplace(id, std::move(origin));
  }

  // Copy of undirected edge e leaving `from` towards `to`.
  void directed_copy(const VertexId& from, const VertexId& to, EdgeId e) {
    const Rational& B = params_.B;
    const Rational full = B + 1;
    const VertexId target = entry(to, e);
    if (involved_.contains(from)) {
      add_edge(port(from, e), target, full, 0, B, {edge_element(e), "port-exit"});
      return;
    }
    const VertexId mid = "w:" + from + ":" + to_string(e);
    add_vertex(mid, {vertex_element(from), "subdivision"});
    add_edge(plain(from), mid, full, 1, -B, {edge_element(e), "plain-exit"});
    add_edge(mid, target, full, -full, B, {edge_element(e), "plain-entry"});
  }

  void gadget(const VertexId& v) {
    const Rational& B = params_.B;
    const Rational full = B + 1;
    const auto& incident = instance_.incident(v);
    std::set<Transition> via_center;

    if (incident.size() == 4) {
      const auto& rotation = instance_.rotation();
      if (!rotation || !rotation->contains(v))
        throw NetworkError("rotation needed at degree-4 vertex '" + v + "' involved in forbidden transitions");
      const auto& order = rotation->at(v);
      const Transition first(order[0], order[2]);
      const Transition second(order[1], order[3]);
      if (!instance_.forbidden().contains(first) && !instance_.forbidden().contains(second)) {
        // Ports 1..4 = order[0], order[1], order[3], order[2], so that the
        // opposite pairs become (1,4) and (2,3).
        const VertexId center = "c:" + v;
        add_vertex(center, {vertex_element(v), "crossing-center"});
        const std::array<EdgeId, 5> at{EdgeId{}, order[0], order[1], order[3], order[2]};
        auto name = [&](int k) { return k == 0 ? center : port(v, at[static_cast<std::size_t>(k)]); };
        for (const auto& ce : crossing_edges(params_))
          add_edge(name(ce.tail), name(ce.head), ce.capacity, 0, ce.gain, {vertex_element(v), ce.role});
        via_center = {first, second};
      }
    }

    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const Transition pair(incident[i], incident[j]);
        if (via_center.contains(pair) || instance_.forbidden().contains(pair)) continue;
        add_edge(port(v, incident[i]), port(v, incident[j]), full, 0, -B, {vertex_element(v), "internal"});
        add_edge(port(v, incident[j]), port(v, incident[i]), full, 0, -B, {vertex_element(v), "internal"});
      }
  }

  const PaftInstance& instance_;
  const GadgetParams& params_;
  std::set<VertexId> involved_;
  std::set<VertexId> vertices_;
  std::vector<DirectedEdge> edges_;
  OriginMap origins_;
  std::uint32_t next_id_ = 1;
};

std::string var_name(int x) { return "x" + std::to_string(x); }

}  // namespace

void check_gadget_params(const GadgetParams& params) {
  if (params.B < 3) throw NetworkError("gadget parameter B must be at least 3, got " + params.B.str());
}

ReducedNetwork paft_to_network(const PaftInstance& instance, const GadgetParams& params) {
  check_gadget_params(params);
  instance.check_gadget_degrees();
  return PaftBuilder(instance, params).build();
}

ReducedNetwork sat_to_network(const CnfFormula& formula) {
  std::vector<VertexId> vertices;
  std::vector<DirectedEdge> edges;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  OriginMap origins;
  std::uint32_t id = 1;
  auto vertex = [&](const VertexId& v, Origin origin) {
    vertices.push_back(v);
    origins.vertices.emplace(v, std::move(origin));
  };
  auto edge = [&](const VertexId& tail, const VertexId& head, const Rational& capacity, const Rational& gain,
                  Origin origin) {
    const EdgeId e{id++};
    edges.push_back({e, tail, head, capacity, Rational(0), gain});
    origins.edges.emplace(e, std::move(origin));
  };

  for (int x = 1; x <= formula.variable_count(); ++x) {
    const std::string element = "var:" + var_name(x);
    const VertexId source = "src:" + var_name(x);
    const VertexId merge = "merge:" + var_name(x);
    const VertexId sink = "sink:" + var_name(x);
    vertex(source, {element, "variable-source"});
    vertex(literal_vertex(x), {element, "literal"});
    vertex(literal_vertex(-x), {element, "literal"});
    vertex(merge, {element, "merge"});
    vertex(sink, {element, "variable-sink"});
    sources.push_back(source);
    sinks.push_back(sink);
    edge(source, literal_vertex(x), 1, formula.occurrences(x), {element, "select"});
    edge(source, literal_vertex(-x), 1, formula.occurrences(-x), {element, "select"});
    edge(literal_vertex(x), merge, 1, 1, {element, "merge-in"});
    edge(literal_vertex(-x), merge, 1, 1, {element, "merge-in"});
    edge(merge, sink, 2, 0, {element, "merge-out"});
  }
  const auto& clauses = formula.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const std::string element = "clause:C" + std::to_string(i + 1);
    vertex(clause_vertex(i), {element, "clause"});
    vertex("sink:C" + std::to_string(i + 1), {element, "clause-sink"});
    sinks.push_back("sink:C" + std::to_string(i + 1));
    for (auto literal : clauses[i]) edge(literal_vertex(literal), clause_vertex(i), 1, 0, {element, "occurrence"});
  }
  for (std::size_t i = 0; i < clauses.size(); ++i)
    edge(clause_vertex(i), "sink:C" + std::to_string(i + 1), 1, 0, {"clause:C" + std::to_string(i + 1), "clause-out"});

  return {AdditiveNetwork(std::move(vertices), std::move(edges), std::move(sources), std::move(sinks)),
          std::move(origins)};
}

Rational sat_target(const CnfFormula& formula) {
  return Rational(2 * formula.variable_count() + static_cast<std::int64_t>(formula.clauses().size()));
}

GeneralFlow assignment_flow(const CnfFormula& formula, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) != formula.variable_count() || !one_in_three(formula, assignment))
    throw std::invalid_argument("assignment_flow needs a 1-in-3 assignment");
  const auto reduced = sat_to_network(formula);
  const auto& n = reduced.network;
  GeneralFlow flow;
  auto edge_between = [&](const VertexId& tail, const VertexId& head) {
    for (const auto& e : n.edges())
      if (e.tail == tail && e.head == head) return e.id;
    throw std::logic_error("missing edge " + tail + " -> " + head);
  };
  for (int x = 1; x <= formula.variable_count(); ++x) {
    const Literal chosen = assignment[static_cast<std::size_t>(x - 1)] ? x : -x;
    flow.set(edge_between("src:" + var_name(x), literal_vertex(chosen)), 1);
    flow.set(edge_between(literal_vertex(chosen), "merge:" + var_name(x)), 1);
    flow.set(edge_between("merge:" + var_name(x), "sink:" + var_name(x)), 2);
  }
  for (std::size_t i = 0; i < formula.clauses().size(); ++i) {
    for (auto literal : formula.clauses()[i])
      if (literal_value(assignment, literal)) flow.set(edge_between(literal_vertex(literal), clause_vertex(i)), 1);
    flow.set(edge_between(clause_vertex(i), "sink:C" + std::to_string(i + 1)), 1);
  }
  return flow;
}

const char* to_string(CrossingTransit::Outcome outcome) {
  switch (outcome) {
    case CrossingTransit::Outcome::Free:
      return "free";
    case CrossingTransit::Outcome::DeadEnd:
      return "dead-end";
    case CrossingTransit::Outcome::CapacityBlocked:
      return "capacity-blocked";
    case CrossingTransit::Outcome::Costly:
      return "costly";
  }
  return "?";
}

GadgetReport verify_crossing_gadget(const GadgetParams& params) {
  check_gadget_params(params);
  const auto spec = crossing_edges(params);
  auto name = [](int k) { return k == 0 ? VertexId("w") : "v" + std::to_string(k); };
  std::vector<DirectedEdge> edges;
  std::uint32_t id = 1;
  for (const auto& ce : spec) edges.push_back({EdgeId{id++}, name(ce.tail), name(ce.head), ce.capacity, 0, ce.gain});
  const AdditiveNetwork gadget({"v1", "v2", "v3", "v4", "w"}, edges, {}, {});
  auto edge_id = [&](int tail, int head) {
    for (const auto& e : edges)
      if (e.tail == name(tail) && e.head == name(head)) return e.id;
    throw std::logic_error("crossing gadget lacks an edge");
  };

  GadgetReport report;
  report.B = params.B;
  report.pass = true;
  const Rational full = params.B + 1;
  for (const Rational& x : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    for (int from = 1; from <= 4; ++from)
      for (int to = 1; to <= 4; ++to) {
        if (from == to) continue;
        CrossingTransit transit;
        transit.from = from;
        transit.to = to;
        transit.entering = full - x;
        const PathFlow pf{DirectedPath{{edge_id(from, 0), edge_id(0, to)}}, transit.entering};
        const auto check = check_path_flow(gadget, pf, CapacityMode::WithCapacity);
        if (check.status == PathFlowCheck::Status::DeadEnd) {
          transit.outcome = CrossingTransit::Outcome::DeadEnd;
        } else if (check.status == PathFlowCheck::Status::CapacityViolation) {
          transit.outcome = CrossingTransit::Outcome::CapacityBlocked;
        } else {
          transit.exit = accumulate(gadget, pf.path, pf.seed, 3);
          transit.cost = path_cost(gadget, pf);
          const bool free = *transit.exit == transit.entering - params.B && transit.cost->is_zero();
          transit.outcome = free ? CrossingTransit::Outcome::Free : CrossingTransit::Outcome::Costly;
        }
        const bool opposite = from + to == 5;
        const bool ok = opposite ? transit.outcome == CrossingTransit::Outcome::Free
                                 : transit.outcome == CrossingTransit::Outcome::DeadEnd ||
                                       transit.outcome == CrossingTransit::Outcome::CapacityBlocked;
        report.pass = report.pass && ok;
        report.transits.push_back(std::move(transit));
      }
  }
  return report;
}

}  // namespace gainflow
