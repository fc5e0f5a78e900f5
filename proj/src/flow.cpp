#include "gainflow/flow.hpp"

namespace gainflow {
namespace {

void check_known_edges(const AdditiveNetwork& network, const GeneralFlow& flow) {
  for (const auto& [id, value] : flow.assignment())
    if (!network.has_edge(id)) throw NetworkError("flow references unknown edge " + to_string(id));
}

}  // namespace

Rational delivered(const DirectedEdge& edge, const Rational& flow) {
  if (flow.sign() <= 0) return {};
  return max(Rational(), flow + edge.gain);
}

ValidityReport validate_flow(const AdditiveNetwork& network, const GeneralFlow& flow) {
  check_known_edges(network, flow);
  ValidityReport report;
  for (const auto& e : network.edges())
    if (flow.at(e.id) > e.capacity) report.capacity_violations.push_back(e.id);

  const auto vertices = network.vertices();
  const auto edges = network.edges();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (network.is_terminal(vertices[v])) continue;
    Rational in;
    Rational out;
    for (auto i : network.in_edges(v)) in += delivered(edges[i], flow.at(edges[i].id));
    for (auto i : network.out_edges(v)) out += flow.at(edges[i].id);
    if (in != out) report.conservation_violations.push_back({vertices[v], in, out});
  }
  return report;
}

Rational flow_value(const AdditiveNetwork& network, const GeneralFlow& flow, FlowObjective which) {
  check_known_edges(network, flow);
  Rational total;
  for (const auto& e : network.edges()) {
    if (which == FlowObjective::InFlow && network.is_sink(e.head)) total += delivered(e, flow.at(e.id));
    if (which == FlowObjective::OutFlow && network.is_source(e.tail)) total += flow.at(e.id);
  }
  return total;
}

NegativeReversedCapacity::NegativeReversedCapacity(EdgeId e)
    : NetworkError("reversed capacity u + g of edge " + to_string(e) + " is negative"), edge(e) {}

AdditiveNetwork reverse_network(const AdditiveNetwork& network) {
  std::vector<DirectedEdge> edges;
  edges.reserve(network.edge_count());
  for (const auto& e : network.edges()) {
    Rational capacity = e.capacity + e.gain;
    if (capacity.sign() < 0) throw NegativeReversedCapacity(e.id);
    edges.push_back({e.id, e.head, e.tail, std::move(capacity), e.cost, -e.gain});
  }
  const auto as_vector = [](std::span<const VertexId> ids) { return std::vector<VertexId>(ids.begin(), ids.end()); };
  return AdditiveNetwork(as_vector(network.vertices()), std::move(edges), as_vector(network.sinks()),
                         as_vector(network.sources()), network.rotation(), {.allow_self_loops = true});
}

GeneralFlow reverse_flow(const AdditiveNetwork& network, const GeneralFlow& flow) {
  check_known_edges(network, flow);
  GeneralFlow reversed;
  for (const auto& [id, value] : flow.assignment()) {
    const auto& e = network.edge(id);
    if (e.gain.sign() < 0) throw NetworkError("reverse_flow needs non-negative gains; edge " + to_string(id));
    reversed.set(id, value + e.gain);
  }
  return reversed;
}

}  // namespace gainflow
