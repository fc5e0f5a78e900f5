#include "gainflow/dot.hpp"

#include <sstream>

namespace gainflow {
namespace {

std::string quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const AdditiveNetwork& network, const OriginMap* origins) {
  std::ostringstream out;
  out << "digraph network {\n";
  std::map<std::string, std::vector<VertexId>> clusters;
  std::vector<VertexId> loose;
  for (const auto& v : network.vertices()) {
    if (origins) {
      auto it = origins->vertices.find(v);
      if (it != origins->vertices.end() && it->second.element.starts_with("v:")) {
        clusters[it->second.element].push_back(v);
        continue;
      }
    }
    loose.push_back(v);
  }
  std::size_t k = 0;
  for (const auto& [element, members] : clusters) {
    out << "  subgraph cluster_" << k++ << " {\n    label=" << quote(element.substr(2)) << ";\n";
    for (const auto& v : members) out << "    " << quote(v) << ";\n";
    out << "  }\n";
  }
  for (const auto& v : loose) {
    out << "  " << quote(v);
    if (network.is_source(v)) out << " [shape=box]";
    if (network.is_sink(v)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& e : network.edges())
    out << "  " << quote(e.tail) << " -> " << quote(e.head) << " [label=\"" << e.capacity.str() << "/"
        << e.cost.str() << "/" << e.gain.str() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const PaftInstance& instance) {
  std::ostringstream out;
  out << "graph paft {\n";
  for (const auto& v : instance.vertices()) {
    out << "  " << quote(v);
    if (v == instance.s() || v == instance.t()) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& e : instance.edges())
    out << "  " << quote(e.a) << " -- " << quote(e.b) << " [label=\"" << e.id << "\"];\n";
  for (const auto& tr : instance.forbidden()) out << "  // forbid " << tr.first << " " << tr.second << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace gainflow
