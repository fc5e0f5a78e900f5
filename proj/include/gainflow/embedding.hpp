#pragma once

#include <cstddef>

#include "gainflow/undirected.hpp"

namespace gainflow {

struct EmbeddingReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  // Isolated vertices count as one face each.
  std::size_t faces = 0;
  // Sum of per-component genera.
  int genus = 0;
  bool planar = true;
  // Half-edges visited while tracing; always 2 * edges.
  std::size_t side_visits = 0;
};

// Traces the faces of the embedding given by a rotation system (each edge
// listed at both endpoints, twice at a loop's vertex) and applies Euler's
// formula V - E + F = 2 - 2g per connected component. Throws NetworkError if
// the rotation does not match the incidences exactly.
EmbeddingReport verify_rotation(const UndirectedGraph& graph, const Rotation& rotation);

// Underlying undirected graph of a directed network, edge ids preserved.
UndirectedGraph underlying_graph(const AdditiveNetwork& network);

}  // namespace gainflow
