#pragma once

#include <vector>

#include "gainflow/network.hpp"

namespace gainflow {

struct ConservationViolation {
  VertexId vertex;
  Rational delivered_in;  // sum of max(0, f + g) over used incoming edges
  Rational sent_out;      // sum of f over outgoing edges

  friend bool operator==(const ConservationViolation&, const ConservationViolation&) = default;
};

struct ValidityReport {
  std::vector<EdgeId> capacity_violations;
  std::vector<ConservationViolation> conservation_violations;

  bool feasible() const { return capacity_violations.empty() && conservation_violations.empty(); }
};

// Amount an edge hands to its head: max(0, f + g) when used, zero otherwise.
Rational delivered(const DirectedEdge& edge, const Rational& flow);

// Checks 0 <= f <= u per edge and conservation at every vertex that is
// neither a source nor a sink. Throws NetworkError for unknown edge ids.
ValidityReport validate_flow(const AdditiveNetwork& network, const GeneralFlow& flow);

enum class FlowObjective { InFlow, OutFlow };

// InFlow: delivered amount over edges entering sinks. OutFlow: flow on edges
// leaving sources. Feasibility is not re-checked.
Rational flow_value(const AdditiveNetwork& network, const GeneralFlow& flow, FlowObjective which);

// Reverses every edge, swaps sources and sinks, sets u' = u + g and g' = -g.
// Costs and ids carry over. Throws NegativeReversedCapacity if u + g < 0.
class NegativeReversedCapacity : public NetworkError {
 public:
  explicit NegativeReversedCapacity(EdgeId edge);
  EdgeId edge;
};

AdditiveNetwork reverse_network(const AdditiveNetwork& network);

// Maps a flow of a network without lossy edges onto its reversal: every used
// edge carries its delivered amount f + g, so the reversed out-flow equals the
// original in-flow. Throws NetworkError if some edge has negative gain.
GeneralFlow reverse_flow(const AdditiveNetwork& network, const GeneralFlow& flow);

}  // namespace gainflow
