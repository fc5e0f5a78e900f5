#pragma once

#include <map>
#include <string>
#include <vector>

#include "gainflow/cnf.hpp"
#include "gainflow/flow.hpp"
#include "gainflow/paft.hpp"

namespace gainflow {

struct GadgetParams {
  Rational B = 4;
};

// Throws NetworkError unless B >= 3.
void check_gadget_params(const GadgetParams& params);

// Where a produced vertex or edge came from. `element` names the source
// element ("v:<vertex>", "e:<edge id>", "var:x3", "clause:C2" or "extra"),
// `role` the part it plays inside its gadget.
struct Origin {
  std::string element;
  std::string role;

  friend bool operator==(const Origin&, const Origin&) = default;
};

struct OriginMap {
  std::map<VertexId, Origin> vertices;
  std::map<EdgeId, Origin> edges;
  std::vector<std::string> notes;
};

struct ReducedNetwork {
  AdditiveNetwork network;
  OriginMap origins;
};

inline const VertexId reduced_source = "super:s";
inline const VertexId reduced_sink = "super:t";

// PAFT instance to additive network. Vertex names:
//   p:<v>          vertex not involved in a forbidden transition
//   w:<v>:<e>      subdivision of v's outgoing copy of edge e
//   g:<v>:<e>      gadget port of v for edge e
//   c:<v>          crossing center of v
//   super:s/super:t
// The entry edge super:s -> p:s has gain B, the exit edge p:t -> super:t gain
// 0, both cost 0. Outgoing copies at uninvolved vertices are subdivided into
// (gain -B, cost 1) and (gain +B, cost -(B+1)); a full B+1 transit is free
// and a transit entering B+1-x costs B*x. Ports of involved vertices are
// joined by antiparallel edges (gain -B, cost 0) for allowed pairs; the edge
// leaving a port towards a neighbor has gain +B. A degree-4 involved vertex
// whose two opposite pairs (by rotation) are both allowed routes them through
// a crossing center. Every capacity is B+1 except the two narrow crossing
// exits, which have capacity 1. Requires non-terminal degrees in {3, 4} and a
// rotation at every degree-4 involved vertex.
ReducedNetwork paft_to_network(const PaftInstance& instance, const GadgetParams& params = {});

// Per-variable gadget: source src:x with edges to lit:x and lit:~x (capacity
// 1, gain = occurrences of that literal), both literals feed merge:x (gain
// +1), merge:x drains into sink:x (capacity 2). Literal-to-clause edges and
// clause:Ci -> sink:Ci edges have capacity 1 and gain 0. All costs 0.
ReducedNetwork sat_to_network(const CnfFormula& formula);

// In-flow every 1-in-3 assignment should reach: 2|X| + |C|.
Rational sat_target(const CnfFormula& formula);

// Flow on sat_to_network(formula) routing one unit from each variable source
// to its true literal. Requires a 1-in-3 assignment.
GeneralFlow assignment_flow(const CnfFormula& formula, const Assignment& assignment);

struct CrossingTransit {
  enum class Outcome { Free, DeadEnd, CapacityBlocked, Costly };

  int from = 0;  // port number 1..4
  int to = 0;
  Rational entering;
  Outcome outcome = Outcome::DeadEnd;
  std::optional<Rational> exit;  // flow arriving at the exit port, if feasible
  std::optional<Rational> cost;
};

struct GadgetReport {
  Rational B;
  std::vector<CrossingTransit> transits;
  bool pass = false;
};

const char* to_string(CrossingTransit::Outcome outcome);

// Checks the crossing center in isolation: ports 1..4, opposite pairs (1,4)
// and (2,3). Every ordered port pair is evaluated at entering flows B+1 and
// B+1-x for x in {1/4, 1/2, 3/4}. Passes iff exactly the opposite pairs in
// both directions are free (arrive with loss B, cost 0) and every other
// transit dead-ends or hits a capacity.
GadgetReport verify_crossing_gadget(const GadgetParams& params);

}  // namespace gainflow
