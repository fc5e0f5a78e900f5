#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>

#include "gainflow/flow.hpp"

namespace gainflow {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A relaxation or labeling LP came back unbounded; cannot happen for
// well-formed networks and is never ignored.
class DegenerateLp : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edges carrying positive flow, and the subset whose flow is fully absorbed
// (f + g <= 0, delivering nothing).
struct SupportLabeling {
  std::set<EdgeId> used;
  std::set<EdgeId> absorbed;

  friend bool operator==(const SupportLabeling&, const SupportLabeling&) = default;
};

SupportLabeling labeling_of(const AdditiveNetwork& network, const GeneralFlow& flow);

struct MaxFlowOptions {
  // Maximum number of edges whose use changes the delivered amount
  // discontinuously (nonzero gain, positive capacity).
  std::size_t candidate_budget = 16;
};

struct MaxFlowDiagnostics {
  std::size_t candidates = 0;
  std::size_t labelings_solved = 0;
  std::size_t lp_calls = 0;
  // Largest supremum above the attained value that no flow reaches: the
  // optimum sits on a face where some used edge would need zero flow.
  std::optional<Rational> unattained_supremum;
};

struct MaxFlowResult {
  Rational value;
  GeneralFlow flow;
  SupportLabeling labeling;
  // False when some labeling has a larger supremum that is not attained.
  bool attained = true;
  FlowObjective objective = FlowObjective::InFlow;
  MaxFlowDiagnostics diagnostics;
};

// Exact maximum in-flow or out-flow. Zero-gain edges enter every LP as plain
// continuous variables; each nonzero-gain edge is labeled unused, absorbing
// or delivering, and the labelings are searched depth-first in edge-id order
// with LP relaxation bounds. Within a labeling the optimum counts as attained
// only if a point of the optimal face keeps every labeled edge strictly
// positive. Throws BudgetExceeded or DegenerateLp.
MaxFlowResult max_flow(const AdditiveNetwork& network, FlowObjective objective, MaxFlowOptions options = {});

}  // namespace gainflow
