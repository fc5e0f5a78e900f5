#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gainflow/max_flow.hpp"
#include "gainflow/oracles.hpp"
#include "gainflow/reductions.hpp"
#include "gainflow/shortest_path.hpp"

namespace gainflow {

struct VerificationReport {
  enum class Kind { Paft, Sat };

  Kind kind = Kind::Paft;
  std::string digest;  // FNV-1a of the canonical instance text
  bool oracle_positive = false;
  bool reduction_positive = false;
  bool equivalent = false;

  // PAFT: valid path from the oracle, cheapest seed-1 network path.
  std::optional<std::vector<EdgeId>> valid_path;
  std::optional<ShortestPathResult> network_path;
  bool degree_reduced = false;

  // SAT: oracle assignment, solver optimum and the in-flow target.
  std::optional<Assignment> assignment;
  std::optional<MaxFlowResult> max_flow;
  Rational target;
  // Flow reaching the target on an unsatisfiable formula; always validated.
  std::optional<GeneralFlow> counterexample;
};

// Oracle on the instance as given; the network side first applies
// degree_reduce when some non-terminal vertex has degree below 3, then looks
// for a zero-cost seed-1 path from super:s to super:t.
VerificationReport verify_reduction(const PaftInstance& instance, const GadgetParams& params = {});

// Oracle assignment against the exact maximum in-flow of sat_to_network.
// The reduction side is positive iff the attained maximum equals 2|X|+|C|.
VerificationReport verify_reduction(const CnfFormula& formula, const MaxFlowOptions& options = {});

}  // namespace gainflow
