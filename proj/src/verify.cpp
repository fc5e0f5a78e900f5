#include "gainflow/verify.hpp"

#include <algorithm>
#include <cstdio>

#include "gainflow/io.hpp"

namespace gainflow {
namespace {

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

bool needs_reduction(const PaftInstance& instance) {
  return std::any_of(instance.vertices().begin(), instance.vertices().end(), [&](const VertexId& v) {
    return v != instance.s() && v != instance.t() && instance.degree(v) < 3;
  });
}

}  // namespace

VerificationReport verify_reduction(const PaftInstance& instance, const GadgetParams& params) {
  VerificationReport report;
  report.kind = VerificationReport::Kind::Paft;
  report.digest = fnv1a(serialize_paft(instance));
  report.valid_path = paft_oracle(instance);
  report.oracle_positive = report.valid_path.has_value();

  report.degree_reduced = needs_reduction(instance);
  const PaftInstance reduced = report.degree_reduced ? degree_reduce(instance) : instance;
  const auto network = paft_to_network(reduced, params);
  report.network_path = shortest_path(network.network, reduced_source, reduced_sink, Rational(1));
  report.reduction_positive = report.network_path && report.network_path->cost.is_zero();
  report.equivalent = report.oracle_positive == report.reduction_positive;
  return report;
}

VerificationReport verify_reduction(const CnfFormula& formula, const MaxFlowOptions& options) {
  VerificationReport report;
  report.kind = VerificationReport::Kind::Sat;
  report.digest = fnv1a(serialize_cnf(formula));
  report.assignment = sat_oracle(formula);
  report.oracle_positive = report.assignment.has_value();
  report.target = sat_target(formula);

  const auto reduced = sat_to_network(formula);
  report.max_flow = max_flow(reduced.network, FlowObjective::InFlow, options);
  report.reduction_positive = report.max_flow->value == report.target;
  report.equivalent = report.oracle_positive == report.reduction_positive;
  if (!report.oracle_positive && report.reduction_positive) {
    if (!validate_flow(reduced.network, report.max_flow->flow).feasible())
      throw std::logic_error("max_flow returned an invalid witness");
    report.counterexample = report.max_flow->flow;
  }
  return report;
}

}  // namespace gainflow
