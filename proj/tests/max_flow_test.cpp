#include <doctest.h>

#include <random>

#include "gainflow/max_flow.hpp"
#include "reference.hpp"
#include "support.hpp"

using namespace gainflow;
using namespace gainflow::testing;

namespace {

void check_witness(const AdditiveNetwork& n, const MaxFlowResult& r) {
  CHECK(validate_flow(n, r.flow).feasible());
  CHECK(flow_value(n, r.flow, r.objective) == r.value);
  CHECK(r.labeling == labeling_of(n, r.flow));
}

}  // namespace

TEST_CASE("single edge without gain carries its capacity") {
  const auto n = make_network({{"s", "t", 1, 0, 0}}, {"s"}, {"t"});
  const auto r = max_flow(n, FlowObjective::InFlow);
  CHECK(r.value == 1);
  CHECK(r.attained);
  check_witness(n, r);
}

TEST_CASE("positive gain adds once on a used edge") {
  const auto n = make_network({{"s", "t", 1, 0, 2}}, {"s"}, {"t"});
  const auto r = max_flow(n, FlowObjective::InFlow);
  CHECK(r.value == 3);
  CHECK(r.flow.at(EdgeId{1}) == 1);
  check_witness(n, r);
  CHECK(max_flow(n, FlowObjective::OutFlow).value == 1);
}

TEST_CASE("lossy edges deliver only what exceeds the loss") {
  const auto n = make_network({{"s", "t", 3, 0, -1}}, {"s"}, {"t"});
  CHECK(max_flow(n, FlowObjective::InFlow).value == 2);
  const auto blocked = make_network({{"s", "t", 1, 0, -1}}, {"s"}, {"t"});
  CHECK(max_flow(blocked, FlowObjective::InFlow).value == 0);
}

TEST_CASE("an absorbing edge can balance a gain that would overflow") {
  // v receives f1 + 5 but may forward at most 5; a lossy side edge swallows the rest.
  const auto n = make_network({{"s", "v", 1, 0, 5}, {"v", "t", 5, 0, 0}, {"v", "z", 10, 0, -10}}, {"s"}, {"t"});
  const auto r = max_flow(n, FlowObjective::InFlow);
  CHECK(r.value == 5);
  CHECK(r.attained);
  check_witness(n, r);
  CHECK(r.labeling.absorbed == std::set<EdgeId>{EdgeId{3}});
}

TEST_CASE("supremum reached only as a used edge's flow vanishes is reported as unattained") {
  // Using e3 earns +3, but w can forward only 3, so e5 must absorb at least f3 > 0.
  const auto n = make_network({{"s", "v", 1, 0, 0},
                               {"v", "t", 1, 0, 0},
                               {"v", "w", 1, 0, 3},
                               {"w", "t", 3, 0, 0},
                               {"w", "z", 10, 0, -10}},
                              {"s"}, {"t"});
  const auto r = max_flow(n, FlowObjective::InFlow);
  CHECK_FALSE(r.attained);
  REQUIRE(r.diagnostics.unattained_supremum);
  CHECK(*r.diagnostics.unattained_supremum == 4);
  CHECK(r.value == 1);
  check_witness(n, r);
}

TEST_CASE("budget is enforced on nonzero-gain edges") {
  std::vector<Rational> gains(17, Rational(1));
  const auto chain = make_chain(gains);
  CHECK_THROWS_AS(max_flow(chain, FlowObjective::InFlow), BudgetExceeded);
  const auto r = max_flow(chain, FlowObjective::InFlow, {.candidate_budget = 17});
  CHECK(r.value == 101);
  std::vector<Rational> zeros(30, Rational(0));
  CHECK(max_flow(make_chain(zeros), FlowObjective::InFlow).value == 100);
}

TEST_CASE("gain-free networks agree with a classical augmenting-path max flow") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    RandomNetworkShape shape;
    shape.vertices = 3 + round % 6;
    shape.edges = 3 + round % 12;
    shape.gain_low = shape.gain_high = 0;
    shape.allow_positive_cycles = true;
    const auto n = random_network(rng, shape);
    const auto r = max_flow(n, FlowObjective::InFlow);
    CHECK(r.value == classical_max_flow(n));
    CHECK(r.attained);
    check_witness(n, r);
  }
}

TEST_CASE("attained optima on random gain networks carry valid witnesses") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 60; ++round) {
    RandomNetworkShape shape;
    shape.vertices = 3 + round % 4;
    shape.edges = 3 + round % 7;
    const auto n = random_network(rng, shape);
    for (auto objective : {FlowObjective::InFlow, FlowObjective::OutFlow}) {
      const auto r = max_flow(n, objective);
      check_witness(n, r);
      if (r.diagnostics.unattained_supremum) CHECK(*r.diagnostics.unattained_supremum > r.value);
    }
  }
}
