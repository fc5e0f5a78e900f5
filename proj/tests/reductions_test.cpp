#include <doctest.h>

#include <random>

#include "gainflow/embedding.hpp"
#include "gainflow/generators.hpp"
#include "gainflow/io.hpp"
#include "gainflow/max_flow.hpp"
#include "gainflow/path_flow.hpp"
#include "gainflow/reductions.hpp"
#include "gainflow/shortest_path.hpp"
#include "gainflow/verify.hpp"

using namespace gainflow;

namespace {

EdgeId E(std::uint32_t id) { return EdgeId{id}; }

const DirectedEdge& find_edge(const AdditiveNetwork& n, const VertexId& tail, const VertexId& head) {
  for (const auto& e : n.edges())
    if (e.tail == tail && e.head == head) return e;
  FAIL("missing edge " << tail << " -> " << head);
  throw std::logic_error("unreachable");
}

bool has_edge(const AdditiveNetwork& n, const VertexId& tail, const VertexId& head) {
  for (const auto& e : n.edges())
    if (e.tail == tail && e.head == head) return true;
  return false;
}

// Star around v: edges 1..d join v to a_1..a_d; each a_i also reaches s and t
// so every non-terminal has degree 3 or more.
PaftInstance star(int d, std::vector<Transition> forbidden, std::optional<std::vector<std::uint32_t>> order = {}) {
  std::vector<VertexId> vertices{"s", "t", "v"};
  std::vector<UndirectedEdge> edges;
  std::uint32_t id = 1;
  for (int i = 1; i <= d; ++i) edges.push_back({E(id++), "v", "a" + std::to_string(i)});
  for (int i = 1; i <= d; ++i) {
    vertices.push_back("a" + std::to_string(i));
    edges.push_back({E(id++), "a" + std::to_string(i), "s"});
    edges.push_back({E(id++), "a" + std::to_string(i), "t"});
  }
  std::optional<Rotation> rotation;
  if (order) {
    PaftInstance bare(vertices, edges, {}, "s", "t");
    rotation.emplace();
    for (const auto& u : bare.vertices()) (*rotation)[u] = bare.incident(u);
    std::vector<EdgeId> at_v;
    for (auto k : *order) at_v.push_back(E(k));
    (*rotation)["v"] = at_v;
  }
  return PaftInstance(vertices, edges, forbidden, "s", "t", rotation);
}

}  // namespace

TEST_CASE("single edge instance reduces to a free seed-1 path") {
  PaftInstance p({"s", "t"}, {{E(1), "s", "t"}}, {}, "s", "t");
  const auto r = paft_to_network(p);
  const auto& n = r.network;
  CHECK(n.vertex_count() == 6);  // super:s, super:t, p:s, p:t and two subdivisions
  CHECK(n.edge_count() == 6);
  CHECK(find_edge(n, "super:s", "p:s").gain == 4);
  CHECK(find_edge(n, "p:t", "super:t").gain == 0);
  CHECK(find_edge(n, "p:s", "w:s:1").cost == 1);
  CHECK(find_edge(n, "w:s:1", "p:t").cost == -5);
  const auto path = shortest_path(n, reduced_source, reduced_sink, 1);
  REQUIRE(path);
  CHECK(path->cost == 0);
  CHECK(accumulate(n, path->path, 1, path->path.edges.size() + 1) == 5);
}

TEST_CASE("origin map covers every produced vertex and edge") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = generate_paft_grid({3, 3, 0.4}, seed);
    const auto r = paft_to_network(p);
    CHECK(r.origins.vertices.size() == r.network.vertex_count());
    CHECK(r.origins.edges.size() == r.network.edge_count());
    CHECK_FALSE(r.origins.notes.empty());
  }
}

TEST_CASE("capacities are B+1 except the narrow crossing exits") {
  for (const Rational B : {Rational(3), Rational(4), Rational(10)}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = paft_to_network(generate_paft_grid({4, 3, 0.3}, seed), {B});
      for (const auto& e : r.network.edges()) {
        if (r.origins.edges.at(e.id).role == "crossing-out-narrow")
          CHECK(e.capacity == 1);
        else
          CHECK(e.capacity == B + 1);
      }
    }
  }
}

TEST_CASE("plain-gadget transit losing x costs B*x") {
  PaftInstance p({"s", "t"}, {{E(1), "s", "t"}}, {}, "s", "t");
  for (const Rational B : {Rational(3), Rational(4), Rational(10)}) {
    const auto n = paft_to_network(p, {B}).network;
    const DirectedPath transit{{find_edge(n, "p:s", "w:s:1").id, find_edge(n, "w:s:1", "p:t").id}};
    for (const Rational x : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const PathFlow pf{transit, B + 1 - x};
      REQUIRE(check_path_flow(n, pf, CapacityMode::WithCapacity).feasible());
      CHECK(accumulate(n, transit, pf.seed, 3) == B + 1 - x);
      CHECK(path_cost(n, pf) == B * x);
    }
    CHECK_FALSE(check_path_flow(n, PathFlow{transit, B}, CapacityMode::WithCapacity).feasible());
  }
}

TEST_CASE("degree-3 forbidden gadget links exactly the allowed pairs") {
  const auto p = star(3, {Transition(E(1), E(2))});
  const auto r = paft_to_network(p);
  const auto& n = r.network;
  CHECK_FALSE(has_edge(n, "g:v:1", "g:v:2"));
  CHECK_FALSE(has_edge(n, "g:v:2", "g:v:1"));
  for (auto [a, b] : {std::pair{"g:v:1", "g:v:3"}, {"g:v:3", "g:v:1"}, {"g:v:2", "g:v:3"}, {"g:v:3", "g:v:2"}}) {
    const auto& e = find_edge(n, a, b);
    CHECK(e.gain == -4);
    CHECK(e.cost == 0);
  }
  CHECK(find_edge(n, "g:v:1", "p:a1").gain == 4);
  int ports = 0;
  for (const auto& [v, o] : r.origins.vertices) ports += o.element == "v:v" ? 1 : 0;
  CHECK(ports == 3);
}

TEST_CASE("two internal hops always dead-end") {
  const auto p = star(4, {Transition(E(1), E(2))}, std::vector<std::uint32_t>{1, 2, 3, 4});
  const auto n = paft_to_network(p).network;
  const DirectedPath two{{find_edge(n, "g:v:1", "g:v:4").id, find_edge(n, "g:v:4", "g:v:3").id}};
  CHECK(check_path_flow(n, PathFlow{two, 5}, CapacityMode::WithCapacity).status == PathFlowCheck::Status::DeadEnd);
}

TEST_CASE("degree-4 vertex with both opposite pairs allowed gets a crossing center") {
  const auto p = star(4, {Transition(E(1), E(3))}, std::vector<std::uint32_t>{1, 2, 3, 4});
  const auto r = paft_to_network(p);
  CHECK_FALSE(r.network.has_vertex("c:v"));
  CHECK(has_edge(r.network, "g:v:2", "g:v:4"));

  const auto q = star(4, {Transition(E(1), E(2)), Transition(E(3), E(4))}, std::vector<std::uint32_t>{1, 2, 3, 4});
  const auto rq = paft_to_network(q);
  const auto& n = rq.network;
  REQUIRE(n.has_vertex("c:v"));
  int members = 0;
  for (const auto& [v, o] : rq.origins.vertices) members += o.element == "v:v" ? 1 : 0;
  CHECK(members == 5);
  // Opposite pairs {1,3} and {2,4} route through the center, allowed adjacent
  // pairs {2,3} and {1,4} are direct.
  CHECK_FALSE(has_edge(n, "g:v:1", "g:v:3"));
  CHECK(has_edge(n, "g:v:1", "g:v:4"));
  CHECK(has_edge(n, "g:v:2", "g:v:3"));
  const DirectedPath across{{find_edge(n, "g:v:1", "c:v").id, find_edge(n, "c:v", "g:v:3").id}};
  const PathFlow pf{across, 5};
  REQUIRE(check_path_flow(n, pf, CapacityMode::WithCapacity).feasible());
  CHECK(accumulate(n, across, 5, 3) == 1);
  CHECK(path_cost(n, pf) == 0);
}

TEST_CASE("crossing gadget contract holds") {
  for (const Rational B : {Rational(3), Rational(4), Rational(10)}) {
    const auto report = verify_crossing_gadget({B});
    CHECK(report.pass);
    CHECK(report.transits.size() == 48);
  }
  const auto report = verify_crossing_gadget({4});
  auto find = [&](int from, int to) {
    for (const auto& t : report.transits)
      if (t.from == from && t.to == to && t.entering == 5) return t;
    throw std::logic_error("missing transit");
  };
  CHECK(find(1, 4).outcome == CrossingTransit::Outcome::Free);
  CHECK(find(1, 4).exit == Rational(1));
  CHECK(find(1, 2).outcome == CrossingTransit::Outcome::DeadEnd);
  CHECK(find(2, 4).outcome == CrossingTransit::Outcome::CapacityBlocked);
  CHECK(find(3, 2).outcome == CrossingTransit::Outcome::Free);
}

TEST_CASE("reduction preconditions are enforced") {
  CHECK_THROWS_AS(verify_crossing_gadget({Rational(5, 2)}), NetworkError);
  PaftInstance low({"a", "s", "t"}, {{E(1), "s", "a"}, {E(2), "a", "t"}}, {}, "s", "t");
  CHECK_THROWS_AS(paft_to_network(low), NetworkError);
  CHECK_THROWS_AS(paft_to_network(star(4, {Transition(E(1), E(2))})), NetworkError);
}

TEST_CASE("grid reductions keep a planar underlying graph for involved-free instances") {
  const auto p = generate_paft_grid({3, 3, 0.0}, 1);
  REQUIRE(p.rotation());
  CHECK(verify_rotation(p.graph(), *p.rotation()).planar);
}

TEST_CASE("incidence graph of a formula") {
  const auto g = cnf_graph(CnfFormula(3, {{1, 2, 3}}));
  CHECK(g.vertices.size() == 7);
  CHECK(g.edges.size() == 6);
  const auto h = cnf_graph(CnfFormula(3, {{1, 2, 3}, {1, -2, -3}}));
  int degree = 0;
  for (const auto& e : h.edges) degree += e.touches("lit:x1") ? 1 : 0;
  CHECK(degree == 3);
  const auto ex5 = cnf_graph(CnfFormula(4, {{-1, 2, -3}, {1, -2, 3}, {1, 4, 3}, {-1, -4, -3}}));
  CHECK(ex5.vertices.size() == 12);
}

TEST_CASE("sat network structure") {
  const CnfFormula f(3, {{1, 2, 3}, {1, -2, -3}});
  const auto r = sat_to_network(f);
  const auto& n = r.network;
  for (const auto& e : n.edges()) CHECK(e.gain.sign() >= 0);
  CHECK(find_edge(n, "src:x1", "lit:x1").gain == 2);
  CHECK(find_edge(n, "src:x1", "lit:~x1").gain == 0);
  CHECK(find_edge(n, "merge:x2", "sink:x2").capacity == 2);
  CHECK(r.origins.vertices.size() == n.vertex_count());
  CHECK(r.origins.edges.size() == n.edge_count());

  // Selecting x1 delivers one unit per occurrence plus one at lit:x1.
  const auto& select = find_edge(n, "src:x1", "lit:x1");
  CHECK(delivered(select, 1) == 3);

  GeneralFlow both;
  both.set(find_edge(n, "src:x2", "lit:x2").id, 1);
  both.set(find_edge(n, "src:x2", "lit:~x2").id, 1);
  both.set(find_edge(n, "lit:x2", "merge:x2").id, 1);
  both.set(find_edge(n, "lit:~x2", "merge:x2").id, 1);
  both.set(find_edge(n, "merge:x2", "sink:x2").id, 2);
  both.set(find_edge(n, "lit:x2", "clause:C1").id, 1);
  both.set(find_edge(n, "lit:~x2", "clause:C2").id, 1);
  both.set(find_edge(n, "clause:C1", "sink:C1").id, 1);
  both.set(find_edge(n, "clause:C2", "sink:C2").id, 1);
  const auto report = validate_flow(n, both);
  bool merge_violated = false;
  for (const auto& v : report.conservation_violations) merge_violated |= v.vertex == "merge:x2";
  CHECK(merge_violated);
}

TEST_CASE("assignment flows reach the target") {
  const CnfFormula f(4, {{1, 2, 3}, {-1, 2, 4}, {-2, -3, 4}});
  const auto a = sat_oracle(f);
  REQUIRE(a);
  const auto n = sat_to_network(f).network;
  const auto flow = assignment_flow(f, *a);
  CHECK(validate_flow(n, flow).feasible());
  CHECK(flow_value(n, flow, FlowObjective::InFlow) == sat_target(f));
  CHECK_THROWS(assignment_flow(f, Assignment{true, true, true, true}));
}

TEST_CASE("one-clause formula reaches in-flow 7") {
  const auto report = verify_reduction(CnfFormula(3, {{1, 2, 3}}));
  CHECK(report.equivalent);
  CHECK(report.target == 7);
  REQUIRE(report.max_flow);
  CHECK(report.max_flow->value == 7);
  CHECK(report.max_flow->attained);
}

TEST_CASE("paft verification on instances with and without a valid path") {
  PaftInstance line({"s", "t"}, {{E(1), "s", "t"}}, {}, "s", "t");
  const auto yes = verify_reduction(line);
  CHECK(yes.oracle_positive);
  CHECK(yes.equivalent);
  REQUIRE(yes.network_path);
  CHECK(yes.network_path->cost == 0);

  const auto no = verify_reduction(star(3, {Transition(E(1), E(2)), Transition(E(1), E(3)), Transition(E(2), E(3))}));
  CHECK(no.oracle_positive);  // s - a1 - t still works
  PaftInstance cut({"a", "s", "t"}, {{E(1), "s", "a"}, {E(2), "a", "t"}}, {{E(1), E(2)}}, "s", "t");
  const auto blocked = verify_reduction(cut);
  CHECK_FALSE(blocked.oracle_positive);
  CHECK(blocked.degree_reduced);
  CHECK(blocked.equivalent);
}

TEST_CASE("a zero-cost network route can pass a four-port gadget twice") {
  // No simple valid path exists, but the network route uses the allowed pair
  // 13-6 of r1c1, loops back through r1c0 and r2c1, and reenters r1c1 for the
  // allowed pair 9-14. Each visit is a legal port-to-port hop.
  const auto p = parse_paft(
      "v r0c0\nv r1c0\nv r1c1\nv r2c1\nv r2c2\n"
      "ue 2 r0c0 r1c0\nue 6 r1c0 r1c1\nue 9 r1c1 r2c1\nue 12 r2c1 r2c2\nue 13 r0c0 r1c1\nue 14 r1c1 r2c2\n"
      "ue 15 r1c0 r2c1\n"
      "forbid 2 15\nforbid 6 14\nforbid 9 12\nforbid 12 15\nforbid 13 14\n"
      "s r0c0\nt r2c2\n"
      "rot r0c0 13 2\nrot r1c0 6 2 15\nrot r1c1 14 13 6 9\nrot r2c1 12 9 15\nrot r2c2 14 12\n");
  const auto report = verify_reduction(p);
  CHECK_FALSE(report.oracle_positive);
  CHECK(report.reduction_positive);
  CHECK_FALSE(report.equivalent);
  REQUIRE(report.network_path);
  const auto network = paft_to_network(p).network;
  int entries = 0;
  for (const auto id : report.network_path->path.edges) {
    const auto& e = network.edge(id);
    if (e.head.starts_with("g:r1c1:") && !e.tail.starts_with("g:r1c1:")) ++entries;
  }
  CHECK(entries == 2);
}
