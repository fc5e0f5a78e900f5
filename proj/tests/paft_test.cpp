#include <doctest.h>

#include <random>

#include "gainflow/oracles.hpp"
#include "gainflow/paft.hpp"

using namespace gainflow;

namespace {

PaftInstance make_paft(std::vector<std::pair<VertexId, VertexId>> ends, std::vector<std::pair<int, int>> forbid,
                       VertexId s = "s", VertexId t = "t", std::vector<VertexId> extra = {}) {
  std::set<VertexId> vertices(extra.begin(), extra.end());
  vertices.insert(s);
  vertices.insert(t);
  std::vector<UndirectedEdge> edges;
  std::uint32_t id = 1;
  for (const auto& [a, b] : ends) {
    vertices.insert(a);
    vertices.insert(b);
    edges.push_back({EdgeId{id++}, a, b});
  }
  std::vector<Transition> f;
  for (auto [a, b] : forbid) f.emplace_back(EdgeId{static_cast<std::uint32_t>(a)}, EdgeId{static_cast<std::uint32_t>(b)});
  return PaftInstance({vertices.begin(), vertices.end()}, edges, f, s, t);
}

EdgeId E(std::uint32_t id) { return EdgeId{id}; }

}  // namespace

TEST_CASE("instance construction enforces the forbidden-pair invariants") {
  CHECK_NOTHROW(make_paft({{"s", "a"}, {"a", "b"}, {"b", "t"}}, {{1, 2}}));
  CHECK_THROWS_AS(make_paft({{"s", "a"}, {"b", "t"}}, {{1, 2}}), NetworkError);
  CHECK_THROWS_AS(make_paft({{"a", "b"}, {"a", "b"}, {"s", "a"}, {"b", "t"}}, {{1, 2}}), NetworkError);
  CHECK_THROWS_AS(make_paft({{"s", "a"}, {"s", "b"}, {"a", "t"}}, {{1, 2}}), NetworkError);
  CHECK_THROWS_AS(make_paft({{"s", "s"}}, {}), NetworkError);
  CHECK_THROWS_AS(make_paft({{"s", "a"}}, {}, "s", "s"), NetworkError);
  CHECK_THROWS_AS(make_paft({{"s", "a"}, {"a", "t"}}, {{1, 1}}), NetworkError);
}

TEST_CASE("pendant vertices disappear with their edge") {
  const auto p = make_paft({{"s", "a"}, {"a", "t"}, {"a", "p"}, {"s", "t"}, {"a", "t"}}, {});
  const auto r = degree_reduce(p);
  CHECK_FALSE(r.has_vertex("p"));
  CHECK(r.edges().size() == 4);
  CHECK(r.degree("a") == 3);
}

TEST_CASE("a degree-2 vertex with a forbidden pair is removed with both edges") {
  const auto p = make_paft({{"s", "v"}, {"v", "t"}, {"s", "t"}}, {{1, 2}});
  const auto r = degree_reduce(p);
  CHECK_FALSE(r.has_vertex("v"));
  CHECK(r.edges().size() == 1);
  CHECK(r.forbidden().empty());
}

TEST_CASE("smoothing moves forbidden transitions onto the new edge") {
  // w - v - u with {e1, h} forbidden at w; w and u have degree 3 elsewhere.
  const auto p = make_paft({{"w", "v"},
                            {"v", "u"},
                            {"w", "s"},  // h
                            {"w", "t"},
                            {"u", "s"},
                            {"u", "t"}},
                           {{1, 3}});
  const auto r = degree_reduce(p);
  CHECK_FALSE(r.has_vertex("v"));
  const EdgeId merged{7};
  REQUIRE(r.edge(merged).touches("w"));
  CHECK(r.edge(merged).touches("u"));
  CHECK(r.forbidden() == std::set<Transition>{Transition(merged, E(3))});
}

TEST_CASE("smoothing between coincident neighbors drops the loop") {
  const auto p = make_paft({{"s", "w"}, {"w", "t"}, {"w", "v"}, {"v", "w"}, {"s", "t"}}, {{1, 3}});
  const auto r = degree_reduce(p);
  CHECK_FALSE(r.has_vertex("v"));
  CHECK(r.forbidden().empty());
  CHECK_FALSE(r.has_vertex("w"));  // w then has degree 2 and is smoothed
}

TEST_CASE("transitions that end up between parallel edges are dropped") {
  // Smoothing v turns e1 into a parallel copy of edge 3 between w and u.
  const auto p = make_paft({{"w", "v"}, {"v", "u"}, {"w", "u"}, {"w", "s"}, {"u", "t"}, {"w", "t"}, {"u", "s"}},
                           {{1, 3}});
  const auto r = degree_reduce(p);
  CHECK(r.forbidden().empty());
  CHECK(r.degree("w") == 4);
}

TEST_CASE("isolated non-terminal vertices are removed and terminals kept") {
  const auto p = make_paft({{"s", "t"}}, {}, "s", "t", {"lonely"});
  const auto r = degree_reduce(p);
  CHECK_FALSE(r.has_vertex("lonely"));
  CHECK(r.has_vertex("s"));
  CHECK(r.has_vertex("t"));
}

TEST_CASE("rotation follows the smoothed edge") {
  Rotation rot{{"s", {E(1), E(3)}}, {"a", {E(1), E(2)}}, {"b", {E(2), E(4)}}, {"t", {E(3), E(4)}}};
  PaftInstance p({"a", "b", "s", "t"}, {{E(1), "s", "a"}, {E(2), "a", "b"}, {E(3), "s", "t"}, {E(4), "b", "t"}}, {},
                 "s", "t", rot);
  const auto r = degree_reduce(p);
  REQUIRE(r.rotation());
  CHECK(r.vertices().size() == 2);
  CHECK(r.edges().size() == 2);
  CHECK(r.rotation()->at("s").size() == 2);
  CHECK(r.rotation()->at("t").size() == 2);
}

TEST_CASE("degree reduction preserves the oracle verdict and leaves degrees 3 and 4") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + round % 6;
    std::vector<VertexId> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back("u" + std::to_string(i));
    std::map<VertexId, int> degree;
    std::vector<UndirectedEdge> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 3 * n; ++k) {
      const auto a = vertices[static_cast<std::size_t>(pick(rng))];
      const auto b = vertices[static_cast<std::size_t>(pick(rng))];
      if (a == b || degree[a] >= 4 || degree[b] >= 4) continue;
      ++degree[a];
      ++degree[b];
      edges.push_back({EdgeId{static_cast<std::uint32_t>(edges.size() + 1)}, a, b});
    }
    const VertexId s = vertices[0];
    const VertexId t = vertices[1];
    PaftInstance loose(vertices, edges, {}, s, t);
    std::vector<Transition> forbidden;
    std::bernoulli_distribution forbid(0.35);
    for (const auto& v : vertices) {
      if (v == s || v == t) continue;
      const auto& inc = loose.incident(v);
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j)
          if (loose.shared_vertex(inc[i], inc[j]) && forbid(rng)) forbidden.emplace_back(inc[i], inc[j]);
    }
    PaftInstance p(vertices, edges, forbidden, s, t);
    const auto r = degree_reduce(p);
    CHECK(paft_oracle(p).has_value() == paft_oracle(r).has_value());
    for (const auto& v : r.vertices())
      if (v != s && v != t) CHECK(r.degree(v) >= 3);
    CHECK_NOTHROW(r.check_gadget_degrees());
  }
}
