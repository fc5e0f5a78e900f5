#include <doctest.h>

#include "gainflow/embedding.hpp"
#include "gainflow/generators.hpp"

using namespace gainflow;

namespace {

EdgeId E(std::uint32_t id) { return EdgeId{id}; }

UndirectedGraph complete(int k, std::map<std::pair<int, int>, EdgeId>& ids) {
  UndirectedGraph g;
  std::uint32_t id = 1;
  for (int i = 0; i < k; ++i) g.vertices.push_back("k" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      ids[{i, j}] = ids[{j, i}] = E(id);
      g.edges.push_back({E(id++), g.vertices[static_cast<std::size_t>(i)], g.vertices[static_cast<std::size_t>(j)]});
    }
  return g;
}

// Rotation of a complete graph given by the cyclic neighbor order per vertex.
Rotation rotation_from(const std::vector<std::vector<int>>& neighbors, std::map<std::pair<int, int>, EdgeId>& ids) {
  Rotation r;
  for (std::size_t v = 0; v < neighbors.size(); ++v)
    for (int u : neighbors[v]) r["k" + std::to_string(v)].push_back(ids[{static_cast<int>(v), u}]);
  return r;
}

}  // namespace

TEST_CASE("planar K4 has four faces") {
  std::map<std::pair<int, int>, EdgeId> ids;
  const auto g = complete(4, ids);
  // k3 in the middle of triangle k0 k1 k2, all counter-clockwise.
  const auto r = rotation_from({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, ids);
  const auto report = verify_rotation(g, r);
  CHECK(report.faces == 4);
  CHECK(report.genus == 0);
  CHECK(report.planar);
  CHECK(report.side_visits == 12);
}

TEST_CASE("K5 is never planar") {
  std::map<std::pair<int, int>, EdgeId> ids;
  const auto g = complete(5, ids);
  std::vector<std::vector<int>> neighbors;
  for (int v = 0; v < 5; ++v) {
    std::vector<int> n;
    for (int u = 0; u < 5; ++u)
      if (u != v) n.push_back(u);
    neighbors.push_back(n);
  }
  // Several rotations: identity order and a few rotated variants.
  for (int shift = 0; shift < 4; ++shift) {
    auto rotated = neighbors;
    for (std::size_t v = 0; v < rotated.size(); ++v)
      if ((v + static_cast<std::size_t>(shift)) % 2 == 0) std::reverse(rotated[v].begin(), rotated[v].end());
    const auto report = verify_rotation(g, rotation_from(rotated, ids));
    CHECK(report.genus >= 1);
    CHECK_FALSE(report.planar);
    CHECK(report.side_visits == 20);
  }
}

TEST_CASE("single edge and isolated vertices") {
  UndirectedGraph g{{"s", "t", "x"}, {{E(1), "s", "t"}}};
  const auto report = verify_rotation(g, {{"s", {E(1)}}, {"t", {E(1)}}});
  CHECK(report.faces == 2);  // one around the edge, one for x
  CHECK(report.components == 2);
  CHECK(report.planar);
}

TEST_CASE("self-loops appear twice at their vertex") {
  UndirectedGraph g{{"a"}, {{E(1), "a", "a"}}};
  const auto report = verify_rotation(g, {{"a", {E(1), E(1)}}});
  CHECK(report.faces == 2);
  CHECK(report.planar);
  CHECK_THROWS_AS(verify_rotation(g, {{"a", {E(1)}}}), NetworkError);
}

TEST_CASE("malformed rotations are rejected") {
  UndirectedGraph g{{"a", "b"}, {{E(1), "a", "b"}, {E(2), "a", "b"}}};
  CHECK_THROWS_AS(verify_rotation(g, {{"a", {E(1), E(2)}}}), NetworkError);
  CHECK_THROWS_AS(verify_rotation(g, {{"a", {E(1), E(1)}}, {"b", {E(1), E(2)}}}), NetworkError);
  CHECK_THROWS_AS(verify_rotation(g, {{"a", {E(1), E(2)}}, {"b", {E(1), E(2)}}, {"z", {}}}), NetworkError);
  CHECK(verify_rotation(g, {{"a", {E(1), E(2)}}, {"b", {E(1), E(2)}}}).planar);
}

TEST_CASE("generated grid instances come with planar rotations") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = generate_paft_grid({2 + static_cast<int>(seed % 4), 3, 0.4}, seed);
    REQUIRE(p.rotation());
    const auto report = verify_rotation(p.graph(), *p.rotation());
    CHECK(report.planar);
    CHECK(report.side_visits == 2 * p.edges().size());
  }
}
