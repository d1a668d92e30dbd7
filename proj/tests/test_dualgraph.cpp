#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "p2leaf/dualgraph.hpp"
#include "p2leaf/error.hpp"

using namespace p2leaf;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

// Path 0-1-2-...-(n-1).
DualGraph path_graph(int n) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) {
    adj[static_cast<std::size_t>(i)].push_back(i + 1);
    adj[static_cast<std::size_t>(i + 1)].push_back(i);
  }
  return DualGraph::from_adjacency(adj);
}

}  // namespace

TEST_CASE("small duals") {
  const DualGraph sun = build_dual(merge_half_tiles(seed_patch(VertexConfig::Sun)));
  CHECK(sun.size() == 5);
  CHECK(sun.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(sun.degree(v) == 2);
  CHECK_FALSE(profile(sun, std::vector<int>{0, 1, 2, 3, 4}).is_tree);

  // Computed from exact geometry: the dart shares an edge with each kite and
  // the two kites share one as well.
  const DualGraph ace = build_dual(merge_half_tiles(seed_patch(VertexConfig::Ace)));
  CHECK(ace.size() == 3);
  CHECK(ace.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  const TilePatch one({merge_half_tiles(seed_patch(VertexConfig::Sun)).tiles().front()}, 0);
  const DualGraph single = build_dual(one);
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("adjacency matches a pairwise edge comparison") {
  const TilePatch& tp = testing::sun_patch(4);
  const DualGraph& g = testing::sun_graph(4);
  REQUIRE(g.size() == static_cast<int>(tp.size()));
  std::set<std::pair<int, int>> expected;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b) {
      const Tile& ta = tp.tile(a);
      const Tile& tb = tp.tile(b);
      bool share = false;
      for (std::size_t i = 0; i < 4 && !share; ++i) {
        for (std::size_t j = 0; j < 4 && !share; ++j) {
          const Point& p0 = ta.v[i];
          const Point& p1 = ta.v[(i + 1) % 4];
          const Point& q0 = tb.v[j];
          const Point& q1 = tb.v[(j + 1) % 4];
          share = (p0 == q0 && p1 == q1) || (p0 == q1 && p1 == q0);
        }
      }
      if (share) expected.emplace(a, b);
    }
  }
  const auto edges = g.edges();
  CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expected);
  for (int v = 0; v < g.size(); ++v) {
    CHECK(g.degree(v) <= 4);
    CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
  }
}

TEST_CASE("interior regions") {
  const DualGraph sun = build_dual(merge_half_tiles(seed_patch(VertexConfig::Sun)));
  CHECK(interior_region(sun, 0).empty());

  const DualGraph& g = testing::sun_graph(6);
  CHECK(g.size() == 1855);
  const auto r0 = interior_region(g, 0);
  const auto r1 = interior_region(g, 1);
  const auto r2 = interior_region(g, 2);
  CHECK(r1.size() == 1545);
  CHECK(r2.size() == 1410);
  CHECK(std::includes(r0.begin(), r0.end(), r1.begin(), r1.end()));
  CHECK(std::includes(r1.begin(), r1.end(), r2.begin(), r2.end()));
  for (int v : r0) {
    CHECK(g.complete(v));
    CHECK(g.degree(v) == 4);
  }
  // Every neighbor of a margin-1 tile is complete.
  for (int v : r1) {
    for (int u : g.neighbors(v)) CHECK(g.complete(u));
  }
}

TEST_CASE("every complete tile has two adjacent neighbors") {
  const DualGraph& g = testing::sun_graph(6);
  for (int v : interior_region(g, 0)) CHECK(has_adjacent_neighbor_pair(g, v));
}

TEST_CASE("profiles") {
  const DualGraph p = path_graph(4);
  const Profile two = profile(p, std::vector<int>{1, 2});
  CHECK(two.is_tree);
  CHECK(two.n == 2);
  CHECK(two.n1 == 2);
  CHECK(two.n2 == 0);
  CHECK(two.is_caterpillar);
  const Profile four = profile(p, std::vector<int>{0, 1, 2, 3});
  CHECK(four.is_tree);
  CHECK(four.n1 == 2);
  CHECK(four.n2 == 2);
  CHECK(four.n3 == 0);
  CHECK(four.is_caterpillar);
  CHECK_FALSE(profile(p, std::vector<int>{0, 2}).is_tree);

  // Spider with three legs of length 2 is a tree but not a caterpillar.
  const DualGraph spider = DualGraph::from_adjacency({{1, 3, 5}, {0, 2}, {1}, {0, 4}, {3}, {0, 6}, {5}});
  const Profile sp = profile(spider, std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(sp.is_tree);
  CHECK_FALSE(sp.is_caterpillar);
  CHECK(sp.n1 == sp.n3 + 2);
  CHECK_FALSE(sp.is_3_internal_regular);
}

TEST_CASE("random induced subtrees agree with the oracle") {
  const DualGraph& g = testing::sun_graph(6);
  const auto region = interior_region(g, 1);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const auto s = testing::random_induced_tree(g, region, n, rng);
    const testing::TreeFacts f = testing::tree_facts(g, s);
    const Profile p = profile(g, s);
    REQUIRE(f.tree);
    CHECK(p.is_tree);
    CHECK(p.n == f.n);
    CHECK(p.n1 == f.n1);
    CHECK(p.n2 == f.n2);
    CHECK(p.n3 == f.n3);
    CHECK(f.max_degree <= 3);
    CHECK(f.n1 == f.n3 + 2);
    CHECK(f.n == f.n1 + f.n2 + f.n3);
  }
}

TEST_CASE("graft and factorize") {
  const DualGraph p = path_graph(10);
  const Subtree i1(p, {0, 1, 2, 3, 4});
  const Subtree i2(p, {3, 4, 5, 6, 7, 8, 9});
  const Subtree joined = graft(p, i1, i2, 3, 4);
  CHECK(joined.prof.n == 10);
  CHECK(joined.prof.n == i1.prof.n + i2.prof.n - 2);
  CHECK(joined.prof.n1 == i1.prof.n1 + i2.prof.n1 - 2);
  CHECK(joined.prof.n2 == i1.prof.n2 + i2.prof.n2);
  CHECK(joined.prof.n3 == i1.prof.n3 + i2.prof.n3);
  const auto [a, b] = factorize(p, joined, 3, 4);
  CHECK(a == i1);
  CHECK(b == i2);

  const auto [leaf_side, rest] = factorize(p, Subtree(p, {0, 1, 2}), 0, 1);
  CHECK(leaf_side.vertices == std::vector<int>{0, 1});
  CHECK(rest.vertices == std::vector<int>{0, 1, 2});

  CHECK(code_of([&] { factorize(p, Subtree(p, {0, 1, 2}), 0, 2); }) == ErrorCode::NotAnEdge);
  CHECK(code_of([&] { factorize(p, Subtree(p, {0, 2}), 0, 1); }) == ErrorCode::NotATree);
  CHECK(code_of([&] { graft(p, Subtree(p, {0, 1, 2}), Subtree(p, {1, 2, 3}), 2, 1); }) ==
        ErrorCode::GraftPreconditionViolated);
  CHECK(code_of([&] { graft(p, Subtree(p, {0, 1}), Subtree(p, {3, 4}), 1, 3); }) ==
        ErrorCode::GraftPreconditionViolated);
}

TEST_CASE("factorize then graft on random subtrees") {
  const DualGraph& g = testing::sun_graph(6);
  const auto region = interior_region(g, 1);
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 300) {
    const auto s = testing::random_induced_tree(g, region, 3 + static_cast<int>(rng() % 25), rng);
    if (s.size() < 2) continue;
    const Subtree t(g, s);
    std::vector<std::pair<int, int>> edges;
    for (int u : s) {
      for (int v : g.neighbors(u)) {
        if (t.contains(v)) edges.emplace_back(u, v);
      }
    }
    const auto [t1, t2] = edges[rng() % edges.size()];
    const auto [i1, i2] = factorize(g, t, t1, t2);
    CHECK(i1.contains(t1));
    CHECK(i1.contains(t2));
    CHECK(i2.contains(t1));
    CHECK(i2.contains(t2));
    CHECK(induced_degree(g, i1.vertices, t2) == 1);
    CHECK(induced_degree(g, i2.vertices, t1) == 1);
    const Subtree back = graft(g, i1, i2, t1, t2);
    CHECK(back == t);
    CHECK(back.prof == t.prof);
    ++checked;
  }
}

TEST_CASE("derived vertices") {
  const DualGraph p = path_graph(5);
  CHECK(derived_vertices(p, std::vector<int>{0, 1, 2, 3, 4}) == std::vector<int>{1, 2, 3});
  CHECK(induced_degree(p, std::vector<int>{0, 1, 2}, 1) == 2);
}
