#pragma once

// Shared fixtures and reference implementations for the tests. The oracles
// here are deliberately naive and share no code with the library beyond the
// graph and patch accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "p2leaf/dualgraph.hpp"
#include "p2leaf/tiling.hpp"

namespace testing {

using namespace p2leaf;

inline const TilePatch& sun_patch(int depth) {
  static std::map<int, TilePatch> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) {
    it = cache.emplace(depth, merge_half_tiles(substitute(seed_patch(VertexConfig::Sun), depth))).first;
  }
  return it->second;
}

inline const DualGraph& sun_graph(int depth) {
  static std::map<int, DualGraph> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) it = cache.emplace(depth, build_dual(sun_patch(depth))).first;
  return it->second;
}

// (half-kites, half-darts) after k rounds of (K, D) -> (2K + D, K + D).
inline std::pair<long long, long long> matrix_counts(long long k0, long long d0, int k) {
  long long a = k0;
  long long b = d0;
  for (int i = 0; i < k; ++i) {
    const long long na = 2 * a + b;
    const long long nb = a + b;
    a = na;
    b = nb;
  }
  return {a, b};
}

struct TreeFacts {
  bool tree = false;
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int max_degree = 0;
};

// Induced-subgraph facts by direct edge counting and a flood fill.
inline TreeFacts tree_facts(const DualGraph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  TreeFacts f;
  f.n = static_cast<int>(s.size());
  if (s.empty()) return f;
  std::set<int> in(s.begin(), s.end());
  int edges = 0;
  std::map<int, int> deg;
  for (int u : s) {
    for (int v : s) {
      if (u < v && g.adjacent(u, v)) {
        ++edges;
        ++deg[u];
        ++deg[v];
      }
    }
  }
  std::set<int> seen{s[0]};
  std::vector<int> stack{s[0]};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (in.count(v) && seen.insert(v).second) stack.push_back(v);
    }
  }
  f.tree = seen.size() == s.size() && edges == f.n - 1;
  for (int u : s) {
    const int d = deg[u];
    f.max_degree = std::max(f.max_degree, d);
    if (d == 1) ++f.n1;
    if (d == 2) ++f.n2;
    if (d == 3) ++f.n3;
  }
  if (f.n == 1) f.n1 = 0;
  return f;
}

// Random induced tree grown one tile at a time inside the region; stops early
// when no tile can be added without closing a cycle.
inline std::vector<int> random_induced_tree(const DualGraph& g, const std::vector<int>& region, int n,
                                            std::mt19937_64& rng) {
  std::set<int> allowed(region.begin(), region.end());
  std::uniform_int_distribution<std::size_t> pick(0, region.size() - 1);
  std::vector<int> tree{region[pick(rng)]};
  std::set<int> in{tree[0]};
  while (static_cast<int>(tree.size()) < n) {
    std::vector<int> options;
    for (int u : tree) {
      for (int v : g.neighbors(u)) {
        if (!allowed.count(v) || in.count(v)) continue;
        int touching = 0;
        for (int w : g.neighbors(v)) touching += in.count(w) ? 1 : 0;
        if (touching == 1) options.push_back(v);
      }
    }
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    if (options.empty()) break;
    const int v = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    tree.push_back(v);
    in.insert(v);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Best leaf count per size over all vertex subsets of a small region,
// -1 where no induced tree of that size exists; the empty set counts as a
// tree without leaves.
inline std::vector<int> subset_leaf_oracle(const DualGraph& g, const std::vector<int>& region) {
  const std::size_t r = region.size();
  std::vector<std::uint32_t> nbr(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && g.adjacent(region[i], region[j])) nbr[i] |= 1U << j;
    }
  }
  std::vector<int> best(r + 1, -1);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
    const int n = __builtin_popcount(mask);
    int twice_edges = 0;
    int leaves = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask & (1U << i))) continue;
      const int d = __builtin_popcount(nbr[i] & mask);
      twice_edges += d;
      leaves += d == 1 ? 1 : 0;
    }
    if (twice_edges != 2 * (n - 1)) continue;
    std::uint32_t reach = mask & (~mask + 1);
    for (;;) {
      std::uint32_t next = reach;
      for (std::size_t i = 0; i < r; ++i) {
        if (reach & (1U << i)) next |= nbr[i] & mask;
      }
      if (next == reach) break;
      reach = next;
    }
    if (reach != mask) continue;
    best[static_cast<std::size_t>(n)] = std::max(best[static_cast<std::size_t>(n)], n == 1 ? 0 : leaves);
  }
  return best;
}

// Connected set of at most `size` tiles around a random start, in BFS order.
inline std::vector<int> bfs_region(const DualGraph& g, const std::vector<int>& pool, std::size_t size,
                                   std::mt19937_64& rng) {
  std::set<int> allowed(pool.begin(), pool.end());
  const int start = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  std::vector<int> order{start};
  std::set<int> seen{start};
  for (std::size_t i = 0; i < order.size() && order.size() < size; ++i) {
    for (int v : g.neighbors(order[i])) {
      if (order.size() >= size) break;
      if (allowed.count(v) && seen.insert(v).second) order.push_back(v);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace testing
