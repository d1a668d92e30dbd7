#include "p2leaf/dualgraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "p2leaf/error.hpp"

namespace p2leaf {

bool DualGraph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t DualGraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& a : adj_) m += a.size();
  return m / 2;
}

std::vector<std::pair<int, int>> DualGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DualGraph DualGraph::from_adjacency(std::vector<std::vector<int>> adj) {
  DualGraph g;
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  g.adj_ = std::move(adj);
  g.tiles_.resize(g.adj_.size());
  g.complete_.assign(g.adj_.size(), 1);
  return g;
}

DualGraph build_dual(const TilePatch& tp) {
  DualGraph g;
  g.adj_.resize(tp.size());
  g.tiles_ = tp.tiles();
  for (const auto& [edge, ts] : tp.edge_index()) {
    if (ts.size() == 2 && ts[0] != ts[1]) {
      g.adj_[static_cast<std::size_t>(ts[0])].push_back(ts[1]);
      g.adj_[static_cast<std::size_t>(ts[1])].push_back(ts[0]);
    }
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  g.complete_.assign(tp.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 4) continue;
    bool ok = true;
    for (const Point& p : tp.tile(v).v) {
      if (angle_units_at(tp, p) < 10) {
        ok = false;
        break;
      }
    }
    g.complete_[static_cast<std::size_t>(v)] = ok ? 1 : 0;
  }
  return g;
}

std::vector<int> interior_region(const DualGraph& g, int r) {
  // dist[v] = distance from v to the nearest incomplete tile (capped at r + 1).
  const int n = g.size();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!g.complete(v)) {
      dist[static_cast<std::size_t>(v)] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int du = dist[static_cast<std::size_t>(u)];
    if (du > r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    const int d = dist[static_cast<std::size_t>(v)];
    if (d < 0 || d > r) out.push_back(v);
  }
  return out;
}

int induced_degree(const DualGraph& g, std::span<const int> s, int v) {
  int d = 0;
  for (int w : g.neighbors(v)) {
    if (std::binary_search(s.begin(), s.end(), w)) ++d;
  }
  return d;
}

namespace {

std::vector<int> sorted_unique(std::span<const int> s) {
  std::vector<int> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool connected(const DualGraph& g, const std::vector<int>& s) {
  if (s.empty()) return true;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int u = s[stack.back()];
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it == s.end() || *it != w) continue;
      const auto i = static_cast<std::size_t>(it - s.begin());
      if (!seen[i]) {
        seen[i] = 1;
        ++count;
        stack.push_back(i);
      }
    }
  }
  return count == s.size();
}

bool is_path(const DualGraph& g, const std::vector<int>& s) {
  // s is a tree here; a tree is a path iff no degree exceeds 2.
  for (int v : s) {
    if (induced_degree(g, s, v) > 2) return false;
  }
  return true;
}

}  // namespace

std::vector<int> derived_vertices(const DualGraph& g, std::span<const int> s) {
  std::vector<int> out;
  for (int v : s) {
    if (induced_degree(g, s, v) > 1) out.push_back(v);
  }
  return out;
}

Profile profile(const DualGraph& g, std::span<const int> s_in) {
  const std::vector<int> s = sorted_unique(s_in);
  Profile p;
  p.n = static_cast<int>(s.size());
  long long degree_sum = 0;
  for (int v : s) {
    const int d = induced_degree(g, s, v);
    degree_sum += d;
    p.max_degree = std::max(p.max_degree, d);
    if (d == 1) ++p.n1;
    if (d == 2) ++p.n2;
    if (d == 3) ++p.n3;
  }
  const long long m = degree_sum / 2;
  p.is_tree = !s.empty() && m == p.n - 1 && connected(g, s);
  if (p.is_tree) {
    p.is_caterpillar = is_path(g, derived_vertices(g, s));
    p.is_3_internal_regular = p.n2 == 0 && p.max_degree <= 3;
  }
  return p;
}

Subtree::Subtree(const DualGraph& g, std::vector<int> vs) : vertices(std::move(vs)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  prof = profile(g, vertices);
}

bool Subtree::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Subtree graft(const DualGraph& g, const Subtree& i1, const Subtree& i2, int t1, int t2) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::GraftPreconditionViolated, why); };
  if (!g.adjacent(t1, t2)) fail("t1 and t2 are not adjacent");
  std::vector<int> common;
  std::set_intersection(i1.vertices.begin(), i1.vertices.end(), i2.vertices.begin(), i2.vertices.end(),
                        std::back_inserter(common));
  if (common != std::vector<int>{std::min(t1, t2), std::max(t1, t2)}) fail("I1 and I2 must intersect exactly in {t1, t2}");
  if (!i1.prof.is_tree || !i2.prof.is_tree) fail("both parts must be induced trees");
  if (induced_degree(g, i1.vertices, t2) != 1) fail("t2 is not a leaf of I1");
  if (induced_degree(g, i2.vertices, t1) != 1) fail("t1 is not a leaf of I2");
  std::vector<int> all;
  std::set_union(i1.vertices.begin(), i1.vertices.end(), i2.vertices.begin(), i2.vertices.end(),
                 std::back_inserter(all));
  Subtree out(g, std::move(all));
  if (!out.prof.is_tree) fail("the union is not an induced tree");
  return out;
}

std::pair<Subtree, Subtree> factorize(const DualGraph& g, const Subtree& i, int t1, int t2) {
  if (!i.prof.is_tree) throw Error(ErrorCode::NotATree, "factorize needs an induced tree");
  if (!i.contains(t1) || !i.contains(t2) || !g.adjacent(t1, t2)) {
    throw Error(ErrorCode::NotAnEdge, std::to_string(t1) + "-" + std::to_string(t2) + " is not an edge of the tree");
  }
  // Side of t1 after removing edge t1-t2.
  std::vector<int> side{t1};
  std::vector<int> stack{t1};
  std::vector<int> seen{t1};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if ((u == t1 && w == t2) || !i.contains(w)) continue;
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      side.push_back(w);
      stack.push_back(w);
    }
  }
  std::sort(side.begin(), side.end());
  std::vector<int> other;
  std::set_difference(i.vertices.begin(), i.vertices.end(), side.begin(), side.end(), std::back_inserter(other));
  side.push_back(t2);
  other.push_back(t1);
  return {Subtree(g, std::move(side)), Subtree(g, std::move(other))};
}

bool has_adjacent_neighbor_pair(const DualGraph& g, int v) {
  auto nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (g.adjacent(nb[a], nb[b])) return true;
    }
  }
  return false;
}

}  // namespace p2leaf
