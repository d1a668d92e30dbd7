#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "p2leaf/tiling.hpp"

namespace p2leaf {

/// Tile adjacency graph. Vertex ids coincide with tile ids of the source
/// patch; two tiles are adjacent when they share a full edge.
class DualGraph {
 public:
  DualGraph() = default;

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  const Tile& tile(int v) const { return tiles_.at(static_cast<std::size_t>(v)); }
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  /// True when the tile has all four neighbors and none of its corners lies
  /// on the patch boundary.
  bool complete(int v) const { return complete_.at(static_cast<std::size_t>(v)) != 0; }

  /// For tests and small hand-built examples: a graph with the given
  /// adjacency and every vertex marked complete.
  static DualGraph from_adjacency(std::vector<std::vector<int>> adj);

  friend DualGraph build_dual(const TilePatch& tp);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Tile> tiles_;
  std::vector<char> complete_;
};

DualGraph build_dual(const TilePatch& tp);

/// Tiles v such that every tile within graph distance r of v is complete.
/// Sorted ascending.
std::vector<int> interior_region(const DualGraph& g, int r);

struct Profile {
  bool is_tree = false;
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int max_degree = 0;
  bool is_caterpillar = false;
  /// Every non-leaf vertex has degree exactly 3.
  bool is_3_internal_regular = false;
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Induced-subgraph analysis of the vertex set s (duplicates ignored).
Profile profile(const DualGraph& g, std::span<const int> s);

/// Vertex set with its cached profile.
struct Subtree {
  std::vector<int> vertices;  // sorted
  Profile prof;

  Subtree() = default;
  Subtree(const DualGraph& g, std::vector<int> vs);
  bool contains(int v) const;
  friend bool operator==(const Subtree& a, const Subtree& b) { return a.vertices == b.vertices; }
};

/// Degree of v inside the induced subgraph on s (s sorted).
int induced_degree(const DualGraph& g, std::span<const int> s, int v);

/// Non-leaf vertices of the tree, sorted.
std::vector<int> derived_vertices(const DualGraph& g, std::span<const int> s);

/// I1 <> I2: requires I1 and I2 to meet exactly in the adjacent pair
/// {t1, t2}, t2 a leaf of I1, t1 a leaf of I2, and the union to be an
/// induced tree. Throws GraftPreconditionViolated naming the failed clause.
Subtree graft(const DualGraph& g, const Subtree& i1, const Subtree& i2, int t1, int t2);

/// Inverse of graft: cutting edge t1-t2 of I, I1 is the side of t1 plus
/// t2, I2 the side of t2 plus t1. Throws NotATree or NotAnEdge.
std::pair<Subtree, Subtree> factorize(const DualGraph& g, const Subtree& i, int t1, int t2);

/// At least two neighbors of v are adjacent to each other. Holds for every
/// complete tile of a P2 tiling and bounds induced-tree degrees by 3.
bool has_adjacent_neighbor_pair(const DualGraph& g, int v);

}  // namespace p2leaf
