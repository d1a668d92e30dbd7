#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p2leaf/dualgraph.hpp"
#include "p2leaf/tiling.hpp"

namespace p2leaf {

/// Isometry class key of a set of tiles: the smallest serialization over
/// the 20 point-group elements, each followed by the translation that moves
/// the smallest vertex to the origin.
std::string isometry_key(const std::vector<Tile>& tiles);

/// Isometry class of derived trees I' of 3-internal-regular subtrees.
struct DerivedClass {
  std::string key;
  int size = 0;
  std::vector<int> representative;             // tile ids of one instance of I'
  std::vector<int> representative_leaves;      // the leaves completing it to I
  std::vector<std::pair<int, int>> edges;      // edges of I', as indices into representative
  std::uint64_t instances = 0;
};

struct Poset {
  std::map<int, std::vector<DerivedClass>> rows;  // internal size -> classes sorted by key
  std::vector<std::pair<std::string, std::string>> covers;  // (smaller, larger)
  /// Every enumerated instance had a path as derived tree.
  bool all_instances_caterpillar = true;
  std::uint64_t instances = 0;

  std::size_t row_size(int size) const;
  const DerivedClass* find(const std::string& key) const;
};

/// Leaves completing I' (sorted ids, one valid choice, canonical minimum)
/// to a 3-internal-regular induced subtree, if any. I' must be an induced
/// tree of g whose vertices have complete neighborhoods.
std::optional<std::vector<int>> complete_leaves(const DualGraph& g, const std::vector<int>& derived);

/// Enumerates all 3-internal-regular induced subtrees whose derived tree
/// lies in the region (default interior_region(g, 2)), grouped by isometry
/// class of the derived tree and graded by its size. Rows are grown until
/// one comes out empty. Throws MarginTooSmall when the region leaves the
/// margin-2 interior.
Poset enumerate_3regular(const DualGraph& g, std::vector<int> region = {});

/// True iff all enumerated instances were caterpillars and every stored
/// class has a path as derived tree (according to its stored edges).
bool caterpillar_check(const Poset& poset);

struct Flower {
  Point center;
  std::vector<int> big_sun;   // the Star's 5 darts and the 10 kites on their short edges
  std::vector<int> adjacent;  // tiles next to the big sun
  /// All big-sun tiles complete, so every adjacent tile and rim vertex is known.
  bool complete = false;
  /// Sun vertices on the rim of the big sun (distance phi^2 from the
  /// center); -1 when the flower is not complete.
  int star_type = -1;
};

/// One flower per Star vertex whose 15 big-sun tiles are all present,
/// sorted by center.
std::vector<Flower> detect_flowers(const TilePatch& tp, const DualGraph& g);
std::vector<Flower> detect_flowers(const TilePatch& tp);

enum class FaceShape { Hexagon, Boat, Star, Other };
std::string_view to_string(FaceShape s) noexcept;

struct SkeletonFace {
  std::vector<int> nodes;  // counter-clockwise
  std::vector<int> angles; // interior angles in units of 36 degrees
  FaceShape shape = FaceShape::Other;
};

/// Graph on flower centers joining the closest pairs, phi^4 apart in
/// short-edge units (phi^3 long edges).
struct StarSkeleton {
  std::vector<Point> nodes;
  std::vector<int> star_type;
  std::vector<std::pair<int, int>> edges;
  /// Bounded faces far enough from the patch boundary to be complete.
  std::vector<SkeletonFace> faces;
};

/// Squared length of every skeleton edge: phi^8.
CycloInt skeleton_edge_norm();

StarSkeleton star_skeleton(const TilePatch& tp, const std::vector<Flower>& flowers);

/// Derived path with its leaves; word[i] is the degree of path[i].
struct CaterpillarPlan {
  std::vector<int> path;
  std::vector<std::vector<int>> leaves;
  std::vector<int> word;

  std::vector<int> tiles() const;
  std::size_t size() const;
};

/// Degree word along the derived path of a fully leafed caterpillar with n
/// tiles: as few 2's as possible, runs of 3's of length at most 8. For
/// n <= 2 the path is a single tile of degree n - 1; empty for n = 0.
std::vector<int> optimal_word(int n);

struct CorridorOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Derived-path tiles must lie within this graph distance of a flower's big sun.
  int corridor_radius = 3;
};

/// Searches the patch for an induced caterpillar whose derived path follows
/// `word` exactly, with path tiles inside the flower corridor. Start tiles
/// are tried nearest to the patch center first. Throws NotFoundWithinPatch.
CaterpillarPlan find_caterpillar(const DualGraph& g, const TilePatch& tp, const std::vector<int>& word,
                                 const CorridorOptions& opt = {});

/// Caterpillar with n_target tiles and leaf_recursive(n_target) leaves.
CaterpillarPlan corridor_caterpillar_search(const DualGraph& g, const TilePatch& tp, int n_target,
                                            const CorridorOptions& opt = {});

/// Host word 3 2 (3^8 2)^blocks 3.
std::vector<int> host_word(int blocks);

/// Walks the host from its first degree-2 path vertex, adding each path
/// vertex and then its leaves, until n tiles are collected.
Subtree extract_family_member(const DualGraph& g, const CaterpillarPlan& host, int n);

/// Patch, dual graph and host caterpillar used to build the family.
class FamilyBuilder {
 public:
  /// depth: substitution depth of the Sun patch; blocks: host size.
  explicit FamilyBuilder(int depth = 10, int blocks = 16, CorridorOptions opt = {});

  /// Fully leafed induced caterpillar with n tiles. Throws
  /// NotFoundWithinPatch if the host is too short for n.
  Subtree build(int n) const;
  int max_n() const;

  const TilePatch& patch() const noexcept { return tp_; }
  const DualGraph& graph() const noexcept { return g_; }
  const CaterpillarPlan& host() const noexcept { return host_; }

 private:
  TilePatch tp_;
  DualGraph g_;
  CaterpillarPlan host_;
};

/// Shared builder whose host is long enough for n; built once per host size.
const FamilyBuilder& family_builder(int n);

/// family_builder(n).build(n).
Subtree construct_family(int n);

}  // namespace p2leaf
