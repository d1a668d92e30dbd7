#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "p2leaf/cyclo.hpp"

namespace p2leaf {

enum class TileKind : std::uint8_t { Kite, Dart };
enum class Chirality : std::uint8_t { Left, Right };

/// Robinson triangle. Vertex roles are fixed by position:
///   half-kite: {head (36 deg), tail, wing}, |head-tail| = |head-wing| = phi, |tail-wing| = 1
///   half-dart: {reflex (108 deg), tip, wing}, |reflex-tip| = |reflex-wing| = 1, |tip-wing| = phi
/// The first two vertices span the symmetry axis of the full tile; the mirror
/// half shares them and has the opposite chirality.
struct HalfTile {
  TileKind kind{};
  std::array<Point, 3> v{};

  const Point& apex() const { return v[0]; }
  const Point& axis_end() const { return v[1]; }
  const Point& wing() const { return v[2]; }
  /// Left when the wing lies counter-clockwise of the axis seen from the apex.
  Chirality chirality() const;
};

/// Corner role of a full tile, with its interior angle in units of 36 degrees.
enum class Corner : std::uint8_t { KiteHead, KiteWing, KiteTail, DartTip, DartWing, DartReflex };

int corner_units(Corner c) noexcept;

/// Kite or dart with vertices in counter-clockwise order:
///   kite: head (72), wing (72), tail (144), wing (72)
///   dart: tip (72), wing (36), reflex (216), wing (36)
/// Edges v0v1 and v3v0 have length phi, v1v2 and v2v3 have length 1.
struct Tile {
  TileKind kind{};
  std::array<Point, 4> v{};

  Corner corner(std::size_t i) const;
  /// Index of the reflex vertex of a dart (always 2).
  static constexpr std::size_t kReflexIndex = 2;
  /// Sorted vertex tuple; lexicographic order on it defines tile ids.
  std::array<Point, 4> canonical_key() const;
};

/// Half-tile level patch, the object the substitution acts on.
struct Patch {
  std::vector<HalfTile> half_tiles;
  int depth = 0;
};

enum class VertexConfig : std::uint8_t { Ace, Deuce, Jack, Queen, King, Star, Sun, Boundary };

std::string_view to_string(VertexConfig c) noexcept;
std::optional<VertexConfig> vertex_config_from_string(std::string_view name);
/// The seven configurations that occur in a P2 tiling.
const std::array<VertexConfig, 7>& all_vertex_configs();

struct CornerRef {
  int tile = 0;
  int corner = 0;
};

struct EdgeKey {
  Point a;  // a < b
  Point b;
  EdgeKey(Point p, Point q);
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const noexcept;
};

/// Merged kite/dart patch with vertex and edge indices. Tiles are sorted by
/// canonical key, so tile ids are reproducible.
class TilePatch {
 public:
  TilePatch() = default;
  TilePatch(std::vector<Tile> tiles, int depth);

  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  const Tile& tile(int id) const { return tiles_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const noexcept { return tiles_.size(); }
  bool empty() const noexcept { return tiles_.empty(); }
  int depth() const noexcept { return depth_; }

  const std::unordered_map<Point, std::vector<CornerRef>, CycloHash>& vertex_index() const noexcept {
    return vertex_index_;
  }
  const std::unordered_map<EdgeKey, std::vector<int>, EdgeKeyHash>& edge_index() const noexcept {
    return edge_index_;
  }
  std::span<const CornerRef> incident(const Point& p) const;
  /// Vertices in canonical (coefficient) order.
  std::vector<Point> sorted_vertices() const;

 private:
  std::vector<Tile> tiles_;
  int depth_ = 0;
  std::unordered_map<Point, std::vector<CornerRef>, CycloHash> vertex_index_;
  std::unordered_map<EdgeKey, std::vector<int>, EdgeKeyHash> edge_index_;
};

struct HalfTileCounts {
  long long kites = 0;
  long long darts = 0;
  friend bool operator==(const HalfTileCounts&, const HalfTileCounts&) = default;
};

HalfTileCounts count_half_tiles(const Patch& p);

/// Patch of tiles around a single central vertex (at the origin) realizing `config`.
Patch seed_patch(VertexConfig config);

/// Applies `steps` rounds of inflation: scale by phi, then split every
/// half-kite into two half-kites and a half-dart and every half-dart into a
/// half-kite and a half-dart.
Patch substitute(const Patch& patch, int steps);

/// Pairs mirror half-tiles into kites and darts. Half-tiles whose mirror
/// partner lies outside the patch are dropped; an unpaired half-tile whose
/// axis is shared with another half-tile throws InternalUnpairedHalfTile.
TilePatch merge_half_tiles(const Patch& patch);

/// Inverse of merge: every tile split along its symmetry axis.
Patch split_tiles(const TilePatch& tp);

/// Angle sum at `v`, in units of 36 degrees.
int angle_units_at(const TilePatch& tp, const Point& v);

/// Boundary when the incident angles sum to less than 360 degrees; otherwise
/// the matching one of the seven configurations. Throws IllegalVertex when
/// the corners close up (or overlap) without matching any of them.
VertexConfig classify_vertex(const TilePatch& tp, const Point& v);

struct LegalityIssue {
  Point where;
  std::string reason;
};

/// Empty iff every closed vertex is one of the seven configurations, no
/// vertex is over-covered and no edge is shared by more than two tiles.
std::vector<LegalityIssue> check_legality(const TilePatch& tp);

/// Exact edge-length check: every tile edge has |e|^2 in {1, phi^2}.
bool edge_lengths_valid(const Tile& t);

}  // namespace p2leaf
