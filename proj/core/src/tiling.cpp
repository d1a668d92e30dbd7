#include "p2leaf/tiling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "p2leaf/error.hpp"

namespace p2leaf {

namespace {

const CycloInt& phi() {
  static const CycloInt v = golden();
  return v;
}

const CycloInt& inv_phi() {  // 1/phi = phi - 1
  static const CycloInt v = golden() - CycloInt(1);
  return v;
}

const CycloInt& inv_phi2() {  // 1/phi^2 = 2 - phi
  static const CycloInt v = CycloInt(2) - golden();
  return v;
}

// Corner counts per configuration, indexed by Corner.
using CornerCounts = std::array<int, 6>;

struct ConfigSignature {
  VertexConfig config;
  CornerCounts counts;
};

constexpr std::array<ConfigSignature, 7> kSignatures{{
    {VertexConfig::Sun, {5, 0, 0, 0, 0, 0}},
    {VertexConfig::Star, {0, 0, 0, 5, 0, 0}},
    {VertexConfig::Ace, {0, 2, 0, 0, 0, 1}},
    {VertexConfig::Deuce, {0, 0, 2, 0, 2, 0}},
    {VertexConfig::Jack, {2, 0, 1, 0, 2, 0}},
    {VertexConfig::Queen, {0, 4, 0, 1, 0, 0}},
    {VertexConfig::King, {0, 2, 0, 3, 0, 0}},
}};

struct HalfKey {
  TileKind kind;
  Point apex;
  Point axis_end;
  friend bool operator==(const HalfKey&, const HalfKey&) = default;
};

struct HalfKeyHash {
  std::size_t operator()(const HalfKey& k) const noexcept {
    CycloHash h;
    return h(k.apex) * 31 + h(k.axis_end) * 7 + static_cast<std::size_t>(k.kind);
  }
};

Tile tile_from_halves(const HalfTile& a, const HalfTile& b) {
  // Kite: head, wing, tail, wing. Dart: tip, wing, reflex, wing. Both counter-clockwise.
  Tile t{a.kind, {}};
  const Point& first = a.kind == TileKind::Kite ? a.apex() : a.axis_end();
  const Point& third = a.kind == TileKind::Kite ? a.axis_end() : a.apex();
  // Counter-clockwise: the second vertex is clockwise of the axis seen from the first.
  const bool a_first = orientation(a.wing() - first, third - first) > 0;
  t.v = {first, a_first ? a.wing() : b.wing(), third, a_first ? b.wing() : a.wing()};
  return t;
}

}  // namespace

Chirality HalfTile::chirality() const {
  return orientation(axis_end() - apex(), wing() - apex()) > 0 ? Chirality::Left : Chirality::Right;
}

int corner_units(Corner c) noexcept {
  switch (c) {
    case Corner::KiteHead: return 2;
    case Corner::KiteWing: return 2;
    case Corner::KiteTail: return 4;
    case Corner::DartTip: return 2;
    case Corner::DartWing: return 1;
    case Corner::DartReflex: return 6;
  }
  return 0;
}

Corner Tile::corner(std::size_t i) const {
  if (kind == TileKind::Kite) {
    return i == 0 ? Corner::KiteHead : (i == 2 ? Corner::KiteTail : Corner::KiteWing);
  }
  return i == 0 ? Corner::DartTip : (i == 2 ? Corner::DartReflex : Corner::DartWing);
}

std::array<Point, 4> Tile::canonical_key() const {
  std::array<Point, 4> k = v;
  std::sort(k.begin(), k.end());
  return k;
}

std::string_view to_string(VertexConfig c) noexcept {
  switch (c) {
    case VertexConfig::Ace: return "ace";
    case VertexConfig::Deuce: return "deuce";
    case VertexConfig::Jack: return "jack";
    case VertexConfig::Queen: return "queen";
    case VertexConfig::King: return "king";
    case VertexConfig::Star: return "star";
    case VertexConfig::Sun: return "sun";
    case VertexConfig::Boundary: return "boundary";
  }
  return "?";
}

std::optional<VertexConfig> vertex_config_from_string(std::string_view name) {
  for (VertexConfig c : all_vertex_configs()) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

const std::array<VertexConfig, 7>& all_vertex_configs() {
  static const std::array<VertexConfig, 7> all{VertexConfig::Ace,  VertexConfig::Deuce, VertexConfig::Jack,
                                               VertexConfig::Queen, VertexConfig::King,  VertexConfig::Star,
                                               VertexConfig::Sun};
  return all;
}

EdgeKey::EdgeKey(Point p, Point q) : a(std::move(p)), b(std::move(q)) {
  if (b < a) std::swap(a, b);
}

std::size_t EdgeKeyHash::operator()(const EdgeKey& e) const noexcept {
  CycloHash h;
  return h(e.a) ^ (h(e.b) * 0x100000001b3ULL);
}

TilePatch::TilePatch(std::vector<Tile> tiles, int depth) : tiles_(std::move(tiles)), depth_(depth) {
  std::vector<std::pair<std::array<Point, 4>, std::size_t>> keyed;
  keyed.reserve(tiles_.size());
  for (std::size_t i = 0; i < tiles_.size(); ++i) keyed.emplace_back(tiles_[i].canonical_key(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Tile> sorted;
  sorted.reserve(tiles_.size());
  for (auto& [key, i] : keyed) sorted.push_back(std::move(tiles_[i]));
  tiles_ = std::move(sorted);

  vertex_index_.reserve(tiles_.size() * 2);
  edge_index_.reserve(tiles_.size() * 3);
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    const Tile& tile = tiles_[t];
    for (std::size_t i = 0; i < 4; ++i) {
      vertex_index_[tile.v[i]].push_back(CornerRef{static_cast<int>(t), static_cast<int>(i)});
      edge_index_[EdgeKey(tile.v[i], tile.v[(i + 1) % 4])].push_back(static_cast<int>(t));
    }
  }
}

std::span<const CornerRef> TilePatch::incident(const Point& p) const {
  auto it = vertex_index_.find(p);
  if (it == vertex_index_.end()) return {};
  return it->second;
}

std::vector<Point> TilePatch::sorted_vertices() const {
  std::vector<Point> out;
  out.reserve(vertex_index_.size());
  for (const auto& [p, refs] : vertex_index_) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

HalfTileCounts count_half_tiles(const Patch& p) {
  HalfTileCounts c;
  for (const HalfTile& h : p.half_tiles) (h.kind == TileKind::Kite ? c.kites : c.darts) += 1;
  return c;
}

Patch substitute(const Patch& patch, int steps) {
  Patch cur = patch;
  for (int s = 0; s < steps; ++s) {
    Patch next;
    next.depth = cur.depth + 1;
    next.half_tiles.reserve(cur.half_tiles.size() * 3);
    for (const HalfTile& h : cur.half_tiles) {
      const Point a = h.v[0] * phi();
      const Point b = h.v[1] * phi();
      const Point c = h.v[2] * phi();
      if (h.kind == TileKind::Kite) {
        // a = head, b = tail, c = wing
        Point x = a + (c - a) * inv_phi2();
        Point y = a + (b - a) * inv_phi();
        next.half_tiles.push_back(HalfTile{TileKind::Dart, {x, a, y}});
        next.half_tiles.push_back(HalfTile{TileKind::Kite, {c, y, b}});
        next.half_tiles.push_back(HalfTile{TileKind::Kite, {c, y, x}});
      } else {
        // a = reflex, b = tip, c = wing
        Point z = b + (c - b) * inv_phi();
        next.half_tiles.push_back(HalfTile{TileKind::Kite, {b, a, z}});
        next.half_tiles.push_back(HalfTile{TileKind::Dart, {z, c, a}});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TilePatch merge_half_tiles(const Patch& patch) {
  std::unordered_map<HalfKey, std::vector<std::size_t>, HalfKeyHash> groups;
  std::unordered_map<EdgeKey, int, EdgeKeyHash> edge_use;
  groups.reserve(patch.half_tiles.size());
  edge_use.reserve(patch.half_tiles.size() * 2);
  for (std::size_t i = 0; i < patch.half_tiles.size(); ++i) {
    const HalfTile& h = patch.half_tiles[i];
    groups[HalfKey{h.kind, h.apex(), h.axis_end()}].push_back(i);
    edge_use[EdgeKey(h.v[0], h.v[1])] += 1;
  }
  std::vector<Tile> tiles;
  tiles.reserve(patch.half_tiles.size() / 2);
  for (const auto& [key, members] : groups) {
    if (members.size() == 2) {
      tiles.push_back(tile_from_halves(patch.half_tiles[members[0]], patch.half_tiles[members[1]]));
    } else if (members.size() == 1) {
      if (edge_use[EdgeKey(key.apex, key.axis_end)] > 1) {
        throw Error(ErrorCode::InternalUnpairedHalfTile,
                    "half-tile with apex " + key.apex.to_string() + " has no mirror partner");
      }
    } else {
      throw Error(ErrorCode::InternalUnpairedHalfTile,
                  "more than two half-tiles share the axis at " + key.apex.to_string());
    }
  }
  return TilePatch(std::move(tiles), patch.depth);
}

Patch split_tiles(const TilePatch& tp) {
  Patch out;
  out.depth = tp.depth();
  out.half_tiles.reserve(tp.size() * 2);
  for (const Tile& t : tp.tiles()) {
    if (t.kind == TileKind::Kite) {
      out.half_tiles.push_back(HalfTile{TileKind::Kite, {t.v[0], t.v[2], t.v[1]}});
      out.half_tiles.push_back(HalfTile{TileKind::Kite, {t.v[0], t.v[2], t.v[3]}});
    } else {
      out.half_tiles.push_back(HalfTile{TileKind::Dart, {t.v[2], t.v[0], t.v[1]}});
      out.half_tiles.push_back(HalfTile{TileKind::Dart, {t.v[2], t.v[0], t.v[3]}});
    }
  }
  return out;
}

int angle_units_at(const TilePatch& tp, const Point& v) {
  int sum = 0;
  for (const CornerRef& r : tp.incident(v)) {
    sum += corner_units(tp.tile(r.tile).corner(static_cast<std::size_t>(r.corner)));
  }
  return sum;
}

VertexConfig classify_vertex(const TilePatch& tp, const Point& v) {
  CornerCounts counts{};
  int sum = 0;
  for (const CornerRef& r : tp.incident(v)) {
    const Corner c = tp.tile(r.tile).corner(static_cast<std::size_t>(r.corner));
    counts[static_cast<std::size_t>(c)] += 1;
    sum += corner_units(c);
  }
  if (sum < 10) return VertexConfig::Boundary;
  if (sum == 10) {
    for (const ConfigSignature& s : kSignatures) {
      if (s.counts == counts) return s.config;
    }
  }
  throw Error(ErrorCode::IllegalVertex, "vertex " + v.to_string() + " has angle sum " +
                                            std::to_string(sum * 36) + " deg and no legal configuration");
}

std::vector<LegalityIssue> check_legality(const TilePatch& tp) {
  std::vector<LegalityIssue> issues;
  for (const Point& v : tp.sorted_vertices()) {
    try {
      classify_vertex(tp, v);
    } catch (const Error& e) {
      issues.push_back(LegalityIssue{v, e.what()});
    }
  }
  std::vector<EdgeKey> crowded;
  for (const auto& [e, ts] : tp.edge_index()) {
    if (ts.size() > 2) crowded.push_back(e);
  }
  std::sort(crowded.begin(), crowded.end(), [](const EdgeKey& x, const EdgeKey& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const EdgeKey& e : crowded) {
    issues.push_back(LegalityIssue{e.a, "edge to " + e.b.to_string() + " shared by more than two tiles"});
  }
  return issues;
}

bool edge_lengths_valid(const Tile& t) {
  static const CycloInt one(1);
  static const CycloInt phi2 = golden() * golden();
  for (std::size_t i = 0; i < 4; ++i) {
    const CycloInt len2 = norm2(t.v[(i + 1) % 4] - t.v[i]);
    const bool long_edge = (i == 0 || i == 3);
    if (len2 != (long_edge ? phi2 : one)) return false;
  }
  return true;
}

namespace {

Patch sun_seed() {
  Patch p;
  const CycloInt f = golden();
  for (int i = 0; i < 5; ++i) {
    const Point tail = f * CycloInt::zeta_pow(2 * i);
    p.half_tiles.push_back(HalfTile{TileKind::Kite, {Point{}, tail, f * CycloInt::zeta_pow(2 * i + 1)}});
    p.half_tiles.push_back(HalfTile{TileKind::Kite, {Point{}, tail, f * CycloInt::zeta_pow(2 * i - 1)}});
  }
  return p;
}

Patch star_seed() {
  Patch p;
  const CycloInt f = golden();
  for (int i = 0; i < 5; ++i) {
    const Point reflex = CycloInt::zeta_pow(2 * i);
    p.half_tiles.push_back(HalfTile{TileKind::Dart, {reflex, Point{}, f * CycloInt::zeta_pow(2 * i + 1)}});
    p.half_tiles.push_back(HalfTile{TileKind::Dart, {reflex, Point{}, f * CycloInt::zeta_pow(2 * i - 1)}});
  }
  return p;
}

// The first vertex (in coefficient order) of an inflated sun carrying the
// configuration, re-centred at the origin.
Patch extracted_seed(VertexConfig config) {
  Patch sun = sun_seed();
  for (int depth = 1; depth <= 6; ++depth) {
    sun = substitute(sun, 1);
    const TilePatch tp = merge_half_tiles(sun);
    for (const Point& v : tp.sorted_vertices()) {
      if (classify_vertex(tp, v) != config) continue;
      std::vector<Tile> around;
      for (const CornerRef& r : tp.incident(v)) {
        Tile t = tp.tile(r.tile);
        for (Point& q : t.v) q -= v;
        around.push_back(std::move(t));
      }
      return split_tiles(TilePatch(std::move(around), 0));
    }
  }
  throw Error(ErrorCode::InvariantViolation, "no occurrence of " + std::string(to_string(config)));
}

}  // namespace

Patch seed_patch(VertexConfig config) {
  switch (config) {
    case VertexConfig::Sun: return sun_seed();
    case VertexConfig::Star: return star_seed();
    case VertexConfig::Boundary:
      throw Error(ErrorCode::DomainError, "no seed patch for a boundary vertex");
    default: {
      static std::map<VertexConfig, Patch> cache;
      static std::mutex mu;
      std::lock_guard lock(mu);
      auto it = cache.find(config);
      if (it == cache.end()) it = cache.emplace(config, extracted_seed(config)).first;
      return it->second;
    }
  }
}

}  // namespace p2leaf
