#include "p2leaf/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

#include "p2leaf/error.hpp"
#include "p2leaf/leaf_formula.hpp"

namespace p2leaf {

namespace {

bool sorted_contains(const std::vector<int>& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

std::string serialize(std::vector<std::pair<TileKind, std::array<Point, 4>>>& tiles) {
  std::sort(tiles.begin(), tiles.end());
  std::string out;
  for (const auto& [kind, vs] : tiles) {
    out += kind == TileKind::Kite ? 'K' : 'D';
    for (const Point& p : vs) out += p.to_string();
    out += ';';
  }
  return out;
}

const CycloInt& phi4() {
  static const CycloInt v = [] {
    const CycloInt f = golden();
    return f * f * f * f;
  }();
  return v;
}

}  // namespace

std::string isometry_key(const std::vector<Tile>& tiles) {
  if (tiles.empty()) return "";
  std::string best;
  bool first = true;
  for (const Isometry& iso : point_group()) {
    std::vector<std::pair<TileKind, std::array<Point, 4>>> moved;
    moved.reserve(tiles.size());
    Point lowest;
    bool have_lowest = false;
    for (const Tile& t : tiles) {
      std::array<Point, 4> vs;
      for (std::size_t i = 0; i < 4; ++i) {
        vs[i] = iso.apply(t.v[i]);
        if (!have_lowest || vs[i] < lowest) {
          lowest = vs[i];
          have_lowest = true;
        }
      }
      moved.emplace_back(t.kind, vs);
    }
    for (auto& [kind, vs] : moved) {
      for (Point& p : vs) p -= lowest;
      std::sort(vs.begin(), vs.end());
    }
    std::string s = serialize(moved);
    if (first || s < best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

std::size_t Poset::row_size(int size) const {
  auto it = rows.find(size);
  return it == rows.end() ? 0 : it->second.size();
}

const DerivedClass* Poset::find(const std::string& key) const {
  for (const auto& [size, classes] : rows) {
    for (const DerivedClass& c : classes) {
      if (c.key == key) return &c;
    }
  }
  return nullptr;
}

std::optional<std::vector<int>> complete_leaves(const DualGraph& g, const std::vector<int>& derived) {
  struct Need {
    int count;
    std::vector<int> options;
  };
  std::vector<Need> needs;
  for (int v : derived) {
    const int d = induced_degree(g, derived, v);
    const int need = derived.size() == 1 ? 3 : 3 - d;
    if (need < 0) return std::nullopt;
    Need n{need, {}};
    for (int l : g.neighbors(v)) {
      if (sorted_contains(derived, l)) continue;
      if (induced_degree(g, derived, l) == 1) n.options.push_back(l);
    }
    if (static_cast<int>(n.options.size()) < need) return std::nullopt;
    if (need > 0) needs.push_back(std::move(n));
  }
  std::vector<int> chosen;
  std::function<bool(std::size_t, std::size_t, int)> pick = [&](std::size_t i, std::size_t from, int left) -> bool {
    if (i == needs.size()) return true;
    if (left == 0) return pick(i + 1, 0, i + 1 < needs.size() ? needs[i + 1].count : 0);
    const auto& opts = needs[i].options;
    for (std::size_t j = from; j < opts.size(); ++j) {
      const int l = opts[j];
      bool clash = false;
      for (int c : chosen) {
        if (g.adjacent(c, l)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen.push_back(l);
      if (pick(i, j + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!pick(0, 0, needs.empty() ? 0 : needs[0].count)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Poset enumerate_3regular(const DualGraph& g, std::vector<int> region) {
  const std::vector<int> inner = interior_region(g, 2);
  if (region.empty()) {
    region = inner;
  } else {
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());
    if (!std::includes(inner.begin(), inner.end(), region.begin(), region.end())) {
      throw Error(ErrorCode::MarginTooSmall, "enumeration region must lie in the margin-2 interior");
    }
  }
  std::vector<char> in_region(static_cast<std::size_t>(g.size()), 0);
  for (int v : region) in_region[static_cast<std::size_t>(v)] = 1;

  Poset poset;
  std::set<std::vector<int>> level;
  for (int v : region) {
    if (complete_leaves(g, {v})) level.insert({v});
  }
  for (int size = 1; !level.empty(); ++size) {
    std::map<std::string, DerivedClass> classes;
    for (const std::vector<int>& s : level) {
      std::vector<Tile> tiles;
      for (int v : s) tiles.push_back(g.tile(v));
      const std::string key = isometry_key(tiles);
      bool path = true;
      for (int v : s) {
        if (induced_degree(g, s, v) > 2) path = false;
      }
      if (!path) poset.all_instances_caterpillar = false;
      ++poset.instances;
      auto [it, fresh] = classes.try_emplace(key);
      DerivedClass& c = it->second;
      if (fresh) {
        c.key = key;
        c.size = size;
        c.representative = s;
        c.representative_leaves = *complete_leaves(g, s);
        for (std::size_t a = 0; a < s.size(); ++a) {
          for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.adjacent(s[a], s[b])) c.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
          }
        }
      }
      ++c.instances;
    }
    auto& row = poset.rows[size];
    for (auto& [key, c] : classes) row.push_back(std::move(c));

    std::set<std::vector<int>> next;
    for (const std::vector<int>& s : level) {
      for (int v : s) {
        if (induced_degree(g, s, v) >= 3) continue;
        for (int x : g.neighbors(v)) {
          if (!in_region[static_cast<std::size_t>(x)] || sorted_contains(s, x)) continue;
          if (induced_degree(g, s, x) != 1) continue;
          std::vector<int> t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), x), x);
          if (next.count(t)) continue;
          if (complete_leaves(g, t)) next.insert(std::move(t));
        }
      }
    }
    level = std::move(next);
  }
  poset.rows[static_cast<int>(poset.rows.size()) + 1];  // the first empty row

  // Covers: removing one end of the derived path of a class representative.
  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& [size, classes] : poset.rows) {
    if (size < 2) continue;
    for (const DerivedClass& c : classes) {
      for (int u : c.representative) {
        if (induced_degree(g, c.representative, u) != 1) continue;
        std::vector<Tile> tiles;
        for (int v : c.representative) {
          if (v != u) tiles.push_back(g.tile(v));
        }
        std::string sub = isometry_key(tiles);
        if (poset.find(sub) != nullptr) covers.emplace(std::move(sub), c.key);
      }
    }
  }
  poset.covers.assign(covers.begin(), covers.end());
  return poset;
}

bool caterpillar_check(const Poset& poset) {
  if (!poset.all_instances_caterpillar) return false;
  for (const auto& [size, classes] : poset.rows) {
    for (const DerivedClass& c : classes) {
      const int n = static_cast<int>(c.representative.size());
      if (n == 0) continue;
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (auto [a, b] : c.edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
      }
      if (static_cast<int>(c.edges.size()) != n - 1) return false;
      if (*std::max_element(deg.begin(), deg.end()) > 2) return false;
    }
  }
  return true;
}

std::vector<Flower> detect_flowers(const TilePatch& tp) { return detect_flowers(tp, build_dual(tp)); }

std::vector<Flower> detect_flowers(const TilePatch& tp, const DualGraph& g) {
  std::vector<Flower> out;
  for (const Point& c : tp.sorted_vertices()) {
    if (angle_units_at(tp, c) != 10 || classify_vertex(tp, c) != VertexConfig::Star) continue;
    std::vector<int> sun;
    bool missing = false;
    for (const CornerRef& r : tp.incident(c)) {
      sun.push_back(r.tile);
      const Tile& dart = tp.tile(r.tile);
      for (std::size_t i : {1, 2}) {
        auto it = tp.edge_index().find(EdgeKey(dart.v[i], dart.v[i + 1]));
        const auto& ts = it->second;
        if (ts.size() != 2) {
          missing = true;
          continue;
        }
        const int other = ts[0] == r.tile ? ts[1] : ts[0];
        if (tp.tile(other).kind != TileKind::Kite) throw Error(ErrorCode::InvariantViolation, "dart of a Star next to a dart");
        sun.push_back(other);
      }
    }
    if (missing) continue;
    std::sort(sun.begin(), sun.end());
    sun.erase(std::unique(sun.begin(), sun.end()), sun.end());
    if (sun.size() != 15) throw Error(ErrorCode::InvariantViolation, "big sun without 15 tiles at " + c.to_string());
    Flower f;
    f.center = c;
    f.big_sun = sun;
    f.complete = std::all_of(sun.begin(), sun.end(), [&](int t) { return g.complete(t); });
    std::set<int> adjacent;
    std::set<Point> outer;
    for (int t : sun) {
      for (int w : g.neighbors(t)) {
        if (!sorted_contains(sun, w)) adjacent.insert(w);
      }
      for (const Point& p : tp.tile(t).v) {
        if (norm2(p - c) == phi4()) outer.insert(p);
      }
    }
    if (outer.size() != 10) throw Error(ErrorCode::InvariantViolation, "big sun without 10 outer points");
    f.adjacent.assign(adjacent.begin(), adjacent.end());
    if (f.complete) {
      f.star_type = 0;
      for (const Point& p : outer) {
        if (classify_vertex(tp, p) == VertexConfig::Sun) ++f.star_type;
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string_view to_string(FaceShape s) noexcept {
  switch (s) {
    case FaceShape::Hexagon: return "hexagon";
    case FaceShape::Boat: return "boat";
    case FaceShape::Star: return "star";
    case FaceShape::Other: return "other";
  }
  return "?";
}

CycloInt skeleton_edge_norm() { return phi4() * phi4(); }

namespace {

// Matches `angles` against `shape` up to rotation and reversal.
bool cyclic_match(const std::vector<int>& angles, const std::vector<int>& shape) {
  if (angles.size() != shape.size()) return false;
  const std::size_t n = shape.size();
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = dir == 1 ? (s + i) % n : (s + n - i) % n;
        ok = angles[i] == shape[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

FaceShape classify_face(const std::vector<int>& angles) {
  static const std::vector<int> hexagon{2, 4, 4, 2, 4, 4};
  static const std::vector<int> boat{2, 4, 4, 4, 2, 6, 2, 6};
  static const std::vector<int> star{2, 6, 2, 6, 2, 6, 2, 6, 2, 6};
  if (cyclic_match(angles, hexagon)) return FaceShape::Hexagon;
  if (cyclic_match(angles, boat)) return FaceShape::Boat;
  if (cyclic_match(angles, star)) return FaceShape::Star;
  return FaceShape::Other;
}

}  // namespace

StarSkeleton star_skeleton(const TilePatch& tp, const std::vector<Flower>& flowers) {
  StarSkeleton sk;
  std::unordered_map<Point, int, CycloHash> index;
  for (const Flower& f : flowers) {
    index.emplace(f.center, static_cast<int>(sk.nodes.size()));
    sk.nodes.push_back(f.center);
    sk.star_type.push_back(f.star_type);
  }
  const int n = static_cast<int>(sk.nodes.size());
  // nbr[v][k]: node at direction k (multiple of 36 degrees) from v, or -1.
  std::vector<std::array<int, 10>> nbr(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    nbr[static_cast<std::size_t>(v)].fill(-1);
    for (int k = 0; k < 10; ++k) {
      auto it = index.find(sk.nodes[static_cast<std::size_t>(v)] + phi4().times_zeta(k));
      if (it == index.end()) continue;
      nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = it->second;
      if (v < it->second) sk.edges.emplace_back(v, it->second);
    }
  }

  // Distance from each node to the nearest boundary vertex of the patch;
  // faces near the boundary may be missing flowers and are not classified.
  std::vector<std::complex<double>> boundary;
  for (const auto& [p, refs] : tp.vertex_index()) {
    if (angle_units_at(tp, p) < 10) boundary.push_back(to_float(p));
  }
  const double margin = 2.0 * std::abs(to_float(phi4()));
  std::vector<char> trusted(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const auto c = to_float(sk.nodes[static_cast<std::size_t>(v)]);
    double best = 1e300;
    for (const auto& b : boundary) best = std::min(best, std::abs(c - b));
    trusted[static_cast<std::size_t>(v)] = best >= margin ? 1 : 0;
  }

  // Faces to the left of each directed edge: at v coming from u, continue
  // with the first neighbor clockwise from u.
  std::set<std::pair<int, int>> used;
  for (auto [a, b] : sk.edges) {
    for (auto [u0, v0] : {std::pair{a, b}, std::pair{b, a}}) {
      if (used.count({u0, v0})) continue;
      SkeletonFace face;
      int u = u0;
      int v = v0;
      bool ok = true;
      do {
        used.insert({u, v});
        face.nodes.push_back(v);
        const auto& nv = nbr[static_cast<std::size_t>(v)];
        int back = -1;
        for (int k = 0; k < 10; ++k) {
          if (nv[static_cast<std::size_t>(k)] == u) back = k;
        }
        int step = 1;
        while (nv[static_cast<std::size_t>((back - step + 10) % 10)] < 0) ++step;
        face.angles.push_back(step);
        const int w = nv[static_cast<std::size_t>((back - step + 10) % 10)];
        u = v;
        v = w;
        if (face.nodes.size() > static_cast<std::size_t>(2 * sk.edges.size() + 2)) {
          ok = false;
          break;
        }
      } while (!(u == u0 && v == v0));
      if (!ok) continue;
      int sum = 0;
      for (int x : face.angles) sum += x;
      const int len = static_cast<int>(face.angles.size());
      if (sum != 5 * (len - 2)) continue;  // the unbounded face
      if (!std::all_of(face.nodes.begin(), face.nodes.end(), [&](int x) { return trusted[static_cast<std::size_t>(x)] != 0; })) continue;
      face.shape = classify_face(face.angles);
      sk.faces.push_back(std::move(face));
    }
  }
  return sk;
}

std::vector<int> CaterpillarPlan::tiles() const {
  std::vector<int> out = path;
  for (const auto& l : leaves) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CaterpillarPlan::size() const {
  std::size_t s = path.size();
  for (const auto& l : leaves) s += l.size();
  return s;
}

std::vector<int> optimal_word(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "negative size");
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return {1};
  int k = 0;
  while (true) {
    const int rest = n - 2 - k;
    if (rest >= 0 && rest % 2 == 0 && rest / 2 <= 8 * (k + 1)) break;
    ++k;
  }
  const int threes = (n - 2 - k) / 2;
  const int runs = k + 1;
  std::vector<int> run_len(static_cast<std::size_t>(runs), 8);
  if (runs == 1) {
    run_len[0] = threes;
  } else {
    const int rest = threes - 8 * (runs - 2);
    run_len.front() = (rest + 1) / 2;
    run_len.back() = rest / 2;
  }
  std::vector<int> word;
  for (int r = 0; r < runs; ++r) {
    if (r > 0) word.push_back(2);
    word.insert(word.end(), static_cast<std::size_t>(run_len[static_cast<std::size_t>(r)]), 3);
  }
  return word;
}

std::vector<int> host_word(int blocks) {
  std::vector<int> w{3, 2};
  for (int b = 0; b < blocks; ++b) {
    w.insert(w.end(), 8, 3);
    w.push_back(2);
  }
  w.push_back(3);
  return w;
}

namespace {

class WordSearch {
 public:
  WordSearch(const DualGraph& g, const std::vector<char>& path_ok, const std::vector<char>& leaf_ok,
             const std::vector<int>& word, std::uint64_t budget)
      : g_(g), path_ok_(path_ok), leaf_ok_(leaf_ok), word_(word), budget_(budget),
        cnt_(static_cast<std::size_t>(g.size()), 0), sel_(static_cast<std::size_t>(g.size()), 0) {}

  bool run(int start) {
    add(start);
    plan_.path = {start};
    plan_.leaves.clear();
    if (step(1)) return true;
    del(start);
    return false;
  }

  bool exhausted() const { return nodes_ >= budget_; }
  std::uint64_t nodes() const { return nodes_; }
  CaterpillarPlan plan() const {
    CaterpillarPlan p = plan_;
    p.word = word_;
    return p;
  }

 private:
  void add(int v) {
    sel_[static_cast<std::size_t>(v)] = 1;
    for (int w : g_.neighbors(v)) ++cnt_[static_cast<std::size_t>(w)];
  }
  void del(int v) {
    sel_[static_cast<std::size_t>(v)] = 0;
    for (int w : g_.neighbors(v)) --cnt_[static_cast<std::size_t>(w)];
  }
  bool attachable(int v) const { return !sel_[static_cast<std::size_t>(v)] && cnt_[static_cast<std::size_t>(v)] == 1; }

  int leaves_needed(std::size_t i) const {
    const std::size_t len = word_.size();
    if (len == 1) return word_[0];
    return word_[i] - ((i == 0 || i + 1 == len) ? 1 : 2);
  }

  // Chooses `left` more leaves of v among its neighbors from index `from`
  // on, then runs `then`; undoes its own choices on failure.
  bool pick_leaves(int v, int left, std::size_t from, std::vector<int>& acc, const std::function<bool()>& then) {
    if (left == 0) return then();
    auto nb = g_.neighbors(v);
    for (std::size_t j = from; j < nb.size(); ++j) {
      const int l = nb[j];
      if (!leaf_ok_[static_cast<std::size_t>(l)] || !attachable(l)) continue;
      add(l);
      acc.push_back(l);
      if (pick_leaves(v, left - 1, j + 1, acc, then)) return true;
      acc.pop_back();
      del(l);
    }
    return false;
  }

  bool step(std::size_t i) {
    if (++nodes_ >= budget_) return false;
    const int prev = plan_.path[i - 1];
    std::vector<int> acc;
    if (i == word_.size()) {
      return pick_leaves(prev, leaves_needed(i - 1), 0, acc, [&] {
        plan_.leaves.push_back(acc);
        return true;
      });
    }
    for (int v : g_.neighbors(prev)) {
      if (!path_ok_[static_cast<std::size_t>(v)] || !attachable(v)) continue;
      add(v);
      plan_.path.push_back(v);
      acc.clear();
      const bool ok = pick_leaves(prev, leaves_needed(i - 1), 0, acc, [&] {
        plan_.leaves.push_back(acc);
        if (step(i + 1)) return true;
        plan_.leaves.pop_back();
        return false;
      });
      if (ok) return true;
      plan_.path.pop_back();
      del(v);
      if (exhausted()) return false;
    }
    return false;
  }

  const DualGraph& g_;
  const std::vector<char>& path_ok_;
  const std::vector<char>& leaf_ok_;
  const std::vector<int>& word_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> cnt_;
  std::vector<char> sel_;
  CaterpillarPlan plan_;
};

}  // namespace

CaterpillarPlan find_caterpillar(const DualGraph& g, const TilePatch& tp, const std::vector<int>& word,
                                 const CorridorOptions& opt) {
  if (word.empty()) return {};
  const std::vector<int> inner = interior_region(g, 1);
  std::vector<char> leaf_ok(static_cast<std::size_t>(g.size()), 0);
  for (int v : inner) leaf_ok[static_cast<std::size_t>(v)] = 1;

  // Corridor: interior tiles within corridor_radius of some big sun.
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<int> queue;
  for (const Flower& f : detect_flowers(tp, g)) {
    for (int t : f.big_sun) {
      if (dist[static_cast<std::size_t>(t)] < 0) {
        dist[static_cast<std::size_t>(t)] = 0;
        queue.push_back(t);
      }
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(u)] >= opt.corridor_radius) continue;
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<char> path_ok(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::pair<double, int>> starts;
  std::complex<double> centroid{};
  for (const Tile& t : g.tiles()) centroid += to_float(t.v[0]);
  if (g.size() > 0) centroid /= static_cast<double>(g.size());
  for (int v : inner) {
    if (dist[static_cast<std::size_t>(v)] < 0) continue;
    path_ok[static_cast<std::size_t>(v)] = 1;
    std::complex<double> c{};
    for (const Point& p : g.tile(v).v) c += to_float(p);
    starts.emplace_back(std::abs(c / 4.0 - centroid), v);
  }
  std::sort(starts.begin(), starts.end());

  std::uint64_t spent = 0;
  for (const auto& [d, s] : starts) {
    if (spent >= opt.node_budget) break;
    WordSearch search(g, path_ok, leaf_ok, word, opt.node_budget - spent);
    if (search.run(s)) return search.plan();
    spent += search.nodes();
  }
  throw Error(ErrorCode::NotFoundWithinPatch,
              "no caterpillar with a derived path of " + std::to_string(word.size()) +
                  " tiles in this patch; increase the substitution depth");
}

CaterpillarPlan corridor_caterpillar_search(const DualGraph& g, const TilePatch& tp, int n_target,
                                            const CorridorOptions& opt) {
  const std::vector<int> word = optimal_word(n_target);
  if (n_target == 0) return {};
  CaterpillarPlan plan;
  if (n_target <= 2) {
    // A single tile, or a single edge; any interior tile will do.
    CorridorOptions o = opt;
    o.corridor_radius = 1 << 20;
    plan = find_caterpillar(g, tp, word, o);
  } else {
    plan = find_caterpillar(g, tp, word, opt);
  }
  const Profile p = profile(g, plan.tiles());
  if (!p.is_tree || p.n != n_target ||
      p.n1 != static_cast<int>(leaf_recursive(static_cast<std::uint64_t>(n_target)))) {
    throw Error(ErrorCode::InvariantViolation, "caterpillar search returned a tree with the wrong profile");
  }
  return plan;
}

Subtree extract_family_member(const DualGraph& g, const CaterpillarPlan& host, int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "negative size");
  std::vector<int> t;
  if (n == 0) return Subtree(g, t);
  std::size_t b = 0;
  while (b < host.word.size() && host.word[b] != 2) ++b;
  if (b == host.word.size()) throw Error(ErrorCode::NotFoundWithinPatch, "host caterpillar has no degree-2 path vertex");
  t.push_back(host.path[b]);
  for (std::size_t i = b + 1; i < host.path.size() && static_cast<int>(t.size()) < n; ++i) {
    t.push_back(host.path[i]);
    for (int l : host.leaves[i]) {
      if (static_cast<int>(t.size()) < n) t.push_back(l);
    }
  }
  if (static_cast<int>(t.size()) < n) {
    throw Error(ErrorCode::NotFoundWithinPatch, "host caterpillar too short for n=" + std::to_string(n));
  }
  return Subtree(g, std::move(t));
}

FamilyBuilder::FamilyBuilder(int depth, int blocks, CorridorOptions opt)
    : tp_(merge_half_tiles(substitute(seed_patch(VertexConfig::Sun), depth))), g_(build_dual(tp_)) {
  host_ = find_caterpillar(g_, tp_, host_word(blocks), opt);
  const Profile p = profile(g_, host_.tiles());
  if (!p.is_tree || !p.is_caterpillar) throw Error(ErrorCode::InvariantViolation, "host is not an induced caterpillar");
}

int FamilyBuilder::max_n() const {
  std::size_t b = 0;
  while (b < host_.word.size() && host_.word[b] != 2) ++b;
  int m = 1;
  for (std::size_t i = b + 1; i < host_.path.size(); ++i) m += 1 + static_cast<int>(host_.leaves[i].size());
  return m;
}

Subtree FamilyBuilder::build(int n) const {
  if (n > max_n()) throw Error(ErrorCode::NotFoundWithinPatch, "host caterpillar too short for n=" + std::to_string(n));
  return extract_family_member(g_, host_, n);
}

const FamilyBuilder& family_builder(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "negative size");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FamilyBuilder>> builders;
  // Host with m > n + 15 tiles.
  const int blocks = std::max(16, (n + 15) / 17 + 2);
  const int depth = blocks <= 16 ? 10 : 10 + static_cast<int>(std::ceil(std::log(blocks / 16.0) / std::log(1.618034)));
  std::lock_guard lock(mu);
  auto it = builders.find(blocks);
  if (it == builders.end()) it = builders.emplace(blocks, std::make_unique<FamilyBuilder>(depth, blocks)).first;
  return *it->second;
}

Subtree construct_family(int n) { return family_builder(n).build(n); }

}  // namespace p2leaf
