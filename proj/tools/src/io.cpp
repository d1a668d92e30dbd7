#include "p2leaf/io.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <deque>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "p2leaf/error.hpp"

namespace p2leaf::io {

json to_json(const CycloInt& a) {
  json arr = json::array();
  for (const BigInt& c : a.coeffs()) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::DomainError, "coordinate coefficient does not fit in 64 bits");
    }
    arr.push_back(static_cast<std::int64_t>(c));
  }
  return arr;
}

CycloInt cyclo_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "a point is an array of 4 integers");
  std::array<BigInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer()) throw Error(ErrorCode::ParseError, "non-integer coordinate coefficient");
    c[i] = j[i].get<std::int64_t>();
  }
  return CycloInt(c[0], c[1], c[2], c[3]);
}

namespace {

json tile_to_json(const Tile& t) {
  json verts = json::array();
  for (const Point& p : t.v) verts.push_back(to_json(p));
  return {{"kind", t.kind == TileKind::Kite ? "kite" : "dart"}, {"vertices", verts}};
}

}  // namespace

json patch_to_json(const TilePatch& tp) {
  json tiles = json::array();
  for (const Tile& t : tp.tiles()) tiles.push_back(tile_to_json(t));
  return {{"depth", tp.depth()}, {"tiles", tiles}};
}

TilePatch patch_from_json(const json& j) {
  try {
    std::vector<Tile> tiles;
    for (const json& t : j.at("tiles")) {
      Tile tile;
      const std::string kind = t.at("kind").get<std::string>();
      if (kind == "kite") {
        tile.kind = TileKind::Kite;
      } else if (kind == "dart") {
        tile.kind = TileKind::Dart;
      } else {
        throw Error(ErrorCode::ParseError, "unknown tile kind '" + kind + "'");
      }
      const json& vs = t.at("vertices");
      if (!vs.is_array() || vs.size() != 4) throw Error(ErrorCode::ParseError, "a tile has 4 vertices");
      for (std::size_t i = 0; i < 4; ++i) tile.v[i] = cyclo_from_json(vs[i]);
      tiles.push_back(std::move(tile));
    }
    return TilePatch(std::move(tiles), j.at("depth").get<int>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json profile_to_json(const Profile& p) {
  return {{"is_tree", p.is_tree},   {"n", p.n},         {"n1", p.n1},
          {"n2", p.n2},             {"n3", p.n3},       {"max_degree", p.max_degree},
          {"is_caterpillar", p.is_caterpillar}, {"is_3_internal_regular", p.is_3_internal_regular}};
}

json witness_to_json(const Subtree& s) {
  return {{"n", s.prof.n}, {"leaves", s.prof.n1}, {"tiles", s.vertices}, {"profile", profile_to_json(s.prof)}};
}

std::vector<int> witness_tiles_from_json(const json& j) {
  try {
    return j.at("tiles").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json poset_to_json(const Poset& p) {
  json rows = json::object();
  json counts = json::object();
  for (const auto& [size, classes] : p.rows) {
    json keys = json::array();
    for (const DerivedClass& c : classes) keys.push_back(c.key);
    rows[std::to_string(size)] = keys;
    counts[std::to_string(size)] = classes.size();
  }
  json covers = json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({a, b});
  return {{"rows", rows}, {"row_sizes", counts}, {"covers", covers}, {"instances", p.instances},
          {"all_caterpillars", caterpillar_check(p)}};
}

void write_edge_list(std::ostream& out, const DualGraph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

json dual_sidecar(const DualGraph& g) {
  json tiles = json::object();
  for (int v = 0; v < g.size(); ++v) tiles[std::to_string(v)] = tile_to_json(g.tile(v));
  return {{"vertices", g.size()}, {"edges", g.edge_count()}, {"tiles", tiles}};
}

void write_leaf_table_csv(std::ostream& out, const LeafTable& t, const std::vector<std::string>& witness_ids) {
  out << "n,L,nodes,seconds,witness_id,status\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const LeafRow& r = t.rows[i];
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", r.result.seconds);
    out << r.result.n << ',' << (r.status == "ok" || r.status == "budget" ? std::to_string(r.result.leaves) : "")
        << ',' << r.result.nodes << ',' << secs << ',' << (i < witness_ids.size() ? witness_ids[i] : "") << ','
        << r.status << '\n';
  }
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string render_svg(const TilePatch& tp, const std::vector<int>& witness, const SvgOptions& opt) {
  const DualGraph g = build_dual(tp);
  std::vector<int> w = witness;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int t : w) {
    if (t < 0 || t >= g.size()) throw Error(ErrorCode::ParseError, "witness tile " + std::to_string(t) + " not in patch");
  }

  std::vector<int> shown;
  if (opt.crop_radius >= 0 && !w.empty()) {
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    std::deque<int> queue;
    for (int t : w) {
      dist[static_cast<std::size_t>(t)] = 0;
      queue.push_back(t);
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(u)] == opt.crop_radius) continue;
      for (int v : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int t = 0; t < g.size(); ++t) {
      if (dist[static_cast<std::size_t>(t)] >= 0) shown.push_back(t);
    }
  } else {
    for (int t = 0; t < g.size(); ++t) shown.push_back(t);
  }

  std::vector<std::array<std::complex<double>, 4>> corners(tp.size());
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (int t : shown) {
    auto& c = corners[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < 4; ++i) {
      c[i] = to_float(tp.tile(t).v[i]);
      if (first) {
        min_x = max_x = c[i].real();
        min_y = max_y = c[i].imag();
        first = false;
      }
      min_x = std::min(min_x, c[i].real());
      max_x = std::max(max_x, c[i].real());
      min_y = std::min(min_y, c[i].imag());
      max_y = std::max(max_y, c[i].imag());
    }
  }
  min_x -= opt.margin;
  min_y -= opt.margin;
  max_x += opt.margin;
  max_y += opt.margin;
  auto sx = [&](double x) { return fmt((x - min_x) * opt.scale); };
  auto sy = [&](double y) { return fmt((max_y - y) * opt.scale); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((max_x - min_x) * opt.scale) << "\" height=\""
      << fmt((max_y - min_y) * opt.scale) << "\">\n";
  svg << "<g stroke=\"#333333\" stroke-width=\"0.5\">\n";
  for (int t : shown) {
    std::string fill = tp.tile(t).kind == TileKind::Kite ? "#f3e3b5" : "#b9cfe8";
    if (std::binary_search(w.begin(), w.end(), t)) {
      const int d = induced_degree(g, w, t);
      fill = d <= 1 ? "#3fa34d" : (d == 2 ? "#222222" : "#d1495b");
    }
    svg << "<polygon fill=\"" << fill << "\" points=\"";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) svg << ' ';
      svg << sx(corners[static_cast<std::size_t>(t)][i].real()) << ',' << sy(corners[static_cast<std::size_t>(t)][i].imag());
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n";
  if (!w.empty()) {
    const std::vector<int> inner = derived_vertices(g, w);
    auto center = [&](int t) {
      const auto& c = corners[static_cast<std::size_t>(t)];
      return (c[0] + c[1] + c[2] + c[3]) / 4.0;
    };
    svg << "<g stroke=\"#f2a900\" stroke-width=\"2\" fill=\"none\">\n";
    for (int a : inner) {
      for (int b : g.neighbors(a)) {
        if (a < b && std::binary_search(inner.begin(), inner.end(), b)) {
          const auto ca = center(a);
          const auto cb = center(b);
          svg << "<line x1=\"" << sx(ca.real()) << "\" y1=\"" << sy(ca.imag()) << "\" x2=\"" << sx(cb.real())
              << "\" y2=\"" << sy(cb.imag()) << "\"/>\n";
        }
      }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace p2leaf::io
