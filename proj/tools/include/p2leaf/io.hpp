#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "p2leaf/dualgraph.hpp"
#include "p2leaf/flis_solver.hpp"
#include "p2leaf/structure.hpp"
#include "p2leaf/tiling.hpp"

namespace p2leaf::io {

using nlohmann::json;

json to_json(const CycloInt& a);
CycloInt cyclo_from_json(const json& j);

/// {"depth": d, "tiles": [{"kind": "kite"|"dart", "vertices": [[a0,a1,a2,a3] x4]}]}
json patch_to_json(const TilePatch& tp);
TilePatch patch_from_json(const json& j);

json profile_to_json(const Profile& p);

/// {"n", "leaves", "tiles": [ids], "profile": {...}} plus optional extras.
json witness_to_json(const Subtree& s);
std::vector<int> witness_tiles_from_json(const json& j);

/// {"rows": {"1": [keys], ...}, "covers": [[smaller, larger], ...]}
json poset_to_json(const Poset& p);

/// One "u v" line per edge, u < v.
void write_edge_list(std::ostream& out, const DualGraph& g);
/// Vertex id -> tile, same tile encoding as patches.
json dual_sidecar(const DualGraph& g);

/// Header n,L,nodes,seconds,witness_id,status.
void write_leaf_table_csv(std::ostream& out, const LeafTable& t, const std::vector<std::string>& witness_ids);

struct SvgOptions {
  double scale = 20.0;
  double margin = 1.0;
  /// With a witness, draw only tiles within this graph distance of it; -1 draws everything.
  int crop_radius = -1;
};

/// Kites and darts in two fills; witness tiles colored by their degree in
/// the witness (leaf, 2, 3) and the derived tree drawn through tile centers.
std::string render_svg(const TilePatch& tp, const std::vector<int>& witness = {}, const SvgOptions& opt = {});

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace p2leaf::io
