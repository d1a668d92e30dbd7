#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p2leaf/dualgraph.hpp"

namespace p2leaf {

enum class SearchMode {
  /// Exact optimum; pruning never uses the values of the leaf function.
  Verify,
  /// Looks only for a tree reaching leaf_recursive(n) and stops at the first one.
  Witness,
};

enum class BoundKind {
  /// n1 + remaining additions (each addition creates at most one leaf).
  Potential,
  /// Potential, plus n1 = (n - n2 + 2) / 2 for trees of maximum degree 3,
  /// counting selected degree-2 tiles that can no longer grow.
  Handshake,
};

struct SearchConfig {
  int n_target = 2;
  std::vector<int> region;  // empty: interior_region(g, 1)
  SearchMode mode = SearchMode::Verify;
  BoundKind bound = BoundKind::Potential;
  bool deterministic = true;
  std::uint64_t node_budget = 1'000'000'000ULL;
  int threads = 1;
  /// Require region to lie inside interior_region(g, 1).
  bool check_margin = true;
};

struct SearchResult {
  int n = 0;
  int leaves = 0;
  Subtree witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  /// False when the node budget ran out (leaves is then a lower bound) or,
  /// in witness mode, when no tree reached the target.
  bool optimal = false;
  bool found = false;
};

/// Maximum number of leaves over induced subtrees of g with n_target tiles
/// inside the region. Throws RegionTooSmall, MarginTooSmall, and
/// InvariantViolation if a witness ever beats leaf_recursive(n).
SearchResult max_leaves_exact(const DualGraph& g, const SearchConfig& cfg);

struct LeafRow {
  SearchResult result;
  std::string status;  // "ok", "budget", "not-found", or an error code name
};

struct LeafTable {
  std::vector<LeafRow> rows;  // n = 2 .. n_max
  /// Every consecutive pair satisfies L(n) - L(n-1) in {0, 1} and L(n) <= L(n-2) + 1.
  bool consistent = true;
};

/// Rows for n = 2..n_max. Per-row failures land in the status column.
LeafTable leaf_table(const DualGraph& g, const SearchConfig& base, int n_max);

/// Exhaustive reference: enumerates every vertex subset of the region
/// (at most 25 tiles) and returns the best leaf count for each size
/// 0..|region|, or -1 where no induced tree of that size exists.
std::vector<int> brute_force_leaf_counts(const DualGraph& g, const std::vector<int>& region);

}  // namespace p2leaf
