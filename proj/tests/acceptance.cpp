// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support.hpp"

#include "p2leaf/error.hpp"
#include "p2leaf/flis_solver.hpp"
#include "p2leaf/leaf_formula.hpp"
#include "p2leaf/structure.hpp"

using namespace p2leaf;

namespace {

constexpr int kBaseDepth = 6;
constexpr int kBaseNMax = 18;
constexpr double kBaseSeconds = 30 * 60;
constexpr std::uint64_t kNodeBudget = 1'000'000'000ULL;
constexpr int kFamilyNMax = 250;
constexpr std::uint64_t kFormulaLimit = 1'000'000;
constexpr double kFormulaSeconds = 10.0;
constexpr double kSlopeTolerance = 1e-5;
constexpr int kRemovalPairs = 10'000;
constexpr int kSeedDepthMax = 6;
constexpr int kRatioDepth = 8;
constexpr double kRatioTolerance = 0.01;
constexpr int kRandomSubtrees = 10'000;
constexpr int kRandomFactorizations = 1'000;
constexpr int kOracleRegions = 20;
constexpr std::size_t kOracleRegionSize = 18;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every tree reported by the library or sampled here goes through this gate.
struct UpperBoundGate {
  std::uint64_t seen = 0;
  std::uint64_t violations = 0;
  void check(int n, int n1) {
    ++seen;
    if (n1 > static_cast<int>(leaf_recursive(static_cast<std::uint64_t>(n)))) ++violations;
  }
};

UpperBoundGate gate;
int invariant_errors = 0;

Verdict base_range() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const DualGraph& g = testing::sun_graph(kBaseDepth);
  SearchConfig cfg;
  cfg.mode = SearchMode::Verify;
  cfg.bound = BoundKind::Potential;
  cfg.node_budget = kNodeBudget;
  cfg.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::ostringstream vals;
  for (int n = 2; n <= kBaseNMax; ++n) {
    cfg.n_target = n;
    try {
      const SearchResult r = max_leaves_exact(g, cfg);
      gate.check(n, r.leaves);
      const testing::TreeFacts f = testing::tree_facts(g, r.witness.vertices);
      const bool ok = r.optimal && r.leaves == n / 2 + 1 && f.tree && f.n == n && f.n1 == r.leaves;
      if (!ok) v.pass = false;
      vals << (n > 2 ? "," : "") << r.leaves << (r.optimal ? "" : "(budget)");
      std::cerr << "  base n=" << n << " L=" << r.leaves << " nodes=" << r.nodes << " " << r.seconds << "s\n";
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvariantViolation) ++invariant_errors;
      v.pass = false;
      vals << (n > 2 ? "," : "") << "error";
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kBaseSeconds) v.pass = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", secs);
  v.detail = "depth " + std::to_string(kBaseDepth) + ", n=2.." + std::to_string(kBaseNMax) + " L=[" + vals.str() +
             "], " + buf + " s";
  return v;
}

Verdict poset() {
  Verdict v;
  const Poset p = enumerate_3regular(testing::sun_graph(kBaseDepth));
  const std::vector<std::size_t> fixture{2, 4, 3, 6, 3, 6, 3, 6, 0};
  std::ostringstream rows;
  for (int k = 1; k <= 9; ++k) {
    const std::size_t got = p.row_size(k);
    rows << (k > 1 ? "," : "") << got;
    if (got != fixture[static_cast<std::size_t>(k - 1)]) v.pass = false;
  }
  for (const auto& [size, classes] : p.rows) {
    if (size > 9 && !classes.empty()) v.pass = false;
  }
  bool caterpillars = p.all_instances_caterpillar && caterpillar_check(p);
  for (const auto& [size, classes] : p.rows) {
    for (const DerivedClass& c : classes) {
      std::vector<int> whole = c.representative;
      whole.insert(whole.end(), c.representative_leaves.begin(), c.representative_leaves.end());
      const testing::TreeFacts f = testing::tree_facts(testing::sun_graph(kBaseDepth), whole);
      gate.check(f.n, f.n1);
      if (!f.tree || f.n2 != 0 || f.n3 != size) v.pass = false;
    }
  }
  if (!caterpillars) v.pass = false;
  v.detail = "rows 1..9 = " + rows.str() + ", " + std::to_string(p.instances) + " instances, all caterpillars: " +
             (caterpillars ? "yes" : "no");
  return v;
}

Verdict family() {
  Verdict v;
  int failures = 0;
  for (int n = 0; n <= kFamilyNMax; ++n) {
    try {
      const Subtree s = construct_family(n);
      const testing::TreeFacts f = testing::tree_facts(family_builder(n).graph(), s.vertices);
      if (n > 0) gate.check(n, f.n1);
      const bool ok = f.n == n && (n == 0 || f.tree) && f.n1 == static_cast<int>(leaf_recursive(static_cast<std::uint64_t>(n)));
      if (!ok) ++failures;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvariantViolation) ++invariant_errors;
      ++failures;
    }
  }
  const Subtree c116 = construct_family(116);
  const bool profile_ok = c116.prof.n1 == 56 && c116.prof.n2 == 6 && c116.prof.n3 == 54;
  v.pass = failures == 0 && profile_ok;
  v.detail = "n=0.." + std::to_string(kFamilyNMax) + " failures=" + std::to_string(failures) +
             "; n=116 (n1,n2,n3)=(" + std::to_string(c116.prof.n1) + "," + std::to_string(c116.prof.n2) + "," +
             std::to_string(c116.prof.n3) + "); published L(116)=54 is inconsistent with the formula value 56 "
             "(54 equals n3)";
  return v;
}

Verdict formula() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> table(kFormulaLimit + 1, 0);
  for (std::uint64_t n = 2; n <= kFormulaLimit; ++n) table[n] = n <= 18 ? n / 2 + 1 : table[n - 17] + 8;
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 0; n <= kFormulaLimit; ++n) {
    if (leaf_recursive(n) != table[n] || leaf_closed(n) != table[n]) ++mismatches;
  }
  const bool equivalent = mismatches == 0 && check_equivalence(kFormulaLimit);
  const double secs = seconds_since(t0);
  std::uint64_t period_bad = 0;
  for (std::uint64_t n = 2; n + 17 <= kFormulaLimit; ++n) {
    if (leaf_recursive(n + 17) != leaf_recursive(n) + 8) ++period_bad;
  }
  const double slope = std::abs(double(leaf_recursive(kFormulaLimit)) / double(kFormulaLimit) - 8.0 / 17.0);
  std::mt19937_64 rng(1);
  int removal_bad = 0;
  for (int i = 0; i < kRemovalPairs; ++i) {
    const std::uint64_t n = 3 + rng() % kFormulaLimit;
    const std::uint64_t k = 1 + rng() % (n - 2);
    if (leaf_recursive(n) > upper_bound_k(n, k)) ++removal_bad;
  }
  v.pass = equivalent && secs < kFormulaSeconds && period_bad == 0 && slope < kSlopeTolerance && removal_bad == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "equivalence on [0,%llu] %s in %.2f s, period failures %llu, slope error %.2e, removal failures %d",
                static_cast<unsigned long long>(kFormulaLimit), equivalent ? "holds" : "FAILS", secs,
                static_cast<unsigned long long>(period_bad), slope, removal_bad);
  v.detail = buf;
  return v;
}

Verdict tiling() {
  Verdict v;
  int illegal = 0;
  int count_errors = 0;
  for (VertexConfig c : all_vertex_configs()) {
    const HalfTileCounts c0 = count_half_tiles(seed_patch(c));
    for (int k = 0; k <= kSeedDepthMax; ++k) {
      const Patch p = substitute(seed_patch(c), k);
      const auto [ek, ed] = testing::matrix_counts(c0.kites, c0.darts, k);
      long long hk = 0;
      long long hd = 0;
      for (const HalfTile& h : p.half_tiles) (h.kind == TileKind::Kite ? hk : hd) += 1;
      if (hk != ek || hd != ed) ++count_errors;
      const TilePatch tp = merge_half_tiles(p);
      if (!check_legality(tp).empty()) ++illegal;
      for (const Point& x : tp.sorted_vertices()) {
        try {
          classify_vertex(tp, x);
        } catch (const Error&) {
          ++illegal;
        }
      }
    }
  }
  const HalfTileCounts deep = count_half_tiles(substitute(seed_patch(VertexConfig::Sun), kRatioDepth));
  const double ratio = double(deep.kites) / double(deep.darts);
  const double err = std::abs(ratio - (1 + std::sqrt(5.0)) / 2);
  v.pass = illegal == 0 && count_errors == 0 && err < kRatioTolerance;
  char buf[160];
  std::snprintf(buf, sizeof buf, "7 seeds x k<=%d: illegal %d, count mismatches %d; depth-%d K/D=%.6f (|diff|=%.2e)",
                kSeedDepthMax, illegal, count_errors, kRatioDepth, ratio, err);
  v.detail = buf;
  return v;
}

Verdict lemmas() {
  Verdict v;
  const DualGraph& g = testing::sun_graph(kBaseDepth);
  const auto region = interior_region(g, 1);
  std::mt19937_64 rng(7);
  int degree_bad = 0;
  int count_bad = 0;
  int sampled = 0;
  while (sampled < kRandomSubtrees) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const auto s = testing::random_induced_tree(g, region, n, rng);
    if (s.size() < 2) continue;
    const testing::TreeFacts f = testing::tree_facts(g, s);
    if (!f.tree) {
      ++count_bad;
      continue;
    }
    gate.check(f.n, f.n1);
    if (f.max_degree > 3) ++degree_bad;
    if (f.n1 != f.n3 + 2) ++count_bad;
    ++sampled;
  }
  int graft_bad = 0;
  int done = 0;
  while (done < kRandomFactorizations) {
    const auto s = testing::random_induced_tree(g, region, 2 + static_cast<int>(rng() % 40), rng);
    if (s.size() < 2) continue;
    const Subtree t(g, s);
    std::vector<std::pair<int, int>> edges;
    for (int u : s) {
      for (int w : g.neighbors(u)) {
        if (t.contains(w)) edges.emplace_back(u, w);
      }
    }
    const auto [t1, t2] = edges[rng() % edges.size()];
    try {
      const auto [i1, i2] = factorize(g, t, t1, t2);
      const Subtree back = graft(g, i1, i2, t1, t2);
      const bool counts_add = back.prof.n == i1.prof.n + i2.prof.n - 2 && back.prof.n1 == i1.prof.n1 + i2.prof.n1 - 2 &&
                       back.prof.n2 == i1.prof.n2 + i2.prof.n2 && back.prof.n3 == i1.prof.n3 + i2.prof.n3;
      if (!(back == t) || !counts_add) ++graft_bad;
    } catch (const Error&) {
      ++graft_bad;
    }
    ++done;
  }
  v.pass = degree_bad == 0 && count_bad == 0 && graft_bad == 0;
  v.detail = std::to_string(sampled) + " subtrees: degree>3 " + std::to_string(degree_bad) + ", n1!=n3+2 " +
             std::to_string(count_bad) + "; " + std::to_string(done) + " factorizations: failures " +
             std::to_string(graft_bad);
  return v;
}

Verdict oracle() {
  Verdict v;
  const DualGraph& g = testing::sun_graph(kBaseDepth);
  const auto pool = interior_region(g, 1);
  std::mt19937_64 rng(7);
  int compared = 0;
  int mismatches = 0;
  for (int i = 0; i < kOracleRegions; ++i) {
    const auto region = testing::bfs_region(g, pool, kOracleRegionSize, rng);
    const auto best = testing::subset_leaf_oracle(g, region);
    for (int n = 2; n < static_cast<int>(best.size()); ++n) {
      for (BoundKind bound : {BoundKind::Potential, BoundKind::Handshake}) {
        SearchConfig cfg;
        cfg.n_target = n;
        cfg.region = region;
        cfg.bound = bound;
        try {
          const SearchResult r = max_leaves_exact(g, cfg);
          if (r.found) gate.check(n, r.leaves);
          const int got = r.found ? r.leaves : -1;
          if (got != best[static_cast<std::size_t>(n)] || !r.optimal) ++mismatches;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::InvariantViolation) ++invariant_errors;
          ++mismatches;
        }
        ++compared;
      }
    }
  }
  v.pass = mismatches == 0;
  v.detail = std::to_string(kOracleRegions) + " regions of <= " + std::to_string(kOracleRegionSize) + " tiles, " +
             std::to_string(compared) + " (region, n, bound) comparisons, mismatches " + std::to_string(mismatches);
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Verdict>> results;
  auto run = [&](const std::string& name, Verdict (*f)()) {
    std::cerr << name << " ...\n";
    Verdict v;
    try {
      v = f();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    results.emplace_back(name, v);
  };
  run("AC1", base_range);
  run("AC3", poset);
  run("AC4", family);
  run("AC5", formula);
  run("AC6", tiling);
  run("AC7", lemmas);
  run("AC8", oracle);

  Verdict upper;
  upper.pass = gate.violations == 0 && invariant_errors == 0;
  upper.detail = std::to_string(gate.seen) + " trees checked against the formula, " + std::to_string(gate.violations) +
                 " above it, " + std::to_string(invariant_errors) + " invariant errors";
  results.insert(results.begin() + 1, {"AC2", upper});

  bool all = true;
  for (const auto& [name, v] : results) {
    std::cout << name << " " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << "\n";
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
