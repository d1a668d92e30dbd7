#include "p2leaf/flis_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "p2leaf/error.hpp"
#include "p2leaf/leaf_formula.hpp"

namespace p2leaf {

namespace {

constexpr int kNone = -1;

// Region re-indexed 0..R-1 in ascending tile id, adjacency padded to 4.
struct LocalGraph {
  std::vector<int> tile_of;
  std::vector<std::array<int, 4>> adj;
  std::vector<int> deg;
};

LocalGraph localize(const DualGraph& g, const std::vector<int>& region) {
  LocalGraph lg;
  lg.tile_of = region;
  std::vector<int> local(static_cast<std::size_t>(g.size()), kNone);
  for (std::size_t i = 0; i < region.size(); ++i) local[static_cast<std::size_t>(region[i])] = static_cast<int>(i);
  lg.adj.assign(region.size(), {kNone, kNone, kNone, kNone});
  lg.deg.assign(region.size(), 0);
  for (std::size_t i = 0; i < region.size(); ++i) {
    for (int w : g.neighbors(region[i])) {
      const int lw = local[static_cast<std::size_t>(w)];
      if (lw == kNone) continue;
      auto& d = lg.deg[i];
      if (d == 4) throw Error(ErrorCode::InvariantViolation, "tile with more than four neighbors");
      lg.adj[i][static_cast<std::size_t>(d++)] = lw;
    }
  }
  return lg;
}

// Best value found so far, with the root it was found from; ties resolve
// towards the smaller root so the reported witness does not depend on
// thread scheduling.
struct Incumbent {
  std::mutex mu;
  std::atomic<int> value{-1};
  std::atomic<int> root{1 << 30};
  std::vector<int> set;

  bool beats(int v, int root_id) const {
    const int cur = value.load(std::memory_order_relaxed);
    return v > cur || (v == cur && root_id < root.load(std::memory_order_relaxed));
  }

  void offer(int v, int root_id, const std::vector<int>& s) {
    std::lock_guard lock(mu);
    if (!beats(v, root_id)) return;
    value.store(v);
    root.store(root_id);
    set = s;
  }
};

struct Shared {
  const LocalGraph* lg = nullptr;
  int n = 0;
  int cap = 0;    // no tree can exceed this many leaves
  int floor = 0;  // only trees strictly above floor are of interest
  BoundKind bound = BoundKind::Handshake;
  bool deterministic = true;
  bool stop_at_first = false;
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<bool> done{false};
  Incumbent best;
};

class RootSearch {
 public:
  RootSearch(Shared& sh, int root) : sh_(sh), lg_(*sh.lg), root_(root) {
    const std::size_t r = lg_.adj.size();
    cnt_.assign(r, 0);
    state_.assign(r, kFree);
    sdeg_.assign(r, 0);
  }

  void run() {
    select(root_);
    std::vector<int> cand;
    for (int w : neighbors(root_)) {
      if (w > root_) cand.push_back(w);
    }
    std::sort(cand.begin(), cand.end(), std::greater<>());
    recurse(cand);
    unselect(root_);
    flush_nodes();
  }

 private:
  enum State : std::uint8_t { kFree, kSelected, kExcluded };

  std::span<const int> neighbors(int v) const {
    return {lg_.adj[static_cast<std::size_t>(v)].data(), static_cast<std::size_t>(lg_.deg[static_cast<std::size_t>(v)])};
  }

  void select(int v) {
    state_[static_cast<std::size_t>(v)] = kSelected;
    chosen_.push_back(v);
    for (int w : neighbors(v)) {
      ++cnt_[static_cast<std::size_t>(w)];
      if (state_[static_cast<std::size_t>(w)] == kSelected) {
        ++sdeg_[static_cast<std::size_t>(w)];
        ++sdeg_[static_cast<std::size_t>(v)];
        update_leaf_count(w, +1);
      }
    }
    leaves_ += sdeg_[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
  }

  void unselect(int v) {
    leaves_ -= sdeg_[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    for (int w : neighbors(v)) {
      --cnt_[static_cast<std::size_t>(w)];
      if (state_[static_cast<std::size_t>(w)] == kSelected) {
        --sdeg_[static_cast<std::size_t>(w)];
        --sdeg_[static_cast<std::size_t>(v)];
        update_leaf_count(w, -1);
      }
    }
    state_[static_cast<std::size_t>(v)] = kFree;
    chosen_.pop_back();
  }

  // sdeg of w just moved by delta; keep the leaf counter in sync.
  void update_leaf_count(int w, int delta) {
    const int now = sdeg_[static_cast<std::size_t>(w)];
    const int before = now - delta;
    leaves_ += (now == 1 ? 1 : 0) - (before == 1 ? 1 : 0);
  }

  int parent_of(int c) const {
    for (int w : neighbors(c)) {
      if (state_[static_cast<std::size_t>(w)] == kSelected) return w;
    }
    return kNone;
  }

  bool can_grow(int v) const {
    for (int w : neighbors(v)) {
      if (w > root_ && state_[static_cast<std::size_t>(w)] == kFree && cnt_[static_cast<std::size_t>(w)] == 1) return true;
    }
    return false;
  }

  int upper_bound() const {
    const int size = static_cast<int>(chosen_.size());
    const int remaining = sh_.n - size;
    int ub = size == 1 ? std::min(remaining, 1) + remaining : leaves_ + remaining;
    if (sh_.bound == BoundKind::Handshake) {
      int locked2 = 0;
      for (int v : chosen_) {
        if (sdeg_[static_cast<std::size_t>(v)] == 2 && !can_grow(v)) ++locked2;
      }
      ub = std::min(ub, (sh_.n - locked2 + 2) / 2);
    }
    return std::min(ub, sh_.cap);
  }

  bool worth_exploring(int ub) const {
    const int fl = std::max(sh_.floor, sh_.best.value.load(std::memory_order_relaxed));
    if (ub > fl) return true;
    // Equal value from a smaller root still changes the deterministic witness.
    return sh_.deterministic && ub == fl && fl > sh_.floor && sh_.best.beats(ub, root_);
  }

  void flush_nodes() {
    if (local_nodes_ == 0) return;
    const auto total = sh_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total >= sh_.budget) sh_.out_of_budget.store(true);
  }

  bool should_stop() const { return sh_.out_of_budget.load(std::memory_order_relaxed) || sh_.done.load(std::memory_order_relaxed); }

  void record() {
    const int value = leaves_;
    if (value <= sh_.floor || !sh_.best.beats(value, root_)) return;
    std::vector<int> s = chosen_;
    sh_.best.offer(value, root_, s);
    if (sh_.stop_at_first || (value >= sh_.cap && !sh_.deterministic)) sh_.done.store(true);
  }

  // cand: free vertices with exactly one selected neighbor, not excluded.
  // Order is a stack: the last entry is branched on first.
  void recurse(std::vector<int>& cand) {
    if (++local_nodes_ >= 4096) flush_nodes();
    if (should_stop()) return;
    if (static_cast<int>(chosen_.size()) == sh_.n) {
      record();
      return;
    }
    if (!worth_exploring(upper_bound())) return;
    if (sh_.deterministic && sh_.best.value.load(std::memory_order_relaxed) >= sh_.cap &&
        sh_.best.root.load(std::memory_order_relaxed) <= root_) {
      return;
    }

    std::vector<int> excluded_here;
    std::vector<int> next;
    while (!cand.empty()) {
      const int c = cand.back();
      cand.pop_back();
      const int p = parent_of(c);
      if (sdeg_[static_cast<std::size_t>(p)] < 3) {
        next.clear();
        for (int w : cand) {
          if (cnt_[static_cast<std::size_t>(w)] == 1 && std::find(neighbors(c).begin(), neighbors(c).end(), w) == neighbors(c).end()) {
            next.push_back(w);
          }
        }
        select(c);
        for (int w : neighbors(c)) {
          if (w > root_ && state_[static_cast<std::size_t>(w)] == kFree && cnt_[static_cast<std::size_t>(w)] == 1) {
            next.push_back(w);
          }
        }
        recurse(next);
        unselect(c);
        if (should_stop()) break;
      }
      state_[static_cast<std::size_t>(c)] = kExcluded;
      excluded_here.push_back(c);
      if (!worth_exploring(upper_bound())) break;
    }
    for (int c : excluded_here) state_[static_cast<std::size_t>(c)] = kFree;
  }

  Shared& sh_;
  const LocalGraph& lg_;
  int root_;
  std::vector<int> cnt_;
  std::vector<State> state_;
  std::vector<int> sdeg_;
  std::vector<int> chosen_;
  int leaves_ = 0;
  std::uint64_t local_nodes_ = 0;
};

void check_witness(const DualGraph& g, const SearchResult& r) {
  const auto bound = static_cast<int>(leaf_recursive(static_cast<std::uint64_t>(r.n)));
  if (r.leaves > bound) {
    throw Error(ErrorCode::InvariantViolation, "witness with " + std::to_string(r.leaves) + " leaves at n=" +
                                                   std::to_string(r.n) + " exceeds the leaf function value " +
                                                   std::to_string(bound));
  }
  if (!r.found) return;
  const Profile& p = r.witness.prof;
  if (p.n != r.n || !p.is_tree || p.n1 != r.leaves || p.max_degree > 3 || (p.n >= 2 && p.n1 != p.n3 + 2)) {
    throw Error(ErrorCode::InvariantViolation, "solver witness fails the induced-tree profile check");
  }
  (void)g;
}

}  // namespace

SearchResult max_leaves_exact(const DualGraph& g, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> region = cfg.region.empty() ? interior_region(g, 1) : cfg.region;
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  if (cfg.check_margin && !cfg.region.empty()) {
    const std::vector<int> inner = interior_region(g, 1);
    if (!std::includes(inner.begin(), inner.end(), region.begin(), region.end())) {
      throw Error(ErrorCode::MarginTooSmall, "search region reaches tiles outside the margin-1 interior");
    }
  }
  const int n = cfg.n_target;
  if (n < 0 || n > static_cast<int>(region.size())) {
    throw Error(ErrorCode::RegionTooSmall, "region of " + std::to_string(region.size()) + " tiles cannot hold " +
                                               std::to_string(n) + " tiles");
  }

  SearchResult out;
  out.n = n;
  if (n <= 1) {
    out.found = !(n == 1 && region.empty());
    out.optimal = true;
    out.witness = Subtree(g, n == 1 ? std::vector<int>{region.front()} : std::vector<int>{});
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

  const LocalGraph lg = localize(g, region);
  Shared sh;
  sh.lg = &lg;
  sh.n = n;
  sh.bound = cfg.bound;
  sh.deterministic = cfg.deterministic;
  sh.budget = cfg.node_budget;
  // A tree of maximum degree 3 has at most floor(n/2)+1 leaves.
  sh.cap = cfg.bound == BoundKind::Handshake ? n / 2 + 1 : n;
  if (cfg.mode == SearchMode::Witness) {
    sh.cap = static_cast<int>(leaf_recursive(static_cast<std::uint64_t>(n)));
    sh.floor = sh.cap - 1;
    sh.stop_at_first = true;
    sh.deterministic = false;
  }

  const int roots = static_cast<int>(region.size());
  std::atomic<int> next_root{0};
  auto worker = [&] {
    for (;;) {
      const int r = next_root.fetch_add(1);
      if (r >= roots || sh.out_of_budget.load() || sh.done.load()) return;
      if (sh.best.value.load() >= sh.cap && (!sh.deterministic || sh.best.root.load() <= r)) return;
      RootSearch(sh, r).run();
    }
  };
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  out.nodes = sh.nodes.load();
  out.found = sh.best.value.load() > sh.floor;
  if (out.found) {
    std::vector<int> tiles;
    for (int v : sh.best.set) tiles.push_back(lg.tile_of[static_cast<std::size_t>(v)]);
    out.witness = Subtree(g, std::move(tiles));
    out.leaves = sh.best.value.load();
  }
  out.optimal = !sh.out_of_budget.load() && (cfg.mode == SearchMode::Verify || out.found);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  check_witness(g, out);
  return out;
}

LeafTable leaf_table(const DualGraph& g, const SearchConfig& base, int n_max) {
  LeafTable table;
  SearchConfig cfg = base;
  if (cfg.region.empty()) cfg.region = interior_region(g, 1);
  for (int n = 2; n <= n_max; ++n) {
    cfg.n_target = n;
    LeafRow row;
    row.result.n = n;
    try {
      row.result = max_leaves_exact(g, cfg);
      row.status = !row.result.found ? "not-found" : (row.result.optimal ? "ok" : "budget");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvariantViolation) throw;
      row.status = std::string(to_string(e.code()));
    }
    table.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    if (r.status != "ok") continue;
    if (i >= 1 && table.rows[i - 1].status == "ok") {
      const int d = r.result.leaves - table.rows[i - 1].result.leaves;
      if (d < 0 || d > 1) table.consistent = false;
    }
    if (i >= 2 && table.rows[i - 2].status == "ok" && r.result.leaves > table.rows[i - 2].result.leaves + 1) {
      table.consistent = false;
    }
  }
  return table;
}

std::vector<int> brute_force_leaf_counts(const DualGraph& g, const std::vector<int>& region) {
  const std::size_t r = region.size();
  if (r > 25) throw Error(ErrorCode::DomainError, "brute force is limited to 25 tiles");
  std::vector<std::uint32_t> nbr(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && g.adjacent(region[i], region[j])) nbr[i] |= 1U << j;
    }
  }
  std::vector<int> best(r + 1, -1);
  best[0] = 0;
  const std::uint32_t total = 1U << r;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int size = std::popcount(mask);
    int degree_sum = 0;
    int leaves = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      const int d = std::popcount(nbr[static_cast<std::size_t>(std::countr_zero(m))] & mask);
      degree_sum += d;
      leaves += d == 1 ? 1 : 0;
    }
    if (degree_sum != 2 * (size - 1)) continue;
    // Connected with size-1 edges means a tree.
    std::uint32_t reached = mask & (~mask + 1);
    for (;;) {
      std::uint32_t grow = reached;
      for (std::uint32_t m = reached; m; m &= m - 1) grow |= nbr[static_cast<std::size_t>(std::countr_zero(m))] & mask;
      if (grow == reached) break;
      reached = grow;
    }
    if (reached != mask) continue;
    best[static_cast<std::size_t>(size)] = std::max(best[static_cast<std::size_t>(size)], leaves);
  }
  return best;
}

}  // namespace p2leaf
