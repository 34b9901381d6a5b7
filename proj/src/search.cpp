#include "hpfold/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace hpfold {

bool moves_less(Lattice k, const std::string& a, const std::string& b) {
  const size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    int ra = alphabet_rank(k, a[i]), rb = alphabet_rank(k, b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

std::string canonical_moves(Lattice k, const Fold& f) {
  const std::vector<Site> sites = fold_sites(f);
  std::string best;
  bool have = false;
  for (const SiteMap& g : point_group(k)) {
    std::vector<Site> ts(sites.size());
    for (size_t i = 0; i < sites.size(); ++i) ts[i] = g(sites[i]);
    std::string m;
    m.reserve(f.moves.size());
    for (size_t i = 0; i + 1 < ts.size(); ++i) m.push_back(move_between(k, ts[i], ts[i + 1]));
    if (f.closed && ts.size() > 1) m.push_back(move_between(k, ts.back(), ts.front()));
    if (!have || moves_less(k, m, best)) {
      best = std::move(m);
      have = true;
    }
  }
  return best;
}

namespace {

// Lower bound on lattice graph distance (exact for rect2d/rect3d/tri).
int dist_lb(Lattice k, const Site& a, const Site& b) {
  int dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  switch (k) {
    case Lattice::rect2d:
    case Lattice::hex:
      return std::abs(dx) + std::abs(dy);
    case Lattice::rect3d:
      return std::abs(dx) + std::abs(dy) + std::abs(dz);
    case Lattice::tri:
      return (std::abs(dx) + std::abs(dy) + std::abs(dx + dy)) / 2;
  }
  return 0;
}

struct Shared {
  std::atomic<int> best{-1};
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};   // budget exhausted
  std::atomic<bool> found{false};  // current descent pass succeeded
  std::chrono::steady_clock::time_point t0;
  long long max_nodes = 0;
  double max_seconds = 0;
  std::mutex mu;
  int rec_score = -1;
  std::string rec_moves;  // some witness for rec_score

  void flush(long long batch) {
    long long tot = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (tot > max_nodes) stop.store(true, std::memory_order_relaxed);
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > max_seconds)
      stop.store(true, std::memory_order_relaxed);
  }
};

struct Engine {
  Lattice k;
  std::string letters;
  int n = 0;
  bool closed = false;
  std::string ab;
  Shared* sh = nullptr;

  int L = 0, side = 0, zside = 0;
  bool split = false;  // bipartite: even/odd word indices can only contact each other
  std::vector<int32_t> grid;
  std::vector<Site> pos;
  std::vector<char> mv_stack;
  std::vector<int> sufcap[2];  // per parity: slot caps of zeros at indices >= t
  std::vector<int> zcnt[2];    // per parity: number of zeros at indices >= t
  std::vector<int> zslots;     // per placed zero: currently empty neighbour cells
  std::vector<int> placed_zeros;
  int score = 0;
  long long pending = 0;

  Engine(Lattice kk, const std::string& ls, bool cl, Shared* s)
      : k(kk), letters(ls), n((int)ls.size()), closed(cl), ab(alphabet(kk)), sh(s) {
    L = n + 2;
    side = 2 * L + 1;
    zside = (k == Lattice::rect3d) ? side : 1;
    split = is_bipartite(k);
    grid.assign((size_t)side * side * zside, -1);
    pos.resize(n);
    zslots.assign(n, 0);
    placed_zeros.reserve(n);
    for (int p = 0; p < 2; ++p) {
      sufcap[p].assign(n + 2, 0);
      zcnt[p].assign(n + 2, 0);
    }
    const int per = coordination(k) - 2;
    for (int i = n - 1; i >= 0; --i) {
      int c = 0, z = 0;
      if (letters[i] == '0') {
        c = per;
        if (!closed && (i == 0 || i == n - 1)) ++c;
        z = 1;
      }
      for (int p = 0; p < 2; ++p) {
        sufcap[p][i] = sufcap[p][i + 1] + ((i & 1) == p ? c : 0);
        zcnt[p][i] = zcnt[p][i + 1] + ((i & 1) == p ? z : 0);
      }
    }
  }

  size_t cell(const Site& s) const {
    size_t a = (size_t)(s.x + L) * side + (size_t)(s.y + L);
    return zside == 1 ? a : a * zside + (size_t)(s.z + L);
  }
  int32_t at(const Site& s) const { return grid[cell(s)]; }

  bool tick() {
    if ((++pending & 1023) == 0) sh->flush(1024);
    return sh->stop.load(std::memory_order_relaxed);
  }
  void drain() {
    sh->flush(pending & 1023);
    pending = 0;
  }
  bool halted() const {
    return sh->stop.load(std::memory_order_relaxed) || sh->found.load(std::memory_order_relaxed);
  }

  void place(int i, const Site& s) {
    const bool zero = letters[i] == '0';
    if (zero) zslots[i] = 0;
    for (const Site& nb : neighbors(k, s)) {
      int32_t o = at(nb);
      if (o >= 0) {
        if (letters[o] == '0') --zslots[o];
        if (zero && letters[o] == '0' && o != i - 1 && !(closed && i == n - 1 && o == 0)) ++score;
      } else if (zero) {
        ++zslots[i];
      }
    }
    if (zero) placed_zeros.push_back(i);
    grid[cell(s)] = i;
    pos[i] = s;
  }

  void unplace(int i, const Site& s) {
    const bool zero = letters[i] == '0';
    grid[cell(s)] = -1;
    if (zero) placed_zeros.pop_back();
    for (const Site& nb : neighbors(k, s)) {
      int32_t o = at(nb);
      if (o >= 0) {
        if (letters[o] == '0') ++zslots[o];
        if (zero && letters[o] == '0' && o != i - 1 && !(closed && i == n - 1 && o == 0)) --score;
      }
    }
  }

  // How many future zeros could still land next to placed zero u: they need
  // the opposite word-index parity on a bipartite lattice, and enough indices
  // left to walk from the head into one of u's free cells.
  int partners(int next, int u) const {
    int thr = next + dist_lb(k, pos[next - 1], pos[u]) - 2;
    if (thr < next) thr = next;
    if (thr > n) thr = n;
    if (split) return zcnt[(u & 1) ^ 1][thr];
    return zcnt[0][thr] + zcnt[1][thr];
  }

  // Admissible upper bound on the final score, given sites 0..next-1 placed.
  // Future contacts consume an empty-neighbour slot of a placed zero or a
  // slot cap of a future zero on each side; on bipartite lattices the two
  // sides have opposite parity, so the smaller pool caps the count. A placed
  // zero only contributes slots while some future zero can still reach it,
  // and unplaced chain neighbours of a zero are forced into one of its
  // counted cells without scoring, so those reservations are subtracted.
  int bound_after(int next) const {
    int pool[2] = {sufcap[0][next], sufcap[1][next]};
    for (int u : placed_zeros) {
      int sl = zslots[u];
      if (next < n) {
        if (u == next - 1) --sl;       // chain successor eats one counted cell
        if (closed && u == 0) --sl;    // so does the closing site of a cycle
      }
      if (sl <= 0) continue;
      const int m = partners(next, u);
      if (m > 0) pool[u & 1] += sl < m ? sl : m;
    }
    if (split) return score + std::min(pool[0], pool[1]);
    return score + (pool[0] + pool[1]) / 2;
  }

  // Returns false if placing index i at s cannot lead to a valid closure.
  bool closure_ok(int i, const Site& s) const {
    if (!closed) return true;
    const int rem = n - i;  // steps left after this placement, incl. the closing one
    const int d = dist_lb(k, s, pos[0]);
    if (d > rem) return false;
    if (is_bipartite(k) && ((rem - d) & 1)) return false;
    return true;
  }

  void record(const std::string& extra_closing) {
    int sc = score;
    int cur = sh->best.load(std::memory_order_relaxed);
    while (cur < sc && !sh->best.compare_exchange_weak(cur, sc)) {
    }
    std::lock_guard<std::mutex> lk(sh->mu);
    if (sc > sh->rec_score) {
      sh->rec_score = sc;
      sh->rec_moves.assign(mv_stack.begin(), mv_stack.end());
      sh->rec_moves += extra_closing;
    }
  }

  // Descent pass: explore only placements that keep the bound at least t;
  // succeed on the first complete fold scoring t or more.
  void dfs_value(int i, int t) {
    if (tick() || halted()) return;
    if (i == n) {
      if (closed && !adjacent(k, pos[n - 1], pos[0])) return;
      record(closed ? std::string(1, move_between(k, pos[n - 1], pos[0])) : std::string());
      if (score >= t) sh->found.store(true, std::memory_order_relaxed);
      return;
    }
    struct Cand {
      char mv;
      Site s;
      int bound;
      int gain;
      int rank;
    };
    Cand cands[6];
    int nc = 0;
    for (char mv : ab) {
      Site s = apply_move(k, pos[i - 1], mv);
      if (at(s) >= 0) continue;
      if (!closure_ok(i, s)) continue;
      int gain = 0;
      if (letters[i] == '0') {
        for (const Site& nb : neighbors(k, s)) {
          int32_t o = at(nb);
          if (o >= 0 && letters[o] == '0' && o != i - 1 && !(closed && i == n - 1 && o == 0))
            ++gain;
        }
      }
      place(i, s);
      const int b = bound_after(i + 1);
      unplace(i, s);
      if (b < t) continue;
      if (nc < 6) cands[nc++] = {mv, s, b, gain, alphabet_rank(k, mv)};
    }
    auto before = [](const Cand& a, const Cand& b) {
      if (a.bound != b.bound) return a.bound > b.bound;
      return a.gain != b.gain ? a.gain > b.gain : a.rank < b.rank;
    };
    for (int a = 1; a < nc; ++a) {
      Cand key = cands[a];
      int b = a - 1;
      for (; b >= 0 && before(key, cands[b]); --b) cands[b + 1] = cands[b];
      cands[b + 1] = key;
    }
    for (int c = 0; c < nc; ++c) {
      place(i, cands[c].s);
      mv_stack.push_back(cands[c].mv);
      dfs_value(i + 1, t);
      mv_stack.pop_back();
      unplace(i, cands[c].s);
      if (halted()) return;
    }
  }

  // Witness pass: strict alphabet order, stop at the first fold scoring j.
  bool dfs_witness(int i, int j, std::string& out) {
    if (tick()) return false;
    if (i == n) {
      if (closed && !adjacent(k, pos[n - 1], pos[0])) return false;
      if (score != j) return false;
      out.assign(mv_stack.begin(), mv_stack.end());
      if (closed) out.push_back(move_between(k, pos[n - 1], pos[0]));
      return true;
    }
    for (char mv : ab) {
      Site s = apply_move(k, pos[i - 1], mv);
      if (at(s) >= 0) continue;
      if (!closure_ok(i, s)) continue;
      place(i, s);
      mv_stack.push_back(mv);
      bool hit = bound_after(i + 1) >= j && dfs_witness(i + 1, j, out);
      mv_stack.pop_back();
      unplace(i, s);
      if (hit) return true;
      if (sh->stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  // Enumeration pass: collect every fold scoring exactly j.
  template <class FoundFn>
  void dfs_all(int i, int j, FoundFn&& found) {
    if (tick()) return;
    if (i == n) {
      if (closed && !adjacent(k, pos[n - 1], pos[0])) return;
      if (score == j) found(*this);
      return;
    }
    for (char mv : ab) {
      Site s = apply_move(k, pos[i - 1], mv);
      if (at(s) >= 0) continue;
      if (!closure_ok(i, s)) continue;
      place(i, s);
      mv_stack.push_back(mv);
      if (bound_after(i + 1) >= j) dfs_all(i + 1, j, found);
      mv_stack.pop_back();
      unplace(i, s);
      if (sh->stop.load(std::memory_order_relaxed)) return;
    }
  }
};

// Symmetry-reduced (first move, second move) prefixes covering every fold
// class: the point group is transitive on first steps, and the stabilizer of
// that step identifies the remaining second moves with the listed ones.
std::vector<std::string> reduced_roots(Lattice k, int nmoves) {
  char first;
  std::string seconds;
  switch (k) {
    case Lattice::rect2d:
      first = 'u';
      seconds = "ul";
      break;
    case Lattice::rect3d:
      first = 'u';
      seconds = "ul";
      break;
    case Lattice::tri:
      first = 'e';
      seconds = "epq";
      break;
    case Lattice::hex:
      first = 'r';
      seconds = "rv";
      break;
    default:
      throw std::logic_error("reduced_roots");
  }
  std::vector<std::string> roots;
  if (nmoves <= 1) {
    roots.push_back(std::string(1, first));
    return roots;
  }
  for (char s : seconds) roots.push_back(std::string{first, s});
  return roots;
}

// Expand reduced roots two more levels so several workers get useful slices.
std::vector<std::string> worker_tasks(Lattice k, int nmoves) {
  std::vector<std::string> tasks = reduced_roots(k, nmoves);
  const std::string ab{alphabet(k)};
  for (int round = 0; round < 2; ++round) {
    if ((int)tasks[0].size() >= nmoves) break;
    std::vector<std::string> next;
    for (const std::string& t : tasks)
      for (char mv : ab) {
        // keep prefixes that are at least self-avoiding
        Site cur = Site{0, 0, 0};
        bool ok = true;
        std::vector<Site> seen{cur};
        for (char c : t) {
          cur = apply_move(k, cur, c);
          seen.push_back(cur);
        }
        Site s = apply_move(k, cur, mv);
        for (const Site& p : seen)
          if (p == s) {
            ok = false;
            break;
          }
        if (ok) next.push_back(t + std::string(1, mv));
      }
    if (next.empty()) break;
    tasks = std::move(next);
  }
  return tasks;
}

void check_search_input(const Word& w, bool closed) {
  if (w.letters.empty()) throw std::invalid_argument("search: empty word");
  for (char c : w.letters)
    if (c != '0' && c != '1') throw std::invalid_argument("search: word must be over {0,1}");
  if (w.cyclic != closed)
    throw std::invalid_argument("search: closed flag must match word cyclic flag");
}

}  // namespace

SearchResult optimal(Lattice k, const Word& w, bool closed, const SearchLimits& lim) {
  check_search_input(w, closed);
  const int n = (int)w.letters.size();
  if (n == 1) return {0, "", 0, true};

  Shared sh;
  sh.t0 = std::chrono::steady_clock::now();
  sh.max_nodes = lim.max_nodes;
  sh.max_seconds = lim.max_seconds;

  // Placement prefixes cover n-1 moves; a closed fold's final edge is the
  // adjacency check at the leaf, not a placement.
  const int nmoves = n - 1;
  std::vector<std::string> tasks = worker_tasks(k, nmoves);
  const int workers = std::min(std::max(1, lim.workers), (int)tasks.size());

  int root_bound = 0;
  {
    Engine e(k, w.letters, closed, &sh);
    e.place(0, Site{0, 0, 0});
    root_bound = e.bound_after(1);
  }

  // Value pass: lower the target until some fold reaches it. Pass t only
  // walks placements whose bound stays at least t, so high targets are cheap
  // and the first success pins the optimum exactly.
  int j = -1;
  for (int t = root_bound; t >= 0; --t) {
    sh.found.store(false);
    std::atomic<size_t> next_task{0};
    auto run_value = [&]() {
      Engine e(k, w.letters, closed, &sh);
      for (;;) {
        size_t ti = next_task.fetch_add(1);
        if (ti >= tasks.size() || e.halted()) break;
        const std::string& pre = tasks[ti];
        e.place(0, Site{0, 0, 0});
        Site cur{0, 0, 0};
        int placed = 1;
        bool ok = true;
        for (char mv : pre) {
          Site s = apply_move(k, cur, mv);
          if (e.at(s) >= 0 || !e.closure_ok(placed, s)) {
            ok = false;
            break;
          }
          e.place(placed, s);
          e.mv_stack.push_back(mv);
          cur = s;
          ++placed;
        }
        if (ok && e.bound_after(placed) >= t) e.dfs_value(placed, t);
        while (placed > 1) {
          --placed;
          e.unplace(placed, e.pos[placed]);
          e.mv_stack.pop_back();
        }
        e.unplace(0, Site{0, 0, 0});
      }
      e.drain();
    };
    if (workers == 1) {
      run_value();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < workers; ++i) pool.emplace_back(run_value);
      for (auto& th : pool) th.join();
    }
    if (sh.stop.load()) break;
    if (sh.found.load()) {
      j = t;
      break;
    }
  }

  SearchResult r;
  if (sh.stop.load()) {  // budget exhausted: report the best fold seen so far
    r.j = sh.best.load();
    r.witness = sh.rec_moves;
    r.nodes = sh.nodes.load();
    r.exact = false;
    return r;
  }
  r.j = j;
  if (r.j < 0) {  // no valid fold at all (odd closed length on a bipartite lattice)
    r.nodes = sh.nodes.load();
    r.exact = true;
    return r;
  }

  Engine e(k, w.letters, closed, &sh);
  e.place(0, Site{0, 0, 0});
  std::string wit;
  bool found = e.dfs_witness(1, r.j, wit);
  e.drain();
  r.nodes = sh.nodes.load();
  if (!found) {  // budget ran out mid-scan; fall back to the value-pass fold
    r.witness = sh.rec_moves;
    r.exact = false;
    return r;
  }
  r.witness = wit;
  r.exact = true;
  return r;
}

std::vector<Fold> enumerate_optima(Lattice k, const Word& w, bool closed,
                                   const SearchLimits& lim) {
  SearchResult base = optimal(k, w, closed, lim);
  if (!base.exact) throw std::runtime_error("enumerate_optima: budget exceeded in value pass");
  if (base.j < 0) return {};

  Shared sh;
  sh.t0 = std::chrono::steady_clock::now();
  sh.max_nodes = lim.max_nodes;
  sh.max_seconds = lim.max_seconds;
  Engine e(k, w.letters, closed, &sh);
  e.place(0, Site{0, 0, 0});

  auto cmp = [k](const std::string& a, const std::string& b) { return moves_less(k, a, b); };
  std::set<std::string, decltype(cmp)> classes(cmp);
  e.dfs_all(1, base.j, [&](Engine& eng) {
    Fold f;
    f.kind = k;
    f.start = Site{0, 0, 0};
    f.closed = closed;
    f.moves.assign(eng.mv_stack.begin(), eng.mv_stack.end());
    if (closed) f.moves.push_back(move_between(k, eng.pos.back(), eng.pos.front()));
    classes.insert(canonical_moves(k, f));
  });
  e.drain();
  if (sh.stop.load()) throw std::runtime_error("enumerate_optima: budget exceeded");

  std::vector<Fold> out;
  for (const std::string& m : classes) {
    Fold f;
    f.kind = k;
    f.start = Site{0, 0, 0};
    f.closed = closed;
    f.moves.assign(m.begin(), m.end());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace hpfold
