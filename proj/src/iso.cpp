#include "hpfold/iso.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace hpfold {

namespace {

SiteSet normalize_shape(SiteSet s) {
  int mx = INT_MAX, my = INT_MAX, mz = INT_MAX;
  for (const Site& p : s) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
    mz = std::min(mz, p.z);
  }
  for (Site& p : s) {
    p.x -= mx;
    p.y -= my;
    p.z -= mz;
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Coordinates of a normalized shape with <= 12 sites fit in 5 bits each.
std::string shape_key(const SiteSet& s) {
  std::string k;
  k.reserve(s.size() * 2);
  for (const Site& p : s) {
    auto v = (uint16_t)(p.x | (p.y << 5) | (p.z << 10));
    k.push_back((char)(v & 0xff));
    k.push_back((char)(v >> 8));
  }
  return k;
}

std::string canonical_key(Lattice k, const SiteSet& s) {
  std::string best;
  bool have = false;
  for (const SiteMap& g : point_group(k)) {
    SiteSet t;
    t.reserve(s.size());
    for (const Site& p : s) t.push_back(g(p));
    std::string key = shape_key(normalize_shape(std::move(t)));
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  }
  return best;
}

int enumeration_limit(Lattice k) {
  switch (k) {
    case Lattice::rect2d:
      return 12;
    case Lattice::tri:
      return 10;
    case Lattice::rect3d:
      return 9;
    default:
      return 0;
  }
}

}  // namespace

int internal_edges(Lattice k, const SiteSet& sites) {
  std::unordered_set<long long> in;
  in.reserve(sites.size() * 2);
  for (const Site& p : sites) in.insert(site_key(p));
  int twice = 0;
  for (const Site& p : sites)
    for (const Site& q : neighbors(k, p)) twice += (int)in.count(site_key(q));
  return twice / 2;
}

IsoResult max_internal_edges(Lattice k, int n) {
  const int cap = enumeration_limit(k);
  if (cap == 0) throw std::invalid_argument("max_internal_edges: unsupported lattice");
  if (n < 1 || n > cap)
    throw std::invalid_argument("max_internal_edges: n out of range for this lattice");

  std::vector<SiteSet> level{SiteSet{Site{0, 0, 0}}};
  for (int m = 1; m < n; ++m) {
    std::unordered_set<std::string> seen;
    seen.reserve(level.size() * 8);
    std::vector<SiteSet> next;
    for (const SiteSet& s : level) {
      for (const Site& p : s) {
        for (const Site& q : neighbors(k, p)) {
          if (std::binary_search(s.begin(), s.end(), q)) continue;
          SiteSet t = s;
          t.push_back(q);
          t = normalize_shape(std::move(t));
          if (seen.insert(shape_key(t)).second) next.push_back(std::move(t));
        }
      }
    }
    level = std::move(next);
  }

  IsoResult r;
  r.n = n;
  r.shape_count = (long long)level.size();
  r.max_edges = -1;
  std::unordered_set<std::string> wit_keys;
  for (const SiteSet& s : level) {
    int e = internal_edges(k, s);
    if (e > r.max_edges) {
      r.max_edges = e;
      r.witnesses.clear();
      wit_keys.clear();
    }
    if (e == r.max_edges && wit_keys.insert(canonical_key(k, s)).second) r.witnesses.push_back(s);
  }
  // report each class by its canonical representative, deterministically ordered
  for (SiteSet& w : r.witnesses) {
    std::string best_key;
    SiteSet best;
    bool have = false;
    for (const SiteMap& g : point_group(k)) {
      SiteSet t;
      t.reserve(w.size());
      for (const Site& p : w) t.push_back(g(p));
      t = normalize_shape(std::move(t));
      std::string key = shape_key(t);
      if (!have || key < best_key) {
        best_key = std::move(key);
        best = std::move(t);
        have = true;
      }
    }
    w = std::move(best);
  }
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const SiteSet& a, const SiteSet& b) { return shape_key(a) < shape_key(b); });
  r.unique = (r.witnesses.size() == 1);
  return r;
}

SiteSet l1_ball(int r) {
  SiteSet s;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if (std::abs(x) + std::abs(y) <= r) s.push_back(Site{x, y, 0});
  std::sort(s.begin(), s.end());
  return s;
}

SiteSet tri_ball(int r) {
  SiteSet s;
  for (int q = -r; q <= r; ++q)
    for (int w = -r; w <= r; ++w)
      if ((std::abs(q) + std::abs(w) + std::abs(q + w)) / 2 <= r) s.push_back(Site{q, w, 0});
  std::sort(s.begin(), s.end());
  return s;
}

SiteSet square_sites(int k) {
  SiteSet s;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) s.push_back(Site{x, y, 0});
  std::sort(s.begin(), s.end());
  return s;
}

SiteSet cube_sites(int k) {
  SiteSet s;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) s.push_back(Site{x, y, z});
  std::sort(s.begin(), s.end());
  return s;
}

BallSquareReport ball_vs_square_report() {
  BallSquareReport r;
  SiteSet ball = l1_ball(3), sq = square_sites(5);
  r.ball_sites = (int)ball.size();
  r.ball_edges = internal_edges(Lattice::rect2d, ball);
  r.square_sites = (int)sq.size();
  r.square_edges = internal_edges(Lattice::rect2d, sq);
  return r;
}

}  // namespace hpfold
