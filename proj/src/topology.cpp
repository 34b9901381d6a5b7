#include "hpfold/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hpfold/scoring.hpp"
#include "hpfold/word.hpp"

namespace hpfold {

void check_closed_curve(const ClosedCurve& c) {
  const auto& v = c.vertices;
  if (v.size() < 4) throw std::invalid_argument("closed curve must have length >= 4");
  std::unordered_set<long long> seen;
  for (const Site& p : v)
    if (!seen.insert(site_key(p)).second)
      throw std::invalid_argument("closed curve revisits a site");
  for (size_t i = 0; i < v.size(); ++i) {
    const Site &a = v[i], &b = v[(i + 1) % v.size()];
    if (std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) != 1)
      throw std::invalid_argument("closed curve has a non-unit step");
  }
}

ClosedCurve curve_of_fold(const Fold& f) {
  if (!f.closed) throw std::invalid_argument("curve_of_fold: fold must be closed");
  if (f.kind != Lattice::rect2d && f.kind != Lattice::rect3d)
    throw std::invalid_argument("curve_of_fold: only square-lattice folds are Z^3 curves");
  ClosedCurve c{fold_sites(f)};
  check_closed_curve(c);
  return c;
}

namespace {

struct V2 {
  long long x, y;
};
long long cross2(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }

struct V3 {
  long long x, y, z;
};
V3 sub3(const Site& a, const Site& b) {
  return {(long long)a.x - b.x, (long long)a.y - b.y, (long long)a.z - b.z};
}
long long det3(const V3& a, const V3& b, const V3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}
V3 neg3(const V3& a) { return {-a.x, -a.y, -a.z}; }

struct Frac {
  long long num = 0, den = 1;  // den > 0
};
bool frac_less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
bool frac_eq(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

struct StrandPos {
  int edge;
  Frac t;
};
bool pos_less(const StrandPos& a, const StrandPos& b) {
  if (a.edge != b.edge) return a.edge < b.edge;
  return frac_less(a.t, b.t);
}

struct RawCrossing {
  int over_curve, over_edge;
  Frac over_t;
  int under_curve, under_edge;
  Frac under_t;
  int sign;
};

long long auto_n(const std::vector<ClosedCurve>& curves) {
  int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  bool first = true;
  for (const ClosedCurve& c : curves)
    for (const Site& p : c.vertices) {
      int v[3] = {p.x, p.y, p.z};
      for (int i = 0; i < 3; ++i) {
        if (first || v[i] < lo[i]) lo[i] = v[i];
        if (first || v[i] > hi[i]) hi[i] = v[i];
      }
      first = false;
    }
  long long diam = 0;
  for (int i = 0; i < 3; ++i) diam = std::max(diam, (long long)hi[i] - lo[i]);
  return std::max<long long>(29, 4 * diam + 5);
}

std::vector<RawCrossing> raw_crossings(const std::vector<ClosedCurve>& curves, long long N) {
  auto pi = [N](const Site& p) { return V2{N * p.x - p.y, N * p.y - p.z}; };
  auto pi3 = [N](const V3& d) { return V2{N * d.x - d.y, N * d.y - d.z}; };
  const V3 w{1, N, N * N};

  struct Edge {
    int curve, idx;
    Site a, b;
  };
  std::vector<Edge> edges;
  for (int ci = 0; ci < (int)curves.size(); ++ci) {
    const auto& v = curves[ci].vertices;
    for (int i = 0; i < (int)v.size(); ++i)
      edges.push_back({ci, i, v[i], v[(i + 1) % v.size()]});
  }

  auto orient = [](const V2& a, const V2& b, const V2& c) {
    return cross2({b.x - a.x, b.y - a.y}, {c.x - a.x, c.y - a.y});
  };

  std::vector<RawCrossing> out;
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Edge &e1 = edges[i], &e2 = edges[j];
      const V2 p1 = pi(e1.a), q1 = pi(e1.b), r1 = pi(e2.a), s1 = pi(e2.b);
      const V2 pd1{q1.x - p1.x, q1.y - p1.y}, pd2{s1.x - r1.x, s1.y - r1.y};
      if (cross2(pd1, pd2) == 0) {
        // parallel: fine unless collinear with overlapping spans
        if (orient(p1, q1, r1) == 0 && orient(p1, q1, s1) == 0) {
          const long long L = pd1.x * pd1.x + pd1.y * pd1.y;
          long long a = pd1.x * (r1.x - p1.x) + pd1.y * (r1.y - p1.y);
          long long b = pd1.x * (s1.x - p1.x) + pd1.y * (s1.y - p1.y);
          if (a > b) std::swap(a, b);
          if (b > 0 && a < L) throw std::logic_error("degenerate projection: collinear overlap");
        }
        continue;
      }
      const long long o1 = orient(p1, q1, r1), o2 = orient(p1, q1, s1);
      const long long o3 = orient(r1, s1, p1), o4 = orient(r1, s1, q1);
      if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        // A vertex projecting strictly inside another edge would corrupt the
        // crossing count; endpoint-sharing edges land here harmlessly.
        auto strict_inside = [](const V2& a, const V2& b, const V2& p) {
          const V2 d{b.x - a.x, b.y - a.y};
          const long long t = d.x * (p.x - a.x) + d.y * (p.y - a.y);
          return 0 < t && t < d.x * d.x + d.y * d.y;
        };
        if ((o1 == 0 && strict_inside(p1, q1, r1)) || (o2 == 0 && strict_inside(p1, q1, s1)) ||
            (o3 == 0 && strict_inside(r1, s1, p1)) || (o4 == 0 && strict_inside(r1, s1, q1)))
          throw std::logic_error("degenerate projection: vertex over an edge interior");
        continue;
      }
      if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;

      const V3 d1 = sub3(e1.b, e1.a), d2 = sub3(e2.b, e2.a);
      const V3 bb = sub3(e2.a, e1.a);
      long long den = det3(d1, neg3(d2), neg3(w));
      if (den == 0) throw std::logic_error("degenerate projection: singular system");
      long long t1n = det3(bb, neg3(d2), neg3(w));
      long long t2n = det3(d1, bb, neg3(w));
      long long lamn = det3(d1, neg3(d2), bb);
      if (den < 0) {
        den = -den;
        t1n = -t1n;
        t2n = -t2n;
        lamn = -lamn;
      }
      if (!(0 < t1n && t1n < den && 0 < t2n && t2n < den))
        throw std::logic_error("degenerate projection: crossing parameter on boundary");
      if (lamn == 0) throw std::logic_error("curves intersect in space");

      RawCrossing rc;
      V3 d_over{}, d_under{};
      if (lamn > 0) {
        rc.over_curve = e1.curve;
        rc.over_edge = e1.idx;
        rc.over_t = {t1n, den};
        rc.under_curve = e2.curve;
        rc.under_edge = e2.idx;
        rc.under_t = {t2n, den};
        d_over = d1;
        d_under = d2;
      } else {
        rc.over_curve = e2.curve;
        rc.over_edge = e2.idx;
        rc.over_t = {t2n, den};
        rc.under_curve = e1.curve;
        rc.under_edge = e1.idx;
        rc.under_t = {t1n, den};
        d_over = d2;
        d_under = d1;
      }
      rc.sign = cross2(pi3(d_over), pi3(d_under)) > 0 ? 1 : -1;
      out.push_back(rc);
    }
  }
  return out;
}

void check_disjoint(const std::vector<ClosedCurve>& curves) {
  std::unordered_set<long long> all;
  for (const ClosedCurve& c : curves) {
    check_closed_curve(c);
    for (const Site& p : c.vertices)
      if (!all.insert(site_key(p)).second)
        throw std::invalid_argument("curves share a site");
  }
}

Diagram assemble(const std::vector<ClosedCurve>& curves, const std::vector<RawCrossing>& raw) {
  const int nc = (int)curves.size();
  std::vector<std::vector<StrandPos>> unders(nc);
  for (const RawCrossing& rc : raw) unders[rc.under_curve].push_back({rc.under_edge, rc.under_t});
  for (auto& u : unders) std::sort(u.begin(), u.end(), pos_less);

  std::vector<int> arc_offset(nc + 1, 0);
  Diagram d;
  for (int c = 0; c < nc; ++c) {
    const int arcs_here = std::max<int>(1, (int)unders[c].size());
    arc_offset[c + 1] = arc_offset[c] + arcs_here;
    for (int a = 0; a < arcs_here; ++a) d.arc_curve.push_back(c);
  }
  d.arcs = arc_offset[nc];

  auto arc_count = [&](int c) { return arc_offset[c + 1] - arc_offset[c]; };
  auto arc_at = [&](int c, const StrandPos& pos) {
    const auto& u = unders[c];
    const int n = arc_count(c);
    const int k = (int)(std::lower_bound(u.begin(), u.end(), pos, pos_less) - u.begin());
    return arc_offset[c] + ((k - 1) % n + n) % n;
  };

  for (const RawCrossing& rc : raw) {
    Crossing cr;
    cr.sign = rc.sign;
    cr.over_curve = rc.over_curve;
    cr.under_curve = rc.under_curve;
    cr.over_edge = rc.over_edge;
    cr.under_edge = rc.under_edge;
    cr.over_arc = arc_at(rc.over_curve, {rc.over_edge, rc.over_t});
    const auto& u = unders[rc.under_curve];
    const int n = arc_count(rc.under_curve);
    StrandPos pos{rc.under_edge, rc.under_t};
    const int k = (int)(std::lower_bound(u.begin(), u.end(), pos, pos_less) - u.begin());
    cr.under_arc_in = arc_offset[rc.under_curve] + ((k - 1) % n + n) % n;
    cr.under_arc_out = arc_offset[rc.under_curve] + k % n;
    d.crossings.push_back(cr);
  }
  return d;
}

}  // namespace

Diagram project(const std::vector<ClosedCurve>& curves, long long N) {
  if (curves.empty()) throw std::invalid_argument("project: no curves");
  check_disjoint(curves);
  if (N == 0) N = auto_n(curves);
  return assemble(curves, raw_crossings(curves, N));
}

int linking_number(const ClosedCurve& a, const ClosedCurve& b) {
  const std::vector<ClosedCurve> curves{a, b};
  check_disjoint(curves);
  const long long n1 = auto_n(curves);
  int vals[2];
  for (int round = 0; round < 2; ++round) {
    long long s = 0;
    for (const RawCrossing& rc : raw_crossings(curves, n1 + 8 * round))
      if (rc.over_curve != rc.under_curve) s += rc.sign;
    if (s % 2 != 0) throw std::logic_error("linking_number: odd inter-curve crossing sum");
    vals[round] = (int)(s / 2);
  }
  if (vals[0] != vals[1])
    throw std::logic_error("linking_number: projection-dependent result (degenerate N)");
  return vals[0];
}

long long fox3_count(const Diagram& d) {
  for (int c : d.arc_curve)
    if (c != 0) throw std::invalid_argument("fox3_count: diagram must come from one curve");
  const int n = d.arcs;
  std::vector<std::vector<int>> rows;
  for (const Crossing& cr : d.crossings) {
    std::vector<int> row(n, 0);
    row[cr.over_arc] = (row[cr.over_arc] + 1) % 3;
    row[cr.under_arc_in] = (row[cr.under_arc_in] + 1) % 3;
    row[cr.under_arc_out] = (row[cr.under_arc_out] + 1) % 3;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] % 3 != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = rows[rank][col] == 1 ? 1 : 2;  // inverse mod 3
    for (int& x : rows[rank]) x = x * inv % 3;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int cix = 0; cix < n; ++cix) rows[r][cix] = ((rows[r][cix] - f * rows[rank][cix]) % 3 + 3) % 3;
    }
    ++rank;
  }
  long long count = 1;
  for (int i = 0; i < n - rank; ++i) count *= 3;
  return count;
}

long long fox3_count_curve(const ClosedCurve& c) {
  const std::vector<ClosedCurve> curves{c};
  const long long n1 = auto_n(curves);
  const long long a = fox3_count(project(curves, n1));
  const long long b = fox3_count(project(curves, n1 + 12));
  if (a != b) throw std::logic_error("fox3_count_curve: projection-dependent result");
  return a;
}

std::pair<ClosedCurve, ClosedCurve> build_linked_cube_embedding() {
  ClosedCurve c8{{{1, 0, 2}, {2, 0, 2}, {3, 0, 2}, {3, 1, 2}, {3, 2, 2}, {2, 2, 2}, {1, 2, 2}, {1, 1, 2}}};
  ClosedCurve c56{{
      {2, 1, 2}, {2, 1, 1}, {3, 1, 1}, {3, 0, 1}, {2, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 0},
      {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {3, 1, 0}, {2, 1, 0}, {1, 1, 0}, {0, 1, 0}, {0, 2, 0},
      {1, 2, 0}, {2, 2, 0}, {3, 2, 0}, {3, 3, 0}, {2, 3, 0}, {1, 3, 0}, {0, 3, 0}, {0, 3, 1},
      {0, 2, 1}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {2, 2, 1}, {3, 2, 1},
      {3, 3, 1}, {3, 3, 2}, {2, 3, 2}, {1, 3, 2}, {0, 3, 2}, {0, 2, 2}, {0, 1, 2}, {0, 0, 2},
      {0, 0, 3}, {1, 0, 3}, {1, 1, 3}, {0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {1, 3, 3}, {1, 2, 3},
      {2, 2, 3}, {2, 3, 3}, {3, 3, 3}, {3, 2, 3}, {3, 1, 3}, {3, 0, 3}, {2, 0, 3}, {2, 1, 3},
  }};
  check_closed_curve(c8);
  check_closed_curve(c56);
  return {std::move(c8), std::move(c56)};
}

std::pair<ClosedCurve, ClosedCurve> build_unlinked_cube_embedding() {
  ClosedCurve c8{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {3, 1, 0}, {2, 1, 0}, {1, 1, 0}, {0, 1, 0}}};
  ClosedCurve c56;
  c56.vertices = {{0, 2, 0}, {1, 2, 0}, {2, 2, 0}, {3, 2, 0}, {3, 3, 0}, {2, 3, 0}, {1, 3, 0}, {0, 3, 0}};
  const int snake[][2] = {{0, 3}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {2, 2}, {1, 2}, {1, 1},
                          {2, 1}, {3, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 2}};
  for (int i = 0; i < 16; ++i) {
    if (i % 2 == 0)
      for (int z = 1; z <= 3; ++z) c56.vertices.push_back(Site{snake[i][0], snake[i][1], z});
    else
      for (int z = 3; z >= 1; --z) c56.vertices.push_back(Site{snake[i][0], snake[i][1], z});
  }
  check_closed_curve(c8);
  check_closed_curve(c56);
  return {std::move(c8), std::move(c56)};
}

TrefoilReport verify_trefoil24() {
  const Word w = special_word("trefoil24");
  auto decoded = decode_keyboard_moves(std::string(trefoil24_keyboard_moves), w, /*closed=*/true, 2);
  TrefoilReport r;
  r.fold = decoded.front().fold;
  r.mapping = decoded.front().mapping;
  const std::vector<Site> sites = fold_sites(r.fold);
  r.length = (int)sites.size();
  r.score = score(r.fold, w);
  r.i00 = occurrences("00", w);
  r.zero_internal_edges = zero_set_internal_edges(r.fold, w);
  std::vector<Site> zs;
  for (size_t i = 0; i < sites.size(); ++i)
    if (w.letters[i] == '0') zs.push_back(sites[i]);
  r.zeros_form_cube = sites_form_cube(zs, 2);
  r.fox3 = fox3_count_curve(curve_of_fold(r.fold));
  if (r.length != 24 || r.score != 6 || !r.zeros_form_cube || r.fox3 != 9 || r.i00 != 6 ||
      r.zero_internal_edges != 12)
    throw std::runtime_error("verify_trefoil24: property check failed");
  return r;
}

ProjectionPlan diagram_cuts(const std::vector<ClosedCurve>& curves, long long N) {
  if (curves.empty()) throw std::invalid_argument("diagram_cuts: no curves");
  check_disjoint(curves);
  ProjectionPlan plan;
  plan.n = N ? N : auto_n(curves);
  for (const RawCrossing& rc : raw_crossings(curves, plan.n))
    plan.cuts.push_back(
        {rc.under_curve, rc.under_edge, (double)rc.under_t.num / (double)rc.under_t.den});
  std::sort(plan.cuts.begin(), plan.cuts.end(), [](const UnderCut& a, const UnderCut& b) {
    return std::tie(a.curve, a.edge, a.t) < std::tie(b.curve, b.edge, b.t);
  });
  return plan;
}

std::string separation_report(const Fold& f, const Word& w) {
  const ClosedCurve c = curve_of_fold(f);
  const Diagram d = project(c);
  const ContactList cs = contacts(f, w);
  const int n = (int)c.vertices.size();
  auto gap = [n](int a, int b) {
    int g = std::abs(a - b) % n;
    return std::min(g, n - g);
  };
  std::ostringstream os;
  os << "crossings: " << d.crossings.size() << ", contacts: " << cs.size() << "\n";
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& cr = d.crossings[i];
    int best = n;
    for (const auto& [a, b] : cs)
      best = std::min({best, gap(cr.over_edge, a), gap(cr.over_edge, b), gap(cr.under_edge, a),
                       gap(cr.under_edge, b)});
    os << "crossing " << i << ": over edge " << cr.over_edge << ", under edge " << cr.under_edge
       << ", sign " << (cr.sign > 0 ? "+1" : "-1") << ", nearest contact index gap " << best
       << "\n";
  }
  return os.str();
}

}  // namespace hpfold
