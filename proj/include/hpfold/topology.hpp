#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hpfold/fold.hpp"

namespace hpfold {

struct ClosedCurve {
  std::vector<Site> vertices;  // cyclic, no repeated endpoint
};

// Throws std::invalid_argument unless the curve is a self-avoiding unit-step
// cycle of length >= 4.
void check_closed_curve(const ClosedCurve& c);

// Vertices of a closed fold as a curve (the fold must be closed, rect2d ok —
// planar curves are unknots living in the z = 0 plane).
ClosedCurve curve_of_fold(const Fold& f);

struct Crossing {
  int over_arc, under_arc_in, under_arc_out;  // global arc ids
  int sign;                                   // right-hand rule
  int over_curve, under_curve;
  int over_edge, under_edge;  // edge index within the owning curve
};

struct Diagram {
  int arcs = 0;
  std::vector<Crossing> crossings;
  std::vector<int> arc_curve;  // arc id -> curve index
};

// Generic projection along (1, N, N^2) with exact integer arithmetic; N = 0
// picks one exceeding the bounding-box diameter. Throws std::logic_error on a
// degenerate configuration (never happens for a valid N by construction) and
// std::invalid_argument if two curves share a site.
Diagram project(const std::vector<ClosedCurve>& curves, long long N = 0);
inline Diagram project(const ClosedCurve& c, long long N = 0) {
  return project(std::vector<ClosedCurve>{c}, N);
}

// Half the signed sum of inter-curve crossings; computed for two projection
// directions and asserted equal.
int linking_number(const ClosedCurve& a, const ClosedCurve& b);

// Number of Fox 3-colorings of a one-curve diagram: count of arc colorings
// with over + over == 2*under (mod 3) at every crossing. Power of 3, >= 3;
// 9 certifies a trefoil-like knot, 3 an unknot-like curve.
long long fox3_count(const Diagram& d);
// Convenience: project the curve with two N values and check agreement.
long long fox3_count_curve(const ClosedCurve& c);

// Two disjoint cycles of lengths 8 and 56 partitioning the 4x4x4 site cube
// with |linking| = 1; the 8-cycle lies inside the designated 3x3x3 subcube.
std::pair<ClosedCurve, ClosedCurve> build_linked_cube_embedding();
// Same partition shape with linking number 0.
std::pair<ClosedCurve, ClosedCurve> build_unlinked_cube_embedding();

struct TrefoilReport {
  Fold fold;
  std::array<char, 6> mapping{};
  int length = 0;
  int score = 0;
  int i00 = 0;
  int zero_internal_edges = 0;
  bool zeros_form_cube = false;
  long long fox3 = 0;
};
// Decodes the keyboard transcription of the length-24 closed fold and checks
// every claimed property (score 6, zeros a 2-cube, fox3 = 9). Throws on any
// mismatch.
TrefoilReport verify_trefoil24();

// Descriptive-only report relating crossing strand word indices to contact
// word indices for a closed fold; nothing is asserted.
std::string separation_report(const Fold& f, const Word& w);

// Under-crossing positions (fraction along the under edge) plus the
// projection parameter, for gap-style diagram rendering.
struct UnderCut {
  int curve = 0, edge = 0;
  double t = 0;
};
struct ProjectionPlan {
  long long n = 0;
  std::vector<UnderCut> cuts;  // sorted by (curve, edge, t)
};
ProjectionPlan diagram_cuts(const std::vector<ClosedCurve>& curves, long long N = 0);

}  // namespace hpfold
