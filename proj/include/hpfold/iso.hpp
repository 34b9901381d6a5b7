#pragma once

#include <string>
#include <vector>

#include "hpfold/lattice.hpp"

namespace hpfold {

using SiteSet = std::vector<Site>;  // sorted, duplicate-free

// Edges of the lattice graph with both endpoints in the set.
int internal_edges(Lattice k, const SiteSet& sites);

struct IsoResult {
  int n = 0;
  int max_edges = 0;
  long long shape_count = 0;           // connected shapes up to translation
  std::vector<SiteSet> witnesses;      // maximisers up to point-group symmetry
  bool unique = false;                 // exactly one witness class
};

// Exhaustive maximum of internal_edges over connected n-site subsets,
// enumerated up to translation and deduplicated up to point-group symmetry.
// Supported: rect2d n<=12, tri n<=10, rect3d n<=9 (enumeration blows up past
// these; larger n throws).
IsoResult max_internal_edges(Lattice k, int n);

// Sorted L1 ball of radius r about the origin in rect2d.
SiteSet l1_ball(int r);
// Sorted axial-distance ball of radius r on the triangular lattice
// (1 + 3r(r+1) sites).
SiteSet tri_ball(int r);
// Sorted k x k square / k x k x k cube of sites with corner at the origin.
SiteSet square_sites(int k);
SiteSet cube_sites(int k);

struct BallSquareReport {
  int ball_sites = 0, ball_edges = 0;
  int square_sites = 0, square_edges = 0;
};
// Compares the 25-site L1 ball of radius 3 against the 5x5 square.
BallSquareReport ball_vs_square_report();

}  // namespace hpfold
