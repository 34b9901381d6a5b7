#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "hpfold/iso.hpp"

using namespace hpfold;

namespace {

SiteSet translated(SiteSet s, Site d) {
  for (auto& p : s) p = p + d;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("internal_edges on reference shapes") {
  CHECK(internal_edges(Lattice::rect2d, square_sites(3)) == 12);
  CHECK(internal_edges(Lattice::rect2d, square_sites(5)) == 40);
  CHECK(internal_edges(Lattice::rect2d, l1_ball(3)) == 36);
  CHECK(internal_edges(Lattice::rect3d, cube_sites(2)) == 12);
  CHECK(internal_edges(Lattice::rect3d, cube_sites(3)) == 54);
  CHECK(internal_edges(Lattice::tri, tri_ball(1)) == 12);
  CHECK(internal_edges(Lattice::rect2d, {}) == 0);
  CHECK(internal_edges(Lattice::rect2d, {{0, 0, 0}}) == 0);
}

TEST_CASE("ball generators have closed-form sizes and edge counts") {
  CHECK(l1_ball(1).size() == 5);
  CHECK(l1_ball(3).size() == 25);
  SiteSet expect1{{-1, 0, 0}, {0, -1, 0}, {0, 0, 0}, {0, 1, 0}, {1, 0, 0}};
  std::sort(expect1.begin(), expect1.end());
  SiteSet got = l1_ball(1);
  std::sort(got.begin(), got.end());
  CHECK(got == expect1);
  for (int r = 1; r <= 4; ++r) {
    CAPTURE(r);
    CHECK((int)tri_ball(r).size() == 1 + 3 * r * (r + 1));
    CHECK(internal_edges(Lattice::tri, tri_ball(r)) == 3 * r * (3 * r + 1));
  }
  CHECK(square_sites(4).size() == 16);
  CHECK(cube_sites(4).size() == 64);
}

TEST_CASE("maximum internal edges on the square lattice") {
  // Shape counts are the fixed-polyomino numbers 1, 2, 6, 19, 63, ...
  const long long counts[] = {1, 2, 6, 19, 63};
  const int maxes[] = {0, 1, 2, 4, 5};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    IsoResult r = max_internal_edges(Lattice::rect2d, n);
    CHECK(r.n == n);
    CHECK(r.shape_count == counts[n - 1]);
    CHECK(r.max_edges == maxes[n - 1]);
  }
  // Both trominoes attain 2 edges, so n = 3 is not unique.
  CHECK_FALSE(max_internal_edges(Lattice::rect2d, 3).unique);
  CHECK(max_internal_edges(Lattice::rect2d, 4).unique);  // the square tetromino

  IsoResult r9 = max_internal_edges(Lattice::rect2d, 9);
  CHECK(r9.max_edges == 12);
  CHECK(r9.shape_count == 9910);
  CHECK(r9.unique);
  REQUIRE(r9.witnesses.size() == 1);
  CHECK(r9.witnesses[0] == square_sites(3));
}

TEST_CASE("maximum internal edges on the triangular lattice") {
  // Shape counts are the fixed-polyhex numbers 1, 3, 11, 44, 186, 814, 3652.
  const long long counts[] = {1, 3, 11, 44, 186, 814, 3652};
  const int maxes[] = {0, 1, 3, 5, 7, 9, 12};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    IsoResult r = max_internal_edges(Lattice::tri, n);
    CHECK(r.shape_count == counts[n - 1]);
    CHECK(r.max_edges == maxes[n - 1]);
  }
  IsoResult r7 = max_internal_edges(Lattice::tri, 7);
  CHECK(r7.unique);
  REQUIRE(r7.witnesses.size() == 1);
  // The unique maximiser is the radius-1 ball (translated to the witness frame).
  CHECK(r7.witnesses[0] == translated(tri_ball(1), {1, 1, 0}));
  CHECK_FALSE(max_internal_edges(Lattice::tri, 6).unique);
}

TEST_CASE("maximum internal edges on the cubic lattice") {
  // Shape counts are the fixed-polycube numbers 1, 3, 15, 86, 534, 3481, 23502, 162913.
  const long long counts[] = {1, 3, 15, 86, 534, 3481, 23502, 162913};
  const int maxes[] = {0, 1, 2, 4, 5, 7, 9, 12};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    IsoResult r = max_internal_edges(Lattice::rect3d, n);
    CHECK(r.shape_count == counts[n - 1]);
    CHECK(r.max_edges == maxes[n - 1]);
  }
  IsoResult r8 = max_internal_edges(Lattice::rect3d, 8);
  CHECK(r8.unique);
  REQUIRE(r8.witnesses.size() == 1);
  CHECK(r8.witnesses[0] == cube_sites(2));
  CHECK_FALSE(max_internal_edges(Lattice::rect3d, 6).unique);
}

TEST_CASE("enumeration limits are enforced") {
  CHECK_THROWS_AS(max_internal_edges(Lattice::hex, 3), std::invalid_argument);
  CHECK_THROWS_AS(max_internal_edges(Lattice::rect2d, 13), std::invalid_argument);
  CHECK_THROWS_AS(max_internal_edges(Lattice::tri, 11), std::invalid_argument);
  CHECK_THROWS_AS(max_internal_edges(Lattice::rect3d, 10), std::invalid_argument);
  CHECK_THROWS_AS(max_internal_edges(Lattice::rect2d, 0), std::invalid_argument);
}

TEST_CASE("ball versus square comparison") {
  BallSquareReport r = ball_vs_square_report();
  CHECK(r.ball_sites == 25);
  CHECK(r.ball_edges == 36);
  CHECK(r.square_sites == 25);
  CHECK(r.square_edges == 40);
}
