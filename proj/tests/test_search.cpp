#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hpfold/scoring.hpp"
#include "hpfold/search.hpp"

using namespace hpfold;
using namespace hpfold::test;

namespace {

// Plain exhaustive reference search: every self-avoiding placement, no
// symmetry reduction, no pruning. Kept deliberately independent of the
// library's search internals; only lattice primitives are shared.
struct Brute {
  Lattice k;
  std::string letters;
  bool closed;
  int n;
  std::vector<Site> pts;
  std::set<std::int64_t> used;
  std::string moves;
  int best = -1;
  std::string best_moves;

  bool less(const std::string& a, const std::string& b) const {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
      int ra = alphabet_rank(k, a[i]), rb = alphabet_rank(k, b[i]);
      if (ra != rb) return ra < rb;
    }
    return a.size() < b.size();
  }

  int leaf_score() const {
    int sc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        if (closed && i == 0 && j == n - 1) continue;
        if (letters[i] == '0' && letters[j] == '0' && adjacent(k, pts[i], pts[j])) ++sc;
      }
    return sc;
  }

  void take(int sc, std::string mv) {
    if (sc > best || (sc == best && less(mv, best_moves))) {
      best = sc;
      best_moves = std::move(mv);
    }
  }

  void rec() {
    if ((int)pts.size() == n) {
      if (closed) {
        if (!adjacent(k, pts.back(), pts.front())) return;
        take(leaf_score(), moves + move_between(k, pts.back(), pts.front()));
      } else {
        take(leaf_score(), moves);
      }
      return;
    }
    for (char m : alphabet(k)) {
      Site t = apply_move(k, pts.back(), m);
      if (!used.insert(site_key(t)).second) continue;
      pts.push_back(t);
      moves.push_back(m);
      rec();
      moves.pop_back();
      pts.pop_back();
      used.erase(site_key(t));
    }
  }

  static Brute run(Lattice k, const std::string& letters, bool closed) {
    Brute b{k, letters, closed, (int)letters.size(), {}, {}, {}, -1, {}};
    b.pts.push_back({});
    b.used.insert(site_key({}));
    if (b.n == 1) {
      b.best = 0;
    } else {
      b.rec();
    }
    return b;
  }
};

void sweep(Lattice k, int len, bool closed) {
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::string letters(len, '1');
    for (int i = 0; i < len; ++i)
      if (mask & (1u << i)) letters[i] = '0';
    CAPTURE(lattice_name(k));
    CAPTURE(letters);
    CAPTURE(closed);
    Brute b = Brute::run(k, letters, closed);
    SearchResult r = optimal(k, Word{letters, closed}, closed);
    REQUIRE(r.exact);
    CHECK(r.j == b.best);
    CHECK(r.witness == b.best_moves);
  }
}

}  // namespace

TEST_CASE("frozen optima on all lattices") {
  auto check = [](Lattice k, const char* w, bool closed, int j, const char* witness) {
    CAPTURE(w);
    SearchResult r = optimal(k, Word{w, closed}, closed);
    CHECK(r.exact);
    CHECK(r.j == j);
    CHECK(r.witness == witness);
  };
  check(Lattice::rect2d, "0000", false, 1, "uld");
  check(Lattice::rect2d, "00000000", false, 3, "uuulddd");
  check(Lattice::rect2d, "0110110111", false, 2, "uldldrdll");
  check(Lattice::rect2d, "00000000", true, 2, "uuuldddr");
  check(Lattice::rect2d, "0000", true, 0, "uldr");
  check(Lattice::tri, "0000000", false, 6, "epwwpe");
  check(Lattice::tri, "000", true, 0, "eqm");
  check(Lattice::hex, "000000", true, 0, "llvrrv");
  check(Lattice::hex, "00100100", false, 1, "lllvrrr");
  check(Lattice::rect3d, "00000000", false, 5, "uldfurd");
}

TEST_CASE("family optima match their certificates") {
  SearchResult r = optimal(Lattice::rect2d, rect_family(0).word, false);
  CHECK(r.exact);
  CHECK(r.j == 7);
  CHECK(r.witness == "uldldrdlluuuurrrrddrdldlu");

  SearchResult h = optimal(Lattice::hex, hex_family(4), false);
  CHECK(h.exact);
  CHECK(h.j == 6);
  CHECK(h.witness == "llvrrrrvrvrvrvrvllvlvlvlv");
}

TEST_CASE("impossible closed placements report j = -1") {
  SearchResult r = optimal(Lattice::rect2d, Word{"000", true}, true);
  CHECK(r.exact);
  CHECK(r.j == -1);
  CHECK(r.witness.empty());
  SearchResult h = optimal(Lattice::hex, Word{"00000", true}, true);
  CHECK(h.exact);
  CHECK(h.j == -1);
}

TEST_CASE("single letters and trivial words") {
  SearchResult r = optimal(Lattice::rect2d, Word{"0", false}, false);
  CHECK(r.j == 0);
  CHECK(r.witness.empty());
  CHECK(r.exact);
  SearchResult ones = optimal(Lattice::rect2d, Word{"111", false}, false);
  CHECK(ones.j == 0);
  CHECK(ones.witness == "uu");
}

TEST_CASE("search agrees with plain exhaustive reference") {
  for (int len = 2; len <= 7; ++len) sweep(Lattice::rect2d, len, false);
  for (int len : {4, 6, 8}) sweep(Lattice::rect2d, len, true);
  for (int len = 2; len <= 6; ++len) sweep(Lattice::tri, len, false);
  for (int len : {3, 4, 5, 6}) sweep(Lattice::tri, len, true);
  for (int len = 2; len <= 8; ++len) sweep(Lattice::hex, len, false);
  sweep(Lattice::hex, 6, true);
  for (int len = 2; len <= 6; ++len) sweep(Lattice::rect3d, len, false);
  for (int len : {4, 6}) sweep(Lattice::rect3d, len, true);
}

TEST_CASE("value is independent of the worker count") {
  for (int workers : {1, 4}) {
    SearchLimits lim;
    lim.workers = workers;
    SearchResult r = optimal(Lattice::rect2d, rect_family(0).word, false, lim);
    CHECK(r.exact);
    CHECK(r.j == 7);
    CHECK(r.witness == "uldldrdlluuuurrrrddrdldlu");
  }
}

TEST_CASE("budget exhaustion is reported, never silently truncated") {
  SearchLimits tiny;
  tiny.max_nodes = 10;
  SearchResult r = optimal(Lattice::rect2d, rect_family(0).word, false, tiny);
  CHECK_FALSE(r.exact);
  CHECK_THROWS_AS(enumerate_optima(Lattice::rect2d, rect_family(0).word, false, tiny),
                  std::runtime_error);
}

TEST_CASE("enumerate_optima returns canonical representatives") {
  auto one = enumerate_optima(Lattice::rect2d, Word{"0000", false}, false);
  REQUIRE(one.size() == 1);
  CHECK(S(one[0].moves) == "uld");

  auto opt = enumerate_optima(Lattice::rect2d, rect_family(0).word, false);
  REQUIRE(opt.size() == 4);
  CHECK(S(opt[0].moves) == "uldldrdlluuuurrrrddrdldlu");
  CHECK(S(opt[1].moves) == "uldldrdlluuururrrddrdldlu");
  CHECK(S(opt[2].moves) == "uldldrddrrruruuulldrdldlu");
  CHECK(S(opt[3].moves) == "uldldrddrrrruuuulldrdldlu");
  for (const Fold& f : opt) {
    CHECK_FALSE(validate(f, rect_family(0).word));
    CHECK(score(f, rect_family(0).word) == 7);
    CHECK(canonical_moves(Lattice::rect2d, f) == S(f.moves));  // already canonical
  }
}

TEST_CASE("canonical_moves picks the least isometric image") {
  CHECK(canonical_moves(Lattice::rect2d, mk(Lattice::rect2d, "uld")) == "uld");
  CHECK(canonical_moves(Lattice::rect2d, mk(Lattice::rect2d, "dru")) == "uld");
  CHECK(canonical_moves(Lattice::rect2d, mk(Lattice::rect2d, "ldr")) == "uld");
  CHECK(moves_less(Lattice::rect2d, "u", "l"));
  CHECK_FALSE(moves_less(Lattice::rect2d, "l", "u"));
  CHECK(moves_less(Lattice::rect2d, "ul", "ull"));
  CHECK(moves_less(Lattice::tri, "e", "w"));
}

TEST_CASE("search validates its input") {
  CHECK_THROWS_AS(optimal(Lattice::rect2d, Word{"0210", false}, false), std::invalid_argument);
  CHECK_THROWS_AS(optimal(Lattice::rect2d, Word{"", false}, false), std::invalid_argument);
  // The word's cyclic flag must match the closed request.
  CHECK_THROWS_AS(optimal(Lattice::rect2d, Word{"0000", true}, false), std::invalid_argument);
}
