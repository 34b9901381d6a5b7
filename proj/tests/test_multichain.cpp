#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hpfold/multichain.hpp"

using namespace hpfold;
using namespace hpfold::test;

TEST_CASE("hydrophobicity levels") {
  HydroLevels h = levels_for_c(10);
  CHECK(letter_level(h, '0') == 1);
  CHECK(letter_level(h, '1') == 0);
  CHECK(letter_level(h, '2') == 10);
  CHECK_THROWS_AS(letter_level(h, '3'), std::invalid_argument);
  CHECK(pair_value(h, '0', '0') == 2);
  CHECK(pair_value(h, '0', '2') == 11);
  CHECK(pair_value(h, '2', '2') == 20);
  CHECK(pair_value(h, '0', '1') == 0);  // a zero-weight endpoint kills the contact
  CHECK(pair_value(h, '1', '2') == 0);
  CHECK(pair_value(h, '1', '1') == 0);
}

TEST_CASE("the reference embedding scores 148 under h_10, independent of m") {
  for (int m = 0; m <= 3; ++m) {
    CAPTURE(m);
    Embedding e = intended_embedding(m);
    CHECK_FALSE(validate_embedding(e));
    REQUIRE(e.chains.size() == 4);
    CHECK(embedding_score(e, levels_for_c(10)) == 148);
  }
  Embedding e = intended_embedding(0);
  CHECK(embedding_score(e, levels_for_c(4)) == 76);     // 12(c+1) + 16 at c = 4
  CHECK(embedding_score(e, levels_for_c(100)) == 1228);  // and at c = 100
}

TEST_CASE("the reference embedding places the declared chain multiset") {
  for (int m : {0, 2}) {
    CAPTURE(m);
    Embedding e = intended_embedding(m);
    std::multiset<std::string> got, expect;
    for (const Chain& c : e.chains) {
      CHECK(c.word.cyclic);
      CHECK(c.sites.size() == c.word.letters.size());
      got.insert(c.word.letters);
    }
    for (const Word& w : multiset_M(m)) expect.insert(w.letters);
    CHECK(got == expect);
  }
}

TEST_CASE("potential contacts are adjacent non-chain pairs") {
  Embedding e = intended_embedding(0);
  auto pc = potential_contacts(e);
  CHECK(pc.size() == 33);
  long long total = 0;
  HydroLevels h = levels_for_c(10);
  for (const ContactRef& c : pc) {
    const Site a = e.chains[c.chain_a].sites[c.index_a];
    const Site b = e.chains[c.chain_b].sites[c.index_b];
    int d = std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
    CHECK(d == 1);
    total += pair_value(h, e.chains[c.chain_a].word.letters[c.index_a],
                        e.chains[c.chain_b].word.letters[c.index_b]);
  }
  CHECK(total == embedding_score(e, h));  // the score is exactly the contact sum
}

TEST_CASE("validate_embedding flags broken chains") {
  Embedding e = intended_embedding(0);
  SUBCASE("site collision between chains") {
    e.chains[0].sites[0] = e.chains[1].sites[0];
    auto v = validate_embedding(e);
    REQUIRE(v.has_value());
    CHECK_FALSE(v->detail.empty());
  }
  SUBCASE("non-unit step inside a chain") {
    e.chains[0].sites[0] = e.chains[0].sites[0] + Site{10, 0, 0};
    CHECK(validate_embedding(e).has_value());
  }
  SUBCASE("length mismatch") {
    e.chains[0].sites.pop_back();
    CHECK(validate_embedding(e).has_value());
  }
}

TEST_CASE("vertex boundary cardinalities") {
  std::vector<Site> straight{{-1, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  std::vector<Site> bent{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  CHECK(vertex_boundary(straight).size() == 14);
  CHECK(vertex_boundary(bent).size() == 13);
  CHECK(vertex_boundary({{0, 0, 0}}).size() == 6);
  CHECK(classify_triple(straight[0], straight[1], straight[2]) == TripleShape::straight);
  CHECK(classify_triple(bent[0], bent[1], bent[2]) == TripleShape::bent);
  CHECK(classify_triple({0, 0, 0}, {0, 0, 1}, {0, 0, 2}) == TripleShape::straight);
  CHECK(classify_triple({0, 0, 0}, {0, 1, 0}, {1, 1, 0}) == TripleShape::bent);
}

TEST_CASE("boundary cardinalities are isometry invariants") {
  const auto& g = point_group(Lattice::rect3d);
  REQUIRE(g.size() == 48);
  std::vector<Site> straight{{-1, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  std::vector<Site> bent{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  for (const auto& map : g) {
    std::vector<Site> s, b;
    for (Site p : straight) s.push_back(map(p));
    for (Site p : bent) b.push_back(map(p));
    CHECK(vertex_boundary(s).size() == 14);
    CHECK(vertex_boundary(b).size() == 13);
  }
}

TEST_CASE("ring placements around the straight triple") {
  RingEnumeration even = enumerate_ring_placements(RingAnchor::even);
  CHECK(even.placements.size() == 8);
  REQUIRE(even.images.size() == 1);
  CHECK(even.images[0] == target_ring_sites());

  RingEnumeration any = enumerate_ring_placements(RingAnchor::any);
  CHECK(any.placements.size() == 40);
  CHECK(any.images.size() == 5);

  RingEnumeration none = enumerate_ring_placements(RingAnchor::none);
  CHECK(none.placements.size() == 120);
  CHECK(none.images.size() == 15);

  // Re-verify the placement constraints independently.
  const std::vector<Site> a{{-1, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  auto in_a = [&](Site s) { return std::find(a.begin(), a.end(), s) != a.end(); };
  auto l1 = [](Site p, Site q) {
    return std::abs(p.x - q.x) + std::abs(p.y - q.y) + std::abs(p.z - q.z);
  };
  for (const auto& pl : even.placements) {
    REQUIRE(pl.size() == 8);
    std::set<std::vector<int>> uniq;
    for (Site s : pl) CHECK(uniq.insert({s.x, s.y, s.z}).second);
    for (size_t i = 0; i < 8; ++i) {
      CHECK(l1(pl[i], pl[(i + 1) % 8]) == 1);
      CHECK_FALSE(in_a(pl[i]));
      if (i % 2 == 0) {
        bool near = false;
        for (Site q : a) near = near || l1(pl[i], q) == 1;
        CHECK(near);
      }
    }
    bool anchor = false;
    for (size_t i = 0; i < 8; i += 2) anchor = anchor || l1(pl[i], Site{0, 0, 0}) == 1;
    CHECK(anchor);
  }
}

TEST_CASE("target ring sites") {
  std::vector<Site> expect;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      if (a != 0 || b != 0) expect.push_back({0, a, b});
  std::sort(expect.begin(), expect.end());
  CHECK(target_ring_sites() == expect);
}

TEST_CASE("counting-bound audit") {
  for (int x = 1; x <= 4; ++x) {
    CAPTURE(x);
    LevelsAudit a = levels_bound_audit(x, 10);
    CHECK(a.intended_value == 148);
    CHECK(a.main_bound == (12 - x) * 11 + (4 - x) * 6 + 8 * x);
    CHECK(a.bent_bound == (11 - x) * 11 + 4 + (3 - x) * 6 + 8 * x);
    CHECK(a.main_strict);
    CHECK(a.bent_strict);
  }
  CHECK(levels_bound_audit(1, 10).main_bound == 147);
  CHECK(levels_bound_audit(4, 10).bent_bound == 107);

  // At c = 9 the argument for x = 1 is no longer strict: 136 = 136.
  LevelsAudit a9 = levels_bound_audit(1, 9);
  CHECK(a9.main_bound == 136);
  CHECK(a9.intended_value == 136);
  CHECK_FALSE(a9.main_strict);
  CHECK(a9.bent_strict);

  LevelsAudit a44 = levels_bound_audit(4, 4);
  CHECK(a44.main_bound == 72);
  CHECK(a44.intended_value == 76);
  CHECK(a44.main_strict);
}

TEST_CASE("chains text round-trips") {
  Embedding e = intended_embedding(1);
  std::string txt = serialize_chains(e);
  CHECK(txt.rfind("chain ", 0) == 0);
  Embedding e2 = parse_chains_text(txt);
  REQUIRE(e2.chains.size() == e.chains.size());
  for (size_t i = 0; i < e.chains.size(); ++i) {
    CHECK(e2.chains[i].word == e.chains[i].word);
    CHECK(e2.chains[i].sites == e.chains[i].sites);
  }
  // Comments and blank lines are skipped.
  Embedding e3 = parse_chains_text("# comment\n\n" + txt);
  CHECK(e3.chains.size() == e.chains.size());
}

TEST_CASE("chains parsing rejects malformed syntax") {
  CHECK_THROWS_AS(parse_chains_text("nonsense\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chains_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_chains_text("chain 01 (0,0,0);(0,1,0)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chains_text("chain 03: (0,0,0);(0,1,0)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chains_text("chain 01: (0,0);(0,1)\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_chains_file("/nonexistent_zzz.chains"), std::invalid_argument);
  // Semantic problems parse but fail validation.
  Embedding bad = parse_chains_text("chain 01: (0,0,0)\n");
  auto v = validate_embedding(bad);
  REQUIRE(v.has_value());
  CHECK(v->detail == "word length differs from site count");
  Embedding gap = parse_chains_text("chain 01: (0,0,0);(2,0,0)\n");
  CHECK(validate_embedding(gap).has_value());
}

TEST_CASE("corpus embedding matches the construction") {
  Embedding e = load_chains_file(corpus_path("rings_embedding_m0.chains"));
  CHECK(e.chains.size() == 4);
  CHECK(embedding_score(e, levels_for_c(10)) == 148);
}
