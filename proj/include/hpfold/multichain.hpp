#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpfold/lattice.hpp"
#include "hpfold/word.hpp"

namespace hpfold {

// Weighted-contact model on Z^3: several cyclic chains embedded disjointly,
// contacts scored by a per-letter hydrophobicity level.

struct Chain {
  Word word;                // cyclic
  std::vector<Site> sites;  // one per letter, consecutive (and wrap) at L1 distance 1
};

struct Embedding {
  std::vector<Chain> chains;
};

struct HydroLevels {
  std::map<char, long long> h;
};
// The one-parameter family used throughout: h(0)=1, h(1)=0, h(2)=c.
HydroLevels levels_for_c(long long c);
long long letter_level(const HydroLevels& h, char letter);  // throws on unknown symbol

struct EmbeddingViolation {
  int chain = -1;
  std::string detail;
};
std::optional<EmbeddingViolation> validate_embedding(const Embedding& e);

struct ContactRef {
  int chain_a, index_a, chain_b, index_b;  // (chain, letter index) of each endpoint
};
// Unordered adjacent occupied pairs that are not (cyclic) chain edges, sorted
// by site order for determinism.
std::vector<ContactRef> potential_contacts(const Embedding& e);

long long pair_value(const HydroLevels& h, char a, char b);  // h(a)+h(b) if both nonzero, else 0
long long embedding_score(const Embedding& e, const HydroLevels& h);

// The reference embedding: three 8-rings (01)^4 in the planes x = -1, 0, 1
// with corners at odd indices, plus the long chain 2^3 1^(9+2m) running round
// a rectangle in the y = 0 plane through the three 2-sites (-1..1, 0, 0).
// m >= 0 stretches the rectangle downward; the score is m-independent.
Embedding intended_embedding(int m);

// Sites at L1 distance exactly 1 from the set.
std::vector<Site> vertex_boundary(const std::vector<Site>& a);

enum class TripleShape { straight, bent };
// x,y,z with d(x,y)=d(y,z)=1 and x != z: straight iff y is the midpoint.
TripleShape classify_triple(const Site& x, const Site& y, const Site& z);

// Exhaustive placements of a cyclic 8-chain (01)^4 around the straight triple
// A = {(-1,0,0),(0,0,0),(1,0,0)}: injective, unit steps, avoiding A, every
// even (zero) position adjacent to A. The anchor mode adds the requirement
// that some position is adjacent to the origin itself:
//   even: some even position (this is what the uniqueness argument uses;
//         the image is then always the 8-site ring in the x = 0 plane),
//   any:  some position of either parity (more images appear),
//   none: no origin-adjacency requirement.
enum class RingAnchor { even, any, none };
struct RingEnumeration {
  std::vector<std::vector<Site>> placements;  // each of length 8, index = word position
  std::vector<std::vector<Site>> images;      // distinct site sets, sorted
};
RingEnumeration enumerate_ring_placements(RingAnchor anchor = RingAnchor::even);
// The ring {(0,a,b): |a|<=1, |b|<=1, (a,b)!=(0,0)}, sorted.
std::vector<Site> target_ring_sites();

// Arithmetic audit of the counting argument that any embedding freeing x of
// the four rings' worth of c-contacts scores below the intended embedding.
struct LevelsAudit {
  int x = 0;
  long long c = 0;
  long long main_bound = 0;      // (12-x)(c+1) + (4-x)*6 + 8x
  long long bent_bound = 0;      // (11-x)(c+1) + 4 + (3-x)*6 + 8x
  long long intended_value = 0;  // 12(c+1) + 16
  bool main_strict = false;
  bool bent_strict = false;
};
LevelsAudit levels_bound_audit(int x, long long c);

// Text format: one line per chain, `chain <word>: (x,y,z);(x,y,z);...`,
// cyclic closure implied. '#' comments and blank lines are skipped.
std::string serialize_chains(const Embedding& e);
Embedding parse_chains_text(const std::string& text);
Embedding load_chains_file(const std::string& path);

}  // namespace hpfold
