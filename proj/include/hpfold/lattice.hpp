#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hpfold {

enum class Lattice { rect2d, rect3d, tri, hex };

// Integer lattice site. Planar lattices keep z = 0. For tri the pair (x, y)
// holds axial coordinates; for hex it holds brick-wall coordinates where the
// vertical neighbor of (x, y) is (x, y+1) when x+y is even and (x, y-1)
// otherwise.
struct Site {
  int x = 0, y = 0, z = 0;
  friend auto operator<=>(const Site&, const Site&) = default;
};

inline Site operator+(Site a, Site b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Site operator-(Site a, Site b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// Packs coordinates into one integer for hashing; valid for |coord| < 2^20.
inline std::int64_t site_key(Site s) {
  return ((std::int64_t)(s.x + (1 << 20)) << 42) |
         ((std::int64_t)(s.y + (1 << 20)) << 21) |
         (std::int64_t)(s.z + (1 << 20));
}

Lattice lattice_from_name(std::string_view name);
std::string_view lattice_name(Lattice k);

int coordination(Lattice k);
bool is_bipartite(Lattice k);

// Move alphabet in its canonical order; lexicographic comparisons of move
// strings use this order, not ASCII.
std::string_view alphabet(Lattice k);
int alphabet_rank(Lattice k, char m);  // -1 if not in alphabet

std::vector<Site> neighbors(Lattice k, Site s);
bool adjacent(Lattice k, Site a, Site b);
Site apply_move(Lattice k, Site s, char m);  // throws std::invalid_argument
// Move that undoes m when applied at apply_move(k, s, m).
char inverse_move(Lattice k, Site s, char m);
// Move char for a unit step from a to adjacent b.
char move_between(Lattice k, Site a, Site b);

// Parses "u^4l^4dd"-style text: alphabet symbols with optional ^<count>
// repetition, whitespace ignored. Throws std::invalid_argument on unknown
// symbols or malformed exponents.
std::vector<char> parse_moves(Lattice k, std::string_view text);
// Run-length formatter (runs of 4+ become "m^n"); parse_moves round-trips it.
std::string format_moves(const std::vector<char>& moves);

// Affine lattice isometry: s -> M*s + t with an integer matrix M.
struct SiteMap {
  std::array<std::array<int, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Site t{};
  Site operator()(Site s) const {
    return {m[0][0] * s.x + m[0][1] * s.y + m[0][2] * s.z + t.x,
            m[1][0] * s.x + m[1][1] * s.y + m[1][2] * s.z + t.y,
            m[2][0] * s.x + m[2][1] * s.y + m[2][2] * s.z + t.z};
  }
};

// Coordinate-realizable point symmetries fixing the adjacency relation:
// rect2d 8 (dihedral), rect3d 48 (signed permutations), tri 12 (rotations by
// 60 degrees plus a reflection, in axial coordinates), hex 4 (horizontal
// reflection and a 180-degree rotation about an edge midpoint; the remaining
// honeycomb symmetries do not act by integer maps on brick coordinates).
const std::vector<SiteMap>& point_group(Lattice k);

}  // namespace hpfold
