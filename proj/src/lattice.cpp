#include "hpfold/lattice.hpp"

#include <stdexcept>

namespace hpfold {

Lattice lattice_from_name(std::string_view name) {
  if (name == "rect2d") return Lattice::rect2d;
  if (name == "rect3d") return Lattice::rect3d;
  if (name == "tri") return Lattice::tri;
  if (name == "hex") return Lattice::hex;
  throw std::invalid_argument("unknown lattice: " + std::string(name));
}

std::string_view lattice_name(Lattice k) {
  switch (k) {
    case Lattice::rect2d: return "rect2d";
    case Lattice::rect3d: return "rect3d";
    case Lattice::tri: return "tri";
    case Lattice::hex: return "hex";
  }
  return "";
}

int coordination(Lattice k) {
  switch (k) {
    case Lattice::rect2d: return 4;
    case Lattice::rect3d: return 6;
    case Lattice::tri: return 6;
    case Lattice::hex: return 3;
  }
  return 0;
}

bool is_bipartite(Lattice k) { return k != Lattice::tri; }

std::string_view alphabet(Lattice k) {
  switch (k) {
    case Lattice::rect2d: return "uldr";
    case Lattice::rect3d: return "uldrfb";
    case Lattice::tri: return "ewpqmn";
    case Lattice::hex: return "lrv";
  }
  return "";
}

int alphabet_rank(Lattice k, char m) {
  auto a = alphabet(k);
  auto pos = a.find(m);
  return pos == std::string_view::npos ? -1 : (int)pos;
}

static void check_planar(Lattice k, Site s) {
  if (k != Lattice::rect3d && s.z != 0)
    throw std::invalid_argument("planar lattice site must have z = 0");
}

std::vector<Site> neighbors(Lattice k, Site s) {
  check_planar(k, s);
  switch (k) {
    case Lattice::rect2d:
      return {{s.x + 1, s.y, 0}, {s.x - 1, s.y, 0}, {s.x, s.y + 1, 0}, {s.x, s.y - 1, 0}};
    case Lattice::rect3d:
      return {{s.x + 1, s.y, s.z}, {s.x - 1, s.y, s.z}, {s.x, s.y + 1, s.z},
              {s.x, s.y - 1, s.z}, {s.x, s.y, s.z + 1}, {s.x, s.y, s.z - 1}};
    case Lattice::tri:
      return {{s.x + 1, s.y, 0}, {s.x - 1, s.y, 0}, {s.x, s.y + 1, 0},
              {s.x, s.y - 1, 0}, {s.x - 1, s.y + 1, 0}, {s.x + 1, s.y - 1, 0}};
    case Lattice::hex: {
      int vy = ((s.x + s.y) % 2 == 0) ? 1 : -1;
      return {{s.x + 1, s.y, 0}, {s.x - 1, s.y, 0}, {s.x, s.y + vy, 0}};
    }
  }
  return {};
}

bool adjacent(Lattice k, Site a, Site b) {
  Site d = b - a;
  switch (k) {
    case Lattice::rect2d:
      return d.z == 0 && std::abs(d.x) + std::abs(d.y) == 1;
    case Lattice::rect3d:
      return std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1;
    case Lattice::tri:
      return d.z == 0 && ((std::abs(d.x) + std::abs(d.y) == 1) ||
                          (d.x == -1 && d.y == 1) || (d.x == 1 && d.y == -1));
    case Lattice::hex: {
      if (d.z != 0) return false;
      if (std::abs(d.x) == 1 && d.y == 0) return true;
      if (d.x != 0 || std::abs(d.y) != 1) return false;
      int vy = ((a.x + a.y) % 2 == 0) ? 1 : -1;
      return d.y == vy;
    }
  }
  return false;
}

Site apply_move(Lattice k, Site s, char m) {
  check_planar(k, s);
  switch (k) {
    case Lattice::rect2d:
    case Lattice::rect3d:
      switch (m) {
        case 'u': return {s.x, s.y + 1, s.z};
        case 'd': return {s.x, s.y - 1, s.z};
        case 'l': return {s.x - 1, s.y, s.z};
        case 'r': return {s.x + 1, s.y, s.z};
        case 'f':
          if (k == Lattice::rect3d) return {s.x, s.y, s.z + 1};
          break;
        case 'b':
          if (k == Lattice::rect3d) return {s.x, s.y, s.z - 1};
          break;
      }
      break;
    case Lattice::tri:
      switch (m) {
        case 'e': return {s.x + 1, s.y, 0};
        case 'w': return {s.x - 1, s.y, 0};
        case 'p': return {s.x, s.y + 1, 0};
        case 'q': return {s.x, s.y - 1, 0};
        case 'm': return {s.x - 1, s.y + 1, 0};
        case 'n': return {s.x + 1, s.y - 1, 0};
      }
      break;
    case Lattice::hex:
      switch (m) {
        case 'l': return {s.x - 1, s.y, 0};
        case 'r': return {s.x + 1, s.y, 0};
        case 'v': return {s.x, s.y + (((s.x + s.y) % 2 == 0) ? 1 : -1), 0};
      }
      break;
  }
  throw std::invalid_argument(std::string("move '") + m + "' not in alphabet of " +
                              std::string(lattice_name(k)));
}

char inverse_move(Lattice k, Site s, char m) {
  Site t = apply_move(k, s, m);
  return move_between(k, t, s);
}

char move_between(Lattice k, Site a, Site b) {
  for (char m : alphabet(k))
    if (apply_move(k, a, m) == b) return m;
  throw std::invalid_argument("sites are not adjacent");
}

std::vector<char> parse_moves(Lattice k, std::string_view text) {
  std::vector<char> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (alphabet_rank(k, c) < 0)
      throw std::invalid_argument(std::string("unknown move symbol '") + c + "'");
    ++i;
    long long rep = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !isdigit((unsigned char)text[i]))
        throw std::invalid_argument("malformed exponent after '^'");
      rep = 0;
      while (i < text.size() && isdigit((unsigned char)text[i])) {
        rep = rep * 10 + (text[i] - '0');
        if (rep > 1000000) throw std::invalid_argument("exponent too large");
        ++i;
      }
      if (rep == 0) throw std::invalid_argument("exponent must be positive");
    }
    out.insert(out.end(), (size_t)rep, c);
  }
  return out;
}

std::string format_moves(const std::vector<char>& moves) {
  std::string out;
  size_t i = 0;
  while (i < moves.size()) {
    size_t j = i;
    while (j < moves.size() && moves[j] == moves[i]) ++j;
    size_t n = j - i;
    if (n >= 4) {
      out += moves[i];
      out += '^';
      out += std::to_string(n);
    } else {
      out.append(n, moves[i]);
    }
    i = j;
  }
  return out;
}

static std::vector<SiteMap> build_point_group(Lattice k) {
  std::vector<SiteMap> g;
  switch (k) {
    case Lattice::rect2d: {
      // Dihedral group of the square: rotations by 90 degrees and reflections.
      std::array<std::array<int, 2>, 2> rot{{{0, -1}, {1, 0}}};
      std::array<std::array<int, 2>, 2> cur{{{1, 0}, {0, 1}}};
      for (int r = 0; r < 4; ++r) {
        for (int refl = 0; refl < 2; ++refl) {
          SiteMap sm;
          int sx = refl ? -1 : 1;
          sm.m = {{{sx * cur[0][0], sx * cur[0][1], 0},
                   {cur[1][0], cur[1][1], 0},
                   {0, 0, 1}}};
          g.push_back(sm);
        }
        auto nxt = cur;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            nxt[i][j] = rot[i][0] * cur[0][j] + rot[i][1] * cur[1][j];
        cur = nxt;
      }
      break;
    }
    case Lattice::rect3d: {
      // All signed coordinate permutations (the octahedral group).
      int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (auto& p : perm)
        for (int s = 0; s < 8; ++s) {
          SiteMap sm;
          sm.m = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
          for (int i = 0; i < 3; ++i)
            sm.m[i][p[i]] = ((s >> i) & 1) ? -1 : 1;
          g.push_back(sm);
        }
      break;
    }
    case Lattice::tri: {
      // Rotation by 60 degrees: (q, r) -> (-r, q+r); reflection: (q, r) -> (q+r, -r).
      SiteMap rot, refl;
      rot.m = {{{0, -1, 0}, {1, 1, 0}, {0, 0, 1}}};
      refl.m = {{{1, 1, 0}, {0, -1, 0}, {0, 0, 1}}};
      SiteMap cur;
      for (int r = 0; r < 6; ++r) {
        g.push_back(cur);
        SiteMap refd;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            refd.m[i][j] = 0;
            for (int t = 0; t < 3; ++t) refd.m[i][j] += refl.m[i][t] * cur.m[t][j];
          }
        g.push_back(refd);
        SiteMap nxt;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            nxt.m[i][j] = 0;
            for (int t = 0; t < 3; ++t) nxt.m[i][j] += rot.m[i][t] * cur.m[t][j];
          }
        cur = nxt;
      }
      break;
    }
    case Lattice::hex: {
      SiteMap id;
      SiteMap rx;  // (x, y) -> (-x, y)
      rx.m = {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
      SiteMap rot;  // 180-degree rotation about an edge midpoint: (x, y) -> (1-x, -y)
      rot.m = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
      rot.t = {1, 0, 0};
      SiteMap both;  // (x, y) -> (x+1, -y)
      both.m = {{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
      both.t = {1, 0, 0};
      g = {id, rx, rot, both};
      break;
    }
  }
  return g;
}

const std::vector<SiteMap>& point_group(Lattice k) {
  static const std::vector<SiteMap> g2 = build_point_group(Lattice::rect2d);
  static const std::vector<SiteMap> g3 = build_point_group(Lattice::rect3d);
  static const std::vector<SiteMap> gt = build_point_group(Lattice::tri);
  static const std::vector<SiteMap> gh = build_point_group(Lattice::hex);
  switch (k) {
    case Lattice::rect2d: return g2;
    case Lattice::rect3d: return g3;
    case Lattice::tri: return gt;
    case Lattice::hex: return gh;
  }
  return g2;
}

}  // namespace hpfold
