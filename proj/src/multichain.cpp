#include "hpfold/multichain.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hpfold {

HydroLevels levels_for_c(long long c) {
  if (c < 0) throw std::invalid_argument("levels_for_c: c must be nonnegative");
  HydroLevels h;
  h.h['0'] = 1;
  h.h['1'] = 0;
  h.h['2'] = c;
  return h;
}

long long letter_level(const HydroLevels& h, char letter) {
  auto it = h.h.find(letter);
  if (it == h.h.end())
    throw std::invalid_argument(std::string("letter_level: unknown symbol '") + letter + "'");
  return it->second;
}

std::optional<EmbeddingViolation> validate_embedding(const Embedding& e) {
  std::unordered_map<long long, int> owner;
  for (int ci = 0; ci < (int)e.chains.size(); ++ci) {
    const Chain& ch = e.chains[ci];
    const int n = (int)ch.sites.size();
    if ((int)ch.word.letters.size() != n)
      return EmbeddingViolation{ci, "word length differs from site count"};
    if (n == 0) return EmbeddingViolation{ci, "empty chain"};
    for (int i = 0; i < n; ++i) {
      const Site &a = ch.sites[i], &b = ch.sites[(i + 1) % n];
      int d = std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
      if (d != 1)
        return EmbeddingViolation{ci, "step " + std::to_string(i) + " is not a unit step"};
    }
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = owner.emplace(site_key(ch.sites[i]), ci);
      if (!fresh) {
        const bool same = it->second == ci;
        return EmbeddingViolation{ci, same ? "chain revisits a site (index " + std::to_string(i) + ")"
                                           : "site shared with chain " + std::to_string(it->second)};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Slot {
  int chain, index;
};

std::unordered_map<long long, Slot> occupancy(const Embedding& e) {
  std::unordered_map<long long, Slot> occ;
  for (int ci = 0; ci < (int)e.chains.size(); ++ci)
    for (int i = 0; i < (int)e.chains[ci].sites.size(); ++i)
      occ[site_key(e.chains[ci].sites[i])] = {ci, i};
  return occ;
}

}  // namespace

std::vector<ContactRef> potential_contacts(const Embedding& e) {
  if (auto v = validate_embedding(e))
    throw std::invalid_argument("potential_contacts: invalid embedding: " + v->detail);
  auto occ = occupancy(e);
  std::vector<ContactRef> out;
  for (int ci = 0; ci < (int)e.chains.size(); ++ci) {
    const Chain& ch = e.chains[ci];
    const int n = (int)ch.sites.size();
    for (int i = 0; i < n; ++i) {
      const Site& p = ch.sites[i];
      for (const Site& q : neighbors(Lattice::rect3d, p)) {
        auto it = occ.find(site_key(q));
        if (it == occ.end()) continue;
        const Slot& s = it->second;
        if (s.chain < ci || (s.chain == ci && s.index <= i)) continue;  // count once
        if (s.chain == ci) {
          const int d = std::abs(s.index - i);
          if (d == 1 || d == n - 1) continue;  // cyclic chain edge
        }
        out.push_back({ci, i, s.chain, s.index});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ContactRef& a, const ContactRef& b) {
    return std::tie(a.chain_a, a.index_a, a.chain_b, a.index_b) <
           std::tie(b.chain_a, b.index_a, b.chain_b, b.index_b);
  });
  return out;
}

long long pair_value(const HydroLevels& h, char a, char b) {
  const long long la = letter_level(h, a), lb = letter_level(h, b);
  return (la != 0 && lb != 0) ? la + lb : 0;
}

long long embedding_score(const Embedding& e, const HydroLevels& h) {
  long long total = 0;
  for (const ContactRef& c : potential_contacts(e))
    total += pair_value(h, e.chains[c.chain_a].word.letters[c.index_a],
                        e.chains[c.chain_b].word.letters[c.index_b]);
  return total;
}

Embedding intended_embedding(int m) {
  if (m < 0) throw std::invalid_argument("intended_embedding: m must be >= 0");
  Embedding e;
  for (int k = -1; k <= 1; ++k) {
    Chain ring;
    ring.word = Word{"01010101", true};
    ring.sites = {Site{k, 0, 1},  Site{k, 1, 1},  Site{k, 1, 0},  Site{k, 1, -1},
                  Site{k, 0, -1}, Site{k, -1, -1}, Site{k, -1, 0}, Site{k, -1, 1}};
    e.chains.push_back(std::move(ring));
  }
  Chain f2;
  f2.word = Word{std::string(3, '2') + std::string(9 + 2 * m, '1'), true};
  const int zlo = -2 - m;
  f2.sites = {Site{-1, 0, 0}, Site{0, 0, 0}, Site{1, 0, 0}, Site{2, 0, 0}};
  for (int z = -1; z >= zlo; --z) f2.sites.push_back(Site{2, 0, z});
  for (int x = 1; x >= -2; --x) f2.sites.push_back(Site{x, 0, zlo});
  for (int z = zlo + 1; z <= 0; ++z) f2.sites.push_back(Site{-2, 0, z});
  e.chains.push_back(std::move(f2));
  return e;
}

std::vector<Site> vertex_boundary(const std::vector<Site>& a) {
  if (a.empty()) throw std::invalid_argument("vertex_boundary: empty set");
  std::set<Site> in(a.begin(), a.end()), out;
  for (const Site& p : in)
    for (const Site& q : neighbors(Lattice::rect3d, p))
      if (!in.count(q)) out.insert(q);
  return {out.begin(), out.end()};
}

TripleShape classify_triple(const Site& x, const Site& y, const Site& z) {
  auto d1 = [](const Site& a, const Site& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
  };
  if (d1(x, y) != 1 || d1(y, z) != 1 || x == z)
    throw std::invalid_argument("classify_triple: need a path x-y-z of two unit steps, x != z");
  const bool mid = (x.x + z.x == 2 * y.x) && (x.y + z.y == 2 * y.y) && (x.z + z.z == 2 * y.z);
  return mid ? TripleShape::straight : TripleShape::bent;
}

std::vector<Site> target_ring_sites() {
  std::vector<Site> r;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      if (a != 0 || b != 0) r.push_back(Site{0, a, b});
  std::sort(r.begin(), r.end());
  return r;
}

RingEnumeration enumerate_ring_placements(RingAnchor anchor) {
  const std::vector<Site> a_sites{Site{-1, 0, 0}, Site{0, 0, 0}, Site{1, 0, 0}};
  auto in_a = [&](const Site& p) {
    return p.y == 0 && p.z == 0 && p.x >= -1 && p.x <= 1;
  };
  auto d1 = [](const Site& p, const Site& q) {
    return std::abs(p.x - q.x) + std::abs(p.y - q.y) + std::abs(p.z - q.z);
  };
  auto adj_a = [&](const Site& p) {
    for (const Site& q : a_sites)
      if (d1(p, q) == 1) return true;
    return false;
  };
  const Site origin{0, 0, 0};

  RingEnumeration out;
  std::vector<Site> path;
  auto rec = [&](auto&& self) -> void {
    if (path.size() == 8) {
      if (d1(path.back(), path.front()) != 1) return;
      if (anchor != RingAnchor::none) {
        bool hit = false;
        for (size_t i = 0; i < 8; ++i) {
          if (anchor == RingAnchor::even && (i % 2)) continue;
          if (d1(path[i], origin) == 1) {
            hit = true;
            break;
          }
        }
        if (!hit) return;
      }
      out.placements.push_back(path);
      return;
    }
    for (const Site& q : neighbors(Lattice::rect3d, path.back())) {
      if (in_a(q)) continue;
      if (std::find(path.begin(), path.end(), q) != path.end()) continue;
      if (path.size() % 2 == 0 && !adj_a(q)) continue;  // zeros sit at even positions
      path.push_back(q);
      self(self);
      path.pop_back();
    }
  };
  for (const Site& s0 : vertex_boundary(a_sites)) {
    path = {s0};
    rec(rec);
  }
  std::sort(out.placements.begin(), out.placements.end());

  std::set<std::vector<Site>> imgs;
  for (const auto& p : out.placements) {
    std::vector<Site> img = p;
    std::sort(img.begin(), img.end());
    imgs.insert(std::move(img));
  }
  out.images.assign(imgs.begin(), imgs.end());
  return out;
}

LevelsAudit levels_bound_audit(int x, long long c) {
  if (x < 1 || x > 4) throw std::invalid_argument("levels_bound_audit: x must be in 1..4");
  if (c < 0) throw std::invalid_argument("levels_bound_audit: c must be >= 0");
  LevelsAudit a;
  a.x = x;
  a.c = c;
  a.main_bound = (12 - x) * (c + 1) + (4 - x) * 6 + 8 * x;
  a.bent_bound = (11 - x) * (c + 1) + 4 + (3 - x) * 6 + 8 * x;
  a.intended_value = 12 * (c + 1) + 16;
  a.main_strict = a.main_bound < a.intended_value;
  a.bent_strict = a.bent_bound < a.intended_value;
  return a;
}

std::string serialize_chains(const Embedding& e) {
  std::ostringstream os;
  for (const Chain& ch : e.chains) {
    os << "chain " << ch.word.letters << ":";
    for (size_t i = 0; i < ch.sites.size(); ++i) {
      os << (i ? ";" : " ") << "(" << ch.sites[i].x << "," << ch.sites[i].y << ","
         << ch.sites[i].z << ")";
    }
    os << "\n";
  }
  return os.str();
}

Embedding parse_chains_text(const std::string& text) {
  Embedding e;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(b, end - b + 1);
    const std::string at = "line " + std::to_string(lineno);
    if (line.rfind("chain ", 0) != 0)
      throw std::invalid_argument("chains file: expected 'chain' at " + at);
    const size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("chains file: missing ':' at " + at);
    Chain ch;
    ch.word.cyclic = true;
    for (size_t i = 6; i < colon; ++i) {
      const char c = line[i];
      if (c == ' ' || c == '\t') continue;
      if (c != '0' && c != '1' && c != '2')
        throw std::invalid_argument("chains file: bad word letter at " + at);
      ch.word.letters.push_back(c);
    }
    std::string rest = line.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == ';' || rest[pos] == '\t')) ++pos;
      if (pos >= rest.size()) break;
      int x, y, z, used = 0;
      if (std::sscanf(rest.c_str() + pos, " ( %d , %d , %d ) %n", &x, &y, &z, &used) != 3)
        throw std::invalid_argument("chains file: bad site tuple at " + at);
      ch.sites.push_back(Site{x, y, z});
      pos += used;
    }
    if (ch.word.letters.empty() || ch.sites.empty())
      throw std::invalid_argument("chains file: empty chain at " + at);
    e.chains.push_back(std::move(ch));
  }
  if (e.chains.empty()) throw std::invalid_argument("chains file: no chains");
  return e;
}

Embedding load_chains_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open chains file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_chains_text(ss.str());
}

}  // namespace hpfold
