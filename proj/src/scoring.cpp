#include "hpfold/scoring.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hpfold {

static void require_valid(const Fold& f, const Word& w) {
  if (auto v = validate(f, w))
    throw std::invalid_argument("invalid fold: " + v->detail);
}

static ContactList contacts_of(Lattice k, const std::vector<Site>& pts, const Word& w) {
  int n = (int)pts.size();
  std::unordered_map<std::int64_t, int> at;
  at.reserve(n * 2);
  for (int i = 0; i < n; ++i) at[site_key(pts[i])] = i;
  ContactList out;
  for (int i = 0; i < n; ++i) {
    if (w.letters[i] != '0') continue;
    for (const Site& nb : neighbors(k, pts[i])) {
      auto it = at.find(site_key(nb));
      if (it == at.end()) continue;
      int j = it->second;
      if (j <= i || w.letters[j] != '0') continue;
      if (j == i + 1) continue;
      if (w.cyclic && i == 0 && j == n - 1) continue;
      out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContactList contacts(const Fold& f, const Word& w) {
  require_valid(f, w);
  return contacts_of(f.kind, fold_sites(f), w);
}

int score(const Fold& f, const Word& w) { return (int)contacts(f, w).size(); }

int score_of_sites(Lattice k, const std::vector<Site>& pts, const Word& w) {
  if (pts.size() != w.letters.size()) throw std::invalid_argument("length mismatch");
  return (int)contacts_of(k, pts, w).size();
}

int induced_edge_sum(const Fold& f, const Word& w) {
  return occurrences("00", w) + score(f, w);
}

int zero_set_internal_edges(const Fold& f, const Word& w) {
  require_valid(f, w);
  auto pts = fold_sites(f);
  std::unordered_map<std::int64_t, char> zs;
  for (size_t i = 0; i < pts.size(); ++i)
    if (w.letters[i] == '0') zs[site_key(pts[i])] = 1;
  int twice = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (w.letters[i] != '0') continue;
    for (const Site& nb : neighbors(f.kind, pts[i]))
      if (zs.count(site_key(nb))) ++twice;
  }
  return twice / 2;
}

}  // namespace hpfold
