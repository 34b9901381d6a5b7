#include "hpfold/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hpfold/search.hpp"

namespace hpfold {

BoundInfo upper_bound(Lattice k, const Word& w, bool wrapped) {
  for (char c : w.letters)
    if (c != '0' && c != '1')
      throw std::invalid_argument("upper_bound: word must be over {0,1}");
  const int z = zeros(w);
  switch (k) {
    case Lattice::rect2d:
      return {wrapped ? z : z + 1, "exact"};
    case Lattice::hex:
      return {wrapped ? z / 2 : z / 2 + 1, "exact"};
    case Lattice::tri:
    case Lattice::rect3d: {
      // Each contact consumes one free slot at each endpoint. An internal
      // zero has coordination-2 slots (two neighbours are chain edges), a
      // terminal zero of an open word coordination-1. Wrapping makes every
      // zero internal.
      const int per = coordination(k) - 2;
      int slots = per * z;
      if (!wrapped && !w.cyclic) {
        const auto& s = w.letters;
        if (!s.empty() && s.front() == '0') ++slots;
        if (s.size() > 1 && s.back() == '0') ++slots;
      }
      return {slots / 2, "generic"};
    }
  }
  throw std::logic_error("upper_bound: bad lattice");
}

Certificate certify_equality(Lattice k, const Word& w, const Fold& f) {
  if (k != Lattice::rect2d && k != Lattice::hex)
    throw std::invalid_argument("certify_equality: only rect2d and hex bounds are exact");
  if (auto v = validate(f, w)) throw std::invalid_argument("certify_equality: " + v->detail);
  Certificate c;
  c.claim = Certificate::equality;
  c.word = w;
  c.fold = f;
  const BoundInfo b = upper_bound(k, w, /*wrapped=*/false);
  c.bound_used = b.label;
  c.bound_value = b.value;
  c.score_value = score(f, w);
  c.accepted = (c.score_value == c.bound_value);
  c.j_value = c.score_value;
  c.text = c.accepted ? "score meets the upper bound; J(w) = " + std::to_string(c.j_value)
                      : "score " + std::to_string(c.score_value) + " below bound " +
                            std::to_string(c.bound_value) + "; certificate rejected";
  return c;
}

Certificate certify_wrap_drop(Lattice k, const Word& w, const Fold& f) {
  Certificate eq = certify_equality(k, w, f);
  if (!eq.accepted) {
    eq.text = "equality certificate rejected; wrap-drop not attempted";
    return eq;
  }
  Certificate c = eq;
  c.claim = Certificate::strict_drop;
  const BoundInfo wb = upper_bound(k, w, /*wrapped=*/true);
  c.bound_used = wb.label;
  c.bound_value = wb.value;
  c.accepted = wb.value < eq.score_value;
  c.text = c.accepted
               ? "J(1w1) <= " + std::to_string(wb.value) + " < " + std::to_string(eq.score_value) +
                     " = J(w)"
               : "wrapped bound " + std::to_string(wb.value) + " does not drop below J(w)";
  return c;
}

namespace {

// Looks for m fresh sites p_m .. p_1 with p_m the new start, consecutive
// sites adjacent, p_1 adjacent to f.start, all avoiding the fold. Moves are
// tried in alphabet order so the result is deterministic.
bool extend_prefix(Lattice k, const Fold& f, int m, std::vector<char>& out_moves, Site& out_start) {
  std::unordered_set<long long> used;
  for (const Site& s : fold_sites(f)) used.insert(site_key(s));
  const std::string_view ab = alphabet(k);
  std::vector<Site> picked;
  Site cur = f.start;
  auto dfs = [&](auto&& self) -> bool {
    if ((int)picked.size() == m) return true;
    for (char mv : ab) {
      Site nxt = apply_move(k, cur, mv);
      if (used.count(site_key(nxt))) continue;
      used.insert(site_key(nxt));
      picked.push_back(nxt);
      Site save = cur;
      cur = nxt;
      if (self(self)) return true;
      cur = save;
      picked.pop_back();
      used.erase(site_key(nxt));
    }
    return false;
  };
  if (!dfs(dfs)) return false;
  out_start = picked.back();
  out_moves.clear();
  std::vector<Site> path(picked.rbegin(), picked.rend());  // new start first
  path.push_back(f.start);
  for (size_t i = 0; i + 1 < path.size(); ++i)
    out_moves.push_back(move_between(k, path[i], path[i + 1]));
  return true;
}

}  // namespace

Certificate lift_counterexample(Lattice k, const Word& x, const Fold& f, int m) {
  if (m < 0) throw std::invalid_argument("lift_counterexample: m must be >= 0");
  Certificate base = certify_wrap_drop(k, x, f);
  if (!base.accepted)
    throw std::invalid_argument("lift_counterexample: base wrap-drop certificate rejected");
  if (m == 0) return base;

  std::vector<char> prefix;
  Site new_start;
  if (!extend_prefix(k, f, m, prefix, new_start))
    throw std::runtime_error("lift_counterexample: prefix extension failure");

  Certificate c;
  c.claim = Certificate::strict_drop;
  c.word = Word{std::string(m, '1') + x.letters, false};
  c.fold.kind = k;
  c.fold.start = new_start;
  c.fold.closed = false;
  c.fold.moves = prefix;
  c.fold.moves.insert(c.fold.moves.end(), f.moves.begin(), f.moves.end());
  if (auto v = validate(c.fold, c.word))
    throw std::logic_error("lift_counterexample: extended fold invalid: " + v->detail);

  // 1^m x 1 = 1 (1^{m-1} x) 1, so the wrapped bound of 1^{m-1} x (same zero
  // set as x) caps J(1^m x 1), while the extended fold keeps every contact
  // of the base witness: J(1^m x) >= J(x).
  const BoundInfo wb = upper_bound(k, x, /*wrapped=*/true);
  c.bound_used = wb.label;
  c.bound_value = wb.value;
  c.score_value = score(c.fold, c.word);
  c.j_value = base.j_value;
  c.accepted = (c.score_value == base.score_value) && (wb.value < c.score_value);
  c.text = c.accepted ? "J(1^" + std::to_string(m) + " x 1) <= " + std::to_string(wb.value) +
                            " < " + std::to_string(c.score_value) + " <= J(1^" +
                            std::to_string(m) + " x)"
                      : "lift rejected";
  return c;
}

MonotoneReport suffix_monotone_check(Lattice k, const Word& x, const SearchLimits& lim) {
  if (x.cyclic) throw std::invalid_argument("suffix_monotone_check: open words only");
  MonotoneReport r;
  r.j_x = optimal(k, x, /*closed=*/false, lim).j;
  r.j_x1 = optimal(k, Word{x.letters + "1", false}, false, lim).j;
  r.j_1x = optimal(k, Word{"1" + x.letters, false}, false, lim).j;
  r.ok = r.j_x1 <= r.j_x && r.j_1x <= r.j_x;
  return r;
}

}  // namespace hpfold
