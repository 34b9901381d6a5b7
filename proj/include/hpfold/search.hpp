#pragma once

#include <string>
#include <vector>

#include "hpfold/fold.hpp"
#include "hpfold/scoring.hpp"

namespace hpfold {

struct SearchLimits {
  long long max_nodes = 1'000'000'000;
  double max_seconds = 600.0;
  int workers = 1;  // value pass only; the result does not depend on it
};

struct SearchResult {
  int j = -1;  // -1 when no valid fold exists (odd closed length on a bipartite lattice)
  std::string witness;  // lex-least optimal move string, alphabet order
  long long nodes = 0;
  bool exact = true;  // false when a budget cut means j is only a lower bound
};

// Exact maximum score over self-avoiding placements of w, plus the
// lexicographically least optimal move string (ties broken by the fixed move
// alphabet order). Two passes: a symmetry-reduced branch-and-bound for the
// value, then an unreduced lexicographic scan that stops at the first fold
// attaining it.
SearchResult optimal(Lattice k, const Word& w, bool closed, const SearchLimits& lim = {});

// All optimal folds up to lattice point-group symmetry, each given by its
// canonical representative (minimal move string over the group), sorted.
std::vector<Fold> enumerate_optima(Lattice k, const Word& w, bool closed,
                                   const SearchLimits& lim = {});

// Canonical form of a fold's move string under the point group: the minimum,
// in move-alphabet order, over all isometric images. Used for deduplication.
std::string canonical_moves(Lattice k, const Fold& f);

// true if a < b in move-alphabet order (not ASCII order).
bool moves_less(Lattice k, const std::string& a, const std::string& b);

}  // namespace hpfold
