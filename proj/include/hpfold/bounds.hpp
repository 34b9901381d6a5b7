#pragma once

#include <string>

#include "hpfold/fold.hpp"
#include "hpfold/scoring.hpp"

namespace hpfold {

struct BoundInfo {
  int value = 0;
  std::string label;  // "exact" (rect2d, hex) or "generic" (tri, rect3d handshake)
};

// Upper bound on the optimal score of w (over {0,1} only). wrapped = true
// bounds the word 1w1 instead: every zero is then internal, which is what a
// closed-ended certificate needs.
//   rect2d: Z+1, wrapped Z.        hex: floor(Z/2)+1, wrapped floor(Z/2).
//   tri/rect3d: handshake over per-zero free-direction counts,
//   floor((sum)/2) with coordination-2 per internal zero and coordination-1
//   per terminal zero (none when wrapped).
BoundInfo upper_bound(Lattice k, const Word& w, bool wrapped);

struct Certificate {
  enum Claim { equality, strict_drop } claim = equality;
  Word word;
  Fold fold;
  std::string bound_used;
  int bound_value = 0;
  int score_value = 0;
  int j_value = 0;   // certified J of `word` (equality) / of the base word (strict_drop)
  bool accepted = false;
  std::string text;  // human-readable verdict
};

// Accepted iff score(fold, w) equals upper_bound(k, w, unwrapped); then
// J(w) is known exactly with no search. Only rect2d and hex have exact
// bounds, so other lattices are rejected as input errors.
Certificate certify_equality(Lattice k, const Word& w, const Fold& f);

// Requires an accepted equality certificate; accepted iff
// upper_bound(k, w, wrapped) < score(fold, w), which proves J(1w1) < J(w).
Certificate certify_wrap_drop(Lattice k, const Word& w, const Fold& f);

// Extends an accepted equality/wrap-drop witness for x to the word 1^m x by
// prepending m polar sites (found by a short placement search), certifying
// J(1^m x 1) < J(1^m x). m = 0 returns the plain wrap-drop certificate.
// Throws std::runtime_error if no prefix extension exists.
Certificate lift_counterexample(Lattice k, const Word& x, const Fold& f, int m);

struct MonotoneReport {
  int j_x = 0, j_x1 = 0, j_1x = 0;
  bool ok = false;  // J(x1) <= J(x) and J(1x) <= J(x)
};
struct SearchLimits;
MonotoneReport suffix_monotone_check(Lattice k, const Word& x, const SearchLimits& lim);

}  // namespace hpfold
