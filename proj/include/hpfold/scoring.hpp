#pragma once

#include <utility>
#include <vector>

#include "hpfold/fold.hpp"

namespace hpfold {

// Unordered pairs of word indices (i < j) whose sites are lattice-adjacent,
// both letters '0', and which are not chain neighbors (cyclically for closed
// folds). Sorted lexicographically.
using ContactList = std::vector<std::pair<int, int>>;

ContactList contacts(const Fold& f, const Word& w);  // throws if validate fails
int score(const Fold& f, const Word& w);

// occurrences("00", w) + score(f, w); equals the number of lattice edges with
// both endpoints in the fold's zero-site set, since every such edge is either
// a chain edge or a contact.
int induced_edge_sum(const Fold& f, const Word& w);

// Direct edge enumeration over the zero-site set, for cross-checking the
// identity above.
int zero_set_internal_edges(const Fold& f, const Word& w);

// Score of an arbitrary labeled site sequence (used for symmetry checks):
// same contact rule, no validity requirements beyond matching lengths.
int score_of_sites(Lattice k, const std::vector<Site>& pts, const Word& w);

}  // namespace hpfold
