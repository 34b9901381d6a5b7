#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpfold/lattice.hpp"
#include "hpfold/word.hpp"

namespace hpfold {

// A fold is a self-avoiding walk given by a start site and a move string.
// Open: |word| sites = |moves| + 1. Closed: |word| = |moves| sites, the move
// composition is the identity translation, and site 0 carries word index 0.
struct Fold {
  Lattice kind = Lattice::rect2d;
  Site start{};
  std::vector<char> moves;
  bool closed = false;
};

// Cumulative move application. For a closed fold the returning step is not
// repeated: the result has moves.size() entries.
std::vector<Site> fold_sites(const Fold& f);

struct Violation {
  enum Kind { revisit, length_mismatch, not_closed, bad_move, flag_mismatch } kind;
  int i = -1, j = -1;
  std::string detail;
};

// ok (nullopt) iff the walk is self-avoiding, |w| matches the fold length,
// closure matches the closed flag, and the word's cyclic flag agrees with it.
std::optional<Violation> validate(const Fold& f, const Word& w);

// Induced subfold/subword of an open fold after removing `front` sites from
// the front and `back` from the back.
std::pair<Fold, Word> drop_ends(const Fold& f, const Word& w, int front, int back);

// Key-mapping recovery for move strings over the six keyboard letters
// {a,d,e,f,s,w}. Tries all 720 bijections onto the rect3d unit steps (inverse
// key pairs are not assumed) and keeps those whose walk is valid and
// satisfies the constraints. Results are sorted by mapping (direction chars
// assigned to the letters in sorted order); the first entry is canonical.
struct DecodeResult {
  std::array<char, 6> mapping;  // directions for letters a,d,e,f,s,w
  Fold fold;
};
std::vector<DecodeResult> decode_keyboard_moves(std::string_view text, const Word& w, bool closed,
                                                std::optional<int> zeros_cube_side);

// Line-oriented fold file:
//   lattice: <tag>
//   word: <digits | cyc:digits>
//   moves: <symbols with optional ^n>
//   closed: <true|false>
std::string serialize_fold(const Fold& f, const Word& w);
std::pair<Fold, Word> parse_fold_text(std::string_view text);  // throws on malformed input
std::pair<Fold, Word> load_fold_file(const std::string& path);

// True iff the multiset of sites is an axis-aligned side^3 cube (rect3d).
bool sites_form_cube(const std::vector<Site>& sites, int side);

}  // namespace hpfold
