#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hpfold {

// Letters: '0' hydrophobic, '1' polar, '2' strongly hydrophobic (weighted
// model only). Cyclic words are scored and pattern-scanned with wraparound.
struct Word {
  std::string letters;
  bool cyclic = false;
  friend bool operator==(const Word&, const Word&) = default;
};

int zeros(const Word& w);
// Overlapping occurrence count of pattern in w; windows wrap when w is cyclic.
int occurrences(std::string_view pattern, const Word& w);
Word reversed(const Word& w);

// Word/move-string pair for families whose published fold is part of the
// construction.
struct FoldSpec {
  Word word;
  std::string moves;
};

// Square-lattice nonmonotone family: word (011)^3 1^10 (0011)^k 0110 (1100)^k 110
// of length 26+8k with Z = 6+4k, and its fold of 25+8k moves.
FoldSpec rect_family(int k);

// Honeycomb family 0 1^4 011 (01)^k 11 (10)^k, length 10+4k, Z = 2+2k (k >= 1).
Word hex_family(int k);

// Triangular-lattice words whose optimal zero sets are the balls B_1..B_4.
Word tri_family(int n);

struct NamedWord {
  std::string name;
  Word word;
};
// Fixed catalog: cube54, grid60, trefoil24, link8, link56, trefoil70.
std::vector<NamedWord> special_words();
Word special_word(std::string_view name);

// Keyboard-letter move strings (alphabet {a,s,d,w,e,f}) whose key mapping is
// recovered by fold::decode_keyboard_moves.
extern const std::string_view trefoil24_keyboard_moves;
extern const std::string_view cube54_keyboard_moves;

// Chain multiset for the weighted model: three cyclic (01)^4 plus one cyclic
// 2^3 1^(9+2m).
std::vector<Word> multiset_M(int m);

}  // namespace hpfold
