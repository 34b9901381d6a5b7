#include "hpfold/word.hpp"

#include <stdexcept>

namespace hpfold {

int zeros(const Word& w) {
  int c = 0;
  for (char ch : w.letters)
    if (ch == '0') ++c;
  return c;
}

int occurrences(std::string_view pattern, const Word& w) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  size_t n = w.letters.size(), m = pattern.size();
  if (m > n) return 0;
  int c = 0;
  size_t starts = w.cyclic ? n : n - m + 1;
  for (size_t i = 0; i < starts; ++i) {
    bool ok = true;
    for (size_t j = 0; j < m && ok; ++j)
      ok = w.letters[(i + j) % n] == pattern[j];
    c += ok;
  }
  return c;
}

Word reversed(const Word& w) {
  return {std::string(w.letters.rbegin(), w.letters.rend()), w.cyclic};
}

static std::string rep(std::string_view s, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += s;
  return out;
}

FoldSpec rect_family(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::string w = rep("011", 3) + rep("1", 10) + rep("0011", k) + "0110" + rep("1100", k) + "110";
  std::string mv = "urdrdldrr" + rep("u", 4) + rep("l", 4) + "dd" + rep("luld", k) + "ldr" +
                   rep("drur", k) + "dru";
  return {{w, false}, mv};
}

Word hex_family(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return {"0" + rep("1", 4) + "011" + rep("01", k) + "11" + rep("10", k), false};
}

Word tri_family(int n) {
  switch (n) {
    case 1: return {rep("001", 3) + "0", false};
    case 2: return {rep("0001", 6) + "0", false};
    case 3: return {rep("0", 5) + "1" + rep(rep("0", 6) + "1", 5) + "00", false};
    case 4:
      return {rep("0", 5) + "1" + rep("0", 3) + "1" + rep(rep("0", 7) + "1" + rep("0", 3) + "1", 5) +
                  rep("0", 3),
              false};
  }
  throw std::invalid_argument("tri_family index must be 1..4");
}

const std::string_view trefoil24_keyboard_moves = "eddfwwffssaeeweddffaaaes";
const std::string_view cube54_keyboard_moves =
    "aasddsdwwdwaawasewdsddsassawaawdeasddsdwwdwaawasedsff";

std::vector<NamedWord> special_words() {
  std::vector<NamedWord> out;
  out.push_back({"cube54", {rep("0011", 12) + "011100", false}});
  out.push_back({"grid60", {rep("0", 16) + "0110" + rep(rep("1100", 2) + "110", 3) + "1100110",
                            false}});
  out.push_back({"trefoil24", {rep("1", 2) + rep(rep("0", 4) + rep("1", 7), 2), true}});
  out.push_back({"link8", {rep("0", 8), true}});
  out.push_back({"link56", {rep("0", 6) + rep("1", 20) + "00" + "11" + "00" + rep("1", 9) + "00" +
                                "1111" + "00" + "11" + "00000",
                            true}});
  out.push_back({"trefoil70", {rep("1", 3) + rep("0", 22) + rep("1", 3) + rep("0", 42), true}});
  return out;
}

Word special_word(std::string_view name) {
  for (auto& nw : special_words())
    if (nw.name == name) return nw.word;
  throw std::invalid_argument("unknown special word: " + std::string(name));
}

std::vector<Word> multiset_M(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<Word> out(3, Word{rep("01", 4), true});
  out.push_back({rep("2", 3) + rep("1", 9 + 2 * m), true});
  return out;
}

}  // namespace hpfold
