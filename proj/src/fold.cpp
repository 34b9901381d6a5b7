#include "hpfold/fold.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hpfold {

std::vector<Site> fold_sites(const Fold& f) {
  std::vector<Site> out;
  out.reserve(f.moves.size() + 1);
  out.push_back(f.start);
  for (size_t i = 0; i < f.moves.size(); ++i)
    out.push_back(apply_move(f.kind, out.back(), f.moves[i]));
  if (f.closed && !out.empty() && out.back() == f.start) out.pop_back();
  return out;
}

std::optional<Violation> validate(const Fold& f, const Word& w) {
  for (char m : f.moves)
    if (alphabet_rank(f.kind, m) < 0)
      return Violation{Violation::bad_move, -1, -1, std::string("symbol '") + m + "'"};
  if (w.cyclic != f.closed)
    return Violation{Violation::flag_mismatch, -1, -1,
                     "cyclic word flag does not match closed fold flag"};

  std::vector<Site> pts;
  pts.push_back(f.start);
  for (char m : f.moves) pts.push_back(apply_move(f.kind, pts.back(), m));

  if (f.closed) {
    if (pts.back() != f.start)
      return Violation{Violation::not_closed, -1, -1, "moves do not return to the start"};
    pts.pop_back();
    if (w.letters.size() != pts.size())
      return Violation{Violation::length_mismatch, (int)w.letters.size(), (int)pts.size(),
                       "closed fold needs |word| = |moves|"};
  } else {
    if (w.letters.size() != pts.size())
      return Violation{Violation::length_mismatch, (int)w.letters.size(), (int)pts.size(),
                       "open fold needs |word| = |moves| + 1"};
  }

  std::unordered_set<std::int64_t> seen;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!seen.insert(site_key(pts[i])).second) {
      for (size_t j = 0; j < i; ++j)
        if (pts[j] == pts[i])
          return Violation{Violation::revisit, (int)j, (int)i, "site visited twice"};
    }
  }
  return std::nullopt;
}

std::pair<Fold, Word> drop_ends(const Fold& f, const Word& w, int front, int back) {
  if (f.closed) throw std::invalid_argument("drop_ends is for open folds");
  if (front < 0 || back < 0 || front + back >= (int)w.letters.size())
    throw std::invalid_argument("drop counts too large");
  Fold g = f;
  for (int i = 0; i < front; ++i) g.start = apply_move(f.kind, g.start, f.moves[i]);
  g.moves = std::vector<char>(f.moves.begin() + front, f.moves.end() - back);
  Word v{w.letters.substr(front, w.letters.size() - front - back), false};
  return {g, v};
}

bool sites_form_cube(const std::vector<Site>& sites, int side) {
  if ((int)sites.size() != side * side * side) return false;
  std::set<Site> s(sites.begin(), sites.end());
  if ((int)s.size() != side * side * side) return false;
  Site lo = *s.begin();
  for (auto& p : s) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
  }
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b)
      for (int c = 0; c < side; ++c)
        if (!s.count({lo.x + a, lo.y + b, lo.z + c})) return false;
  return true;
}

std::vector<DecodeResult> decode_keyboard_moves(std::string_view text, const Word& w, bool closed,
                                                std::optional<int> zeros_cube_side) {
  static const std::string letters = "adefsw";
  if (text.empty()) throw std::invalid_argument("empty keyboard string");
  for (char c : text)
    if (letters.find(c) == std::string::npos)
      throw std::invalid_argument(std::string("keyboard letter '") + c + "' not in {a,d,e,f,s,w}");

  std::string dirs = "bdflru";  // rect3d moves in character order
  std::vector<DecodeResult> out;
  std::sort(dirs.begin(), dirs.end());
  do {
    Fold f;
    f.kind = Lattice::rect3d;
    f.closed = closed;
    f.moves.reserve(text.size());
    for (char c : text) f.moves.push_back(dirs[letters.find(c)]);
    Word ww = w;
    ww.cyclic = closed;
    if (validate(f, ww)) continue;
    if (zeros_cube_side) {
      auto pts = fold_sites(f);
      std::vector<Site> zs;
      for (size_t i = 0; i < pts.size(); ++i)
        if (ww.letters[i] == '0') zs.push_back(pts[i]);
      if (!sites_form_cube(zs, *zeros_cube_side)) continue;
    }
    DecodeResult r;
    std::copy(dirs.begin(), dirs.end(), r.mapping.begin());
    r.fold = f;
    out.push_back(r);
  } while (std::next_permutation(dirs.begin(), dirs.end()));

  if (out.empty()) throw std::runtime_error("no key mapping satisfies the constraints");
  std::sort(out.begin(), out.end(),
            [](const DecodeResult& a, const DecodeResult& b) { return a.mapping < b.mapping; });
  return out;
}

std::string serialize_fold(const Fold& f, const Word& w) {
  std::ostringstream os;
  os << "lattice: " << lattice_name(f.kind) << "\n";
  os << "word: " << (w.cyclic ? "cyc:" : "") << w.letters << "\n";
  os << "moves: " << format_moves(f.moves) << "\n";
  os << "closed: " << (f.closed ? "true" : "false") << "\n";
  return os.str();
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && isspace((unsigned char)s.front())) s.remove_prefix(1);
  while (!s.empty() && isspace((unsigned char)s.back())) s.remove_suffix(1);
  return s;
}

std::pair<Fold, Word> parse_fold_text(std::string_view text) {
  std::optional<Lattice> kind;
  std::optional<std::string> word_text, moves_text;
  std::optional<bool> closed;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected 'key: value' line");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view val = trim(line.substr(colon + 1));
    if (key == "lattice") {
      kind = lattice_from_name(val);
    } else if (key == "word") {
      word_text = std::string(val);
    } else if (key == "moves") {
      moves_text = std::string(val);
    } else if (key == "closed") {
      if (val == "true")
        closed = true;
      else if (val == "false")
        closed = false;
      else
        throw std::invalid_argument("closed must be true or false");
    } else {
      throw std::invalid_argument("unknown fold file key: " + std::string(key));
    }
  }
  if (!kind || !word_text || !moves_text || !closed)
    throw std::invalid_argument("fold file needs lattice, word, moves and closed lines");

  Word w;
  std::string_view wt = *word_text;
  if (wt.rfind("cyc:", 0) == 0) {
    w.cyclic = true;
    wt.remove_prefix(4);
  }
  if (wt.empty()) throw std::invalid_argument("empty word");
  for (char c : wt)
    if (c != '0' && c != '1' && c != '2')
      throw std::invalid_argument("word letters must be 0, 1 or 2");
  w.letters = std::string(wt);

  Fold f;
  f.kind = *kind;
  f.closed = *closed;
  f.moves = parse_moves(f.kind, *moves_text);
  return {f, w};
}

std::pair<Fold, Word> load_fold_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fold file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fold_text(ss.str());
}

}  // namespace hpfold
