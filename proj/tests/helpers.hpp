#pragma once

#include <string>
#include <vector>

#include "hpfold/fold.hpp"
#include "hpfold/lattice.hpp"

namespace hpfold::test {

inline std::string S(const std::vector<char>& v) { return std::string(v.begin(), v.end()); }

inline Fold mk(Lattice k, const std::string& mv, bool closed = false, Site start = {}) {
  Fold f;
  f.kind = k;
  f.start = start;
  f.moves = parse_moves(k, mv);
  f.closed = closed;
  return f;
}

inline std::string corpus_path(const std::string& file) {
  return std::string(HPFOLD_CORPUS_DIR) + "/" + file;
}

}  // namespace hpfold::test
