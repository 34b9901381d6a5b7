#pragma once

#include <string>
#include <vector>

namespace hpfold {

// The shipped verification corpus: a directory of fold/chains files plus a
// corpus.json manifest mapping each entry to its expected facts. Every
// reproduced construction appears exactly once.

struct CorpusOutcome {
  std::string id;
  bool pass = false;
  std::string detail;  // empty on pass, else the first mismatch
};

struct CorpusReport {
  std::vector<CorpusOutcome> outcomes;
  int failures = 0;
};

// Throws std::invalid_argument when the directory or manifest is missing or
// the manifest is empty (input error, not a verification failure).
CorpusReport run_corpus(const std::string& dir);

}  // namespace hpfold
