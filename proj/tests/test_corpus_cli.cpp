#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "hpfold/corpus.hpp"

using namespace hpfold;
using namespace hpfold::test;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HPFOLD_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.output.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("run_corpus verifies every shipped entry") {
  CorpusReport rep = run_corpus(HPFOLD_CORPUS_DIR);
  CHECK(rep.outcomes.size() == 25);
  CHECK(rep.failures == 0);
  std::set<std::string> ids;
  for (const CorpusOutcome& o : rep.outcomes) {
    CAPTURE(o.id);
    CHECK(o.pass);
    CHECK(o.detail.empty());
    CHECK(ids.insert(o.id).second);
  }
  CHECK(ids.count("rect_nonmono_k0"));
  CHECK(ids.count("trefoil24_loop"));
  CHECK(ids.count("rings_embedding_m0"));
}

TEST_CASE("run_corpus rejects a missing directory") {
  CHECK_THROWS_AS(run_corpus("/nonexistent_dir_zzz"), std::invalid_argument);
}

TEST_CASE("cli: verify passes the shipped corpus") {
  RunResult r = run_cli("verify --corpus " HPFOLD_CORPUS_DIR);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "25/25 passed"));
  CHECK(contains(r.output, "rect_nonmono_k0: PASS"));
}

TEST_CASE("cli: verify fails loudly on a tampered corpus") {
  fs::path tmp = fs::temp_directory_path() / "hpfold_tampered_corpus";
  fs::remove_all(tmp);
  fs::copy(HPFOLD_CORPUS_DIR, tmp);
  // Corrupt one expectation: the k0 fold does not score 8.
  fs::path manifest = tmp / "corpus.json";
  std::ifstream in(manifest);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  in.close();
  size_t pos = text.find("\"score\": 7,");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\"score\": 8,");
  std::ofstream(manifest) << text;

  RunResult r = run_cli("verify --corpus " + tmp.string());
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "rect_nonmono_k0: FAIL"));
  CHECK(contains(r.output, "24/25 passed"));
  fs::remove_all(tmp);
}

TEST_CASE("cli: score prints the score and contact list") {
  RunResult r = run_cli("score " + corpus_path("rect_nonmono_k0.fold"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "score: 7\n"));
  CHECK(contains(r.output, "contacts: (0,3) (0,19) (0,25) (3,6) (6,25) (19,22) (22,25)"));
}

TEST_CASE("cli: bound") {
  RunResult r = run_cli("bound --lattice rect2d --word 01101101111111111110110110");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "bound=7 label=exact\n");
  RunResult w = run_cli("bound --lattice rect2d --word 01101101111111111110110110 --wrapped");
  CHECK(contains(w.output, "bound=6"));
}

TEST_CASE("cli: search") {
  RunResult r = run_cli("search --lattice rect2d --word 0000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "J=1\n"));
  CHECK(contains(r.output, "witness=uld\n"));
  CHECK(contains(r.output, "exact=true"));
}

TEST_CASE("cli: iso") {
  RunResult r = run_cli("iso --lattice rect2d --n 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "max=12 unique=true\n");
}

TEST_CASE("cli: decode") {
  RunResult r = run_cli("decode trefoil24");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "solutions=48"));
  CHECK(contains(r.output, "mapping: a->b d->f e->d f->u s->l w->r"));
}

TEST_CASE("cli: multichain") {
  RunResult r = run_cli("multichain " + corpus_path("rings_embedding_m0.chains") + " --c 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "chains=4"));
  CHECK(contains(r.output, "potential_contacts=33"));
  CHECK(contains(r.output, "score=148"));
}

TEST_CASE("cli: link and knot") {
  RunResult l = run_cli("link " + corpus_path("hopf_pair.chains"));
  CHECK(l.exit_code == 0);
  CHECK(l.output == "linking=1\n");
  RunResult k = run_cli("knot " + corpus_path("trefoil24_loop.fold"));
  CHECK(k.exit_code == 0);
  CHECK(contains(k.output, "crossings=7"));
  CHECK(contains(k.output, "arcs=7"));
  CHECK(contains(k.output, "fox3=9"));
}

TEST_CASE("cli: certify") {
  RunResult r = run_cli("certify " + corpus_path("rect_nonmono_k0.fold") + " --wrap-drop");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "equality: accepted J(w)=7"));
  CHECK(contains(r.output, "wrap-drop: accepted J(1w1) <= 6 < 7 = J(w)"));
}

TEST_CASE("cli: render writes deterministic SVG") {
  fs::path out = fs::temp_directory_path() / "hpfold_render_test.svg";
  fs::remove(out);
  RunResult r =
      run_cli("render " + corpus_path("rect_nonmono_k0.fold") + " --format svg -o " + out.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(out));
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("<svg", 0) == 0);
  fs::remove(out);

  RunResult a = run_cli("render " + corpus_path("rect_nonmono_k0.fold") + " --format ascii");
  CHECK(contains(a.output, "1-0 0 0-1 1"));
}

TEST_CASE("cli: exit codes distinguish input, verification, and budget errors") {
  CHECK(run_cli("score /nonexistent_zzz.fold").exit_code == 1);
  CHECK(run_cli("bound --lattice bogus --word 00").exit_code == 1);
  CHECK(run_cli("verify --corpus /nonexistent_zzz").exit_code == 1);
  CHECK(run_cli("certify " + corpus_path("tri_whisker_a.fold")).exit_code == 1);
  CHECK(run_cli("search --lattice rect2d --word 01101101111111111110110110 --max-nodes 10")
            .exit_code == 3);
}
