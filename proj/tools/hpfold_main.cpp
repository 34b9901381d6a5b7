#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hpfold/bounds.hpp"
#include "hpfold/corpus.hpp"
#include "hpfold/fold.hpp"
#include "hpfold/iso.hpp"
#include "hpfold/multichain.hpp"
#include "hpfold/render.hpp"
#include "hpfold/scoring.hpp"
#include "hpfold/search.hpp"
#include "hpfold/topology.hpp"
#include "hpfold/word.hpp"

// Exit codes: 0 ok, 1 input error, 2 verification failure, 3 budget exceeded.

namespace {

using namespace hpfold;

int default_workers() {
  if (const char* env = std::getenv("HPFOLD_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

int cmd_score(const std::string& file) {
  auto [fold, word] = load_fold_file(file);
  if (auto v = validate(fold, word)) throw std::invalid_argument("invalid fold: " + v->detail);
  std::cout << "score: " << score(fold, word) << "\n";
  std::cout << "contacts:";
  for (const auto& [i, j] : contacts(fold, word)) std::cout << " (" << i << "," << j << ")";
  std::cout << "\n";
  return 0;
}

int cmd_verify(const std::string& dir) {
  const CorpusReport rep = run_corpus(dir);
  for (const CorpusOutcome& oc : rep.outcomes) {
    std::cout << oc.id << ": " << (oc.pass ? "PASS" : "FAIL");
    if (!oc.pass) std::cout << " (" << oc.detail << ")";
    std::cout << "\n";
  }
  std::cout << rep.outcomes.size() - rep.failures << "/" << rep.outcomes.size() << " passed\n";
  return rep.failures == 0 ? 0 : 2;
}

int cmd_render(const std::string& file, const std::string& format, bool show_contacts,
               bool diagram, const std::string& out) {
  if (format != "svg" && format != "ascii")
    throw std::invalid_argument("unknown format: " + format);
  // fold files start with a "lattice:" line, chains files with "chain"
  std::ifstream probe(file);
  if (!probe) throw std::invalid_argument("cannot open file: " + file);
  std::string head;
  std::getline(probe, head);
  probe.close();
  const bool is_chains = head.rfind("chain", 0) == 0;

  if (diagram) {
    std::vector<ClosedCurve> curves;
    if (is_chains) {
      for (const Chain& ch : load_chains_file(file).chains) curves.push_back(ClosedCurve{ch.sites});
    } else {
      auto [fold, word] = load_fold_file(file);
      curves.push_back(curve_of_fold(fold));
    }
    if (format != "svg") throw std::invalid_argument("diagram rendering is svg-only");
    emit(render_diagram_svg(curves), out);
    return 0;
  }
  if (is_chains) {
    if (format != "svg") throw std::invalid_argument("embedding rendering is svg-only");
    emit(render_embedding_svg(load_chains_file(file)), out);
    return 0;
  }
  auto [fold, word] = load_fold_file(file);
  emit(format == "svg" ? render_fold_svg(fold, word, show_contacts)
                       : render_fold_ascii(fold, word),
       out);
  return 0;
}

int cmd_search(const std::string& lattice, const std::string& word_str, bool closed,
               const SearchLimits& lim) {
  const Lattice k = lattice_from_name(lattice);
  const Word w{word_str, closed};
  const SearchResult r = optimal(k, w, closed, lim);
  std::cout << "J=" << r.j << "\n";
  std::cout << "witness=" << r.witness << "\n";
  std::cout << "nodes=" << r.nodes << "\n";
  std::cout << "exact=" << (r.exact ? "true" : "false") << "\n";
  return r.exact ? 0 : 3;
}

int cmd_bound(const std::string& lattice, const std::string& word_str, bool wrapped) {
  const BoundInfo b = upper_bound(lattice_from_name(lattice), Word{word_str, false}, wrapped);
  std::cout << "bound=" << b.value << " label=" << b.label << "\n";
  return 0;
}

int cmd_certify(const std::string& file, bool wrap_drop, int lift_m) {
  auto [fold, word] = load_fold_file(file);
  const Certificate eq = certify_equality(fold.kind, word, fold);
  std::cout << "equality: " << (eq.accepted ? "accepted" : "rejected") << " J(w)="
            << eq.j_value << " (bound " << eq.bound_used << " " << eq.bound_value << ")\n";
  bool all_ok = eq.accepted;
  if (wrap_drop || lift_m >= 0) {
    const Certificate wd = certify_wrap_drop(fold.kind, word, fold);
    std::cout << "wrap-drop: " << (wd.accepted ? "accepted " : "rejected ") << wd.text << "\n";
    all_ok = all_ok && wd.accepted;
  }
  if (lift_m >= 0) {
    const Certificate lf = lift_counterexample(fold.kind, word, fold, lift_m);
    std::cout << "lift m=" << lift_m << ": " << (lf.accepted ? "accepted " : "rejected ")
              << lf.text << "\n";
    all_ok = all_ok && lf.accepted;
  }
  return all_ok ? 0 : 2;
}

int cmd_iso(const std::string& lattice, int n) {
  const IsoResult r = max_internal_edges(lattice_from_name(lattice), n);
  std::cout << "max=" << r.max_edges << " unique=" << (r.unique ? "true" : "false") << "\n";
  return 0;
}

int cmd_multichain(const std::string& file, long long c) {
  const Embedding e = load_chains_file(file);
  if (auto v = validate_embedding(e))
    throw std::invalid_argument("invalid embedding: " + v->detail);
  std::cout << "chains=" << e.chains.size() << "\n";
  std::cout << "potential_contacts=" << potential_contacts(e).size() << "\n";
  std::cout << "score=" << embedding_score(e, levels_for_c(c)) << "\n";
  return 0;
}

int cmd_link(const std::string& file) {
  const Embedding e = load_chains_file(file);
  if (e.chains.size() != 2)
    throw std::invalid_argument("link needs a chains file with exactly two chains");
  std::cout << "linking=" << linking_number(ClosedCurve{e.chains[0].sites},
                                            ClosedCurve{e.chains[1].sites})
            << "\n";
  return 0;
}

int cmd_knot(const std::string& file, bool with_separation) {
  auto [fold, word] = load_fold_file(file);
  const ClosedCurve c = curve_of_fold(fold);
  const Diagram d = project(c);
  std::cout << "crossings=" << d.crossings.size() << "\n";
  std::cout << "arcs=" << d.arcs << "\n";
  std::cout << "fox3=" << fox3_count_curve(c) << "\n";
  if (with_separation) std::cout << separation_report(fold, word);
  return 0;
}

int cmd_decode(const std::string& which, const std::string& moves, const std::string& word_str,
               bool closed, int cube_side) {
  std::string text = moves;
  Word w{word_str, closed};
  int side = cube_side;
  if (which == "trefoil24") {
    text = std::string(trefoil24_keyboard_moves);
    w = special_word("trefoil24");
    closed = true;
    side = 2;
  } else if (which == "cube54") {
    text = std::string(cube54_keyboard_moves);
    w = special_word("cube54");
    closed = false;
    side = 3;
  } else if (!which.empty()) {
    throw std::invalid_argument("unknown preset: " + which);
  } else if (text.empty() || word_str.empty()) {
    throw std::invalid_argument("need either a preset or --moves and --word");
  }
  w.cyclic = closed;
  auto results =
      decode_keyboard_moves(text, w, closed, side > 0 ? std::optional<int>(side) : std::nullopt);
  const DecodeResult& canon = results.front();
  std::cout << "solutions=" << results.size() << "\n";
  std::cout << "mapping:";
  const char keyboard[] = "adefsw";
  for (int i = 0; i < 6; ++i) std::cout << " " << keyboard[i] << "->" << canon.mapping[i];
  std::cout << "\n" << serialize_fold(canon.fold, w);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HP-model folding toolkit: scores, certificates, search, "
               "shape enumeration, weighted multichain scoring, and lattice-curve topology"};
  app.require_subcommand(1);

  std::string file, format = "svg", out, lattice = "rect2d", word_str, which, moves;
  std::string corpus_dir = "corpus";
  bool show_contacts = false, diagram = false, closed = false, wrapped = false;
  bool wrap_drop = false, separation = false;
  int n = 1, lift_m = -1, cube_side = 0;
  long long c_value = 10;
  SearchLimits lim;
  lim.workers = default_workers();

  auto* sc = app.add_subcommand("score", "Score a fold file and list its contacts");
  sc->add_option("file", file)->required();

  auto* ver = app.add_subcommand("verify", "Run the verification corpus");
  ver->add_option("--corpus", corpus_dir, "corpus directory");

  auto* ren = app.add_subcommand("render", "Render a fold or chains file");
  ren->add_option("file", file)->required();
  ren->add_option("--format", format, "svg or ascii");
  ren->add_flag("--contacts", show_contacts, "draw contacts dashed");
  ren->add_flag("--diagram", diagram, "knot/link diagram with crossing gaps");
  ren->add_option("-o,--out", out, "output path (default stdout)");

  auto* se = app.add_subcommand("search", "Exact optimal score by branch and bound");
  se->add_option("--lattice", lattice)->required();
  se->add_option("--word", word_str)->required();
  se->add_flag("--closed", closed);
  se->add_option("--workers", lim.workers);
  se->add_option("--max-nodes", lim.max_nodes);
  se->add_option("--max-seconds", lim.max_seconds);

  auto* bo = app.add_subcommand("bound", "Upper bound for a word");
  bo->add_option("--lattice", lattice)->required();
  bo->add_option("--word", word_str)->required();
  bo->add_flag("--wrapped", wrapped, "bound the word with a 1 glued to each end");

  auto* ce = app.add_subcommand("certify", "Check bound-equality certificates on a fold file");
  ce->add_option("file", file)->required();
  ce->add_flag("--wrap-drop", wrap_drop, "also check the extension-drop certificate");
  ce->add_option("--lift", lift_m, "extend the witness by m leading polar sites");

  auto* is = app.add_subcommand("iso", "Max internal edges over connected n-site shapes");
  is->add_option("--lattice", lattice)->required();
  is->add_option("--n", n)->required();

  auto* mu = app.add_subcommand("multichain", "Score a chains file under the c-level weights");
  mu->add_option("file", file)->required();
  mu->add_option("--c", c_value, "weight of letter 2");

  auto* li = app.add_subcommand("link", "Linking number of a two-chain file");
  li->add_option("file", file)->required();

  auto* kn = app.add_subcommand("knot", "Diagram stats and Fox 3-coloring count of a closed fold");
  kn->add_option("file", file)->required();
  kn->add_flag("--separation", separation, "print the crossing/contact index report");

  auto* de = app.add_subcommand("decode", "Decode a keyboard-letter move transcription");
  de->add_option("preset", which, "trefoil24 or cube54");
  de->add_option("--moves", moves);
  de->add_option("--word", word_str);
  de->add_flag("--closed", closed);
  de->add_option("--cube-side", cube_side, "require zeros to fill a cube of this side");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sc) return cmd_score(file);
    if (*ver) return cmd_verify(corpus_dir);
    if (*ren) return cmd_render(file, format, show_contacts, diagram, out);
    if (*se) return cmd_search(lattice, word_str, closed, lim);
    if (*bo) return cmd_bound(lattice, word_str, wrapped);
    if (*ce) return cmd_certify(file, wrap_drop, lift_m);
    if (*is) return cmd_iso(lattice, n);
    if (*mu) return cmd_multichain(file, c_value);
    if (*li) return cmd_link(file);
    if (*kn) return cmd_knot(file, separation);
    if (*de) return cmd_decode(which, moves, word_str, closed, cube_side);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
