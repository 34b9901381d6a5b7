#include "hpfold/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hpfold/bounds.hpp"
#include "hpfold/fold.hpp"
#include "hpfold/multichain.hpp"
#include "hpfold/scoring.hpp"
#include "hpfold/topology.hpp"
#include "hpfold/word.hpp"

namespace hpfold {

namespace {

using nlohmann::json;

// Appends "key: want X got Y" on mismatch so the first failing fact is named.
struct Checker {
  std::string detail;
  template <class T>
  void eq(const char* key, const T& got, const T& want) {
    if (detail.empty() && !(got == want)) {
      std::ostringstream os;
      os << key << ": expected " << want << ", got " << got;
      detail = os.str();
    }
  }
};

std::string check_fold_entry(const json& ex, const std::string& path) {
  auto [fold, word] = load_fold_file(path);
  if (auto v = validate(fold, word)) return "fold invalid: " + v->detail;
  Checker ck;
  const std::vector<Site> sites = fold_sites(fold);
  for (auto it = ex.begin(); it != ex.end(); ++it) {
    const std::string& key = it.key();
    if (key == "score") {
      ck.eq("score", score(fold, word), it->get<int>());
    } else if (key == "certify_equality") {
      const Certificate c = certify_equality(fold.kind, word, fold);
      if (!c.accepted) return "certify_equality: rejected (" + c.text + ")";
      ck.eq("certify_equality", c.j_value, it->get<int>());
    } else if (key == "certify_wrap_drop") {
      const Certificate c = certify_wrap_drop(fold.kind, word, fold);
      ck.eq("certify_wrap_drop", c.accepted, it->get<bool>());
    } else if (key == "induced_edge_sum") {
      ck.eq("induced_edge_sum", induced_edge_sum(fold, word), it->get<int>());
      ck.eq("zero_set_internal_edges", zero_set_internal_edges(fold, word), it->get<int>());
    } else if (key == "i00") {
      ck.eq("i00", occurrences("00", word), it->get<int>());
    } else if (key == "zero_set_cube") {
      std::vector<Site> zs;
      for (size_t i = 0; i < sites.size(); ++i)
        if (word.letters[i] == '0') zs.push_back(sites[i]);
      ck.eq("zero_set_cube", sites_form_cube(zs, it->get<int>()), true);
    } else if (key == "fox3") {
      ck.eq("fox3", fox3_count_curve(curve_of_fold(fold)), it->get<long long>());
    } else if (key == "closed") {
      ck.eq("closed", fold.closed, it->get<bool>());
    } else if (key == "length") {
      ck.eq("length", (int)sites.size(), it->get<int>());
    } else {
      return "unknown expectation key: " + key;
    }
    if (!ck.detail.empty()) return ck.detail;
  }
  return "";
}

std::string check_chains_entry(const json& ex, const std::string& path) {
  const Embedding e = load_chains_file(path);
  if (auto v = validate_embedding(e)) return "embedding invalid: " + v->detail;
  Checker ck;
  auto curve = [&](int i) { return ClosedCurve{e.chains[i].sites}; };
  for (auto it = ex.begin(); it != ex.end(); ++it) {
    const std::string& key = it.key();
    if (key == "chain_count") {
      ck.eq("chain_count", (int)e.chains.size(), it->get<int>());
    } else if (key == "lengths") {
      std::vector<int> got;
      for (const Chain& ch : e.chains) got.push_back((int)ch.sites.size());
      if (got != it->get<std::vector<int>>()) return "lengths mismatch";
    } else if (key == "covers_cube") {
      std::vector<Site> all;
      for (const Chain& ch : e.chains) all.insert(all.end(), ch.sites.begin(), ch.sites.end());
      ck.eq("covers_cube", sites_form_cube(all, it->get<int>()), true);
    } else if (key == "zero_union_cube") {
      std::vector<Site> zs;
      for (const Chain& ch : e.chains)
        for (size_t i = 0; i < ch.sites.size(); ++i)
          if (ch.word.letters[i] == '0') zs.push_back(ch.sites[i]);
      ck.eq("zero_union_cube", sites_form_cube(zs, it->get<int>()), true);
    } else if (key == "abs_linking") {
      if (e.chains.size() != 2) return "abs_linking needs exactly two chains";
      ck.eq("abs_linking", std::abs(linking_number(curve(0), curve(1))), it->get<int>());
    } else if (key == "linking") {
      if (e.chains.size() != 2) return "linking needs exactly two chains";
      ck.eq("linking", linking_number(curve(0), curve(1)), it->get<int>());
    } else if (key == "fox3_each") {
      for (int i = 0; i < (int)e.chains.size(); ++i)
        ck.eq("fox3_each", fox3_count_curve(curve(i)), it->get<long long>());
    } else if (key == "score_c10") {
      ck.eq("score_c10", embedding_score(e, levels_for_c(10)), it->get<long long>());
    } else {
      return "unknown expectation key: " + key;
    }
    if (!ck.detail.empty()) return ck.detail;
  }
  return "";
}

}  // namespace

CorpusReport run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path manifest = fs::path(dir) / "corpus.json";
  if (!fs::exists(manifest))
    throw std::invalid_argument("corpus manifest not found: " + manifest.string());
  std::ifstream in(manifest);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("corpus manifest unreadable: ") + err.what());
  }
  if (!m.is_array() || m.empty()) throw std::invalid_argument("corpus manifest is empty");

  CorpusReport rep;
  for (const json& entry : m) {
    CorpusOutcome oc;
    try {
      oc.id = entry.at("id").get<std::string>();
      const std::string type = entry.at("type").get<std::string>();
      const std::string file = (fs::path(dir) / entry.at("file").get<std::string>()).string();
      const json& ex = entry.at("expect");
      std::string detail;
      if (type == "fold")
        detail = check_fold_entry(ex, file);
      else if (type == "chains")
        detail = check_chains_entry(ex, file);
      else
        detail = "unknown entry type: " + type;
      oc.pass = detail.empty();
      oc.detail = detail;
    } catch (const std::exception& err) {
      oc.pass = false;
      oc.detail = err.what();
    }
    if (!oc.pass) ++rep.failures;
    rep.outcomes.push_back(std::move(oc));
  }
  return rep;
}

}  // namespace hpfold
