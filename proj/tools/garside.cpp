// Command line front end for the braid group conjugacy library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "garside/circuits.hpp"
#include "garside/experiments.hpp"
#include "garside/words.hpp"

using namespace garside;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNotConjugate = 1, kError = 2, kBudget = 3 };

struct Options {
  std::string structure = "artin";
  int         n         = 0;
  std::string format    = "text";
  std::uint64_t seed    = 1;
  Budget        budget;
};

class Session {
 public:
  Session(const Options& o, const std::vector<std::string>& words) : opt_(o) {
    int n = o.n;
    if (n == 0) {
      for (const auto& w : words) {
        if (!is_random(w)) n = std::max(n, infer_strands(w));
      }
      if (n == 0) throw std::invalid_argument("--n is required for random words");
    }
    g_ = make_braid_structure(o.structure == "bkl" ? BraidKind::bkl : BraidKind::artin, n);
    rng_.seed(o.seed);
  }

  const BraidStructure& g() const { return *g_; }

  Element element(const std::string& text) {
    if (!is_random(text)) return parse_word(*g_, text);
    const int len = std::stoi(text.substr(7));
    std::vector<Letter> w;
    std::uniform_int_distribution<std::size_t> pick(0, g_->atoms().size() - 1);
    for (int i = 0; i < len; ++i) {
      w.push_back({g_->atoms()[pick(rng_)], rng_() % 2 ? 1 : -1});
    }
    return left_normal_form(*g_, w);
  }

  std::string text(const Element& x) const { return format_element(*g_, x); }
  json        to_json(const Element& x) const { return element_to_json(*g_, x); }

  void print(const Element& x) const {
    if (opt_.format == "json") {
      std::cout << to_json(x).dump() << '\n';
    } else {
      std::cout << text(x) << '\n';
    }
  }

 private:
  static bool is_random(const std::string& w) { return w.rfind("random:", 0) == 0; }

  const Options&                  opt_;
  std::unique_ptr<BraidStructure> g_;
  std::mt19937_64                 rng_;
};

std::string simple_word(const BraidStructure& g, const Simple& s) { return g.word(s); }

int run_nf(const Options& o, const std::string& w) {
  Session s(o, {w});
  s.print(s.element(w));
  return kOk;
}

int run_slide(const Options& o, const std::string& w, long k) {
  Session s(o, {w});
  s.print(cyclic_sliding(s.element(w), k));
  return kOk;
}

int run_traj(const Options& o, const std::string& w) {
  Session    s(o, {w});
  const auto t = sliding_trajectory(s.element(w), o.budget.max_trajectory);
  if (o.format == "json") {
    json states = json::array(), prefixes = json::array();
    for (const auto& x : t.states) states.push_back(s.to_json(x));
    for (const auto& p : t.prefixes) prefixes.push_back(s.g().to_literal(p));
    std::cout << json{{"states", states}, {"prefixes", prefixes},
                      {"entry", t.entry}, {"period", t.period}}.dump()
              << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    std::cout << i << ": " << s.text(t.states[i]);
    if (i < t.prefixes.size()) std::cout << "   p = " << simple_word(s.g(), t.prefixes[i]);
    std::cout << '\n';
  }
  std::cout << "N = " << t.entry << ", M = " << t.period << '\n';
  return kOk;
}

int run_sc(const Options& o, const std::string& w) {
  Session    s(o, {w});
  const auto graph = compute_scg(s.element(w), o.budget);
  std::set<Element> sorted(graph.vertices.begin(), graph.vertices.end());
  if (o.format == "json") {
    json out = json::array();
    for (const auto& v : sorted) out.push_back(s.to_json(v));
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& v : sorted) std::cout << s.text(v) << '\n';
  }
  return kOk;
}

int run_scg(const Options& o, const std::string& w, bool dot) {
  Session    s(o, {w});
  const auto graph = compute_scg(s.element(w), o.budget);
  if (dot) {
    std::cout << "digraph scg {\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
      std::cout << "  v" << i << " [label=\"" << s.text(graph.vertices[i]) << "\"];\n";
    }
    for (const auto& a : graph.arrows) {
      std::cout << "  v" << a.source << " -> v" << a.target << " [label=\""
                << simple_word(s.g(), a.conjugator) << "\"];\n";
    }
    std::cout << "}\n";
    return kOk;
  }
  if (o.format == "json") {
    json vertices = json::array(), arrows = json::array();
    for (const auto& v : graph.vertices) vertices.push_back(s.to_json(v));
    for (const auto& a : graph.arrows) {
      arrows.push_back({{"source", a.source},
                        {"target", a.target},
                        {"conjugator", s.g().to_literal(a.conjugator)}});
    }
    std::cout << json{{"vertices", vertices}, {"arrows", arrows}}.dump() << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    std::cout << "v" << i << ": " << s.text(graph.vertices[i]) << '\n';
  }
  for (const auto& a : graph.arrows) {
    std::cout << "v" << a.source << " -> v" << a.target << " by "
              << simple_word(s.g(), a.conjugator) << '\n';
  }
  return kOk;
}

int run_conj(const Options& o, const std::string& w1, const std::string& w2) {
  Session       s(o, {w1, w2});
  const Element x = s.element(w1);
  const Element y = s.element(w2);
  const auto    r = solve_csp(x, y, o.budget);
  if (r && !(conjugate(x, r->conjugator) == y)) {
    throw std::logic_error("witness failed verification");
  }
  if (o.format == "json") {
    json out{{"conjugate", r.has_value()}};
    if (r) out["witness"] = s.to_json(r->conjugator);
    std::cout << out.dump() << '\n';
  } else if (r) {
    std::cout << "YES\n" << s.text(r->conjugator) << '\n';
  } else {
    std::cout << "NO\n";
  }
  return r ? kOk : kNotConjugate;
}

int run_table(const Options& o, long i) {
  if (o.n < 2) throw std::invalid_argument("table needs --n");
  Session    s(o, {});
  const auto row = summarize(s.g(), i, enumerate_length_one_classes(s.g(), i, o.budget));
  if (o.format == "json") {
    std::cout << row_to_json(row).dump() << '\n';
  } else if (o.format == "csv") {
    write_csv(std::cout, {row});
  } else {
    std::istringstream keys(csv_header()), values(csv_line(row));
    std::string        key, value;
    while (std::getline(keys, key, ',') && std::getline(values, value, ',')) {
      std::cout << key << ": " << value << '\n';
    }
  }
  if (row.skipped > 0) {
    std::cerr << row.skipped << " classes skipped: budget exhausted\n";
    return kBudget;
  }
  return kOk;
}

int run_rigid(const Options& o, const std::string& w, long k) {
  Session       s(o, {w});
  const Element x = s.element(w);
  const bool    r = is_rigid(x);
  if (o.format == "json") {
    json chain = json::array();
    for (long i = 0; i <= k; ++i) chain.push_back(s.to_json(prefix_product(x, i)));
    std::cout << json{{"rigid", r}, {"chain", chain}}.dump() << '\n';
    return kOk;
  }
  std::cout << (r ? "rigid" : "not rigid") << '\n';
  for (long i = 0; i <= k; ++i) {
    std::cout << "P_" << i << " = " << s.text(prefix_product(x, i)) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy in braid groups via sliding circuits"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--structure", o.structure, "Garside structure")
      ->check(CLI::IsMember({"artin", "bkl"}));
  app.add_option("--n", o.n, "number of strands (inferred from words if omitted)")
      ->check(CLI::Range(2, 16));
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "seed for random:<length> words");
  app.add_option("--max-vertices", o.budget.max_vertices, "vertex budget");
  app.add_option("--max-trajectory", o.budget.max_trajectory, "sliding trajectory budget");
  app.add_option("--max-candidates", o.budget.max_candidates,
                 "candidate budget for minimal conjugators");
  app.add_option("--threads", o.budget.threads, "worker threads for graph arrows")
      ->check(CLI::Range(1u, 256u));

  std::string w1, w2;
  long        k   = 1;
  long        inf = 0;
  bool        dot = false;

  auto* nf = app.add_subcommand("nf", "left normal form");
  nf->add_option("word", w1)->required();
  auto* slide = app.add_subcommand("slide", "iterated cyclic sliding");
  slide->add_option("word", w1)->required();
  slide->add_option("-k", k, "number of slidings")->check(CLI::NonNegativeNumber);
  auto* traj = app.add_subcommand("traj", "sliding trajectory with prefixes");
  traj->add_option("word", w1)->required();
  auto* sc = app.add_subcommand("sc", "set of sliding circuits");
  sc->add_option("word", w1)->required();
  auto* scg = app.add_subcommand("scg", "sliding circuits graph");
  scg->add_option("word", w1)->required();
  scg->add_flag("--dot", dot, "graphviz output");
  auto* conj = app.add_subcommand("conj", "conjugacy test with witness");
  conj->add_option("word1", w1)->required();
  conj->add_option("word2", w2)->required();
  auto* table = app.add_subcommand("table", "class statistics for summit length one");
  table->add_option("--inf", inf, "summit infimum");
  auto* rigid = app.add_subcommand("rigid", "rigidity and prefix products");
  rigid->add_option("word", w1)->required();
  rigid->add_option("-k", k, "chain length")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }
  if (o.format == "csv" && !table->parsed()) {
    std::cerr << "error: csv output is only available for table\n";
    return kError;
  }
  if (rigid->parsed() && rigid->count("-k") == 0) k = 10;

  try {
    if (nf->parsed()) return run_nf(o, w1);
    if (slide->parsed()) return run_slide(o, w1, k);
    if (traj->parsed()) return run_traj(o, w1);
    if (sc->parsed()) return run_sc(o, w1);
    if (scg->parsed()) return run_scg(o, w1, dot);
    if (conj->parsed()) return run_conj(o, w1, w2);
    if (table->parsed()) return run_table(o, inf);
    if (rigid->parsed()) return run_rigid(o, w1, k);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
