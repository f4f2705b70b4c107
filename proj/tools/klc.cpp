// klc: command line front end for the KL cell library.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "klc/experiments.hpp"
#include "klc/hecke.hpp"
#include "klc/induce.hpp"
#include "klc/tableau.hpp"
#include "klc/tensor_square.hpp"
#include "klc/wgraph.hpp"

namespace {

using namespace klc;
using json = nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct Globals {
  std::optional<int> max_n;
  int threads = 1;
  std::string out;
  std::uint64_t seed = 1;
};

struct GraphSpec {
  int n = 4;
  std::string graph = "regular";  // regular | induce
  std::string j;                  // for induce
  std::string base = "regular";   // trivial | sign | regular | cell:TABLEAU
  bool affine = false;
};

void check_cap(const Globals& g, int n, int cap) {
  const int c = g.max_n.value_or(cap);
  if (n > c) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(c) + "; raise it with --max-n");
}

WGraph base_graph(int n, const std::string& spec) {
  if (spec == "trivial") return one_vertex_graph(ParabolicSet::full(n), {}, "triv");
  if (spec == "sign" || spec == "e+") return sign_graph(n);
  if (spec == "regular") return regular_wgraph(n);
  if (spec.rfind("cell:", 0) == 0) {
    const Tableau want = Tableau::parse(spec.substr(5));
    const WGraph reg = regular_wgraph(n);
    std::vector<int> keep;
    for (int v = 0; v < reg.size(); ++v)
      if (rsk(reg.vertex(v).element->word()).P == want) keep.push_back(v);
    if (keep.empty()) throw std::invalid_argument("no cell of the regular graph has label " + spec.substr(5));
    return reg.subquotient(keep);
  }
  throw std::invalid_argument("unknown base '" + spec + "' (trivial, sign, regular or cell:TABLEAU)");
}

WGraph build(const Globals& g, const GraphSpec& s) {
  if (s.n < 1) throw std::invalid_argument("n must be positive");
  if (s.graph == "regular") {
    check_cap(g, s.n, kCombinatorialCap);
    return regular_wgraph(s.n);
  }
  if (s.graph != "induce") throw std::invalid_argument("unknown graph '" + s.graph + "' (regular or induce)");
  check_cap(g, s.n, kAlgebraicCap);
  const WGraph base = base_graph(s.n, s.base);
  if (s.affine) return affine_degree1(base).graph();
  const ParabolicSet J = ParabolicSet::parse(s.n, s.j);
  return InducedModule(ParabolicSet::full(s.n), J, base.restrict(J)).graph();
}

void add_graph_options(CLI::App* cmd, GraphSpec& s, bool choose_graph) {
  cmd->add_option("--n", s.n, "rank of S_n")->required();
  if (choose_graph) cmd->add_option("--graph", s.graph, "regular or induce")->check(CLI::IsMember({"regular", "induce"}));
  cmd->add_option("--j", s.j, "generators of J, e.g. 1,2 (default empty)");
  cmd->add_option("--base", s.base, "trivial, sign, regular or cell:TABLEAU");
  cmd->add_flag("--affine", s.affine, "degree one affine module instead of H (x)_J");
}

void write_out(const Globals& g, const std::string& name, const std::string& text) {
  if (g.out.empty()) return;
  std::filesystem::create_directories(g.out);
  std::ofstream f(std::filesystem::path(g.out) / name);
  if (!f) throw std::runtime_error("cannot write " + (std::filesystem::path(g.out) / name).string());
  f << text;
}

int run_kl(const Globals& g, int n, const std::string& w_word, const std::string& x_word) {
  check_cap(g, n, kCombinatorialCap);
  const KLBasis& kl = kl_basis(n);
  const SymmetricGroup& grp = kl.group();
  json out = json::object();
  auto column = [&](const Perm& w) {
    json col = json::object();
    for (const auto& [x, c] : kl.column(grp.index(w))) col[grp.element(x).word_str()] = c.str();
    return col;
  };
  if (!x_word.empty() && w_word.empty()) throw std::invalid_argument("--x needs --w");
  if (!w_word.empty()) {
    const Perm w = Perm::parse_word(w_word);
    if (w.n() != n) throw std::invalid_argument("--w is not a permutation of 1.." + std::to_string(n));
    if (!x_word.empty()) {
      const Perm x = Perm::parse_word(x_word);
      if (x.n() != n) throw std::invalid_argument("--x is not a permutation of 1.." + std::to_string(n));
      std::cout << kl.P(x, w).str() << "\n";
      return kOk;
    }
    out[w.word_str()] = column(w);
  } else {
    for (int i = 0; i < grp.size(); ++i) out[grp.element(i).word_str()] = column(grp.element(i));
  }
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  write_out(g, "kl.json", text);
  return kOk;
}

int run_cells(const Globals& g, const GraphSpec& s) {
  const WGraph G = build(g, s);
  const CellDecomposition c = cells(G);
  json out = json::array();
  for (int a = 0; a < c.count(); ++a) {
    const auto& cell = c.cells[static_cast<std::size_t>(a)];
    json ids = json::array();
    for (int v : cell) ids.push_back(G.vertex(v).id);
    json below = json::array();
    for (int b = 0; b < c.count(); ++b)
      if (b != a && c.leq(b, a)) below.push_back(b);
    json cj = {{"cell", a}, {"size", cell.size()}, {"vertices", ids}, {"below", below}};
    const auto& e = G.vertex(cell.front()).element;
    if (e) cj["label"] = rsk(e->word()).P.str();
    out.push_back(cj);
  }
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  write_out(g, "cells.json", text);
  return kOk;
}

int run_induce(const Globals& g, const GraphSpec& s) {
  check_cap(g, s.n, kAlgebraicCap);
  const WGraph base = base_graph(s.n, s.base);
  const ParabolicSet J = ParabolicSet::parse(s.n, s.j);
  const InducedModule M =
      s.affine ? affine_degree1(base) : InducedModule(ParabolicSet::full(s.n), J, base.restrict(J));
  json out = json::array();
  for (int i = 0; i < M.size(); ++i) out.push_back(json::parse(M.canonical_json(i)));
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  write_out(g, "induce.json", text);
  write_out(g, "graph.json", to_json(M.graph()));
  return kOk;
}

int run_export(const Globals& g, const GraphSpec& s, const std::string& format) {
  const WGraph G = build(g, s);
  const std::string text = format == "dot" ? to_dot(G) : to_json(G);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << "\n";
  write_out(g, "graph." + format, text);
  return kOk;
}

int report(const Globals& g, const ExperimentReport& r) {
  json j = r.to_json();
  std::cout << j.dump(2) << "\n";
  std::cerr << r.name << ": " << status_name(r.status) << "\n";
  if (!g.out.empty()) {
    j.erase("runtime");  // files stay identical between runs
    write_out(g, "report.json", j.dump(2) + "\n");
    for (const auto& [name, text] : r.artifacts) write_out(g, name, text);
  }
  return r.status == Status::Mismatch ? kMismatch : kOk;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells of induced and tensor W-graphs for S_n"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-n", g.max_n, "raise the size caps (default " + std::to_string(kAlgebraicCap) + " for canonical bases, " +
                                         std::to_string(kCombinatorialCap) + " for tableaux)");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "directory for report.json and artifacts");
  app.add_option("--seed", g.seed, "seed for the randomized oracles");

  int kl_n = 3;
  std::string kl_w, kl_x;
  auto* kl = app.add_subcommand("kl", "KL polynomials: the C'_w in the T basis, or one coefficient");
  kl->add_option("--n", kl_n, "rank of S_n")->required();
  kl->add_option("--w", kl_w, "word of w");
  kl->add_option("--x", kl_x, "word of x; prints the coefficient of T_x in C'_w");

  GraphSpec cell_spec;
  auto* cells_cmd = app.add_subcommand("cells", "cells and their order for a W-graph");
  add_graph_options(cells_cmd, cell_spec, true);

  GraphSpec ind_spec;
  auto* induce = app.add_subcommand("induce", "canonical basis of H (x)_J Res_J base");
  add_graph_options(induce, ind_spec, false);

  GraphSpec exp_spec;
  std::string format = "json";
  auto* exp = app.add_subcommand("export", "write a W-graph as JSON or Graphviz");
  add_graph_options(exp, exp_spec, true);
  exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::string name;
  std::optional<int> exp_n;
  auto* verify = app.add_subcommand("verify", "run a checker: " + joined(verify_names()));
  auto* repro = app.add_subcommand("repro", "reproduce a worked example: " + joined(repro_names()));
  auto* u1 = app.add_subcommand("check-u1", "compare with S_n-modules at u = 1: " + joined(u1_names()));
  for (auto* c : {verify, repro, u1}) {
    c->add_option("name", name, "experiment")->required();
    c->add_option("--n", exp_n, "size (default depends on the experiment)");
  }
  auto* list = app.add_subcommand("list", "list experiment names");

  CLI11_PARSE(app, argc, argv);
  if (g.max_n)
    std::cerr << "warning: size caps raised to " << *g.max_n << "; time and memory grow factorially in n\n";
  try {
    if (kl->parsed()) return run_kl(g, kl_n, kl_w, kl_x);
    if (cells_cmd->parsed()) return run_cells(g, cell_spec);
    if (induce->parsed()) return run_induce(g, ind_spec);
    if (exp->parsed()) return run_export(g, exp_spec, format);
    if (list->parsed()) {
      std::cout << "repro: " << joined(repro_names()) << "\nverify: " << joined(verify_names())
                << "\ncheck-u1: " << joined(u1_names()) << "\n";
      return kOk;
    }
    const ExperimentOptions opt{exp_n, g.max_n, g.threads, g.seed};
    if (verify->parsed()) return report(g, run_verify(name, opt));
    if (repro->parsed()) return report(g, run_repro(name, opt));
    return report(g, check_u1(name, opt));
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
