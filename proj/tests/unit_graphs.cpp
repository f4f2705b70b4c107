#include <doctest.h>

#include <set>

#include "klc/hecke.hpp"
#include "klc/induce.hpp"
#include "klc/tensor_square.hpp"
#include "klc/wgraph.hpp"

using namespace klc;

namespace {
bool valid(const WGraph& g) {
  std::string why;
  const bool ok = g.validate(&why);
  if (!ok) MESSAGE(why);
  return ok;
}
}  // namespace

TEST_CASE("regular graph matches multiplication by C'_s") {
  const int n = 4;
  const WGraph g = regular_wgraph(n);
  REQUIRE(g.size() == 24);
  CHECK(valid(g));
  const KLBasis& kl = kl_basis(n);
  for (const Perm& w : all_perms(n)) {
    const int v = g.index_of(w.word_str());
    for (int s = 1; s < n; ++s) {
      const SparseVec got = g.act_Cs(s, {{v, LaurentPoly(1)}});
      const auto want = expand(kl.element(Perm::simple(n, s)) * kl.element(w), HeckeBasis::Cprime);
      SparseVec w_vec;
      for (const auto& [x, c] : want)
        if (!c.is_zero()) w_vec[g.index_of(x.word_str())] = c;
      CHECK(got == w_vec);
    }
  }
}

TEST_CASE("cells of the regular graph are left cells") {
  for (int n = 2; n <= 5; ++n) {
    const WGraph g = regular_wgraph(n);
    const CellDecomposition c = cells(g);
    std::size_t syt = 0;
    for (const auto& p : partitions_of(n)) syt += standard_tableaux(p).size();
    CHECK(static_cast<std::size_t>(c.count()) == syt);
    for (const auto& cell : c.cells) {
      std::set<Tableau> qs;
      for (int v : cell) qs.insert(rsk(g.vertex(v).element->word()).P);
      CHECK(qs.size() == 1);
    }
  }
}

TEST_CASE("induced modules are W-graphs") {
  const int n = 4;
  const WGraph reg = regular_wgraph(3);
  for (const auto& J : {ParabolicSet::J(n, 3), ParabolicSet::Jprime(n, 3), ParabolicSet::parse(n, "1,3")}) {
    const WGraph base = J == ParabolicSet::parse(n, "1,3") ? one_vertex_graph(J, GenSet{1}, "x") : sign_graph(n).restrict(J);
    const InducedModule M(ParabolicSet::full(n), J, base, {std::nullopt, true, {}, {}});
    CHECK(valid(M.graph()));
    for (int i = 0; i < M.size(); ++i) CHECK(M.P(i, i) == LaurentPoly(1));
  }
  // inducing from the trivial subgroup gives the regular graph
  const InducedModule R(ParabolicSet::full(3), ParabolicSet::none(3), one_vertex_graph(ParabolicSet::none(3), {}, "e"));
  CHECK(is_isomorphic(R.graph(), regular_wgraph(3)).has_value());
}

TEST_CASE("easy canonical elements") {
  const int n = 4;
  const ParabolicSet J = ParabolicSet::J(n, 3);
  const InducedModule M(ParabolicSet::full(n), J, sign_graph(n).restrict(J));
  for (int k = 1; k <= n; ++k) CHECK(easy_canonical(M, k, 0) == M.canonical(M.index(coset_b(n, k), 0)));
}

TEST_CASE("isomorphism test") {
  const WGraph g = regular_wgraph(3);
  const auto m = is_isomorphic(g, g);
  REQUIRE(m.has_value());
  CHECK(is_isomorphism(g, g, *m));
  CHECK(!is_isomorphic(g, sign_graph(3)).has_value());
}

TEST_CASE("degree two square on e+ at n = 3") {
  for (bool affine : {false, true}) {
    const SquareModule m(sign_graph(3), affine);
    CHECK(m.e2().size() == 9);
    CHECK(valid(m.e2().graph()));
    CHECK(check_reduced_split(m).ok);
    for (const auto& t : tag_cells(m)) {
      CHECK(t.uniform);
      CHECK(t.algebraic == t.combinatorial);
    }
  }
}

TEST_CASE("graph export") {
  const WGraph g = regular_wgraph(3);
  const std::string j = to_json(g);
  CHECK(j.find("\"vertices\"") != std::string::npos);
  CHECK(to_dot(g).rfind("digraph", 0) == 0);
}
