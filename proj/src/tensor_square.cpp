#include "klc/tensor_square.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klc {

namespace {

SparseVec unit(int i) { return {{i, LaurentPoly(1)}}; }

Tableau insertion_tableau(const Perm& w) { return rsk(w.word()).P; }

const Perm& element_of(const WGraph& g, int i) {
  const auto& e = g.vertex(i).element;
  if (!e) throw std::invalid_argument("vertex " + g.vertex(i).id + " carries no element");
  return *e;
}

Tableau affine_label(const WGraph& g, int i) {
  const auto& win = g.vertex(i).affine_window;
  if (win.empty()) throw std::invalid_argument("vertex " + g.vertex(i).id + " carries no affine window");
  return rsk(win).P;
}

std::string vec_str(const SparseVec& v) {
  std::string s;
  for (const auto& [i, p] : v) s += (s.empty() ? "" : " + ") + std::string("(") + p.str() + ")#" + std::to_string(i);
  return s.empty() ? "0" : s;
}

SparseVec difference(SparseVec a, const SparseVec& b) {
  add_scaled(a, LaurentPoly(-1), b);
  drop_zeros(a);
  return a;
}

// rank over Q of an integer matrix given by rows
int rank_q(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto r = static_cast<std::size_t>(rank);
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const mpq_class f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++rank;
  }
  return rank;
}

// the image is a union of cells closed under going down in the cell order
bool is_cellular_submodule(const WGraph& g, const std::vector<int>& keep) {
  const CellDecomposition c = cells(g);
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : keep) in[static_cast<std::size_t>(v)] = 1;
  for (int a = 0; a < c.count(); ++a) {
    const auto& cell = c.cells[static_cast<std::size_t>(a)];
    if (!in[static_cast<std::size_t>(cell.front())]) continue;
    for (int b = 0; b < c.count(); ++b) {
      if (!c.leq(b, a)) continue;
      for (int v : c.cells[static_cast<std::size_t>(b)])
        if (!in[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

}  // namespace

WGraph second_level_base(const WGraph& gamma, bool affine) {
  const int n = gamma.n();
  if (gamma.generators() != ParabolicSet::full(n)) throw std::invalid_argument("second level: Gamma must be an S_n-graph");
  if (affine) return rotate_twice(gamma);
  return gamma.restrict(ParabolicSet::without(n, 2));
}

namespace {

InducedModule make_e1(const WGraph& gamma, bool affine) {
  const int n = gamma.n();
  if (n < 3) throw std::invalid_argument("degree two modules need n >= 3");
  if (affine) return affine_degree1(gamma);
  return InducedModule(ParabolicSet::full(n), ParabolicSet::Jprime(n, n - 1), gamma.restrict(ParabolicSet::Jprime(n, n - 1)));
}

InducedModule make_e2(const InducedModule& e1, bool affine) {
  const int n = e1.ambient().n;
  if (affine) return affine_degree1(e1.graph());
  return InducedModule(ParabolicSet::full(n), ParabolicSet::Jprime(n, n - 1),
                       e1.graph().restrict(ParabolicSet::Jprime(n, n - 1)));
}

InducedModule make_f2(const WGraph& gamma, bool affine) {
  const int n = gamma.n();
  const ParabolicSet J = ParabolicSet::Jprime(n, n - 2);
  return InducedModule(ParabolicSet::full(n), J, second_level_base(gamma, affine).restrict(J));
}

}  // namespace

SquareModule::SquareModule(const WGraph& gamma, bool affine)
    : affine_(affine),
      gamma_(gamma),
      e1_(make_e1(gamma, affine)),
      e2_(make_e2(e1_, affine)),
      f2_(make_f2(gamma, affine)) {
  const int N = n();
  reduced_.assign(static_cast<std::size_t>(e2_.size()), -1);
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l)
      for (int g = 0; g < gamma_.size(); ++g) {
        int target = -1;
        if (!affine_ && l >= 2) target = f2_.index(coset_akl(N, k, l), g);
        if (affine_ && l < N) target = f2_.index(coset_akl(N, k, l + 1), g);
        reduced_[static_cast<std::size_t>(e2_index(k, l, g))] = target;
      }
}

int SquareModule::e2_index(int k, int l, int gamma) const {
  const int N = n();
  return e2_.index(coset_a(N, k), e1_.index(coset_a(N, l), gamma));
}

std::vector<int> SquareModule::reduced_indices() const {
  std::vector<int> out;
  for (int i = 0; i < e2_.size(); ++i)
    if (reduced_image(i) >= 0) out.push_back(i);
  return out;
}

std::vector<int> SquareModule::nonreduced_indices() const {
  std::vector<int> out;
  for (int i = 0; i < e2_.size(); ++i)
    if (reduced_image(i) < 0) out.push_back(i);
  return out;
}

Tableau SquareModule::label2(int i) const {
  if (affine_) return affine_label(e2_.graph(), i);
  return insertion_tableau(element_of(e2_.graph(), i));
}

Tableau SquareModule::label1(int i) const {
  const int j = e2_.base_of(i);
  if (affine_) return affine_label(e1_.graph(), j);
  return insertion_tableau(element_of(e1_.graph(), j));
}

Tableau SquareModule::label0(int i) const {
  return insertion_tableau(element_of(gamma_, e1_.base_of(e2_.base_of(i))));
}

LocalSequence SquareModule::e2_sequence(int i) const {
  if (affine_) return affine_e2_sequence(label2(i), label1(i), label0(i));
  return finite_e2_sequence(label2(i), label1(i), label0(i));
}

// ---------------------------------------------------------------------------

CheckResult check_reduced_split(const SquareModule& m) {
  CheckResult r;
  const WGraph& g = m.e2().graph();
  const auto red = m.reduced_indices();
  const auto nonred = m.nonreduced_indices();
  r.expect(static_cast<int>(red.size()) == m.f2().size(), "reduced part has the size of F2");
  std::vector<int> map;
  for (int i : red) map.push_back(m.reduced_image(i));
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  r.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "reduced map is injective");
  if (!r.ok) return r;
  r.expect(is_isomorphism(g.induced_subgraph(red), m.f2().graph(), map), "reduced part is isomorphic to F2");
  const CellDecomposition c = cells(g);
  r.expect(is_cellular_subquotient(g, c, red), "reduced part is a cellular subquotient");
  // finite: non-reduced part is the submodule; affine: the reduced part is
  if (m.affine())
    r.expect(is_cellular_submodule(g, red), "reduced part is a cellular submodule");
  else
    r.expect(is_cellular_submodule(g, nonred), "non-reduced part is a cellular submodule");
  return r;
}

CheckResult check_alpha_square(const SquareModule& m) {
  CheckResult r;
  if (m.affine()) return r;
  const int n = m.n();
  const InducedModule& e1 = m.e1();
  const InducedModule& e2 = m.e2();
  const int one = e1.coset_index(Perm::identity(n));
  for (int k = 1; k <= n; ++k)
    for (int g = 0; g < m.gamma().size(); ++g) {
      SparseVec expected;
      for (const auto& [x, p] : e1.canonical(e1.index(coset_a(n, k), g)))
        expected.emplace(e2.index(e1.coset_of(x), e1.index(one, e1.base_of(x))), p);
      const int i = m.e2_index(k, 1, g);
      r.expect(e2.canonical(i) == expected, "H(x)alpha at " + e2.vertex_id(i));
    }
  return r;
}

CheckResult check_tau_square(const SquareModule& m) {
  CheckResult r;
  if (m.affine()) return r;
  const int n = m.n();
  const InducedModule& e1 = m.e1();
  const InducedModule& e2 = m.e2();
  const InducedModule& f2 = m.f2();
  std::vector<Perm> y(static_cast<std::size_t>(n + 1));
  for (int k = 2; k <= n; ++k) y[static_cast<std::size_t>(k)] = coset_a(n, k) * Perm::simple(n, 1);
  auto tau = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) {
      const Perm& w = e2.coset_rep(i);
      for (const auto& [j, p] : e1.canonical(e2.base_of(i))) {
        const int k = e1.coset_rep(j).length() + 1;
        if (k == 1) continue;
        add_scaled(out, c * p, f2.tensor(w * y[static_cast<std::size_t>(k)], unit(e1.base_of(j))));
      }
    }
    drop_zeros(out);
    return out;
  };
  for (int i = 0; i < e2.size(); ++i) {
    const SparseVec image = tau(e2.canonical(i));
    const int t = m.reduced_image(i);
    const SparseVec expected = t < 0 ? SparseVec{} : f2.canonical(t);
    r.expect(image == expected, "H(x)tau at " + e2.vertex_id(i) + ": " + vec_str(image));
  }
  return r;
}

// ---------------------------------------------------------------------------

SecondLevel second_level(const WGraph& gamma, bool affine) {
  const int n = gamma.n();
  WGraph gp = second_level_base(gamma, affine);
  const ParabolicSet K = ParabolicSet::without(n, 2);
  InducedModule lambda(K, ParabolicSet::Jprime(n, n - 2), gp.restrict(ParabolicSet::Jprime(n, n - 2)));
  InducedModule g(ParabolicSet::full(n), K, gp);
  std::vector<int> minus;
  for (int i = 0; i < lambda.size(); ++i)
    if (lambda.descents(i).contains(1)) minus.push_back(i);
  return SecondLevel{std::move(gp), std::move(lambda), std::move(g), std::move(minus)};
}

CheckResult check_z2(const SquareModule& m, const SecondLevel& s) {
  CheckResult r;
  const int n = m.n();
  const InducedModule& lam = s.lambda;
  const Perm s1 = Perm::simple(n, 1);
  // Lambda^- is the coset s_1
  std::vector<int> coset_s1;
  for (int i = 0; i < lam.size(); ++i)
    if (lam.coset_rep(i) == s1) coset_s1.push_back(i);
  r.expect(coset_s1 == s.lambda_minus, "Lambda^- is the coset of s_1");

  // kernel of C_{s_1} - [2]
  const WGraph& lg = lam.graph();
  const LaurentPoly two = u_integer(2);
  for (int i : s.lambda_minus) {
    SparseVec v = lg.act_Cs(1, unit(i));
    add_scaled(v, -two, unit(i));
    drop_zeros(v);
    r.expect(v.empty(), "C_{s1} - [2] kills " + lg.vertex(i).id);
  }
  std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(lg.size()),
                                           std::vector<mpq_class>(static_cast<std::size_t>(lg.size()), 0));
  for (int j = 0; j < lg.size(); ++j) {
    SparseVec v = lg.act_Cs(1, unit(j));
    add_scaled(v, -two, unit(j));
    for (const auto& [i, p] : v) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mpq_class(p.eval_at_one());
  }
  const int kernel = lg.size() - rank_q(rows);
  r.expect(kernel == static_cast<int>(s.lambda_minus.size()),
           "kernel of C_{s1} - [2] at u = 1 has dimension " + std::to_string(kernel));

  // Z^2 inside F2
  const InducedModule z2(ParabolicSet::full(n), ParabolicSet::without(n, 2), lg.subquotient(s.lambda_minus));
  const InducedModule& f2 = m.f2();
  std::vector<int> map;
  for (int i = 0; i < z2.size(); ++i) {
    const int li = s.lambda_minus[static_cast<std::size_t>(z2.base_of(i))];
    map.push_back(f2.index(z2.coset_rep(i) * lam.coset_rep(li), lam.base_of(li)));
  }
  r.expect(is_isomorphism(z2.graph(), f2.graph().induced_subgraph(map), [&] {
             std::vector<int> id(map.size());
             for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
             return id;
           }()),
           "Z^2 is isomorphic to its image in F2");
  r.expect(is_cellular_submodule(f2.graph(), map), "Z^2 is a cellular submodule of F2");
  for (int i = 0; i < z2.size(); ++i) {
    const SparseVec image = nested_map(z2, lam, s.lambda_minus, f2, z2.canonical(i));
    r.expect(image == f2.canonical(map[static_cast<std::size_t>(i)]), "Z^2 canonical element " + z2.vertex_id(i));
  }
  return r;
}

CheckResult check_nested(const SquareModule& m, const SecondLevel& s) {
  CheckResult r;
  const int n = m.n();
  const InducedModule& lam = s.lambda;
  const InducedModule outer(ParabolicSet::full(n), ParabolicSet::without(n, 2), lam.graph());
  std::vector<int> ident(static_cast<std::size_t>(lam.size()));
  for (int i = 0; i < lam.size(); ++i) ident[static_cast<std::size_t>(i)] = i;
  const InducedModule& f2 = m.f2();
  for (int i = 0; i < outer.size(); ++i) {
    const int li = outer.base_of(i);
    const int target = f2.index(outer.coset_rep(i) * lam.coset_rep(li), lam.base_of(li));
    const SparseVec image = nested_map(outer, lam, ident, f2, outer.canonical(i));
    r.expect(image == f2.canonical(target), "two-step canonical element " + outer.vertex_id(i));
  }
  return r;
}

SparseVec beta_tilde(const SquareModule& m, const SecondLevel& s, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) add_scaled(out, c, s.g.tensor(m.f2().coset_rep(i), unit(m.f2().base_of(i))));
  drop_zeros(out);
  return out;
}

SparseVec reduce_mod_lstar(const SecondLevel& s, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, p] : v) {
    if (!s.gamma_prime.descents(s.g.base_of(i)).contains(1)) {
      out.emplace(i, p);
      continue;
    }
    LaurentPoly rest;
    for (const auto& t : p.terms())
      if (t.exp > 0) rest += LaurentPoly::monomial(t.exp, t.coeff);
    if (!rest.is_zero()) out.emplace(i, rest);
  }
  return out;
}

CheckResult check_beta_tilde(const SquareModule& m, const SecondLevel& s) {
  CheckResult r;
  const int n = m.n();
  const InducedModule& f2 = m.f2();
  const InducedModule& g = s.g;
  const Perm s1 = Perm::simple(n, 1);
  const LaurentPoly two = u_integer(2);
  for (int c = 0; c < g.coset_count(); ++c) {
    const Perm& w = g.cosets()[static_cast<std::size_t>(c)];
    for (int d = 0; d < g.base_size(); ++d) {
      const bool minus = s.gamma_prime.descents(d).contains(1);
      const int gi = g.index(c, d);
      const std::string at = g.vertex_id(gi);
      const SparseVec top = beta_tilde(m, s, f2.canonical(f2.index(w * s1, d)));
      const SparseVec bottom = beta_tilde(m, s, f2.canonical(f2.index(w, d)));
      if (minus) {
        r.expect(top == scaled(two, g.canonical(gi)), "C'_{ws1} -> [2]C'_w at " + at);
        r.expect(reduce_mod_lstar(s, bottom).empty(), "C'_w -> 0 mod L* at " + at);
      } else {
        r.expect(reduce_mod_lstar(s, top).empty(), "C'_{ws1} -> 0 mod L* at " + at);
        r.expect(reduce_mod_lstar(s, difference(bottom, g.canonical(gi))).empty(), "C'_w -> C'_w mod L* at " + at);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<SymWedgeTag> algebraic_tags(const SquareModule& m) {
  const int n = m.n();
  const WGraph gp = second_level_base(m.gamma(), m.affine());
  const ParabolicSet K = ParabolicSet::without(n, 2);
  const Perm s1 = Perm::simple(n, 1);
  std::vector<SymWedgeTag> out;
  for (int i = 0; i < m.e2().size(); ++i) {
    const int t = m.reduced_image(i);
    if (t < 0) {
      out.push_back(SymWedgeTag::NonReduced);
      continue;
    }
    const bool in_s1 = parabolic_decompose(m.f2().coset_rep(t), K, CosetSide::Left).parabolic == s1;
    const bool minus = gp.descents(m.f2().base_of(t)).contains(1);
    out.push_back(in_s1 == minus ? SymWedgeTag::Sym : SymWedgeTag::Wedge);
  }
  return out;
}

std::vector<SymWedgeTag> combinatorial_tags(const SquareModule& m) {
  std::vector<SymWedgeTag> out;
  for (int i = 0; i < m.e2().size(); ++i) {
    const LocalSequence seq = m.e2_sequence(i);
    out.push_back(m.affine() ? combinatorial_tag_affine(seq) : combinatorial_tag_finite(seq));
  }
  return out;
}

std::vector<CellTag> tag_cells(const SquareModule& m) {
  const auto alg = algebraic_tags(m);
  const auto comb = combinatorial_tags(m);
  const CellDecomposition c = cells(m.e2().graph());
  std::vector<CellTag> out;
  for (const auto& cell : c.cells) {
    const int v0 = cell.front();
    CellTag t{cell, m.label1(v0), m.label2(v0), alg[static_cast<std::size_t>(v0)], comb[static_cast<std::size_t>(v0)], true};
    for (int v : cell)
      if (alg[static_cast<std::size_t>(v)] != t.algebraic || comb[static_cast<std::size_t>(v)] != t.combinatorial ||
          m.label1(v) != t.label1 || m.label2(v) != t.label2)
        t.uniform = false;
    out.push_back(std::move(t));
  }
  return out;
}

WGraph sign_graph(int n) {
  const ParabolicSet S = ParabolicSet::full(n);
  WGraph g = one_vertex_graph(S, S.gens, "e+");
  g.vertex(0).element = longest_element(S);
  return g;
}

}  // namespace klc
