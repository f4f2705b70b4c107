#include "klc/induce.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "klc/affine.hpp"
#include "klc/hecke.hpp"

namespace klc {

namespace {

using BaseMemo = std::map<std::pair<Perm, int>, SparseVec>;

const SparseVec& base_action(const WGraph& base, const Perm& y, int gamma, BaseMemo& memo) {
  auto key = std::make_pair(y, gamma);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, base.act_Tw(y, {{gamma, LaurentPoly(1)}})).first->second;
}

SparseVec unit(int i) { return {{i, LaurentPoly(1)}}; }

}  // namespace

InducedModule::InducedModule(ParabolicSet ambient, ParabolicSet J, WGraph base, InduceOptions options)
    : ambient_(ambient), J_(J), base_(std::move(base)), decorate_(std::move(options.decorate)) {
  if (J_.n != ambient_.n || base_.n() != ambient_.n) throw std::invalid_argument("induce: ranks differ");
  if (!J_.gens.subset_of(ambient_.gens)) throw std::invalid_argument("induce: J is not inside the ambient group");
  if (!J_.gens.subset_of(base_.generators().gens))
    throw std::invalid_argument("induce: the base graph does not carry an action of W_J");
  cosets_ = min_coset_reps(J_, ambient_, CosetSide::Left);
  for (std::size_t c = 0; c < cosets_.size(); ++c) coset_pos_.emplace(cosets_[c], static_cast<int>(c));
  if (options.coset_names.empty()) {
    for (const auto& x : cosets_) names_.push_back(x.word_str());
  } else {
    if (options.coset_names.size() != cosets_.size()) throw std::invalid_argument("induce: wrong number of coset names");
    names_ = std::move(options.coset_names);
  }

  const int n = ambient_.n;
  steps_.assign(cosets_.size(), std::vector<Step>(static_cast<std::size_t>(n)));
  for (std::size_t c = 0; c < cosets_.size(); ++c) {
    const Perm& x = cosets_[c];
    for (int s : ambient_.gens.elements()) {
      Step& st = steps_[c][static_cast<std::size_t>(s)];
      const Perm sx = x.left_mul(s);
      if (x.has_left_descent(s)) {
        st.down = true;
        st.coset = coset_index(sx);
        continue;
      }
      auto dec = parabolic_decompose(sx, J_, CosetSide::Left);
      if (dec.parabolic.is_identity()) {
        st.coset = coset_index(sx);
      } else {
        auto word = dec.parabolic.reduced_word();
        if (word.size() != 1) throw std::logic_error("induce: s x leaves the coset by more than one generator");
        st.coset = static_cast<int>(c);
        st.t = word.front();
      }
    }
  }

  if (base_size() == 0) return;
  ICProblem problem;
  problem.size = size();
  problem.order.resize(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) problem.order[static_cast<std::size_t>(i)] = i;
  auto memo = std::make_shared<BaseMemo>();
  problem.bar_expand = [this, memo](int i) {
    SparseVec out;
    const int gamma = base_of(i);
    for (const auto& [y, r] : bar_T(coset_rep(i)).terms()) {
      auto dec = parabolic_decompose(y, J_, CosetSide::Left);
      const int c = coset_index(dec.coset_min);
      for (const auto& [d, q] : base_action(base_, dec.parabolic, gamma, *memo)) add_scaled(out, r * q, unit(index(c, d)));
    }
    return out;
  };
  ICSolveOptions opts;
  opts.targets = std::move(options.targets);
  opts.check_involution = options.check_involution;
  const bool full = !opts.targets;
  ic_ = solve_ic(problem, opts);
  if (full) build_graph();
}

int InducedModule::coset_index(const Perm& x) const {
  auto it = coset_pos_.find(x);
  if (it == coset_pos_.end()) throw std::out_of_range("induce: " + x.word_str() + " is not a coset representative");
  return it->second;
}

std::string InducedModule::vertex_id(int i) const {
  return coset_name(coset_of(i)) + "|" + base_.vertex(base_of(i)).id;
}

SparseVec InducedModule::bar_expand(int i) const {
  SparseVec out;
  const int gamma = base_of(i);
  for (const auto& [y, r] : bar_T(coset_rep(i)).terms()) {
    auto dec = parabolic_decompose(y, J_, CosetSide::Left);
    const int c = coset_index(dec.coset_min);
    for (const auto& [d, q] : base_.act_Tw(dec.parabolic, unit(gamma))) add_scaled(out, r * q, unit(index(c, d)));
  }
  return out;
}

SparseVec InducedModule::tensor(const Perm& y, const SparseVec& base_vec) const {
  auto dec = parabolic_decompose(y, J_, CosetSide::Left);
  const int c = coset_index(dec.coset_min);
  SparseVec out;
  for (const auto& [d, q] : base_.act_Tw(dec.parabolic, base_vec)) out.emplace(index(c, d), q);
  return out;
}

SparseVec InducedModule::act_Ts(int s, const SparseVec& v) const {
  if (!ambient_.contains(s)) throw std::invalid_argument("induce: generator outside the ambient group");
  static const LaurentPoly diff = LaurentPoly::u() - LaurentPoly::u_inv();
  SparseVec out;
  for (const auto& [i, c] : v) {
    const Step& st = steps_[static_cast<std::size_t>(coset_of(i))][static_cast<std::size_t>(s)];
    const int gamma = base_of(i);
    if (st.down) {
      add_scaled(out, c, unit(index(st.coset, gamma)));
      add_scaled(out, diff * c, unit(i));
    } else if (st.t == 0) {
      add_scaled(out, c, unit(index(st.coset, gamma)));
    } else {
      for (const auto& [d, q] : base_.act_Ts(st.t, unit(gamma))) add_scaled(out, c * q, unit(index(st.coset, d)));
    }
  }
  return out;
}

SparseVec InducedModule::act_Cs(int s, const SparseVec& v) const {
  SparseVec out = act_Ts(s, v);
  add_scaled(out, LaurentPoly::u_inv(), v);
  return out;
}

SparseVec InducedModule::act_Tw(const Perm& w, const SparseVec& v) const {
  SparseVec out = v;
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_Ts(*it, out);
  return out;
}

SparseVec InducedModule::from_canonical(const SparseVec& c) const {
  SparseVec out;
  for (const auto& [j, p] : c) add_scaled(out, p, canonical(j));
  return out;
}

GenSet InducedModule::descents(int i) const {
  GenSet d;
  const auto& row = steps_[static_cast<std::size_t>(coset_of(i))];
  for (int s : ambient_.gens.elements()) {
    const Step& st = row[static_cast<std::size_t>(s)];
    if (st.down || (st.t != 0 && base_.descents(base_of(i)).contains(st.t))) d.insert(s);
  }
  return d;
}

const WGraph& InducedModule::graph() const {
  if (!graph_) throw std::logic_error("induce: the graph needs the full canonical basis");
  return *graph_;
}

void InducedModule::build_graph() {
  WGraph g(ambient_);
  for (int i = 0; i < size(); ++i) {
    const Vertex& b = base_.vertex(base_of(i));
    Vertex v{vertex_id(i), descents(i), std::nullopt, {}};
    if (b.element) v.element = coset_rep(i) * parabolic_decompose(*b.element, J_, CosetSide::Right).parabolic;
    if (decorate_) decorate_(i, v);
    g.add_vertex(std::move(v));
  }
  for (int j = 0; j < size(); ++j) {
    const int cj = coset_of(j);
    const int gamma = base_of(j);
    for (const auto& [i, p] : canonical(j)) {
      if (coset_of(i) == cj) continue;
      const long m = p.coeff(-1).get_si();
      if (m != 0) g.set_mu(i, j, m);
    }
    for (const auto& [d, m] : base_.mu_into(gamma)) g.set_mu(index(cj, d), j, m);
    for (int s : ambient_.gens.elements()) {
      const Step& st = steps_[static_cast<std::size_t>(cj)][static_cast<std::size_t>(s)];
      if (!st.down && st.t == 0) g.set_mu(index(st.coset, gamma), j, 1);
    }
  }
  graph_ = std::move(g);
}

std::string InducedModule::canonical_json(int i) const {
  nlohmann::json j;
  j["w"] = coset_name(coset_of(i));
  j["gamma"] = base_.vertex(base_of(i)).id;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [x, p] : canonical(i))
    coeffs.push_back({{"x", coset_name(coset_of(x))}, {"delta", base_.vertex(base_of(x)).id}, {"poly", p.str()}});
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

// ---------------------------------------------------------------------------

SparseVec easy_canonical(const InducedModule& m, int k, int gamma) {
  const int n = m.ambient().n;
  if (m.ambient() != ParabolicSet::full(n) || m.subgroup() != ParabolicSet::J(n, n - 1))
    throw std::invalid_argument("easy_canonical needs H (x)_{J_{n-1}} over all of S_n");
  if (k < 1 || k > n) throw std::invalid_argument("easy_canonical: k out of range");
  if (!GenSet::range(k, n - 2).subset_of(m.base().descents(gamma)))
    throw std::invalid_argument("easy_canonical: s_k..s_{n-2} must be descents of gamma");
  SparseVec out;
  for (int i = k; i <= n; ++i) out.emplace(m.index(coset_b(n, i), gamma), LaurentPoly::monomial(k - i));
  return out;
}

int unit_alpha(const InducedModule& m, int gamma) { return m.index(Perm::identity(m.ambient().n), gamma); }

SparseVec counit_beta(const InducedModule& m, const WGraph& E, const SparseVec& v) {
  if (m.base_size() != E.size()) throw std::invalid_argument("counit: the base must be a restriction of the target");
  SparseVec out;
  for (const auto& [i, c] : v) add_scaled(out, c, E.act_Tw(m.coset_rep(i), unit(m.base_of(i))));
  return out;
}

SpecialElement special_element(const Partition& lambda1, const Partition& mu, const Tableau& P) {
  const int n = P.size();
  auto grown = skew_boxes(lambda1, mu);
  if (!contains(lambda1, mu) || grown.size() != 1) throw std::invalid_argument("special_element: lambda1 must be mu plus a box");
  auto added = skew_boxes(P.shape(), mu);
  if (!contains(P.shape(), mu) || added.size() != 1) throw std::invalid_argument("special_element: sh(P) must be mu plus a box");
  const int k = grown.front().row + 1;
  const int kp = n + 1 - k;
  // recording tableau: last boxes of rows 1..k-1 of mu get k'..n-1, the rest of mu 1..k'-1 in reading order
  std::vector<std::vector<int>> q(P.shape().size());
  for (std::size_t r = 0; r < q.size(); ++r) q[r].assign(static_cast<std::size_t>(P.shape()[r]), 0);
  int next = 1;
  for (int r = 0; r < static_cast<int>(mu.size()); ++r)
    for (int c = 0; c < mu[static_cast<std::size_t>(r)]; ++c) {
      const bool last = c == mu[static_cast<std::size_t>(r)] - 1;
      q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (last && r < k - 1) ? kp + r : next++;
    }
  q[static_cast<std::size_t>(added.front().row)][static_cast<std::size_t>(added.front().col)] = n;
  Tableau Q(q);
  if (!Q.is_standard()) throw std::logic_error("special_element: recording tableau is not standard");
  SpecialElement out;
  out.k_prime = kp;
  out.w = Perm::from_word(inverse_rsk(P, Q));
  if (!GenSet::range(kp, n - 2).subset_of(out.w.left_descents()))
    throw std::logic_error("special_element: the constructed vertex lacks the needed descents");
  out.coset = coset_b(n, kp);
  const Perm jw = parabolic_decompose(out.w, ParabolicSet::J(n, n - 1), CosetSide::Right).parabolic;
  out.full = out.w.word_str();
  out.restricted = jw.word_str().substr(0, static_cast<std::size_t>(n - 1));
  out.stuffed = (out.coset * jw).word_str();
  return out;
}

std::vector<MackeyPiece> mackey_subgraphs(const ParabolicSet& K, const ParabolicSet& I, const WGraph& base) {
  const int n = K.n;
  InducedModule M(ParabolicSet::full(n), I, base);
  const WGraph res = M.graph().restrict(K);
  const CellDecomposition dec = cells(res);
  std::map<Perm, std::vector<int>> by_d;
  for (int c = 0; c < M.coset_count(); ++c) {
    Perm d = parabolic_decompose(M.cosets()[static_cast<std::size_t>(c)], K, CosetSide::Right).coset_min;
    by_d[d].push_back(c);
  }
  std::vector<MackeyPiece> out;
  for (const auto& [d, cs] : by_d) {
    if (!parabolic_decompose(d, I, CosetSide::Left).parabolic.is_identity())
      throw std::logic_error("mackey: double coset representative is not minimal");
    MackeyPiece piece;
    piece.d = d;
    piece.L = ParabolicSet{n, {}};
    const Perm dinv = d.inverse();
    std::map<int, int> conj;  // s in L -> d^-1 s d in I
    for (int s : K.gens.elements()) {
      auto word = (dinv * Perm::simple(n, s) * d).reduced_word();
      if (word.size() == 1 && I.contains(word.front())) {
        piece.L.gens.insert(s);
        conj[s] = word.front();
      }
    }
    WGraph dg(piece.L);
    for (int g = 0; g < base.size(); ++g) {
      Vertex v = base.vertex(g);
      GenSet ds;
      for (const auto& [s, t] : conj)
        if (base.descents(g).contains(t)) ds.insert(s);
      v.descents = ds;
      dg.add_vertex(std::move(v));
    }
    for (int g = 0; g < base.size(); ++g)
      for (const auto& [dd, m] : base.mu_into(g)) dg.set_mu(dd, g, m);
    InducedModule N(K, piece.L, dg);

    for (int c : cs)
      for (int g = 0; g < base.size(); ++g) piece.indices.push_back(M.index(c, g));
    std::sort(piece.indices.begin(), piece.indices.end());
    std::map<int, int> pos;
    for (std::size_t i = 0; i < piece.indices.size(); ++i) pos[piece.indices[i]] = static_cast<int>(i);
    std::vector<int> map(static_cast<std::size_t>(N.size()), -1);
    bool ok = N.size() == static_cast<int>(piece.indices.size());
    for (int i = 0; ok && i < N.size(); ++i) {
      const Perm wd = N.coset_rep(i) * d;
      auto it = std::find(M.cosets().begin(), M.cosets().end(), wd);
      if (it == M.cosets().end()) {
        ok = false;
        break;
      }
      auto p = pos.find(M.index(static_cast<int>(it - M.cosets().begin()), N.base_of(i)));
      if (p == pos.end()) {
        ok = false;
        break;
      }
      map[static_cast<std::size_t>(i)] = p->second;
    }
    piece.isomorphic = ok && is_isomorphism(N.graph(), res.induced_subgraph(piece.indices), map);
    piece.cellular = is_cellular_subquotient(res, dec, piece.indices);
    out.push_back(std::move(piece));
  }
  return out;
}

InducedModule affine_degree1(const WGraph& gamma, InduceOptions options) {
  const int n = gamma.n();
  if (gamma.generators() != ParabolicSet::full(n)) throw std::invalid_argument("affine_degree1 needs an S_n-graph");
  WGraph base = pi_twist(gamma.restrict(ParabolicSet::J(n, n - 1)));
  const ParabolicSet J = ParabolicSet::Jprime(n, n - 1);
  const auto reps = min_coset_reps(J, CosetSide::Left);
  std::vector<std::string> names;
  std::vector<int> ks;
  for (const auto& x : reps) {
    const int k = x.length() + 1;
    if (x != coset_a(n, k)) throw std::logic_error("affine_degree1: unexpected coset representative");
    names.push_back("a" + std::to_string(k) + "pi");
    ks.push_back(k);
  }
  auto user = std::move(options.decorate);
  const int B = gamma.size();
  options.coset_names = names;
  options.decorate = [n, B, ks, gamma_copy = gamma, user](int i, Vertex& v) {
    const Vertex& b = gamma_copy.vertex(i % B);
    v.element.reset();
    if (b.element) {
      const int k = ks[static_cast<std::size_t>(i / B)];
      auto win = (ExtAffineWord::from_perm(coset_a(n, k)) * ExtAffineWord::pi(n) * ExtAffineWord::from_perm(*b.element)).window();
      std::vector<int> sorted = win;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> rel;
      for (int x : win) rel.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
      v.affine_window = win;
      v.element = Perm::from_word(rel);
    }
    if (user) user(i, v);
  };
  return InducedModule(ParabolicSet::full(n), J, std::move(base), std::move(options));
}

SparseVec nested_map(const InducedModule& outer, const InducedModule& inner, const std::vector<int>& inner_of_vertex,
                     const InducedModule& target, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) {
    const Perm& w = outer.coset_rep(i);
    const int ii = inner_of_vertex.at(static_cast<std::size_t>(outer.base_of(i)));
    for (const auto& [j, p] : inner.canonical(ii))
      add_scaled(out, c * p, target.tensor(w * inner.coset_rep(j), unit(inner.base_of(j))));
  }
  return out;
}

}  // namespace klc
