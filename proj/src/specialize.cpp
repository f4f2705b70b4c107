#include "klc/specialize.hpp"

#include <set>
#include <stdexcept>

namespace klc {

namespace {

void add_int(IntVec& acc, const Integer& c, const IntVec& v) {
  for (const auto& [i, x] : v) {
    Integer& slot = acc[i];
    slot += c * x;
    if (slot == 0) acc.erase(i);
  }
}

IntVec unit1(int i) { return {{i, Integer(1)}}; }

std::string ivec_str(const IntVec& v) {
  std::string s;
  for (const auto& [i, c] : v) s += (s.empty() ? "" : " + ") + c.get_str() + "#" + std::to_string(i);
  return s.empty() ? "0" : s;
}

// x_{w(k)} for 1-based k
int perm_x(const Perm& w, int k) { return w(k); }

// (i, e) -> sum e_d at key(i, d)
IntVec place(int i, const IntVec& e, int B) {
  IntVec out;
  for (const auto& [d, c] : e) out.emplace(i * B + d, c);
  return out;
}

}  // namespace

IntVec at_u1(const SparseVec& v) {
  IntVec out;
  for (const auto& [i, p] : v) {
    Integer c = p.eval_at_one();
    if (c != 0) out.emplace(i, std::move(c));
  }
  return out;
}

SparseVec lift(const IntVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) out.emplace(i, LaurentPoly(c));
  return out;
}

IntVec act_u1(const WGraph& E, const Perm& w, const IntVec& v) { return at_u1(E.act_Tw(w, lift(v))); }

CheckResult check_gk_iso(const WGraph& E, const ParabolicSet& J) {
  CheckResult r;
  const int n = E.n();
  int fixed = 0;
  if (J == ParabolicSet::Jprime(n, n - 1)) fixed = 1;
  if (J == ParabolicSet::J(n, n - 1)) fixed = n;
  if (fixed == 0) throw std::invalid_argument("gk-iso needs J_{n-1} or J'_{n-1}");
  const InducedModule M(ParabolicSet::full(n), J, E.restrict(J));
  const int B = E.size();
  std::vector<int> coset_of_x(static_cast<std::size_t>(n) + 1, -1);
  for (int c = 0; c < M.coset_count(); ++c) coset_of_x[static_cast<std::size_t>(M.cosets()[static_cast<std::size_t>(c)](fixed))] = c;

  auto phi = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [i, c] : v) {
      const Perm& x = M.coset_rep(i);
      add_int(out, c, place(perm_x(x, fixed) - 1, act_u1(E, x, unit1(M.base_of(i))), B));
    }
    return out;
  };
  auto psi = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [key, c] : v) {
      const int k = key / B + 1;
      const int cs = coset_of_x[static_cast<std::size_t>(k)];
      const Perm& x = M.cosets()[static_cast<std::size_t>(cs)];
      for (const auto& [g, a] : act_u1(E, x.inverse(), unit1(key % B))) add_int(out, c * a, unit1(M.index(cs, g)));
    }
    return out;
  };
  auto act_v_e = [&](int s, const IntVec& v) {
    IntVec out;
    const Perm sp = Perm::simple(n, s);
    for (const auto& [key, c] : v) add_int(out, c, place(sp(key / B + 1) - 1, act_u1(E, sp, unit1(key % B)), B));
    return out;
  };
  for (int i = 0; i < M.size(); ++i) {
    const IntVec b = unit1(i);
    r.expect(psi(phi(b)) == b, "psi phi on " + M.vertex_id(i));
    for (int s = 1; s < n; ++s) {
      const IntVec lhs = phi(at_u1(M.act_Ts(s, lift(b))));
      const IntVec rhs = act_v_e(s, phi(b));
      r.expect(lhs == rhs, "equivariance s" + std::to_string(s) + " on " + M.vertex_id(i) + ": " + ivec_str(lhs) +
                               " vs " + ivec_str(rhs));
    }
  }
  for (int key = 0; key < n * B; ++key) r.expect(phi(psi(unit1(key))) == unit1(key), "phi psi on x (x) e #" + std::to_string(key));
  return r;
}

CheckResult check_vve_split(const SquareModule& m) {
  CheckResult r;
  if (m.affine()) throw std::invalid_argument("vve-split is for the finite square");
  const int n = m.n();
  const WGraph& E = m.gamma();
  const int B = E.size();
  const InducedModule& e1 = m.e1();
  const InducedModule& e2 = m.e2();
  const InducedModule& f2 = m.f2();
  auto key = [&](int i, int j, int g) { return ((i - 1) * n + (j - 1)) * B + g; };

  // e2 standard vectors rewritten on T_{a_k} (x) T_{a_l} (x) gamma, keyed like e2 indices
  auto conv = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [i, c] : v)
      for (const auto& [j, p] : e1.canonical(e2.base_of(i))) {
        const Integer q = p.eval_at_one();
        if (q != 0) add_int(out, c * q, unit1(e2.index(e2.coset_of(i), j)));
      }
    return out;
  };
  auto psi = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [i, c] : v) {
      const Perm& ak = e2.coset_rep(i);
      const int j = e2.base_of(i);
      const Perm& al = e1.coset_rep(j);
      const int k = ak(1);
      const int l = al(1);
      const int lp = ak(l);
      for (const auto& [g, a] : act_u1(E, ak * al, unit1(e1.base_of(j)))) add_int(out, c * a, unit1(key(k, lp, g)));
    }
    return out;
  };
  auto act_vve = [&](int s, const IntVec& v) {
    IntVec out;
    const Perm sp = Perm::simple(n, s);
    for (const auto& [kk, c] : v) {
      const int i = kk / (n * B) + 1;
      const int j = (kk / B) % n + 1;
      for (const auto& [g, a] : act_u1(E, sp, unit1(kk % B))) add_int(out, c * a, unit1(key(sp(i), sp(j), g)));
    }
    return out;
  };
  auto phi_f = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [i, c] : v) {
      const Perm& x = f2.coset_rep(i);
      for (const auto& [g, a] : act_u1(E, x * Perm::simple(n, 1), unit1(f2.base_of(i))))
        add_int(out, c * a, unit1(key(x(1), x(2), g)));
    }
    return out;
  };

  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < e2.size(); ++i) {
    const Perm& ak = e2.coset_rep(i);
    const Perm& al = e1.coset_rep(e2.base_of(i));
    pairs.emplace(ak(1), ak(al(1)));
  }
  r.expect(static_cast<int>(pairs.size()) == n * n, "(k, l) -> (x_k, a_k x_l) is a bijection onto pairs");

  for (int i = 0; i < e2.size(); ++i) {
    const IntVec b = unit1(i);
    const IntVec image = psi(b);
    const bool diagonal = e1.coset_rep(e2.base_of(i)).is_identity();
    bool on_diagonal = true;
    for (const auto& [kk, c] : image) on_diagonal = on_diagonal && (kk / (n * B) == (kk / B) % n);
    r.expect(on_diagonal == diagonal, "non-reduced part sits on x_k (x) x_k at " + e2.vertex_id(i));
    for (int s = 1; s < n; ++s) {
      const IntVec lhs = psi(conv(at_u1(e2.act_Ts(s, lift(b)))));
      const IntVec rhs = act_vve(s, psi(conv(b)));
      r.expect(lhs == rhs, "V(x)V(x)E equivariance s" + std::to_string(s) + " at " + e2.vertex_id(i));
    }
    if (!diagonal) {
      const int t = f2.index(e2.coset_rep(i) * e1.coset_rep(e2.base_of(i)) * Perm::simple(n, 1), e1.base_of(e2.base_of(i)));
      r.expect(phi_f(unit1(t)) == image, "quotient matches T^2_red at " + e2.vertex_id(i));
    }
  }
  for (int i = 0; i < f2.size(); ++i)
    for (int s = 1; s < n; ++s) {
      const IntVec lhs = phi_f(at_u1(f2.act_Ts(s, lift(unit1(i)))));
      const IntVec rhs = act_vve(s, phi_f(unit1(i)));
      r.expect(lhs == rhs, "T^2_red equivariance s" + std::to_string(s) + " at " + f2.vertex_id(i));
    }
  return r;
}

CheckResult check_affine_poly(const WGraph& E) {
  CheckResult r;
  const int n = E.n();
  const InducedModule M = affine_degree1(E);
  const int B = E.size();
  r.expect(M.size() == n * B, "degree one part has dimension n dim E");
  std::vector<Perm> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> word;
    for (int i = k; i < n; ++i) word.push_back(i);
    c[static_cast<std::size_t>(k)] = Perm::from_reduced_word(n, word);
  }
  auto phi = [&](const IntVec& v) {
    IntVec out;
    for (const auto& [i, a] : v) {
      const int k = M.coset_rep(i)(1);
      add_int(out, a, place(k - 1, act_u1(E, c[static_cast<std::size_t>(k)], unit1(M.base_of(i))), B));
    }
    return out;
  };
  auto act_v_e = [&](int s, const IntVec& v) {
    IntVec out;
    const Perm sp = Perm::simple(n, s);
    for (const auto& [key, a] : v) add_int(out, a, place(sp(key / B + 1) - 1, act_u1(E, sp, unit1(key % B)), B));
    return out;
  };
  std::set<int> firsts;
  for (int i = 0; i < M.size(); ++i) {
    firsts.insert(M.coset_rep(i)(1) * B + M.base_of(i));
    for (int s = 1; s < n; ++s) {
      const IntVec lhs = phi(at_u1(M.act_Ts(s, lift(unit1(i)))));
      const IntVec rhs = act_v_e(s, phi(unit1(i)));
      r.expect(lhs == rhs, "y^e_k (x) e <-> x_k (x) e equivariance s" + std::to_string(s) + " at " + M.vertex_id(i));
    }
  }
  r.expect(static_cast<int>(firsts.size()) == n * B, "a_k pi (x) gamma -> x_k (x) c_k gamma is bijective");
  return r;
}

}  // namespace klc
