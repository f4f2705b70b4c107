#include <doctest.h>

#include "klc/affine.hpp"
#include "klc/hecke.hpp"
#include "klc/laurent.hpp"
#include "klc/oracles.hpp"
#include "klc/perm.hpp"

using namespace klc;

namespace {
void require_ok(const CheckResult& c) {
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) MESSAGE(c.failures[i]);
  CHECK(c.ok);
  CHECK(c.checked > 0);
}
}  // namespace

TEST_CASE("laurent arithmetic and bar") {
  const LaurentPoly u = LaurentPoly::u();
  const LaurentPoly p = u * u + LaurentPoly(1) - LaurentPoly(3) * u.bar();
  CHECK(p.str() == "u^2 + 1 - 3u^-1");
  CHECK(LaurentPoly::parse(p.str()) == p);
  CHECK(p.bar().bar() == p);
  CHECK(p.bar().coeff(-2) == 1);
  CHECK((p - p).is_zero());
  CHECK(u_integer(3) == u * u + LaurentPoly(1) + u.bar() * u.bar());
  CHECK(u_integer(2) * u_integer(2) == u_integer(3) + LaurentPoly(1));
  CHECK(u_integer(4).eval_at_one() == 4);
  CHECK(u_integer(3).all_exponents_have_parity(0));
  CHECK(u.bar().in_lower_lattice(true));
  CHECK(!LaurentPoly(1).in_lower_lattice(true));
  CHECK(LaurentPoly(1).in_lower_lattice(false));
  // coefficients beyond 64 bits
  LaurentPoly big(1);
  for (int i = 0; i < 70; ++i) big *= LaurentPoly(2);
  CHECK(big.coeff(0) == Integer("1180591620717411303424"));
}

TEST_CASE("permutations and cosets") {
  const Perm w = Perm::parse_word("2413");
  CHECK(Perm::from_word(w.word()) == w);
  CHECK(w.inverse() * w == Perm::identity(4));
  CHECK(w.length() == static_cast<int>(w.reduced_word().size()));
  CHECK(Perm::from_reduced_word(4, w.reduced_word()) == w);
  for (int i = 1; i < 4; ++i) CHECK(w.has_left_descent(i) == (w.left_mul(i).length() < w.length()));
  CHECK(coset_b(4, 4) == Perm::identity(4));
  CHECK(coset_a(4, 3) == Perm::from_reduced_word(4, {2, 1}));

  for (auto side : {CosetSide::Left, CosetSide::Right}) {
    const ParabolicSet J = ParabolicSet::J(4, 3);
    const auto reps = min_coset_reps(J, side);
    CHECK(reps.size() == 4);
    for (const Perm& x : all_perms(4)) {
      const auto f = parabolic_decompose(x, J, side);
      const Perm prod = side == CosetSide::Left ? f.coset_min * f.parabolic : f.parabolic * f.coset_min;
      CHECK(prod == x);
      CHECK(f.coset_min.length() + f.parabolic.length() == x.length());
    }
  }
}

TEST_CASE("bruhat order against subwords") { require_ok(oracle_bruhat_subword(4)); }

TEST_CASE("ic solver against a linear solve") { require_ok(oracle_ic_random(50, 8, 7)); }

TEST_CASE("hecke relations") {
  const int n = 4;
  const LaurentPoly u = LaurentPoly::u();
  for (int s = 1; s < n; ++s) {
    const HeckeElt Ts = HeckeElt::T(Perm::simple(n, s));
    const HeckeElt lhs = (Ts - HeckeElt::scalar(n, u)) * (Ts + HeckeElt::scalar(n, u.bar()));
    CHECK(lhs.is_zero());
    CHECK(Ts.bar().bar() == Ts);
  }
  // braid relation
  const HeckeElt T1 = HeckeElt::T(Perm::simple(n, 1)), T2 = HeckeElt::T(Perm::simple(n, 2));
  CHECK(T1 * T2 * T1 == T2 * T1 * T2);
}

TEST_CASE("kazhdan-lusztig basis") {
  const KLBasis& kl = kl_basis(4);
  const Perm e = Perm::identity(4);
  // singular Schubert varieties in S_4: P_{e,3412} = P_{e,4231} = 1 + q
  for (const char* w : {"3412", "4231"}) {
    const int l = Perm::parse_word(w).length();
    CHECK(kl.P(e, Perm::parse_word(w)) == LaurentPoly::monomial(-l) + LaurentPoly::monomial(2 - l));
  }
  // every other P_{x,w} in S_3 is a monomial
  const KLBasis& kl3 = kl_basis(3);
  for (const Perm& w : all_perms(3))
    for (const Perm& x : all_perms(3))
      CHECK(kl3.P(x, w) == (bruhat_leq(x, w) ? LaurentPoly::monomial(x.length() - w.length()) : LaurentPoly()));
  // C'_w is bar invariant
  for (const Perm& w : all_perms(4)) CHECK(kl.element(w).bar() == kl.element(w));
  // C'_s = T_s + u^-1
  CHECK(kl.element(Perm::simple(4, 2)) == HeckeElt::T(Perm::simple(4, 2)) + HeckeElt::scalar(4, LaurentPoly::u_inv()));
}

TEST_CASE("affine windows") {
  using F = ExtAffineWord::Factor;
  const auto w = affine_compose(4, {{F::Kind::Pi, 0}, {F::Kind::Pi, 0}, {F::Kind::S, 2}, {F::Kind::S, 0}, {F::Kind::S, 1}});
  CHECK(w.window() == std::vector<int>{-3, 2, 0, 3});
  CHECK(ExtAffineWord::from_window(w.window()) == w);
  const auto pi = ExtAffineWord::pi(4);
  CHECK(pi.pi_degree() == 1);
  CHECK(pi.length() == 0);
  CHECK((pi * pi * pi * pi).pi_degree() == 4);
  const auto s0 = ExtAffineWord::simple(4, 0);
  CHECK(s0 * s0 == ExtAffineWord(4));
  CHECK(s0.length() == 1);
  // periodicity
  for (int i = -8; i <= 8; ++i) CHECK(w(i + 4) == w(i) + 4);
}
