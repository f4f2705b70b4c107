/*
  Laurent polynomials in one variable u with arbitrary-precision integer
  coefficients: the ring A = Z[u, u^-1] together with its bar involution
  u -> u^-1.
*/
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klc {

using Integer = mpz_class;

class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(int exp, const Integer& coeff = 1);
  static LaurentPoly u() { return monomial(1); }
  static LaurentPoly u_inv() { return monomial(-1); }
  // Parses the text form produced by str(), e.g. "u^2 + 1 - 3u^-1".
  static LaurentPoly parse(std::string_view text);

  // terms sorted by increasing exponent, no zero coefficients
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiply by u^k
  // all exponents <= 0 (strict: < 0); the lattices A^- and u^-1 A^-
  bool in_lower_lattice(bool strict) const;
  // the part with negative exponents
  LaurentPoly negative_part() const;
  Integer eval_at_one() const;
  bool all_exponents_have_parity(int parity) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  // this += c * q, the inner loop of every linear-algebra routine here
  void add_mul(const LaurentPoly& c, const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;

 private:
  explicit LaurentPoly(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

// [k] = u^{k-1} + u^{k-3} + ... + u^{1-k}
LaurentPoly u_integer(int k);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace klc
