/*
  The Hecke algebra H of S_n over A with standard basis T_w,
  (T_s - u)(T_s + u^-1) = 0, and its Kazhdan-Lusztig basis C'_w.
*/
#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "klc/icengine.hpp"
#include "klc/laurent.hpp"
#include "klc/perm.hpp"

namespace klc {

// Elements of S_n indexed in order of length, with multiplication tables.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Perm& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  int index(const Perm& w) const;
  int length(int i) const { return len_[static_cast<std::size_t>(i)]; }
  int left_mul(int i, int s) const { return lmul_[static_cast<std::size_t>(i) * stride_ + static_cast<std::size_t>(s)]; }
  // first left descent of w, 0 for the identity
  int first_left_descent(int i) const { return fld_[static_cast<std::size_t>(i)]; }

 private:
  explicit SymmetricGroup(int n);
  int n_;
  std::size_t stride_;
  std::vector<Perm> elems_;
  std::vector<int> len_;
  std::vector<int> lmul_;
  std::vector<int> fld_;
  std::unordered_map<std::string, int> index_;
};

class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}
  static HeckeElt T(const Perm& w);
  static HeckeElt scalar(int n, const LaurentPoly& c);

  int n() const { return n_; }
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const Perm& w) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Perm& w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& h);
  HeckeElt& operator-=(const HeckeElt& h);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  bool operator==(const HeckeElt&) const = default;

  // T_s h and h T_s
  HeckeElt left_mul_Ts(int s) const;
  HeckeElt right_mul_Ts(int s) const;
  HeckeElt bar() const;
  // coefficients evaluated at u = 1, zero entries dropped
  std::map<Perm, Integer> specialize_u1() const;
  // "T[2,1,3] + u^-1 T[1,2,3]", highest length first
  std::string str() const;

 private:
  int n_;
  std::map<Perm, LaurentPoly> terms_;
};

// bar(T_w), memoized
const HeckeElt& bar_T(const Perm& w);

class KLBasis {
 public:
  explicit KLBasis(int n);
  int n() const { return n_; }
  const SymmetricGroup& group() const { return *group_; }
  // C'_w in the T-basis
  HeckeElt element(const Perm& w) const;
  // \tilde P_{x,w}, the coefficient of T_x in C'_w
  LaurentPoly P(const Perm& x, const Perm& w) const;
  const SparseVec& column(int w) const { return ic_.column(w); }
  const ICBasis& ic() const { return ic_; }
  // coefficient of u^-1 in \tilde P_{x,w} (0 unless x < w)
  long mu(int x, int w) const;

 private:
  int n_;
  const SymmetricGroup* group_;
  ICBasis ic_;
};

// cached per n
const KLBasis& kl_basis(int n);

enum class HeckeBasis { T, Cprime };

// coefficients of h in the chosen basis
std::map<Perm, LaurentPoly> expand(const HeckeElt& h, HeckeBasis basis);
// rebuild an element from C'-coefficients
HeckeElt from_cprime(int n, const std::map<Perm, LaurentPoly>& coeffs);

}  // namespace klc
