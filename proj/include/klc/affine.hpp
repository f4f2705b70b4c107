/*
  Extended affine Weyl group of type A as periodic permutations of Z:
  w(i + n) = w(i) + n and sum_{i=1}^n (w(i) - i) = 0 mod n. The window of
  w is w^-1(1) ... w^-1(n).
*/
#pragma once

#include <string>
#include <vector>

#include "klc/perm.hpp"

namespace klc {

class ExtAffineWord {
 public:
  struct Factor {
    enum class Kind { S, Pi, PiInv, Y } kind;
    int index = 0;  // generator index mod n for S, i for Y
  };

  explicit ExtAffineWord(int n);  // identity
  static ExtAffineWord from_window(const std::vector<int>& window);
  static ExtAffineWord from_perm(const Perm& w);
  static ExtAffineWord simple(int n, int i);  // s_i, i taken mod n
  static ExtAffineWord pi(int n);
  static ExtAffineWord y(int n, int i);  // s_{i-1}...s_1 pi s_{n-1}...s_i

  int n() const { return n_; }
  int operator()(int i) const;  // w(i) for any integer i
  std::vector<int> window() const;
  // exponent d of pi in w = pi^d v with v in the affine Weyl group
  int pi_degree() const;
  int length() const;
  std::string str() const;  // comma separated window

  friend ExtAffineWord operator*(const ExtAffineWord& x, const ExtAffineWord& y);
  bool operator==(const ExtAffineWord&) const = default;

 private:
  int n_;
  std::vector<int> f_;  // w(1..n)
};

ExtAffineWord affine_compose(int n, const std::vector<ExtAffineWord::Factor>& factors);

}  // namespace klc
