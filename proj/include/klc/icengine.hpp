/*
  Generic solver for IC bases. A standard basis t_0 .. t_{N-1} of a free
  A-module carries a bar involution with bar(t_j) = t_j + (terms strictly
  below j). The IC basis c_j is the unique bar-invariant basis with
  c_j = t_j mod u^-1 A^-{t_i}.
*/
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klc/laurent.hpp"

namespace klc {

using SparseVec = std::map<int, LaurentPoly>;

void add_scaled(SparseVec& acc, const LaurentPoly& c, const SparseVec& v);
SparseVec scaled(const LaurentPoly& c, const SparseVec& v);
void drop_zeros(SparseVec& v);
// apply bar to every coefficient, leaving the basis alone
SparseVec bar_coefficients(const SparseVec& v);

class InvolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ICProblem {
  int size = 0;
  // a linear extension of the order on 0..size-1, smallest first
  std::vector<int> order;
  // bar(t_j) expanded in the standard basis
  std::function<SparseVec(int)> bar_expand;
  // optional strict order; when present every lower term of bar(t_j) must precede j
  std::function<bool(int, int)> precedes;
};

struct ICSolveOptions {
  // solve only the lower ideal generated by these indices
  std::optional<std::vector<int>> targets;
  // verify bar(bar(t_j)) = t_j on every solved index
  bool check_involution = false;
};

class ICBasis {
 public:
  bool solved(int j) const { return j >= 0 && j < static_cast<int>(cols_.size()) && has_[static_cast<std::size_t>(j)]; }
  // c_j = sum_i p_ij t_i
  const SparseVec& column(int j) const;
  LaurentPoly coeff(int i, int j) const;
  std::vector<int> indices() const;  // solved indices in linear-extension order
  int size() const { return static_cast<int>(cols_.size()); }
  int position(int j) const { return pos_[static_cast<std::size_t>(j)]; }

  // rewrite a vector given in the t-basis in the c-basis
  SparseVec to_canonical(SparseVec v) const;

 private:
  friend ICBasis solve_ic(const ICProblem&, const ICSolveOptions&);
  friend ICBasis restrict_to_lower_ideal(const ICBasis&, const std::vector<int>&,
                                         const std::function<bool(int, int)>&);
  std::vector<SparseVec> cols_;
  std::vector<char> has_;
  std::vector<int> pos_;
  std::vector<int> order_;
};

ICBasis solve_ic(const ICProblem& problem, const ICSolveOptions& options = {});

// indices reachable from targets through the supports of bar_expand
std::vector<int> bar_support_closure(const ICProblem& problem, const std::vector<int>& targets,
                                     std::vector<SparseVec>* bars = nullptr);

// The ideal must be closed downward under `precedes`; throws std::domain_error otherwise.
ICBasis restrict_to_lower_ideal(const ICBasis& basis, const std::vector<int>& ideal,
                                const std::function<bool(int, int)>& precedes);

}  // namespace klc
