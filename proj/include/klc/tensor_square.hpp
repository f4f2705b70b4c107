/*
  Degree two modules built on an S_n-graph Gamma.

  Finite:  E1 = H (x)_{J'_{n-1}} Res Gamma,  E2 = H (x)_{J'_{n-1}} Res E1,
           F2 = H (x)_{J'_{n-2}} Res Gamma.
  Affine:  E1 = H (x)_{J'_{n-1}} pi Res Gamma,  E2 the same construction on E1,
           F2 = H (x)_{J'_{n-2}} Res pi^2 Gamma.

  The reduced part of E2 is identified with F2; the rest (second coset a_1,
  resp. a_n pi) is the non-reduced part. F2 is split further by the
  submodule Z^2 into combinatorial reduced sym and wedge.
*/
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klc/check.hpp"
#include "klc/induce.hpp"
#include "klc/local_sequence.hpp"

namespace klc {

// Gamma seen as a W_{S\s_2}-graph: plain restriction, or pi^2-twisted for the affine side
WGraph second_level_base(const WGraph& gamma, bool affine);

class SquareModule {
 public:
  SquareModule(const WGraph& gamma, bool affine);

  bool affine() const { return affine_; }
  int n() const { return gamma_.n(); }
  const WGraph& gamma() const { return gamma_; }
  const InducedModule& e1() const { return e1_; }
  const InducedModule& e2() const { return e2_; }
  const InducedModule& f2() const { return f2_; }

  // E2 index of (a_k, (a_l, gamma)), resp. (a_k pi, (a_l pi, gamma))
  int e2_index(int k, int l, int gamma) const;
  // F2 index of the reduced vertex i of E2, or -1 on the non-reduced part
  int reduced_image(int i) const { return reduced_[static_cast<std::size_t>(i)]; }
  std::vector<int> reduced_indices() const;
  std::vector<int> nonreduced_indices() const;

  // tableau labels of a vertex: level 2, level 1 and level 0
  LocalSequence e2_sequence(int i) const;
  Tableau label2(int i) const;
  Tableau label1(int i) const;
  Tableau label0(int i) const;

 private:
  bool affine_;
  WGraph gamma_;
  InducedModule e1_;
  InducedModule e2_;
  InducedModule f2_;
  std::vector<int> reduced_;
};

// reduced vertices -> F2 is a W-graph isomorphism onto a cellular subquotient;
// the non-reduced vertices form a cellular submodule (finite), resp. the
// reduced ones do (affine)
CheckResult check_reduced_split(const SquareModule& m);
// H (x) alpha: canonical elements on the non-reduced part come from E1 (finite only)
CheckResult check_alpha_square(const SquareModule& m);
// H (x) tau takes canonical elements to canonical elements or 0 (finite only)
CheckResult check_tau_square(const SquareModule& m);

// Lambda = H_{S\s_2} (x)_{J'_{n-2}} Gamma' and the module G = H (x)_{S\s_2} Gamma'
struct SecondLevel {
  WGraph gamma_prime;
  InducedModule lambda;
  InducedModule g;
  std::vector<int> lambda_minus;  // Lambda indices with s_1 in L
};
SecondLevel second_level(const WGraph& gamma, bool affine);

// Z^2 = H (x)_{S\s_2} Lambda^-: kernel of C_{s_1} - [2], the embedding into F2
// as a cellular submodule, and the nested canonical basis map
CheckResult check_z2(const SquareModule& m, const SecondLevel& s);
// H (x)_{S\s_2} Lambda and H (x)_{J'_{n-2}} Gamma' have the same canonical basis
CheckResult check_nested(const SquareModule& m, const SecondLevel& s);

// beta~ on the standard basis of F2: T_x (x) delta -> T_v (x) T_p delta, x = v p over S\s_2
SparseVec beta_tilde(const SquareModule& m, const SecondLevel& s, const SparseVec& v);
// remainder of v modulo L* = A^- H (x)_{S\s_2} Gamma'^-_{s_1}, in the standard basis of G
SparseVec reduce_mod_lstar(const SecondLevel& s, const SparseVec& v);
// the four identities for beta~ on canonical elements
CheckResult check_beta_tilde(const SquareModule& m, const SecondLevel& s);

// tag of every E2 vertex from the canonical-basis side
std::vector<SymWedgeTag> algebraic_tags(const SquareModule& m);
// tag of every E2 vertex from its tableau labels alone
std::vector<SymWedgeTag> combinatorial_tags(const SquareModule& m);

struct CellTag {
  std::vector<int> vertices;
  Tableau label1;  // level 1 label (E1 cell)
  Tableau label2;  // level 2 label
  SymWedgeTag algebraic = SymWedgeTag::NonReduced;
  SymWedgeTag combinatorial = SymWedgeTag::NonReduced;
  bool uniform = true;  // tags and labels agree on every vertex of the cell
};
std::vector<CellTag> tag_cells(const SquareModule& m);

// e+: one vertex with every descent, carrying the longest element
WGraph sign_graph(int n);

}  // namespace klc
