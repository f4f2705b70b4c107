/*
  Induced W-graphs: for J inside K and a W_J-graph Gamma, the module
  H_K (x)_J A Gamma with standard basis T_x (x) gamma (x minimal in x W_J)
  and its canonical basis C'_{x,gamma}, bar-invariant and congruent to
  T_x (x) gamma modulo u^-1 A^-.
*/
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klc/icengine.hpp"
#include "klc/perm.hpp"
#include "klc/tableau.hpp"
#include "klc/wgraph.hpp"

namespace klc {

struct InduceOptions {
  // only the canonical elements of these indices (and what they need)
  std::optional<std::vector<int>> targets;
  bool check_involution = false;
  // names of the cosets used in vertex ids; defaults to the words of the representatives
  std::vector<std::string> coset_names;
  // adjusts a vertex of the induced graph (index, vertex) after the defaults are filled in
  std::function<void(int, Vertex&)> decorate;
};

class InducedModule {
 public:
  InducedModule(ParabolicSet ambient, ParabolicSet J, WGraph base, InduceOptions options = {});

  const ParabolicSet& ambient() const { return ambient_; }
  const ParabolicSet& subgroup() const { return J_; }
  const WGraph& base() const { return base_; }
  int size() const { return static_cast<int>(cosets_.size()) * base_size(); }
  int base_size() const { return base_.size(); }
  int coset_count() const { return static_cast<int>(cosets_.size()); }
  const std::vector<Perm>& cosets() const { return cosets_; }

  int index(int coset, int gamma) const { return coset * base_size() + gamma; }
  int index(const Perm& x, int gamma) const { return index(coset_index(x), gamma); }
  int coset_index(const Perm& x) const;  // throws unless x is a representative
  int coset_of(int i) const { return i / base_size(); }
  int base_of(int i) const { return i % base_size(); }
  const Perm& coset_rep(int i) const { return cosets_[static_cast<std::size_t>(coset_of(i))]; }
  std::string coset_name(int coset) const { return names_[static_cast<std::size_t>(coset)]; }
  std::string vertex_id(int i) const;

  // bar(T_x (x) gamma) in the standard basis
  SparseVec bar_expand(int i) const;
  // T_y (x) v for y in W_K and v a vector of the base
  SparseVec tensor(const Perm& y, const SparseVec& base_vec) const;
  SparseVec act_Ts(int s, const SparseVec& v) const;
  SparseVec act_Cs(int s, const SparseVec& v) const;
  SparseVec act_Tw(const Perm& w, const SparseVec& v) const;

  const ICBasis& ic() const { return ic_; }
  bool solved(int i) const { return ic_.solved(i); }
  const SparseVec& canonical(int i) const { return ic_.column(i); }
  LaurentPoly P(int i, int j) const { return ic_.coeff(i, j); }
  SparseVec to_canonical(SparseVec v) const { return ic_.to_canonical(std::move(v)); }
  SparseVec from_canonical(const SparseVec& c) const;

  GenSet descents(int i) const;
  // the W_K-graph on the canonical basis; needs every index solved
  const WGraph& graph() const;
  std::string canonical_json(int i) const;

 private:
  // s x for a representative x: another representative (up or down), or x t with t in J
  struct Step {
    int coset = -1;
    int t = 0;
    bool down = false;
  };
  void build_graph();

  ParabolicSet ambient_;
  ParabolicSet J_;
  WGraph base_;
  std::vector<Perm> cosets_;
  std::map<Perm, int> coset_pos_;
  std::vector<std::string> names_;
  std::vector<std::vector<Step>> steps_;  // steps_[coset][s]
  ICBasis ic_;
  std::optional<WGraph> graph_;
  std::function<void(int, Vertex&)> decorate_;
};

// Sum_{i=k}^{n} u^{k-i} T_{b_i} (x) gamma; needs J = J_{n-1} and {s_k..s_{n-2}} in L(gamma).
SparseVec easy_canonical(const InducedModule& m, int k, int gamma);

// index of 1 (x) gamma, whose canonical element is T_1 (x) gamma
int unit_alpha(const InducedModule& m, int gamma);

// counit H (x)_J Res_J E -> E, T_x (x) delta -> T_x delta; the base of m must be E restricted to J
SparseVec counit_beta(const InducedModule& m, const WGraph& E, const SparseVec& v);

struct SpecialElement {
  int k_prime = 0;
  Perm coset;               // b_{k'}
  Perm w;                   // vertex of Gamma_{S_n}
  std::string stuffed;      // word of b_{k'} . _J w
  std::string restricted;   // word of _J w (first n-1 letters)
  std::string full;         // word of w
};
// lambda1 = shape of the cell of the induced module, mu its restriction,
// P the insertion tableau of the wanted vertex; needs sh(P) = mu + one box.
// The canonical element at (b_{k'}, w) is easy_canonical(m, k', w).
SpecialElement special_element(const Partition& lambda1, const Partition& mu, const Tableau& P);

struct MackeyPiece {
  Perm d;                     // minimal double coset representative
  ParabolicSet L;             // K cap d I d^-1
  std::vector<int> indices;   // indices of the full module in this piece
  bool isomorphic = false;    // (w, gamma) -> (w d, gamma) is an isomorphism with H_K (x)_L dGamma
  bool cellular = false;      // the piece is a cellular subquotient of Res_K
};
// Pieces of Res_K (H (x)_I Gamma) indexed by W_K \ W / W_I.
std::vector<MackeyPiece> mackey_subgraphs(const ParabolicSet& K, const ParabolicSet& I, const WGraph& base);

// degree one affine module built on an S_n-graph: H (x)_{J'_{n-1}} pi Res_{J_{n-1}} Gamma,
// vertices (a_k pi, gamma) with affine windows and element labels
InducedModule affine_degree1(const WGraph& gamma, InduceOptions options = {});

// T_w (x) (inner vertex v) -> target.tensor(w y, delta) over the canonical
// expansion sum P T_y (x) delta of v in `inner`; inner_of_vertex maps vertices
// of outer's base to indices of `inner`.
SparseVec nested_map(const InducedModule& outer, const InducedModule& inner, const std::vector<int>& inner_of_vertex,
                     const InducedModule& target, const SparseVec& v);

}  // namespace klc
