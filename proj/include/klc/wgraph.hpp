/*
  W-graphs for parabolic subgroups of S_n. A vertex gamma carries a descent
  set L(gamma) and the edge weights mu(delta, gamma) define

    C_s gamma = [2] gamma                                  if s in L(gamma)
              = sum_{delta : s in L(delta)} mu(delta, gamma) delta   otherwise

  with C_s = T_s + u^-1.
*/
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klc/icengine.hpp"
#include "klc/perm.hpp"

namespace klc {

struct Vertex {
  std::string id;
  GenSet descents;
  // permutation whose word carries the cell label of this vertex, if known
  std::optional<Perm> element;
  // window of an extended affine element used for labels with entries < 1
  std::vector<int> affine_window;
};

class WGraph {
 public:
  explicit WGraph(ParabolicSet gens) : gens_(gens) {}

  const ParabolicSet& generators() const { return gens_; }
  int n() const { return gens_.n; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  Vertex& vertex(int i) { return vertices_[static_cast<std::size_t>(i)]; }
  const GenSet& descents(int i) const { return vertex(i).descents; }
  int find(const std::string& id) const;  // -1 if absent
  int index_of(const std::string& id) const;  // throws if absent

  int add_vertex(Vertex v);
  void set_mu(int delta, int gamma, long mu);
  long mu(int delta, int gamma) const;
  // all nonzero mu(delta, gamma) for fixed gamma, keyed by delta
  const std::map<int, long>& mu_into(int gamma) const { return mu_[static_cast<std::size_t>(gamma)]; }

  SparseVec act_Cs(int s, const SparseVec& v) const;
  SparseVec act_Ts(int s, const SparseVec& v) const;  // T_s = C_s - u^-1
  // T_w for w in the parabolic subgroup, applied right to left along a reduced word
  SparseVec act_Tw(const Perm& w, const SparseVec& v) const;

  // quadratic and braid relations of the T_s on every basis vector
  bool validate(std::string* why = nullptr) const;

  WGraph restrict(const ParabolicSet& J) const;
  // descent index i -> i + k on vertices and generators
  WGraph shifted(int k) const;
  // vertices in `keep` with the induced structure; `keep` must be a convex union of cells
  WGraph subquotient(const std::vector<int>& keep) const;
  // same, unchecked, vertices in the order given
  WGraph induced_subgraph(const std::vector<int>& keep) const;

 private:
  ParabolicSet gens_;
  std::vector<Vertex> vertices_;
  std::vector<std::map<int, long>> mu_;  // mu_[gamma][delta] = mu(delta, gamma)
  std::map<std::string, int> by_id_;
};

struct CellDecomposition {
  std::vector<std::vector<int>> cells;  // sorted vertex lists, cells sorted by first vertex
  std::vector<int> cell_of;
  // below[a][b]: cell b <= cell a in the preorder (b reachable from a), reflexive
  std::vector<std::vector<char>> below;

  bool leq(int a, int b) const { return below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; }
  int count() const { return static_cast<int>(cells.size()); }
};

// delta <= gamma when delta occurs in some C_s gamma, closed transitively
CellDecomposition cells(const WGraph& g);

// convex unions of cells are exactly the cellular subquotients
bool is_cellular_subquotient(const WGraph& g, const CellDecomposition& c, const std::vector<int>& keep);

// regular W-graph of S_n on the Kazhdan-Lusztig basis; vertex ids are words
WGraph regular_wgraph(int n);
// one vertex with the given descent set
WGraph one_vertex_graph(const ParabolicSet& gens, GenSet descents, const std::string& id = "e");
// pi-twist of a W_{J_{n-1}}-graph: descents shifted up by one
WGraph pi_twist(const WGraph& g);
// The S_n-graph g viewed through the rotation s_i -> s_{i+2} (i <= n-3), s_{n-1} -> s_1:
// a W_{S\s_2}-graph.
WGraph rotate_twice(const WGraph& g);

// bijection g1 -> g2 preserving descents, and mu(delta, gamma) whenever L(delta) is not inside L(gamma)
std::optional<std::vector<int>> is_isomorphic(const WGraph& g1, const WGraph& g2);
// checks a given bijection with the same rule
bool is_isomorphism(const WGraph& g1, const WGraph& g2, const std::vector<int>& map);

struct DrawnEdge {
  int tail;
  int head;
  bool arrow;  // false: undirected
  long mu;
};
// edges as drawn: an arrow into the vertex with the strictly larger descent set,
// a plain edge between vertices with incomparable descent sets
std::vector<DrawnEdge> drawn_edges(const WGraph& g);

std::string to_json(const WGraph& g);
std::string to_dot(const WGraph& g, const std::string& name = "W");

}  // namespace klc
