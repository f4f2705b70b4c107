/*
  Young tableaux with arbitrary distinct integer entries (straight or skew),
  Schensted insertion, RSK, jeu de taquin, evacuation, growth rules and the
  cell-label algorithms for induced, restricted and affine modules.

  Boxes are 0-based (row, col). Text form: rows separated by '/', entries
  comma separated when some entry is negative or has several digits, '.'
  for a box of the inner shape of a skew tableau.
*/
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klc {

using Partition = std::vector<int>;

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Tableau {
 public:
  Tableau() = default;
  // rows[r] lists the entries of row r right of the inner shape
  explicit Tableau(std::vector<std::vector<int>> rows, Partition inner = {});
  static Tableau parse(std::string_view text);
  std::string str() const;

  Partition shape() const;
  const Partition& inner() const { return inner_; }
  int size() const;
  bool empty() const { return size() == 0; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool is_straight() const { return inner_.empty(); }
  bool has_box(Box b) const;
  int at(Box b) const;
  std::optional<Box> find(int value) const;
  std::vector<int> entries() const;  // increasing
  // rows and columns strictly increase, entries distinct
  bool is_standard() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

 private:
  friend class TableauEditor;
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

// Partition helpers
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
std::vector<Partition> partitions_of(int n);
std::vector<Box> outer_corners(const Partition& p);   // removable boxes
std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> inner_corners(const Tableau& t);     // boxes of the inner shape that can slide
// boxes of outer not in inner, row by row
std::vector<Box> skew_boxes(const Partition& outer, const Partition& inner);
bool dominance_leq(const Partition& a, const Partition& b);
std::string partition_str(const Partition& p);
// (nu_1 + mu_1, ..., nu_l + mu_1, mu_1, ..., mu_k)
Partition sqcup(const Partition& mu, const Partition& nu);

// Schensted insertion; the box returned is the one added to the shape.
std::pair<Tableau, Box> row_insert(const Tableau& t, int a);
std::pair<Tableau, Box> column_insert(const Tableau& t, int a);
// Inverse of the insertions; `corner` must be an outer corner.
std::pair<Tableau, int> row_uninsert(const Tableau& t, Box corner);
std::pair<Tableau, int> column_uninsert(const Tableau& t, Box corner);

struct RSKPair {
  Tableau P;
  Tableau Q;
};
// row insertion of the word left to right; Q records positions 1..n
RSKPair rsk(const std::vector<int>& word);
std::vector<int> inverse_rsk(const Tableau& P, const Tableau& Q);

// entries <= r as a straight tableau, entries > r as a skew tableau
Tableau entries_at_most(const Tableau& t, int r);
Tableau entries_above(const Tableau& t, int r);

// one forward slide into an inner corner
Tableau slide_into(const Tableau& t, Box inner_corner);
Tableau jdt_rectify(const Tableau& t);
// Reverse slide: the empty box `outer` (addable to the shape) moves inward
// until it reaches (0,0); returns the tableau with that box left unfilled as
// inner shape {1}.
Tableau reverse_slide_to_corner(const Tableau& t, Box outer);
// fill the single inner box of a tableau with inner shape {1}
Tableau fill_corner(const Tableau& t, int value);

// P_>: drop the smallest entry and rectify
Tableau greater_part(const Tableau& t);

Tableau evacuation(const Tableau& t);
// replace the entries by `alphabet` (sorted), keeping relative order
Tableau relabel(const Tableau& t, std::vector<int> alphabet);
// relabel to first, first+1, ...
Tableau relabel_from(const Tableau& t, int first);

std::vector<Tableau> standard_tableaux(const Partition& shape, int first = 1);
std::vector<Tableau> standard_tableaux_of_size(int n, int first = 1);

// Growth rules G and G' = conjugate of G on conjugates; throws on bad input.
Partition growth(int a, const Partition& lambda, const Partition& mu, const Partition& nu);
Partition growth_prime(int a, const Partition& lambda, const Partition& mu, const Partition& nu);

struct StripKind {
  bool horizontal;
  bool vertical;
};
// boxes listed in the order (r_1,c_1), ..., (r_l,c_l) of the strip definitions
StripKind strip_kind(const std::vector<Box>& boxes);
// boxes of a chain of shapes big -> ... -> small, in removal order
std::vector<Box> removed_boxes(const std::vector<Partition>& chain);

// All P on 1..n with P_{<=r} = T and jdt(P_{>r}) = T2 (T on 1..r, T2 on r+1..n).
std::vector<Tableau> induced_cell_labels(const Tableau& T, const Tableau& T2);

struct LabelPair {
  Tableau first;
  Tableau second;
  auto operator<=>(const LabelPair&) const = default;
};
// The set X = {(T, T2) : jdt(T T2) = P}, with |T| = r.
std::vector<LabelPair> restriction_set_X(const Tableau& P, int r);
// X relabeled onto 1..r and r+1..n; a multiset, sorted
std::vector<LabelPair> restricted_cell_labels(const Tableau& P, int r);

// Labels of the cells of the degree one affine module built on a cell labeled T.
std::vector<Tableau> affine_cell_labels(const Tableau& T);

}  // namespace klc
