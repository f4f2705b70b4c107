/*
  The symmetric group S_n.

  A Perm stores the function i -> w(i) in one-line form. The "word" of w is
  the sequence w^-1(1) ... w^-1(n); its descents are the left descents of w.
  Simple reflections s_i (1 <= i < n) transpose i and i+1, products compose
  as functions: (xy)(i) = x(y(i)).
*/
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace klc {

// A set of simple reflection indices, stored as a bit mask.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t mask) : mask_(mask) {}
  GenSet(std::initializer_list<int> gens);
  static GenSet range(int lo, int hi);  // {lo, ..., hi}, empty if lo > hi

  constexpr bool contains(int i) const { return i >= 0 && i < 32 && ((mask_ >> i) & 1u); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }
  void insert(int i) { mask_ |= 1u << i; }
  void erase(int i) { mask_ &= ~(1u << i); }
  constexpr bool subset_of(GenSet o) const { return (mask_ & ~o.mask_) == 0; }
  GenSet shifted(int k) const;  // i -> i + k
  std::vector<int> elements() const;
  std::string str() const;  // "{1,3}"

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.mask_ | b.mask_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.mask_ & b.mask_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.mask_ & ~b.mask_); }
  constexpr auto operator<=>(const GenSet&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// A set of simple reflections of S_n naming a parabolic subgroup.
struct ParabolicSet {
  int n = 1;
  GenSet gens;

  static ParabolicSet full(int n) { return {n, GenSet::range(1, n - 1)}; }
  static ParabolicSet none(int n) { return {n, GenSet{}}; }
  // J_r = {s_1, ..., s_{r-1}}
  static ParabolicSet J(int n, int r) { return {n, GenSet::range(1, r - 1)}; }
  // J'_m = {s_{n-m+1}, ..., s_{n-1}}
  static ParabolicSet Jprime(int n, int m) { return {n, GenSet::range(n - m + 1, n - 1)}; }
  // S \ {s_i}
  static ParabolicSet without(int n, int i);
  static ParabolicSet parse(int n, std::string_view text);  // "2,3" or "" for empty

  bool contains(int i) const { return gens.contains(i); }
  bool operator==(const ParabolicSet&) const = default;
};

enum class CosetSide {
  Left,   // w = w^J . w_J with w^J minimal in w W_J
  Right,  // w = _J w . ^J w with ^J w minimal in W_J w
};

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> oneline);

  static Perm identity(int n);
  static Perm simple(int n, int i);
  static Perm from_word(const std::vector<int>& word);
  // product s_{i_1} ... s_{i_k}
  static Perm from_reduced_word(int n, const std::vector<int>& gens);
  // Digits for n <= 9, otherwise comma separated; read as the word of w.
  static Perm parse_word(std::string_view text);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& oneline() const { return w_; }
  std::vector<int> word() const;

  Perm inverse() const;
  Perm left_mul(int i) const;   // s_i w
  Perm right_mul(int i) const;  // w s_i
  friend Perm operator*(const Perm& x, const Perm& y);

  int length() const;
  bool is_identity() const;
  bool has_left_descent(int i) const { return inv_pos(i) > inv_pos(i + 1); }
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  GenSet left_descents() const;
  GenSet right_descents() const;
  // i_1 ... i_k with w = s_{i_1} ... s_{i_k}, lexicographically first
  std::vector<int> reduced_word() const;

  std::string word_str() const;
  std::string oneline_str() const;  // "[2,1,3]"

  auto operator<=>(const Perm&) const = default;

 private:
  int inv_pos(int v) const;
  std::vector<int> w_;
};

// w = first . second; see CosetSide for which factor is the minimal one.
struct CosetFactorization {
  Perm coset_min;
  Perm parabolic;
};
CosetFactorization parabolic_decompose(const Perm& w, const ParabolicSet& J, CosetSide side);

// Minimal coset representatives of W_J inside W_K (K defaults to all of S),
// ordered by length then by word.
std::vector<Perm> min_coset_reps(const ParabolicSet& J, CosetSide side);
std::vector<Perm> min_coset_reps(const ParabolicSet& J, const ParabolicSet& K, CosetSide side);
// All of W_K, ordered by length then by word.
std::vector<Perm> parabolic_elements(const ParabolicSet& K);
std::vector<Perm> all_perms(int n);
Perm longest_element(const ParabolicSet& K);

bool bruhat_leq(const Perm& x, const Perm& w);

// a_k = s_{k-1} ... s_1 (a_1 = 1), b_k = s_k ... s_{n-1} (b_n = 1),
// a_{k,l} = s_{k-1} ... s_1 s_{l-1} ... s_2
Perm coset_a(int n, int k);
Perm coset_b(int n, int k);
Perm coset_akl(int n, int k, int l);

std::vector<int> sharp_twist(const std::vector<int>& word);

std::string word_to_string(const std::vector<int>& word);
std::vector<int> parse_int_sequence(std::string_view text);

}  // namespace klc
