#include "klc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace klc {

GenSet::GenSet(std::initializer_list<int> gens) {
  for (int g : gens) insert(g);
}

GenSet GenSet::range(int lo, int hi) {
  GenSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

GenSet GenSet::shifted(int k) const {
  GenSet s;
  for (int i : elements()) s.insert(i + k);
  return s;
}

std::vector<int> GenSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string GenSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

ParabolicSet ParabolicSet::without(int n, int i) {
  ParabolicSet p = full(n);
  p.gens.erase(i);
  return p;
}

ParabolicSet ParabolicSet::parse(int n, std::string_view text) {
  ParabolicSet p{n, {}};
  for (int g : parse_int_sequence(text)) {
    if (g < 1 || g >= n) throw std::invalid_argument("generator out of range: " + std::to_string(g));
    p.gens.insert(g);
  }
  return p;
}

Perm::Perm(std::vector<int> oneline) : w_(std::move(oneline)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  Perm p;
  p.w_ = std::move(w);
  return p;
}

Perm Perm::simple(int n, int i) { return identity(n).left_mul(i); }

Perm Perm::from_word(const std::vector<int>& word) { return Perm(word).inverse(); }

Perm Perm::from_reduced_word(int n, const std::vector<int>& gens) {
  Perm p = identity(n);
  for (int g : gens) p = p.right_mul(g);
  return p;
}

Perm Perm::parse_word(std::string_view text) { return from_word(parse_int_sequence(text)); }

std::vector<int> Perm::word() const { return inverse().w_; }

Perm Perm::inverse() const {
  Perm p;
  p.w_.resize(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) p.w_[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

Perm Perm::left_mul(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index");
  Perm p = *this;
  for (int& v : p.w_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return p;
}

Perm Perm::right_mul(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index");
  Perm p = *this;
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Perm operator*(const Perm& x, const Perm& y) {
  if (x.n() != y.n()) throw std::domain_error("permutations of different degree");
  Perm p;
  p.w_.resize(y.w_.size());
  for (std::size_t i = 0; i < y.w_.size(); ++i) p.w_[i] = x(y.w_[i]);
  return p;
}

int Perm::length() const {
  int l = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++l;
  return l;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Perm::inv_pos(int v) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] == v) return static_cast<int>(i) + 1;
  throw std::out_of_range("value not in permutation");
}

GenSet Perm::left_descents() const {
  GenSet s;
  std::vector<int> inv = word();
  for (int i = 1; i < n(); ++i)
    if (inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)]) s.insert(i);
  return s;
}

GenSet Perm::right_descents() const {
  GenSet s;
  for (int i = 1; i < n(); ++i)
    if (has_right_descent(i)) s.insert(i);
  return s;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> out;
  Perm w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i < n(); ++i) {
      if (w.has_left_descent(i)) {
        out.push_back(i);
        w = w.left_mul(i);
        break;
      }
    }
  }
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  const bool digits = word.size() <= 9 &&
                      std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!digits && i > 0) s += ",";
    s += std::to_string(word[i]);
  }
  return s;
}

std::string Perm::word_str() const { return word_to_string(word()); }

std::string Perm::oneline_str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

std::vector<int> parse_int_sequence(std::string_view text) {
  std::vector<int> out;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (separated) {
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) out.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ')
        flush();
      else
        tok += c;
    }
    flush();
    return out;
  }
  int sign = 1;
  for (char c : text) {
    if (c == '-') {
      sign = -1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back(sign * (c - '0'));
      sign = 1;
    } else {
      throw std::invalid_argument("bad integer sequence: " + std::string(text));
    }
  }
  return out;
}

CosetFactorization parabolic_decompose(const Perm& w, const ParabolicSet& J, CosetSide side) {
  Perm m = w;
  Perm par = Perm::identity(w.n());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t : J.gens.elements()) {
      if (side == CosetSide::Left && m.has_right_descent(t)) {
        m = m.right_mul(t);
        par = par.left_mul(t);
        changed = true;
      } else if (side == CosetSide::Right && m.has_left_descent(t)) {
        m = m.left_mul(t);
        par = par.right_mul(t);
        changed = true;
      }
    }
  }
  return {m, par};
}

namespace {

bool length_then_word(const Perm& a, const Perm& b) {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la < lb;
  return a.word() < b.word();
}

}  // namespace

std::vector<Perm> min_coset_reps(const ParabolicSet& J, const ParabolicSet& K, CosetSide side) {
  if (!J.gens.subset_of(K.gens)) throw std::domain_error("J must be contained in K");
  // breadth first from the identity, multiplying on the side away from W_J
  std::set<Perm> seen{Perm::identity(J.n)};
  std::deque<Perm> queue{Perm::identity(J.n)};
  while (!queue.empty()) {
    Perm w = queue.front();
    queue.pop_front();
    for (int s : K.gens.elements()) {
      Perm v = side == CosetSide::Left ? w.left_mul(s) : w.right_mul(s);
      if (v.length() < w.length()) continue;
      GenSet d = side == CosetSide::Left ? v.right_descents() : v.left_descents();
      if (!(d & J.gens).empty()) continue;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), length_then_word);
  return out;
}

std::vector<Perm> min_coset_reps(const ParabolicSet& J, CosetSide side) {
  return min_coset_reps(J, ParabolicSet::full(J.n), side);
}

std::vector<Perm> parabolic_elements(const ParabolicSet& K) {
  return min_coset_reps(ParabolicSet::none(K.n), K, CosetSide::Left);
}

std::vector<Perm> all_perms(int n) { return parabolic_elements(ParabolicSet::full(n)); }

Perm longest_element(const ParabolicSet& K) {
  Perm w = Perm::identity(K.n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : K.gens.elements())
      if (!w.has_left_descent(s)) {
        w = w.left_mul(s);
        grew = true;
      }
  }
  return w;
}

bool bruhat_leq(const Perm& x, const Perm& w) {
  if (x.n() != w.n()) throw std::domain_error("permutations of different degree");
  const int n = x.n();
  // x <= w iff #{a <= i : x(a) >= j} <= #{a <= i : w(a) >= j} for all i, j
  for (int j = 1; j <= n; ++j) {
    int cx = 0;
    int cw = 0;
    for (int i = 1; i <= n; ++i) {
      if (x(i) >= j) ++cx;
      if (w(i) >= j) ++cw;
      if (cx > cw) return false;
    }
  }
  return true;
}

Perm coset_a(int n, int k) {
  std::vector<int> g;
  for (int i = k - 1; i >= 1; --i) g.push_back(i);
  return Perm::from_reduced_word(n, g);
}

Perm coset_b(int n, int k) {
  std::vector<int> g;
  for (int i = k; i <= n - 1; ++i) g.push_back(i);
  return Perm::from_reduced_word(n, g);
}

Perm coset_akl(int n, int k, int l) {
  std::vector<int> g;
  for (int i = k - 1; i >= 1; --i) g.push_back(i);
  for (int i = l - 1; i >= 2; --i) g.push_back(i);
  return Perm::from_reduced_word(n, g);
}

std::vector<int> sharp_twist(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word) out.push_back(n + 1 - x);
  return out;
}

}  // namespace klc
