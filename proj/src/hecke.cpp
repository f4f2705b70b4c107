#include "klc/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace klc {

namespace {

std::string perm_key(const Perm& w) {
  std::string k;
  for (int v : w.oneline()) k += static_cast<char>(v);
  return k;
}

const LaurentPoly& u_minus_uinv() {
  static const LaurentPoly p = LaurentPoly::u() - LaurentPoly::u_inv();
  return p;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n), stride_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::domain_error("S_n needs n >= 1");
  elems_ = all_perms(n);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(perm_key(elems_[i]), static_cast<int>(i));
  len_.resize(elems_.size());
  fld_.assign(elems_.size(), 0);
  lmul_.assign(elems_.size() * stride_, -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const Perm& w = elems_[i];
    len_[i] = w.length();
    for (int s = 1; s < n; ++s) {
      lmul_[i * stride_ + static_cast<std::size_t>(s)] = index(w.left_mul(s));
      if (fld_[i] == 0 && w.has_left_descent(s)) fld_[i] = s;
    }
  }
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[n];
  if (!slot) slot.reset(new SymmetricGroup(n));
  return *slot;
}

int SymmetricGroup::index(const Perm& w) const {
  auto it = index_.find(perm_key(w));
  if (it == index_.end()) throw std::out_of_range("permutation not in S_" + std::to_string(n_));
  return it->second;
}

HeckeElt HeckeElt::T(const Perm& w) {
  HeckeElt h(w.n());
  h.terms_.emplace(w, LaurentPoly(1));
  return h;
}

HeckeElt HeckeElt::scalar(int n, const LaurentPoly& c) {
  HeckeElt h(n);
  h.add_term(Perm::identity(n), c);
  return h;
}

LaurentPoly HeckeElt::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add_term(const Perm& w, const LaurentPoly& c) {
  if (w.n() != n_) throw std::domain_error("Hecke elements of different rank");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& h) {
  if (h.n_ != n_) throw std::domain_error("Hecke elements of different rank");
  for (const auto& [w, c] : h.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& h) {
  if (h.n_ != n_) throw std::domain_error("Hecke elements of different rank");
  for (const auto& [w, c] : h.terms_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt out(h.n_);
  if (c.is_zero()) return out;
  for (const auto& [w, p] : h.terms_) out.add_term(w, c * p);
  return out;
}

HeckeElt HeckeElt::left_mul_Ts(int s) const {
  HeckeElt out(n_);
  for (const auto& [w, c] : terms_) {
    Perm sw = w.left_mul(s);
    out.add_term(sw, c);
    if (w.has_left_descent(s)) out.add_term(w, u_minus_uinv() * c);
  }
  return out;
}

HeckeElt HeckeElt::right_mul_Ts(int s) const {
  HeckeElt out(n_);
  for (const auto& [w, c] : terms_) {
    Perm ws = w.right_mul(s);
    out.add_term(ws, c);
    if (w.has_right_descent(s)) out.add_term(w, u_minus_uinv() * c);
  }
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.n_ != b.n_) throw std::domain_error("Hecke elements of different rank");
  HeckeElt out(a.n_);
  for (const auto& [x, c] : a.terms_) {
    HeckeElt t = b;
    auto word = x.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.left_mul_Ts(*it);
    out += c * t;
  }
  return out;
}

const HeckeElt& bar_T(const Perm& w) {
  static std::mutex m;
  static std::map<Perm, HeckeElt> memo;
  {
    std::lock_guard lock(m);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  HeckeElt result(w.n());
  if (w.is_identity()) {
    result = HeckeElt::T(w);
  } else {
    int s = 1;
    while (!w.has_left_descent(s)) ++s;
    // bar(T_s) X = T_s X + (u^-1 - u) X
    const HeckeElt& x = bar_T(w.left_mul(s));
    result = x.left_mul_Ts(s);
    result -= u_minus_uinv() * x;
  }
  std::lock_guard lock(m);
  return memo.emplace(w, std::move(result)).first->second;
}

HeckeElt HeckeElt::bar() const {
  HeckeElt out(n_);
  for (const auto& [w, c] : terms_) out += c.bar() * bar_T(w);
  return out;
}

std::map<Perm, Integer> HeckeElt::specialize_u1() const {
  std::map<Perm, Integer> out;
  for (const auto& [w, c] : terms_) {
    Integer v = c.eval_at_one();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Perm, LaurentPoly>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.first.length() > b.first.length();
  });
  std::string s;
  bool first = true;
  for (const auto& [w, c] : items) {
    std::string cs = c.str();
    const bool single = c.terms().size() == 1;
    const bool neg = single && c.terms()[0].coeff < 0;
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    if (neg) cs = (-c).str();
    if (cs != "1") s += single ? cs + " " : "(" + cs + ") ";
    s += "T" + w.oneline_str();
  }
  return s;
}

KLBasis::KLBasis(int n) : n_(n), group_(&SymmetricGroup::get(n)) {
  const SymmetricGroup& g = *group_;
  const int N = g.size();
  // bar(T_w) = bar(T_s) bar(T_sw) on group indices, in order of length
  std::vector<SparseVec> bars(static_cast<std::size_t>(N));
  const LaurentPoly shift = LaurentPoly::u_inv() - LaurentPoly::u();
  for (int w = 0; w < N; ++w) {
    const int s = g.first_left_descent(w);
    if (s == 0) {
      bars[static_cast<std::size_t>(w)] = {{w, LaurentPoly(1)}};
      continue;
    }
    SparseVec out;
    for (const auto& [v, c] : bars[static_cast<std::size_t>(g.left_mul(w, s))]) {
      const int sv = g.left_mul(v, s);
      add_scaled(out, c, {{sv, LaurentPoly(1)}});
      if (g.length(sv) > g.length(v)) add_scaled(out, shift * c, {{v, LaurentPoly(1)}});
    }
    bars[static_cast<std::size_t>(w)] = std::move(out);
  }
  ICProblem problem;
  problem.size = N;
  problem.order.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) problem.order[static_cast<std::size_t>(i)] = i;
  problem.bar_expand = [&bars](int j) { return std::move(bars[static_cast<std::size_t>(j)]); };
  ic_ = solve_ic(problem);
}

HeckeElt KLBasis::element(const Perm& w) const {
  HeckeElt h(n_);
  for (const auto& [x, c] : ic_.column(group_->index(w))) h.add_term(group_->element(x), c);
  return h;
}

LaurentPoly KLBasis::P(const Perm& x, const Perm& w) const {
  return ic_.coeff(group_->index(x), group_->index(w));
}

long KLBasis::mu(int x, int w) const {
  if (x == w) return 0;
  return ic_.coeff(x, w).coeff(-1).get_si();
}

const KLBasis& kl_basis(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<KLBasis>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<KLBasis>(n);
  return *slot;
}

std::map<Perm, LaurentPoly> expand(const HeckeElt& h, HeckeBasis basis) {
  if (basis == HeckeBasis::T) return h.terms();
  const KLBasis& kl = kl_basis(h.n());
  SparseVec v;
  for (const auto& [w, c] : h.terms()) v.emplace(kl.group().index(w), c);
  std::map<Perm, LaurentPoly> out;
  for (auto& [i, c] : kl.ic().to_canonical(std::move(v))) out.emplace(kl.group().element(i), std::move(c));
  return out;
}

HeckeElt from_cprime(int n, const std::map<Perm, LaurentPoly>& coeffs) {
  HeckeElt h(n);
  const KLBasis& kl = kl_basis(n);
  for (const auto& [w, c] : coeffs) h += c * kl.element(w);
  return h;
}

}  // namespace klc
