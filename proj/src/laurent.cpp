#include "klc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

namespace klc {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(int exp, const Integer& coeff) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, coeff}});
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

Integer LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.push_back({-it->exp, it->coeff});
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

bool LaurentPoly::in_lower_lattice(bool strict) const {
  if (terms_.empty()) return true;
  return strict ? terms_.back().exp < 0 : terms_.back().exp <= 0;
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<Term> t;
  for (const auto& term : terms_)
    if (term.exp < 0) t.push_back(term);
  return LaurentPoly(std::move(t));
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

bool LaurentPoly::all_exponents_have_parity(int parity) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [parity](const Term& t) { return ((t.exp % 2) + 2) % 2 == parity; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// merge a*p + b*q for a, b in {1, -1}
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& p,
                                     const std::vector<LaurentPoly::Term>& q, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() || j != q.end()) {
    if (j == q.end() || (i != p.end() && i->exp < j->exp)) {
      out.push_back(*i++);
    } else if (i == p.end() || j->exp < i->exp) {
      out.push_back({j->exp, subtract ? Integer(-j->coeff) : j->coeff});
      ++j;
    } else {
      Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  if (q.terms_.empty()) return *this;
  if (terms_.empty()) return *this = q;
  terms_ = merge(terms_, q.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge(terms_, q.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const int lo = p.min_exp() + q.min_exp();
  const int hi = p.max_exp() + q.max_exp();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) {
      auto& slot = dense[static_cast<std::size_t>(a.exp + b.exp - lo)];
      mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) out.push_back({lo + static_cast<int>(k), std::move(dense[k])});
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

void LaurentPoly::add_mul(const LaurentPoly& c, const LaurentPoly& q) {
  if (c.is_zero() || q.is_zero()) return;
  *this += c * q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (it->exp == 0) {
      s += c.get_str();
      continue;
    }
    if (c != 1) s += c.get_str();
    s += "u";
    if (it->exp != 1) s += "^" + std::to_string(it->exp);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty polynomial text");
  std::map<int, Integer> acc;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    Integer c = 1;
    bool has_digits = i > start;
    if (has_digits) c = Integer(t.substr(start, i - start));
    int exp = 0;
    if (i < t.size() && t[i] == 'u') {
      ++i;
      exp = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < t.size() && t[i] == '-') ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == es || (i == es + 1 && t[es] == '-')) fail();
        exp = std::stoi(t.substr(es, i - es));
      }
    } else if (!has_digits) {
      fail();
    }
    acc[exp] += sign * c;
  }
  LaurentPoly p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly u_integer(int k) {
  if (k <= 0) throw std::domain_error("u-integer [k] needs k >= 1");
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(k - 1 - 2 * i);
  return p;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace klc
