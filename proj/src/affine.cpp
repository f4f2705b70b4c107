#include "klc/affine.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace klc {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

ExtAffineWord::ExtAffineWord(int n) : n_(n), f_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::domain_error("affine rank must be positive");
  for (int i = 0; i < n; ++i) f_[static_cast<std::size_t>(i)] = i + 1;
}

int ExtAffineWord::operator()(int i) const {
  const int r = mod(i - 1, n_) + 1;
  return f_[static_cast<std::size_t>(r - 1)] + (i - r);
}

ExtAffineWord ExtAffineWord::from_window(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  ExtAffineWord inv(n);
  inv.f_ = window;
  std::set<int> residues;
  long sum = 0;
  for (int i = 0; i < n; ++i) {
    residues.insert(mod(window[static_cast<std::size_t>(i)], n));
    sum += window[static_cast<std::size_t>(i)] - (i + 1);
  }
  if (static_cast<int>(residues.size()) != n) throw std::invalid_argument("window residues not distinct");
  if (sum % n != 0) throw std::invalid_argument("window violates the sum condition");
  // invert: window[i-1] = w^-1(i)
  ExtAffineWord w(n);
  for (int i = 1; i <= n; ++i) {
    const int j = window[static_cast<std::size_t>(i - 1)];
    const int r = mod(j - 1, n) + 1;
    w.f_[static_cast<std::size_t>(r - 1)] = i - (j - r);
  }
  return w;
}

ExtAffineWord ExtAffineWord::from_perm(const Perm& w) {
  ExtAffineWord a(w.n());
  a.f_ = w.oneline();
  return a;
}

ExtAffineWord ExtAffineWord::simple(int n, int i) {
  ExtAffineWord s(n);
  if (n < 2) throw std::domain_error("affine simple reflections need n >= 2");
  const int r = mod(i, n);
  if (r == 0) {
    s.f_[0] = 0;
    s.f_[static_cast<std::size_t>(n - 1)] = n + 1;
  } else {
    std::swap(s.f_[static_cast<std::size_t>(r - 1)], s.f_[static_cast<std::size_t>(r)]);
  }
  return s;
}

ExtAffineWord ExtAffineWord::pi(int n) {
  ExtAffineWord p(n);
  for (int i = 0; i < n; ++i) p.f_[static_cast<std::size_t>(i)] = i + 2;
  return p;
}

ExtAffineWord ExtAffineWord::y(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("y_i index");
  ExtAffineWord w(n);
  for (int k = i - 1; k >= 1; --k) w = w * simple(n, k);
  w = w * pi(n);
  for (int k = n - 1; k >= i; --k) w = w * simple(n, k);
  return w;
}

ExtAffineWord operator*(const ExtAffineWord& x, const ExtAffineWord& y) {
  if (x.n_ != y.n_) throw std::domain_error("affine words of different rank");
  ExtAffineWord p(x.n_);
  for (int i = 1; i <= x.n_; ++i) p.f_[static_cast<std::size_t>(i - 1)] = x(y(i));
  return p;
}

std::vector<int> ExtAffineWord::window() const {
  std::vector<int> win(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) {
    const int v = f_[static_cast<std::size_t>(j - 1)];
    const int r = mod(v - 1, n_) + 1;
    // w(j + (r - v)) = r
    win[static_cast<std::size_t>(r - 1)] = j + (r - v);
  }
  return win;
}

int ExtAffineWord::pi_degree() const {
  int sum = 0;
  for (int i = 1; i <= n_; ++i) sum += f_[static_cast<std::size_t>(i - 1)] - i;
  return sum / n_;
}

int ExtAffineWord::length() const {
  int l = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) l += std::abs(floor_div((*this)(j) - (*this)(i), n_));
  return l;
}

std::string ExtAffineWord::str() const {
  std::string s;
  auto win = window();
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(win[i]);
  }
  return s;
}

ExtAffineWord affine_compose(int n, const std::vector<ExtAffineWord::Factor>& factors) {
  ExtAffineWord w(n);
  for (const auto& f : factors) {
    switch (f.kind) {
      case ExtAffineWord::Factor::Kind::S: w = w * ExtAffineWord::simple(n, f.index); break;
      case ExtAffineWord::Factor::Kind::Pi: w = w * ExtAffineWord::pi(n); break;
      case ExtAffineWord::Factor::Kind::PiInv: {
        // the window of pi^-1 is pi(1) ... pi(n)
        std::vector<int> win(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) win[static_cast<std::size_t>(i)] = i + 2;
        w = w * ExtAffineWord::from_window(win);
        break;
      }
      case ExtAffineWord::Factor::Kind::Y: w = w * ExtAffineWord::y(n, f.index); break;
    }
  }
  return w;
}

}  // namespace klc
