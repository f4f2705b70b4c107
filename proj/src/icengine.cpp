#include "klc/icengine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace klc {

void add_scaled(SparseVec& acc, const LaurentPoly& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& [i, p] : v) {
    auto it = acc.find(i);
    if (it == acc.end()) {
      LaurentPoly t = c * p;
      if (!t.is_zero()) acc.emplace(i, std::move(t));
    } else {
      it->second.add_mul(c, p);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

SparseVec scaled(const LaurentPoly& c, const SparseVec& v) {
  SparseVec out;
  add_scaled(out, c, v);
  return out;
}

void drop_zeros(SparseVec& v) {
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
}

SparseVec bar_coefficients(const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, p] : v) out.emplace(i, p.bar());
  return out;
}

const SparseVec& ICBasis::column(int j) const {
  if (!solved(j)) throw std::out_of_range("IC basis element not computed: " + std::to_string(j));
  return cols_[static_cast<std::size_t>(j)];
}

LaurentPoly ICBasis::coeff(int i, int j) const {
  const auto& c = column(j);
  auto it = c.find(i);
  return it == c.end() ? LaurentPoly{} : it->second;
}

std::vector<int> ICBasis::indices() const {
  std::vector<int> out;
  for (int j : order_)
    if (solved(j)) out.push_back(j);
  return out;
}

SparseVec ICBasis::to_canonical(SparseVec v) const {
  // eliminate from the top of the linear extension down
  std::map<int, int> by_pos;  // position -> index
  for (const auto& [i, p] : v) by_pos.emplace(pos_[static_cast<std::size_t>(i)], i);
  SparseVec out;
  while (!by_pos.empty()) {
    auto top = std::prev(by_pos.end());
    const int i = top->second;
    by_pos.erase(top);
    auto it = v.find(i);
    if (it == v.end() || it->second.is_zero()) continue;
    LaurentPoly a = it->second;
    for (const auto& [k, p] : column(i)) {
      auto vk = v.find(k);
      if (vk == v.end()) {
        v.emplace(k, -(a * p));
        by_pos.emplace(pos_[static_cast<std::size_t>(k)], k);
      } else {
        vk->second -= a * p;
      }
    }
    out.emplace(i, std::move(a));
  }
  return out;
}

std::vector<int> bar_support_closure(const ICProblem& problem, const std::vector<int>& targets,
                                     std::vector<SparseVec>* bars) {
  std::vector<char> seen(static_cast<std::size_t>(problem.size), 0);
  std::deque<int> queue;
  for (int t : targets) {
    if (t < 0 || t >= problem.size) throw std::out_of_range("IC target out of range");
    if (!seen[static_cast<std::size_t>(t)]) {
      seen[static_cast<std::size_t>(t)] = 1;
      queue.push_back(t);
    }
  }
  std::vector<int> out;
  while (!queue.empty()) {
    const int j = queue.front();
    queue.pop_front();
    out.push_back(j);
    SparseVec b = problem.bar_expand(j);
    for (const auto& [i, p] : b)
      if (!seen[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = 1;
        queue.push_back(i);
      }
    if (bars) (*bars)[static_cast<std::size_t>(j)] = std::move(b);
  }
  return out;
}

ICBasis solve_ic(const ICProblem& problem, const ICSolveOptions& options) {
  const auto n = static_cast<std::size_t>(problem.size);
  if (problem.order.size() != n) throw std::invalid_argument("linear extension has the wrong size");
  ICBasis basis;
  basis.cols_.assign(n, {});
  basis.has_.assign(n, 0);
  basis.pos_.assign(n, -1);
  basis.order_ = problem.order;
  for (std::size_t p = 0; p < n; ++p) {
    const int j = problem.order[p];
    if (j < 0 || static_cast<std::size_t>(j) >= n || basis.pos_[static_cast<std::size_t>(j)] != -1)
      throw std::invalid_argument("linear extension is not a permutation of the indices");
    basis.pos_[static_cast<std::size_t>(j)] = static_cast<int>(p);
  }

  std::vector<SparseVec> bars(n);
  std::vector<char> wanted(n, 1);
  if (options.targets) {
    std::fill(wanted.begin(), wanted.end(), 0);
    for (int j : bar_support_closure(problem, *options.targets, &bars)) wanted[static_cast<std::size_t>(j)] = 1;
  } else {
    for (std::size_t j = 0; j < n; ++j) bars[j] = problem.bar_expand(static_cast<int>(j));
  }

  for (int j : problem.order) {
    const auto uj = static_cast<std::size_t>(j);
    if (!wanted[uj]) continue;
    SparseVec r = bars[uj];
    auto self = r.find(j);
    if (self == r.end() || self->second != LaurentPoly(1))
      throw InvolutionError("involution inconsistent: bar(t_j) must contain t_j with coefficient 1");
    r.erase(self);
    for (const auto& [i, p] : r) {
      if (basis.pos_[static_cast<std::size_t>(i)] >= basis.pos_[uj] ||
          (problem.precedes && !problem.precedes(i, j)))
        throw std::domain_error("bar(t_j) - t_j is not supported below j");
    }
    // r = sum a_i c_i with a_i = q_i - bar(q_i); then c_j = t_j + sum q_i c_i
    SparseVec a = basis.to_canonical(r);
    SparseVec c{{j, LaurentPoly(1)}};
    for (const auto& [i, ai] : a) {
      if (ai.coeff(0) != 0 || ai.bar() != -ai)
        throw InvolutionError("involution inconsistent at index " + std::to_string(j));
      add_scaled(c, ai.negative_part(), basis.cols_[static_cast<std::size_t>(i)]);
    }
    basis.cols_[uj] = std::move(c);
    basis.has_[uj] = 1;
  }

  if (options.check_involution) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!wanted[j]) continue;
      SparseVec twice;
      for (const auto& [i, p] : bars[j]) {
        if (bars[static_cast<std::size_t>(i)].empty()) bars[static_cast<std::size_t>(i)] = problem.bar_expand(i);
        add_scaled(twice, p.bar(), bars[static_cast<std::size_t>(i)]);
      }
      if (twice != SparseVec{{static_cast<int>(j), LaurentPoly(1)}})
        throw InvolutionError("involution inconsistent: bar is not an involution at index " + std::to_string(j));
    }
  }
  return basis;
}

ICBasis restrict_to_lower_ideal(const ICBasis& basis, const std::vector<int>& ideal,
                                const std::function<bool(int, int)>& precedes) {
  std::set<int> keep(ideal.begin(), ideal.end());
  for (int j : keep) {
    if (!basis.solved(j)) throw std::domain_error("ideal contains an unsolved index");
    for (int i = 0; i < basis.size(); ++i)
      if (precedes(i, j) && !keep.count(i)) throw std::domain_error("subset is not a lower order ideal");
  }
  ICBasis out;
  out.cols_.assign(basis.cols_.size(), {});
  out.has_.assign(basis.has_.size(), 0);
  out.pos_ = basis.pos_;
  out.order_ = basis.order_;
  for (int j : keep) {
    out.cols_[static_cast<std::size_t>(j)] = basis.cols_[static_cast<std::size_t>(j)];
    out.has_[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

}  // namespace klc
