#include "klc/oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "klc/icengine.hpp"
#include "klc/perm.hpp"
#include "klc/tableau.hpp"

namespace klc {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly random_lower(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  LaurentPoly p;
  for (int d = 1; d <= 3; ++d) p += LaurentPoly::monomial(-d, coeff(rng));
  return p;
}

// Gauss-Jordan over Q on [A | b]; the unique solution, or nothing
std::optional<std::vector<mpq_class>> solve_unique(std::vector<std::vector<mpq_class>> rows, std::size_t vars) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < vars && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const mpq_class lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == rank || rows[k][c] == 0) continue;
      const mpq_class f = rows[k][c];
      for (std::size_t j = c; j <= vars; ++j) rows[k][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t k = rank; k < rows.size(); ++k)
    if (rows[k][vars] != 0) return std::nullopt;
  if (rank != vars) return std::nullopt;
  std::vector<mpq_class> x(vars);
  for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = rows[k][vars];
  return x;
}

CheckResult one_ic_problem(std::mt19937_64& rng, int N, int id) {
  CheckResult r;
  const std::string tag = "problem " + std::to_string(id) + ": ";
  std::bernoulli_distribution coin(0.5);
  // random order ideal structure, transitively closed
  std::vector<std::vector<char>> below(static_cast<std::size_t>(N), std::vector<char>(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) below[i][j] = coin(rng);
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (below[i][k] && below[k][j]) below[i][j] = 1;

  Matrix P(static_cast<std::size_t>(N), std::vector<LaurentPoly>(static_cast<std::size_t>(N)));
  for (int j = 0; j < N; ++j) {
    P[j][j] = 1;
    for (int i = 0; i < j; ++i)
      if (below[i][j] && coin(rng)) P[i][j] = random_lower(rng);
  }
  // Q = P^-1, B = P bar(Q): the bar matrix that fixes every column of P
  Matrix Q(P.size(), std::vector<LaurentPoly>(P.size()));
  for (int j = 0; j < N; ++j) {
    Q[j][j] = 1;
    for (int i = j - 1; i >= 0; --i) {
      LaurentPoly s;
      for (int k = i + 1; k <= j; ++k) s.add_mul(P[i][k], Q[k][j]);
      Q[i][j] = -s;
    }
  }
  Matrix B(P.size(), std::vector<LaurentPoly>(P.size()));
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j)
      for (int i = 0; i < N; ++i) B[k][j].add_mul(P[k][i], Q[i][j].bar());

  ICProblem problem;
  problem.size = N;
  for (int i = 0; i < N; ++i) problem.order.push_back(i);
  problem.bar_expand = [&B, N](int j) {
    SparseVec v;
    for (int k = 0; k < N; ++k)
      if (!B[k][j].is_zero()) v.emplace(k, B[k][j]);
    return v;
  };
  problem.precedes = [&below](int i, int j) { return below[i][j] != 0; };
  ICSolveOptions opts;
  opts.check_involution = true;
  const ICBasis ic = solve_ic(problem, opts);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      r.expect(ic.coeff(i, j) == P[i][j], tag + "solver P(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                               ic.coeff(i, j).str() + ", expected " + P[i][j].str());

  // plain linear solve: c_j = t_j + sum_{i<j} sum_d a_{i,d} u^-d t_i with bar(c_j) = c_j
  constexpr int D = 4;
  for (int j = 0; j < N; ++j) {
    std::vector<int> lower;
    for (int i = 0; i < N; ++i)
      if (below[i][j]) lower.push_back(i);
    const std::size_t vars = lower.size() * D;
    auto var = [&](std::size_t li, int d) { return li * D + static_cast<std::size_t>(d - 1); };
    int lo = 0, hi = 0;
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < N; ++i)
        if (!B[k][i].is_zero()) {
          lo = std::min(lo, B[k][i].min_exp() - D);
          hi = std::max(hi, B[k][i].max_exp() + D);
        }
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 0; k < N; ++k)
      for (int e = lo; e <= hi; ++e) {
        std::vector<mpq_class> row(vars + 1);
        for (std::size_t li = 0; li < lower.size(); ++li)
          for (int d = 1; d <= D; ++d) row[var(li, d)] += mpq_class(B[k][lower[li]].coeff(e - d));
        auto pos = std::find(lower.begin(), lower.end(), k);
        if (pos != lower.end() && -e >= 1 && -e <= D) row[var(static_cast<std::size_t>(pos - lower.begin()), -e)] -= 1;
        row[vars] = mpq_class((k == j && e == 0) ? 1 : 0) - mpq_class(B[k][j].coeff(e));
        if (std::any_of(row.begin(), row.end(), [](const mpq_class& x) { return x != 0; })) rows.push_back(std::move(row));
      }
    auto x = solve_unique(std::move(rows), vars);
    r.expect(x.has_value(), tag + "linear system for column " + std::to_string(j) + " has no unique solution");
    if (!x) continue;
    for (std::size_t li = 0; li < lower.size(); ++li) {
      LaurentPoly p;
      bool integral = true;
      for (int d = 1; d <= D; ++d) {
        const mpq_class& a = (*x)[var(li, d)];
        integral = integral && a.get_den() == 1;
        if (a != 0) p += LaurentPoly::monomial(-d, a.get_num());
      }
      r.expect(integral && p == P[lower[li]][j], tag + "linear solve disagrees at (" + std::to_string(lower[li]) + "," +
                                                     std::to_string(j) + ")");
    }
  }
  return r;
}

void all_fillings(const Tableau& start, std::set<Tableau>& seen, std::set<Tableau>& results) {
  if (!seen.insert(start).second) return;
  if (start.is_straight()) {
    results.insert(start);
    return;
  }
  for (const Box& b : inner_corners(start)) all_fillings(slide_into(start, b), seen, results);
}

// row reading word, bottom row first
std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Tableau random_skew(std::mt19937_64& rng, int max_cells) {
  std::uniform_int_distribution<int> size_dist(2, max_cells + 3);
  const int s = size_dist(rng);
  const auto parts = partitions_of(s);
  Partition lambda = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
  std::uniform_int_distribution<int> cells_dist(1, std::min(max_cells, s));
  Partition mu = lambda;
  for (int k = cells_dist(rng); k > 0; --k) {
    auto corners = outer_corners(mu);
    const Box b = corners[std::uniform_int_distribution<std::size_t>(0, corners.size() - 1)(rng)];
    --mu[static_cast<std::size_t>(b.row)];
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
  }
  // random linear extension of lambda / mu
  std::vector<std::vector<int>> rows(lambda.size());
  Partition cur = mu;
  const int cells = s - partition_size(mu);
  for (int v = 1; v <= cells; ++v) {
    std::vector<Box> options;
    for (const Box& b : addable_boxes(cur))
      if (b.row < static_cast<int>(lambda.size()) && b.col < lambda[static_cast<std::size_t>(b.row)]) options.push_back(b);
    const Box b = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    if (b.row == static_cast<int>(cur.size())) cur.push_back(0);
    ++cur[static_cast<std::size_t>(b.row)];
    rows[static_cast<std::size_t>(b.row)].push_back(v);
  }
  return Tableau(rows, mu);
}

// number of semistandard fillings of lambda/mu with content nu and a lattice reverse reading word
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!contains(lambda, mu) || partition_size(lambda) != partition_size(mu) + partition_size(nu)) return 0;
  std::vector<Box> boxes;  // reverse reading order: rows top to bottom, each right to left
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const int start = r < mu.size() ? mu[r] : 0;
    for (int c = lambda[r] - 1; c >= start; --c) boxes.push_back({static_cast<int>(r), c});
  }
  std::vector<std::vector<int>> grid(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) grid[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> used(nu.size(), 0);
  long count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == boxes.size()) {
      ++count;
      return;
    }
    const Box b = boxes[k];
    const auto R = static_cast<std::size_t>(b.row);
    const auto C = static_cast<std::size_t>(b.col);
    for (std::size_t v = 0; v < nu.size(); ++v) {
      const int val = static_cast<int>(v) + 1;
      if (used[v] == nu[v]) continue;
      if (v > 0 && used[v] + 1 > used[v - 1]) continue;  // lattice
      // rows weakly increase: the box to the right was filled earlier
      if (C + 1 < grid[R].size() && grid[R][C + 1] != 0 && grid[R][C + 1] < val) continue;
      // columns strictly increase: the box above was filled earlier unless it is inner
      if (R > 0 && C < grid[R - 1].size()) {
        const bool above_inner = (R - 1) < mu.size() && static_cast<int>(C) < mu[R - 1];
        if (!above_inner && grid[R - 1][C] >= val) continue;
      }
      grid[R][C] = val;
      ++used[v];
      go(k + 1);
      --used[v];
      grid[R][C] = 0;
    }
  };
  go(0);
  return count;
}

}  // namespace

CheckResult oracle_ic_random(int problems, int max_size, std::uint64_t seed) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, max_size);
  for (int p = 0; p < problems; ++p) r.merge(one_ic_problem(rng, size_dist(rng), p));
  return r;
}

CheckResult oracle_rsk_bijective(int n) {
  CheckResult r;
  std::set<std::pair<Tableau, Tableau>> pairs;
  long total = 0;
  for (const Perm& w : all_perms(n)) {
    const auto word = w.word();
    const RSKPair pq = rsk(word);
    const std::string id = w.word_str();
    r.expect(pq.P.shape() == pq.Q.shape(), id + ": P and Q differ in shape");
    r.expect(pq.P.is_standard() && pq.Q.is_standard() && pq.P.is_straight() && pq.Q.is_straight(),
             id + ": P or Q is not a standard straight tableau");
    r.expect(inverse_rsk(pq.P, pq.Q) == word, id + ": inverse_rsk does not round-trip");
    pairs.emplace(pq.P, pq.Q);
    ++total;
  }
  long expected = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto f = static_cast<long>(standard_tableaux(lambda).size());
    expected += f * f;
  }
  r.expect(static_cast<long>(pairs.size()) == total, "rsk is injective");
  r.expect(total == expected, "n! equals the number of same-shape pairs");
  return r;
}

CheckResult oracle_jdt_slide_orders(int tableaux, int max_cells, std::uint64_t seed) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < tableaux; ++k) {
    const Tableau t = random_skew(rng, max_cells);
    std::set<Tableau> seen, results;
    all_fillings(t, seen, results);
    r.expect(results.size() == 1, t.str() + ": slide orders disagree");
    const Tableau rect = jdt_rectify(t);
    r.expect(results.count(rect) == 1, t.str() + ": jdt_rectify differs from an exhaustive slide order");
    r.expect(rsk(reading_word(t)).P == rect, t.str() + ": rectification differs from P of the reading word");
  }
  return r;
}

CheckResult oracle_bruhat_subword(int n) {
  CheckResult r;
  const auto perms = all_perms(n);
  for (const Perm& w : perms) {
    const auto word = w.reduced_word();
    std::set<Perm> below;
    const std::size_t L = word.size();
    for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
      Perm x = Perm::identity(n);
      for (std::size_t i = 0; i < L; ++i)
        if ((mask >> i) & 1u) x = x * Perm::simple(n, word[i]);
      below.insert(x);
    }
    for (const Perm& x : perms)
      r.expect(bruhat_leq(x, w) == (below.count(x) == 1), "bruhat " + x.word_str() + " <= " + w.word_str());
  }
  return r;
}

CheckResult oracle_lr_counts(int n) {
  CheckResult r;
  for (int k = 1; k < n; ++k)
    for (const auto& mu : partitions_of(k))
      for (const auto& nu : partitions_of(n - k)) {
        long lr = 0;
        for (const auto& lambda : partitions_of(n)) lr += lr_coefficient(lambda, mu, nu);
        for (const auto& T : standard_tableaux(mu, 1))
          for (const auto& T2 : standard_tableaux(nu, k + 1)) {
            const auto labels = induced_cell_labels(T, T2);
            r.expect(static_cast<long>(labels.size()) == lr,
                     T.str() + " x " + T2.str() + ": " + std::to_string(labels.size()) + " labels, LR gives " + std::to_string(lr));
            for (const auto& P : labels)
              r.expect(entries_at_most(P, k) == T && jdt_rectify(entries_above(P, k)) == T2,
                       P.str() + " is not a label of " + T.str() + " x " + T2.str());
          }
      }
  return r;
}

}  // namespace klc
