#include <doctest.h>

#include <algorithm>

#include "klc/oracles.hpp"
#include "klc/perm.hpp"
#include "klc/tableau.hpp"

using namespace klc;

namespace {
void require_ok(const CheckResult& c) {
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) MESSAGE(c.failures[i]);
  CHECK(c.ok);
  CHECK(c.checked > 0);
}
}  // namespace

TEST_CASE("tableau text form") {
  for (const char* s : {"125/36/4", "-4,1,5/3,4/6", "10,11/12", "../.2/34", "-3/2/3/4"}) {
    const Tableau t = Tableau::parse(s);
    CHECK(Tableau::parse(t.str()) == t);
  }
  CHECK(Tableau::parse("125/36/4").str() == "125/36/4");
  CHECK(Tableau::parse("-4,1,5/3,4/6").shape() == Partition{3, 2, 1});
  const Tableau skew = Tableau::parse("..3/.4/5");
  CHECK(skew.inner() == Partition{2, 1});
  CHECK(skew.size() == 3);
  CHECK_THROWS(Tableau::parse("1x/2"));
}

TEST_CASE("rsk is a bijection on S_6") { require_ok(oracle_rsk_bijective(6)); }

TEST_CASE("jeu de taquin does not depend on the slide order") { require_ok(oracle_jdt_slide_orders(100, 7, 3)); }

TEST_CASE("induced labels count littlewood-richardson fillings") { require_ok(oracle_lr_counts(5)); }

TEST_CASE("insertion round trips") {
  for (const Perm& w : all_perms(5)) {
    const RSKPair pq = rsk(w.word());
    CHECK(inverse_rsk(pq.P, pq.Q) == w.word());
    // transposing w swaps P and Q
    const RSKPair inv = rsk(w.inverse().word());
    CHECK(inv.P == pq.Q);
    CHECK(inv.Q == pq.P);
    for (const Box& b : outer_corners(pq.P.shape())) {
      const auto [smaller, out] = row_uninsert(pq.P, b);
      CHECK(row_insert(smaller, out).first == pq.P);
      const auto [csmaller, cout] = column_uninsert(pq.P, b);
      CHECK(column_insert(csmaller, cout).first == pq.P);
    }
  }
}

TEST_CASE("evacuation is an involution preserving shape") {
  for (int n = 1; n <= 6; ++n)
    for (const Tableau& t : standard_tableaux_of_size(n)) {
      const Tableau e = evacuation(t);
      CHECK(e.shape() == t.shape());
      CHECK(e.is_standard());
      CHECK(evacuation(e) == t);
    }
}

TEST_CASE("growth diagrams reproduce rsk shapes") {
  // shape at (i, j) is the rsk shape of the entries w(1..i) that are <= j
  const int n = 5;
  for (const Perm& w : all_perms(n)) {
    std::vector<std::vector<Partition>> grid(n + 1, std::vector<Partition>(n + 1));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        grid[i][j] = growth(w(i) == j ? 1 : 0, grid[i - 1][j], grid[i - 1][j - 1], grid[i][j - 1]);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<int> sub;
        for (int k = 1; k <= i; ++k)
          if (w(k) <= j) sub.push_back(w(k));
        CHECK(grid[i][j] == rsk(sub).P.shape());
      }
  }
  CHECK(growth_prime(0, {2}, {1}, {1, 1}) == Partition{2, 1});
}

TEST_CASE("induced and restricted labels") {
  const auto labels = induced_cell_labels(Tableau::parse("12/3"), Tableau::parse("46/5"));
  CHECK(labels.size() == 8);
  for (const auto& P : labels) {
    CHECK(entries_at_most(P, 3) == Tableau::parse("12/3"));
    CHECK(jdt_rectify(entries_above(P, 3)) == Tableau::parse("46/5"));
  }
  // reciprocity: inducing a restricted label back gives a cell of the original shape
  const Tableau P = Tableau::parse("125/36/4");
  for (const auto& [T, T2] : restricted_cell_labels(P, 3)) {
    const auto up = induced_cell_labels(T, T2);
    CHECK(std::any_of(up.begin(), up.end(), [&](const Tableau& x) { return x.shape() == P.shape(); }));
  }
  CHECK(restricted_cell_labels(P, 3).size() == 6);
}

TEST_CASE("dominance and partitions") {
  CHECK(dominance_leq({2, 2}, {3, 1}));
  CHECK(!dominance_leq({3, 1}, {2, 2}));
  CHECK(dominance_leq({3, 1, 1, 1}, {3, 3}));
  CHECK(!dominance_leq({3, 3}, {4, 1, 1}));
  CHECK(!dominance_leq({4, 1, 1}, {3, 3}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  std::size_t f = 0;
  for (const auto& p : partitions_of(5)) f += standard_tableaux(p).size();
  CHECK(f == 26);
}
