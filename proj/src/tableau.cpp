#include "klc/tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "klc/perm.hpp"

namespace klc {

namespace {

constexpr int kHole = std::numeric_limits<int>::min();
using Grid = std::vector<std::vector<int>>;

int inner_at(const Partition& p, int r) {
  return r < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(r)] : 0;
}

void trim(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Grid to_grid(const Tableau& t) {
  Grid g;
  for (int r = 0; r < t.num_rows(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(inner_at(t.inner(), r)), kHole);
    const auto& rest = t.rows()[static_cast<std::size_t>(r)];
    row.insert(row.end(), rest.begin(), rest.end());
    g.push_back(std::move(row));
  }
  return g;
}

Tableau from_grid(Grid g) {
  while (!g.empty() && g.back().empty()) g.pop_back();
  Partition inner;
  std::vector<std::vector<int>> rows;
  for (auto& row : g) {
    std::size_t h = 0;
    while (h < row.size() && row[h] == kHole) ++h;
    for (std::size_t c = h; c < row.size(); ++c)
      if (row[c] == kHole) throw std::logic_error("tableau grid has an interior hole");
    inner.push_back(static_cast<int>(h));
    rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(h), row.end());
  }
  trim(inner);
  return Tableau(std::move(rows), std::move(inner));
}

bool filled(const Grid& g, int r, int c) {
  return r >= 0 && c >= 0 && r < static_cast<int>(g.size()) && c < static_cast<int>(g[static_cast<std::size_t>(r)].size()) &&
         g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != kHole;
}

int& cell(Grid& g, int r, int c) { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

Tableau transpose(const Tableau& t) {
  if (!t.is_straight()) throw std::invalid_argument("transpose needs a straight tableau");
  Grid g = to_grid(t);
  Grid out;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (out.size() <= c) out.resize(c + 1);
      out[c].push_back(g[r][c]);
    }
  return from_grid(std::move(out));
}

void require_straight(const Tableau& t, const char* what) {
  if (!t.is_straight()) throw std::invalid_argument(std::string(what) + " needs a straight tableau");
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows, Partition inner) : inner_(std::move(inner)), rows_(std::move(rows)) {
  trim(inner_);
  if (!is_partition(inner_)) throw std::invalid_argument("inner shape is not a partition");
  if (rows_.size() < inner_.size()) rows_.resize(inner_.size());
  while (!rows_.empty() && rows_.back().empty() && inner_at(inner_, static_cast<int>(rows_.size()) - 1) == 0)
    rows_.pop_back();
  if (!is_partition(shape())) throw std::invalid_argument("tableau shape is not a partition");
  std::set<int> seen;
  for (const auto& row : rows_)
    for (int v : row)
      if (v == kHole || !seen.insert(v).second) throw std::invalid_argument("tableau entries must be distinct");
}

Tableau Tableau::parse(std::string_view text) {
  if (text.empty() || text == "-") return Tableau{};
  std::vector<std::vector<int>> rows;
  Partition inner;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    std::string_view part = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    std::vector<int> row;
    int holes = 0;
    auto push = [&](std::string_view tok) {
      if (tok == ".") {
        if (!row.empty()) throw std::invalid_argument("inner boxes must come first in a row");
        ++holes;
      } else {
        try {
          std::size_t used = 0;
          int v = std::stoi(std::string(tok), &used);
          if (used != tok.size()) throw std::invalid_argument("");
          row.push_back(v);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad tableau entry '" + std::string(tok) + "'");
        }
      }
    };
    if (part.find(',') != std::string_view::npos) {
      std::size_t s = 0;
      while (true) {
        std::size_t comma = part.find(',', s);
        push(part.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s));
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
    } else {
      // single digits; a lone negative entry such as "-3" may also appear without commas
      for (std::size_t i = 0; i < part.size(); ++i) {
        const std::size_t len = part[i] == '-' && i + 1 < part.size() ? 2 : 1;
        push(part.substr(i, len));
        i += len - 1;
      }
    }
    inner.push_back(holes);
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows), std::move(inner));
}

std::string Tableau::str() const {
  if (size() == 0 && inner_.empty()) return "-";
  bool commas = false;
  for (const auto& row : rows_)
    for (int v : row)
      if (v < 0 || v > 9) commas = true;
  std::string s;
  for (int r = 0; r < num_rows(); ++r) {
    if (r > 0) s += '/';
    bool first = true;
    auto emit = [&](const std::string& tok) {
      if (!first && commas) s += ',';
      first = false;
      s += tok;
    };
    for (int c = 0; c < inner_at(inner_, r); ++c) emit(".");
    for (int v : rows_[static_cast<std::size_t>(r)]) emit(std::to_string(v));
  }
  return s;
}

Partition Tableau::shape() const {
  Partition p;
  for (int r = 0; r < num_rows(); ++r)
    p.push_back(inner_at(inner_, r) + static_cast<int>(rows_[static_cast<std::size_t>(r)].size()));
  trim(p);
  return p;
}

int Tableau::size() const {
  int k = 0;
  for (const auto& row : rows_) k += static_cast<int>(row.size());
  return k;
}

bool Tableau::has_box(Box b) const {
  if (b.row < 0 || b.row >= num_rows()) return false;
  const int lo = inner_at(inner_, b.row);
  return b.col >= lo && b.col < lo + static_cast<int>(rows_[static_cast<std::size_t>(b.row)].size());
}

int Tableau::at(Box b) const {
  if (!has_box(b)) throw std::out_of_range("no such box in tableau");
  return rows_[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col - inner_at(inner_, b.row))];
}

std::optional<Box> Tableau::find(int value) const {
  for (int r = 0; r < num_rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] == value) return Box{r, inner_at(inner_, r) + static_cast<int>(i)};
  }
  return std::nullopt;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> e;
  for (const auto& row : rows_) e.insert(e.end(), row.begin(), row.end());
  std::sort(e.begin(), e.end());
  return e;
}

bool Tableau::is_standard() const {
  Grid g = to_grid(*this);
  for (int r = 0; r < static_cast<int>(g.size()); ++r)
    for (int c = 0; c < static_cast<int>(g[static_cast<std::size_t>(r)].size()); ++c) {
      if (!filled(g, r, c)) continue;
      if (filled(g, r, c + 1) && cell(g, r, c + 1) <= cell(g, r, c)) return false;
      if (filled(g, r + 1, c) && cell(g, r + 1, c) <= cell(g, r, c)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// partitions

int partition_size(const Partition& p) {
  int k = 0;
  for (int x : p) k += x;
  return k;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  for (int c = 0; c < p[0]; ++c) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[static_cast<std::size_t>(len)] > c) ++len;
    q.push_back(len);
  }
  return q;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > inner_at(outer, static_cast<int>(i))) return false;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Box> outer_corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 0; r < static_cast<int>(p.size()); ++r) {
    const int len = p[static_cast<std::size_t>(r)];
    if (len > 0 && inner_at(p, r + 1) < len) out.push_back({r, len - 1});
  }
  return out;
}

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int r = 0; r <= static_cast<int>(p.size()); ++r) {
    const int len = inner_at(p, r);
    if (r == 0 || inner_at(p, r - 1) > len) out.push_back({r, len});
  }
  return out;
}

std::vector<Box> inner_corners(const Tableau& t) { return outer_corners(t.inner()); }

std::vector<Box> skew_boxes(const Partition& outer, const Partition& inner) {
  std::vector<Box> out;
  for (int r = 0; r < static_cast<int>(outer.size()); ++r)
    for (int c = inner_at(inner, r); c < outer[static_cast<std::size_t>(r)]; ++c) out.push_back({r, c});
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b)) return false;
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += inner_at(a, static_cast<int>(i));
    sb += inner_at(b, static_cast<int>(i));
    if (sa > sb) return false;
  }
  return true;
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition sqcup(const Partition& mu, const Partition& nu) {
  Partition out;
  const int m1 = mu.empty() ? 0 : mu[0];
  for (int x : nu) out.push_back(x + m1);
  for (int x : mu) out.push_back(x);
  trim(out);
  return out;
}

// ---------------------------------------------------------------------------
// insertion

std::pair<Tableau, Box> row_insert(const Tableau& t, int a) {
  require_straight(t, "row insertion");
  if (t.find(a)) throw std::invalid_argument("row insertion of an entry already present");
  Grid g = to_grid(t);
  int x = a;
  for (int r = 0;; ++r) {
    if (r == static_cast<int>(g.size())) g.emplace_back();
    auto& row = g[static_cast<std::size_t>(r)];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {from_grid(std::move(g)), Box{r, static_cast<int>(row.size()) - 1}};
    }
    std::swap(x, *it);
  }
}

std::pair<Tableau, Box> column_insert(const Tableau& t, int a) {
  auto [tt, b] = row_insert(transpose(t), a);
  return {transpose(tt), Box{b.col, b.row}};
}

std::pair<Tableau, int> row_uninsert(const Tableau& t, Box corner) {
  require_straight(t, "row uninsertion");
  auto corners = outer_corners(t.shape());
  if (std::find(corners.begin(), corners.end(), corner) == corners.end())
    throw std::invalid_argument("uninsertion needs an outer corner");
  Grid g = to_grid(t);
  int x = cell(g, corner.row, corner.col);
  g[static_cast<std::size_t>(corner.row)].pop_back();
  for (int r = corner.row - 1; r >= 0; --r) {
    auto& row = g[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), x);
    --it;  // largest entry below x
    std::swap(x, *it);
  }
  return {from_grid(std::move(g)), x};
}

std::pair<Tableau, int> column_uninsert(const Tableau& t, Box corner) {
  auto [tt, x] = row_uninsert(transpose(t), Box{corner.col, corner.row});
  return {transpose(tt), x};
}

RSKPair rsk(const std::vector<int>& word) {
  Tableau P;
  Grid q;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto [np, b] = row_insert(P, word[i]);
    P = std::move(np);
    if (b.row == static_cast<int>(q.size())) q.emplace_back();
    q[static_cast<std::size_t>(b.row)].push_back(static_cast<int>(i) + 1);
  }
  return {P, from_grid(std::move(q))};
}

std::vector<int> inverse_rsk(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw std::invalid_argument("inverse RSK needs tableaux of the same shape");
  const int n = Q.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  Tableau p = P;
  Tableau q = Q;
  for (int i = n; i >= 1; --i) {
    auto b = q.find(i);
    if (!b) throw std::invalid_argument("recording tableau must hold 1..n");
    Grid g = to_grid(q);
    g[static_cast<std::size_t>(b->row)].pop_back();
    q = from_grid(std::move(g));
    auto [np, x] = row_uninsert(p, *b);
    p = std::move(np);
    word[static_cast<std::size_t>(i - 1)] = x;
  }
  return word;
}

// ---------------------------------------------------------------------------
// sub-tableaux and jeu de taquin

Tableau entries_at_most(const Tableau& t, int r) {
  Grid g = to_grid(t);
  for (auto& row : g) {
    std::vector<int> keep;
    for (int v : row)
      if (v == kHole || v <= r) keep.push_back(v);
      else break;
    row = std::move(keep);
  }
  Tableau out = from_grid(std::move(g));
  const auto all = t.entries();
  if (out.size() != static_cast<int>(std::count_if(all.begin(), all.end(), [r](int v) { return v <= r; })))
    throw std::invalid_argument("entries <= r do not form a subtableau");
  return out;
}

Tableau entries_above(const Tableau& t, int r) {
  Grid g = to_grid(t);
  for (auto& row : g)
    for (int& v : row)
      if (v != kHole && v <= r) v = kHole;
  return from_grid(std::move(g));
}

Tableau slide_into(const Tableau& t, Box corner) {
  auto corners = inner_corners(t);
  if (std::find(corners.begin(), corners.end(), corner) == corners.end())
    throw std::invalid_argument("forward slide needs an inner corner");
  Grid g = to_grid(t);
  int r = corner.row, c = corner.col;
  while (true) {
    const bool right = filled(g, r, c + 1);
    const bool down = filled(g, r + 1, c);
    if (!right && !down) break;
    if (right && (!down || cell(g, r, c + 1) < cell(g, r + 1, c))) {
      cell(g, r, c) = cell(g, r, c + 1);
      ++c;
    } else {
      cell(g, r, c) = cell(g, r + 1, c);
      ++r;
    }
    cell(g, r, c) = kHole;
  }
  auto& row = g[static_cast<std::size_t>(r)];
  if (c != static_cast<int>(row.size()) - 1) throw std::logic_error("slide ended inside a row");
  row.pop_back();
  return from_grid(std::move(g));
}

Tableau jdt_rectify(const Tableau& t) {
  Tableau cur = t;
  while (!cur.is_straight()) cur = slide_into(cur, inner_corners(cur).back());
  return cur;
}

Tableau reverse_slide_to_corner(const Tableau& t, Box outer) {
  require_straight(t, "reverse slide");
  auto add = addable_boxes(t.shape());
  if (std::find(add.begin(), add.end(), outer) == add.end())
    throw std::invalid_argument("reverse slide needs an addable box");
  Grid g = to_grid(t);
  if (outer.row == static_cast<int>(g.size())) g.emplace_back();
  g[static_cast<std::size_t>(outer.row)].push_back(kHole);
  int r = outer.row, c = outer.col;
  while (r > 0 || c > 0) {
    const bool up = filled(g, r - 1, c);
    const bool left = filled(g, r, c - 1);
    if (up && (!left || cell(g, r - 1, c) > cell(g, r, c - 1))) {
      cell(g, r, c) = cell(g, r - 1, c);
      --r;
    } else {
      cell(g, r, c) = cell(g, r, c - 1);
      --c;
    }
    cell(g, r, c) = kHole;
  }
  return from_grid(std::move(g));
}

Tableau fill_corner(const Tableau& t, int value) {
  if (t.inner() != Partition{1}) throw std::invalid_argument("fill_corner needs inner shape (1)");
  if (t.find(value)) throw std::invalid_argument("fill_corner: entry already present");
  Grid g = to_grid(t);
  cell(g, 0, 0) = value;
  return from_grid(std::move(g));
}

Tableau greater_part(const Tableau& t) {
  auto e = t.entries();
  if (e.empty()) return t;
  return jdt_rectify(entries_above(t, e.front()));
}

Tableau evacuation(const Tableau& t) {
  require_straight(t, "evacuation");
  const auto alphabet = t.entries();
  const int n = static_cast<int>(alphabet.size());
  Grid out;
  for (int len : t.shape()) out.emplace_back(static_cast<std::size_t>(len), kHole);
  Tableau cur = t;
  for (int k = 0; k < n; ++k) {
    const Partition before = cur.shape();
    cur = jdt_rectify(entries_above(cur, cur.entries().front()));
    const Partition after = cur.shape();
    for (int r = 0; r < static_cast<int>(before.size()); ++r)
      if (inner_at(after, r) != before[static_cast<std::size_t>(r)])
        cell(out, r, before[static_cast<std::size_t>(r)] - 1) = alphabet[static_cast<std::size_t>(n - 1 - k)];
  }
  return from_grid(std::move(out));
}

Tableau relabel(const Tableau& t, std::vector<int> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  const auto e = t.entries();
  if (e.size() != alphabet.size()) throw std::invalid_argument("relabel: alphabet has the wrong size");
  std::map<int, int> to;
  for (std::size_t i = 0; i < e.size(); ++i) to[e[i]] = alphabet[i];
  Grid g = to_grid(t);
  for (auto& row : g)
    for (int& v : row)
      if (v != kHole) v = to.at(v);
  return from_grid(std::move(g));
}

Tableau relabel_from(const Tableau& t, int first) {
  std::vector<int> a(static_cast<std::size_t>(t.size()));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = first + static_cast<int>(i);
  return relabel(t, std::move(a));
}

std::vector<Tableau> standard_tableaux(const Partition& shape, int first) {
  const int n = partition_size(shape);
  std::vector<Tableau> out;
  Grid g;
  for (int len : shape) g.emplace_back(static_cast<std::size_t>(len), kHole);
  Partition cur(shape.size(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(from_grid(g));
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (cur[r] == shape[r]) continue;
      if (r > 0 && cur[r - 1] <= cur[r]) continue;
      cell(g, static_cast<int>(r), cur[r]) = first + k;
      ++cur[r];
      self(self, k + 1);
      --cur[r];
      cell(g, static_cast<int>(r), cur[r]) = kHole;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Tableau> standard_tableaux_of_size(int n, int first) {
  std::vector<Tableau> out;
  for (const auto& p : partitions_of(n)) {
    auto ts = standard_tableaux(p, first);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// growth rules and strips

Partition growth(int a, const Partition& lambda, const Partition& mu, const Partition& nu) {
  Partition l = lambda, m = mu, v = nu;
  trim(l);
  trim(m);
  trim(v);
  if (!contains(l, m) || !contains(v, m)) throw std::invalid_argument("growth: mu must lie inside lambda and nu");
  if (partition_size(l) - partition_size(m) > 1 || partition_size(v) - partition_size(m) > 1)
    throw std::invalid_argument("growth: shapes differ by more than one box");
  if (a == 1) {
    if (!(l == m && m == v)) throw std::invalid_argument("growth: a = 1 needs lambda = mu = nu");
    if (l.empty()) return {1};
    ++l[0];
    return l;
  }
  if (a != 0) throw std::invalid_argument("growth: a must be 0 or 1");
  if (l == m && m == v) return l;
  if (l == v) {
    std::size_t i = 0;
    while (i < m.size() && m[i] == l[i]) ++i;  // the box of lambda / mu is in row i
    Partition out = l;
    if (out.size() <= i + 1) out.resize(i + 2, 0);
    ++out[i + 1];
    trim(out);
    return out;
  }
  Partition out(std::max(l.size(), v.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(inner_at(l, static_cast<int>(i)), inner_at(v, static_cast<int>(i)));
  return out;
}

Partition growth_prime(int a, const Partition& lambda, const Partition& mu, const Partition& nu) {
  return conjugate(growth(a, conjugate(lambda), conjugate(mu), conjugate(nu)));
}

StripKind strip_kind(const std::vector<Box>& boxes) {
  StripKind k{true, true};
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    if (!(boxes[i - 1].col > boxes[i].col)) k.horizontal = false;
    if (!(boxes[i - 1].row > boxes[i].row)) k.vertical = false;
  }
  return k;
}

std::vector<Box> removed_boxes(const std::vector<Partition>& chain) {
  std::vector<Box> out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto diff = skew_boxes(chain[i - 1], chain[i]);
    if (diff.size() != 1 || !contains(chain[i - 1], chain[i]))
      throw std::invalid_argument("removed_boxes: consecutive shapes must differ by one box");
    out.push_back(diff.front());
  }
  return out;
}

// ---------------------------------------------------------------------------
// cell labels

std::vector<Tableau> induced_cell_labels(const Tableau& T, const Tableau& T2) {
  const int r = T.size();
  const int n = r + T2.size();
  require_straight(T, "induced_cell_labels");
  std::vector<Tableau> out;
  Grid g = to_grid(T);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      Tableau P = from_grid(g);
      if (jdt_rectify(entries_above(P, r)) == T2) out.push_back(std::move(P));
      return;
    }
    Partition sh;
    for (const auto& row : g) sh.push_back(static_cast<int>(row.size()));
    trim(sh);
    for (Box b : addable_boxes(sh)) {
      if (b.row == static_cast<int>(g.size())) g.emplace_back();
      g[static_cast<std::size_t>(b.row)].push_back(k);
      self(self, k + 1);
      g[static_cast<std::size_t>(b.row)].pop_back();
      if (g.back().empty()) g.pop_back();
    }
  };
  rec(rec, r + 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// T T2 as a skew tableau of shape (mu sqcup nu) / rho with T2 in the upper right
Tableau juxtapose(const Tableau& T, const Tableau& T2) {
  const Partition mu = T.shape();
  const Partition nu = T2.shape();
  const int m1 = mu.empty() ? 0 : mu[0];
  Grid g;
  for (const auto& row : T2.rows()) {
    std::vector<int> r(static_cast<std::size_t>(m1), kHole);
    r.insert(r.end(), row.begin(), row.end());
    g.push_back(std::move(r));
  }
  for (const auto& row : T.rows()) g.push_back(row);
  return from_grid(std::move(g));
}

}  // namespace

std::vector<LabelPair> restriction_set_X(const Tableau& P, int r) {
  require_straight(P, "restriction_set_X");
  const auto all = P.entries();
  const int n = static_cast<int>(all.size());
  if (r < 0 || r > n) throw std::invalid_argument("restriction_set_X: r out of range");
  std::vector<LabelPair> out;
  const Partition lambda = P.shape();
  // choose the entry set of T, then all standard fillings of the two shapes
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin() + (n - r), pick.end(), 1);
  do {
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) (pick[static_cast<std::size_t>(i)] ? a : b).push_back(all[static_cast<std::size_t>(i)]);
    for (const auto& mu : partitions_of(r)) {
      for (const auto& nu : partitions_of(n - r)) {
        if (!contains(sqcup(mu, nu), lambda)) continue;
        for (const auto& t1 : standard_tableaux(mu)) {
          Tableau T = relabel(t1, a);
          for (const auto& t2 : standard_tableaux(nu)) {
            Tableau T2 = relabel(t2, b);
            if (jdt_rectify(juxtapose(T, T2)) == P) out.push_back({T, T2});
          }
        }
      }
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelPair> restricted_cell_labels(const Tableau& P, int r) {
  std::vector<LabelPair> out;
  for (auto& [T, T2] : restriction_set_X(P, r)) out.push_back({relabel_from(T, 1), relabel_from(T2, r + 1)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> affine_cell_labels(const Tableau& T) {
  require_straight(T, "affine_cell_labels");
  const int n = T.size();
  std::set<Tableau> out;
  for (Box corner : outer_corners(T.shape())) {
    auto [minus, c] = row_uninsert(T, corner);
    for (Box b : addable_boxes(minus.shape())) out.insert(fill_corner(reverse_slide_to_corner(minus, b), c - n));
  }
  return {out.begin(), out.end()};
}

}  // namespace klc
