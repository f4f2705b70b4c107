#include "klc/wgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "klc/hecke.hpp"

namespace klc {

int WGraph::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? -1 : it->second;
}

int WGraph::index_of(const std::string& id) const {
  const int i = find(id);
  if (i < 0) throw std::out_of_range("no vertex named " + id);
  return i;
}

int WGraph::add_vertex(Vertex v) {
  if (!v.descents.subset_of(gens_.gens))
    throw std::invalid_argument("descent set " + v.descents.str() + " is not inside the generators");
  const int i = size();
  if (!by_id_.emplace(v.id, i).second) throw std::invalid_argument("duplicate vertex id " + v.id);
  vertices_.push_back(std::move(v));
  mu_.emplace_back();
  return i;
}

void WGraph::set_mu(int delta, int gamma, long mu) {
  if (delta < 0 || gamma < 0 || delta >= size() || gamma >= size()) throw std::out_of_range("mu endpoint");
  auto& col = mu_[static_cast<std::size_t>(gamma)];
  if (mu == 0)
    col.erase(delta);
  else
    col[delta] = mu;
}

long WGraph::mu(int delta, int gamma) const {
  const auto& col = mu_[static_cast<std::size_t>(gamma)];
  auto it = col.find(delta);
  return it == col.end() ? 0 : it->second;
}

SparseVec WGraph::act_Cs(int s, const SparseVec& v) const {
  if (!gens_.contains(s)) throw std::invalid_argument("generator " + std::to_string(s) + " not in the graph");
  SparseVec out;
  static const LaurentPoly two = u_integer(2);
  for (const auto& [g, c] : v) {
    if (descents(g).contains(s)) {
      add_scaled(out, two * c, {{g, LaurentPoly(1)}});
      continue;
    }
    for (const auto& [d, m] : mu_into(g))
      if (descents(d).contains(s)) add_scaled(out, LaurentPoly(m) * c, {{d, LaurentPoly(1)}});
  }
  return out;
}

SparseVec WGraph::act_Ts(int s, const SparseVec& v) const {
  SparseVec out = act_Cs(s, v);
  add_scaled(out, LaurentPoly(-1) * LaurentPoly::u_inv(), v);
  return out;
}

SparseVec WGraph::act_Tw(const Perm& w, const SparseVec& v) const {
  SparseVec out = v;
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_Ts(*it, out);
  return out;
}

bool WGraph::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int g = 0; g < size(); ++g)
    if (!descents(g).subset_of(gens_.gens)) return fail("descents of " + vertex(g).id + " exceed the generators");
  const auto gens = gens_.gens.elements();
  const LaurentPoly c = LaurentPoly::u() - LaurentPoly::u_inv();
  for (int g = 0; g < size(); ++g) {
    const SparseVec e{{g, LaurentPoly(1)}};
    for (int s : gens) {
      // T_s^2 = 1 + (u - u^-1) T_s
      SparseVec ts = act_Ts(s, e);
      SparseVec lhs = act_Ts(s, ts);
      SparseVec rhs = e;
      add_scaled(rhs, c, ts);
      if (lhs != rhs) return fail("quadratic relation fails for s" + std::to_string(s) + " at " + vertex(g).id);
    }
    for (int s : gens)
      for (int t : gens) {
        if (t <= s) continue;
        SparseVec a, b;
        if (t == s + 1) {
          a = act_Ts(s, act_Ts(t, act_Ts(s, e)));
          b = act_Ts(t, act_Ts(s, act_Ts(t, e)));
        } else {
          a = act_Ts(s, act_Ts(t, e));
          b = act_Ts(t, act_Ts(s, e));
        }
        if (a != b)
          return fail("braid relation fails for s" + std::to_string(s) + ", s" + std::to_string(t) + " at " +
                      vertex(g).id);
      }
  }
  return true;
}

WGraph WGraph::restrict(const ParabolicSet& J) const {
  if (J.n != n() || !J.gens.subset_of(gens_.gens)) throw std::domain_error("restriction to a non-subgroup");
  WGraph out(J);
  for (const auto& v : vertices_) {
    Vertex w = v;
    w.descents = v.descents & J.gens;
    out.add_vertex(std::move(w));
  }
  out.mu_ = mu_;
  return out;
}

WGraph WGraph::shifted(int k) const {
  ParabolicSet gens{n(), gens_.gens.shifted(k)};
  if (!gens.gens.subset_of(GenSet::range(1, n() - 1))) throw std::domain_error("shifted generators leave S_n");
  WGraph out(gens);
  for (const auto& v : vertices_) {
    Vertex w = v;
    w.descents = v.descents.shifted(k);
    out.add_vertex(std::move(w));
  }
  out.mu_ = mu_;
  return out;
}

WGraph WGraph::subquotient(const std::vector<int>& keep) const {
  if (!is_cellular_subquotient(*this, cells(*this), keep))
    throw std::domain_error("vertex subset is not a cellular subquotient");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  return induced_subgraph(sorted);
}

WGraph WGraph::induced_subgraph(const std::vector<int>& keep) const {
  std::map<int, int> remap;
  WGraph out(gens_);
  for (int v : keep) remap[v] = out.add_vertex(vertex(v));
  for (int g : keep)
    for (const auto& [d, m] : mu_into(g)) {
      auto it = remap.find(d);
      if (it != remap.end()) out.set_mu(it->second, remap[g], m);
    }
  return out;
}

CellDecomposition cells(const WGraph& g) {
  const int N = g.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
  const auto gens = g.generators().gens.elements();
  for (int v = 0; v < N; ++v) {
    std::set<int> out;
    for (int s : gens) {
      if (g.descents(v).contains(s)) continue;
      for (const auto& [d, m] : g.mu_into(v))
        if (g.descents(d).contains(s)) out.insert(d);
    }
    adj[static_cast<std::size_t>(v)].assign(out.begin(), out.end());
  }
  // Tarjan, iterative
  std::vector<int> index(static_cast<std::size_t>(N), -1), low(static_cast<std::size_t>(N), 0), comp(static_cast<std::size_t>(N), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(N), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < N; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto uv = static_cast<std::size_t>(v);
      if (next < adj[uv].size()) {
        const int w = adj[uv][next++];
        const auto uw = static_cast<std::size_t>(w);
        if (index[uw] == -1) {
          index[uw] = low[uw] = counter++;
          stack.push_back(w);
          on_stack[uw] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[uw]) {
          low[uv] = std::min(low[uv], index[uw]);
        }
        continue;
      }
      if (low[uv] == index[uv]) {
        std::vector<int> c;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          c.push_back(w);
        } while (w != v);
        comps.push_back(std::move(c));
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) {
        const auto up = static_cast<std::size_t>(call.back().first);
        low[up] = std::min(low[up], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end());
  CellDecomposition out;
  out.cells = std::move(comps);
  out.cell_of.assign(static_cast<std::size_t>(N), -1);
  for (std::size_t c = 0; c < out.cells.size(); ++c)
    for (int v : out.cells[c]) out.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  const std::size_t C = out.cells.size();
  std::vector<std::set<int>> cadj(C);
  for (int v = 0; v < N; ++v)
    for (int w : adj[static_cast<std::size_t>(v)])
      if (out.cell_of[static_cast<std::size_t>(v)] != out.cell_of[static_cast<std::size_t>(w)])
        cadj[static_cast<std::size_t>(out.cell_of[static_cast<std::size_t>(v)])].insert(out.cell_of[static_cast<std::size_t>(w)]);
  out.below.assign(C, std::vector<char>(C, 0));
  for (std::size_t a = 0; a < C; ++a) {
    std::vector<int> todo{static_cast<int>(a)};
    out.below[a][a] = 1;
    while (!todo.empty()) {
      const int x = todo.back();
      todo.pop_back();
      for (int y : cadj[static_cast<std::size_t>(x)])
        if (!out.below[a][static_cast<std::size_t>(y)]) {
          out.below[a][static_cast<std::size_t>(y)] = 1;
          todo.push_back(y);
        }
    }
  }
  return out;
}

bool is_cellular_subquotient(const WGraph& g, const CellDecomposition& c, const std::vector<int>& keep) {
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : keep) {
    if (v < 0 || v >= g.size()) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::set<int> kept_cells;
  for (int v : keep) kept_cells.insert(c.cell_of[static_cast<std::size_t>(v)]);
  for (int cell : kept_cells)
    for (int v : c.cells[static_cast<std::size_t>(cell)])
      if (!in[static_cast<std::size_t>(v)]) return false;
  // convexity: nothing outside lies between two kept cells
  for (int b = 0; b < c.count(); ++b) {
    if (kept_cells.count(b)) continue;
    bool above_some = false, below_some = false;
    for (int k : kept_cells) {
      if (c.leq(k, b)) above_some = true;
      if (c.leq(b, k)) below_some = true;
    }
    if (above_some && below_some) return false;
  }
  return true;
}

WGraph regular_wgraph(int n) {
  const KLBasis& kl = kl_basis(n);
  const SymmetricGroup& grp = kl.group();
  WGraph g(ParabolicSet::full(n));
  for (int i = 0; i < grp.size(); ++i) {
    const Perm& w = grp.element(i);
    g.add_vertex({w.word_str(), w.left_descents(), w, {}});
  }
  for (int w = 0; w < grp.size(); ++w) {
    for (const auto& [x, p] : kl.column(w)) {
      if (x == w) continue;
      const long m = p.coeff(-1).get_si();
      if (m != 0) g.set_mu(x, w, m);
    }
    for (int s = 1; s < n; ++s) {
      const int sw = grp.left_mul(w, s);
      if (grp.length(sw) > grp.length(w)) g.set_mu(sw, w, 1);
    }
  }
  return g;
}

WGraph one_vertex_graph(const ParabolicSet& gens, GenSet descents, const std::string& id) {
  WGraph g(gens);
  g.add_vertex({id, descents, std::nullopt, {}});
  return g;
}

WGraph pi_twist(const WGraph& g) { return g.shifted(1); }

WGraph rotate_twice(const WGraph& g) {
  const int n = g.n();
  if (g.generators().gens != GenSet::range(1, n - 1)) throw std::domain_error("rotation needs an S_n-graph");
  GenSet gens = GenSet::range(3, n - 1);
  gens.insert(1);
  WGraph out(ParabolicSet{n, gens});
  for (int v = 0; v < g.size(); ++v) {
    Vertex x = g.vertex(v);
    GenSet d;
    for (int i : g.descents(v).elements()) {
      if (i <= n - 3) d.insert(i + 2);
      if (i == n - 1) d.insert(1);
    }
    x.descents = d;
    out.add_vertex(std::move(x));
  }
  for (int v = 0; v < g.size(); ++v)
    for (const auto& [d, m] : g.mu_into(v)) out.set_mu(d, v, m);
  return out;
}

bool is_isomorphism(const WGraph& g1, const WGraph& g2, const std::vector<int>& map) {
  if (g1.size() != g2.size() || static_cast<int>(map.size()) != g1.size()) return false;
  if (g1.generators().gens != g2.generators().gens) return false;
  std::vector<char> hit(static_cast<std::size_t>(g2.size()), 0);
  for (int v = 0; v < g1.size(); ++v) {
    const int w = map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= g2.size() || hit[static_cast<std::size_t>(w)]) return false;
    hit[static_cast<std::size_t>(w)] = 1;
    if (g1.descents(v) != g2.descents(w)) return false;
  }
  for (int d = 0; d < g1.size(); ++d)
    for (int c = 0; c < g1.size(); ++c) {
      if (g1.descents(d).subset_of(g1.descents(c))) continue;
      if (g1.mu(d, c) != g2.mu(map[static_cast<std::size_t>(d)], map[static_cast<std::size_t>(c)])) return false;
    }
  return true;
}

namespace {

// descent set plus the sorted list of (neighbour descents, mu, direction) over relevant edges
std::vector<std::uint64_t> signature(const WGraph& g, int v) {
  std::vector<std::uint64_t> sig{g.descents(v).mask()};
  std::vector<std::uint64_t> nb;
  for (int d = 0; d < g.size(); ++d) {
    if (!g.descents(d).subset_of(g.descents(v)) && g.mu(d, v) != 0)
      nb.push_back((std::uint64_t{g.descents(d).mask()} << 24) ^ (static_cast<std::uint64_t>(g.mu(d, v)) << 1));
    if (!g.descents(v).subset_of(g.descents(d)) && g.mu(v, d) != 0)
      nb.push_back((std::uint64_t{g.descents(d).mask()} << 24) ^ (static_cast<std::uint64_t>(g.mu(v, d)) << 1) ^ 1u);
  }
  std::sort(nb.begin(), nb.end());
  sig.insert(sig.end(), nb.begin(), nb.end());
  return sig;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const WGraph& g1, const WGraph& g2) {
  const int N = g1.size();
  if (N != g2.size() || g1.generators().gens != g2.generators().gens) return std::nullopt;
  std::vector<std::vector<std::uint64_t>> s1(static_cast<std::size_t>(N)), s2(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) {
    s1[static_cast<std::size_t>(v)] = signature(g1, v);
    s2[static_cast<std::size_t>(v)] = signature(g2, v);
  }
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v)
    for (int w = 0; w < N; ++w)
      if (s1[static_cast<std::size_t>(v)] == s2[static_cast<std::size_t>(w)]) cand[static_cast<std::size_t>(v)].push_back(w);
  std::vector<int> order(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cand[static_cast<std::size_t>(a)].size() < cand[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> map(static_cast<std::size_t>(N), -1);
  std::vector<char> used(static_cast<std::size_t>(N), 0);
  auto consistent = [&](int v, int w) {
    for (int k = 0; k < N; ++k) {
      const int x = map[static_cast<std::size_t>(k)];
      if (x < 0) continue;
      if (!g1.descents(v).subset_of(g1.descents(k)) && g1.mu(v, k) != g2.mu(w, x)) return false;
      if (!g1.descents(k).subset_of(g1.descents(v)) && g1.mu(k, v) != g2.mu(x, w)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w : cand[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)] || !consistent(v, w)) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (place(depth + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  if (!is_isomorphism(g1, g2, map)) return std::nullopt;
  return map;
}

std::vector<DrawnEdge> drawn_edges(const WGraph& g) {
  std::vector<DrawnEdge> out;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      const GenSet& la = g.descents(a);
      const GenSet& lb = g.descents(b);
      if (la == lb) continue;
      if (lb.subset_of(la)) {
        // arrow b -> a, weight mu(a, b)
        if (g.mu(a, b) != 0) out.push_back({b, a, true, g.mu(a, b)});
      } else if (!la.subset_of(lb) && a < b) {
        const long m = g.mu(a, b) != 0 ? g.mu(a, b) : g.mu(b, a);
        if (m != 0) out.push_back({a, b, false, m});
      }
    }
  return out;
}

std::string to_json(const WGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["generators"] = g.generators().gens.elements();
  auto verts = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v) {
    nlohmann::ordered_json x;
    x["id"] = g.vertex(v).id;
    x["descents"] = g.descents(v).elements();
    if (g.vertex(v).element) x["element"] = g.vertex(v).element->word_str();
    verts.push_back(std::move(x));
  }
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::ordered_json::array();
  for (int c = 0; c < g.size(); ++c)
    for (const auto& [d, m] : g.mu_into(c)) edges.push_back({{"from", g.vertex(d).id}, {"to", g.vertex(c).id}, {"mu", m}});
  j["edges"] = std::move(edges);
  return j.dump(2);
}

std::string to_dot(const WGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (int v = 0; v < g.size(); ++v)
    os << "  v" << v << " [label=\"" << g.vertex(v).id << "\\n" << g.descents(v).str() << "\"];\n";
  for (const auto& e : drawn_edges(g)) {
    os << "  v" << e.tail << " -> v" << e.head;
    std::vector<std::string> attrs;
    if (!e.arrow) attrs.emplace_back("dir=none");
    if (e.mu != 1) attrs.push_back("label=\"" + std::to_string(e.mu) + "\"");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? "," : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace klc
