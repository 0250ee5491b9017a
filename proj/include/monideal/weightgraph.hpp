#pragma once

// Weight conflicts between components, standard linear weightings, and the
// hypergraph of the associated primes (whiskers, bipartiteness, coloring).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"

namespace monideal {

/// a -> (w_1 a_1, ..., w_n a_n) with every w_i >= 1.
class StandardWeighting {
 public:
  explicit StandardWeighting(std::vector<Exponent> w) : w_(std::move(w)) {
    if (std::any_of(w_.begin(), w_.end(), [](Exponent x) { return x == 0; }))
      throw Error(Errc::invalid_argument, "standard weighting entries must be positive");
  }

  static StandardWeighting ones(std::size_t n) { return StandardWeighting(std::vector<Exponent>(n, 1)); }

  std::size_t size() const noexcept { return w_.size(); }
  Exponent operator[](VarIndex i) const { return w_[i]; }
  std::span<const Exponent> weights() const noexcept { return w_; }

  Monomial apply(const Monomial& f) const {
    require_same_ring(w_.size(), f.nvars());
    std::vector<Exponent> exps(f.nvars());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = checked_mul(w_[i], f[i]);
    return Monomial(std::move(exps));
  }

  bool operator==(const StandardWeighting&) const = default;

 private:
  std::vector<Exponent> w_;
};

/// Pairs (k, l), k < l, of components sharing a variable with different
/// weights.
inline std::vector<std::pair<std::size_t, std::size_t>> conflict_set(const Decomposition& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t l = k + 1; l < d.size(); ++l)
      for (const auto& f : d[k].factors()) {
        auto wl = d[l].weight_of(f.var);
        if (wl && *wl != f.weight) {
          out.emplace_back(k, l);
          break;
        }
      }
  return out;
}

inline MonomialIdeal apply_weighting(const MonomialIdeal& ideal, const StandardWeighting& w) {
  require_same_ring(ideal.nvars(), w.size());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(w.apply(g));
  return minimalize(ideal.ring(), std::move(gens));
}

/// The decomposition of J_w for J = intersection of the primes in d's radicals.
inline Decomposition apply_weighting(const Decomposition& d, const StandardWeighting& w) {
  require_same_ring(d.nvars(), w.size());
  std::vector<IrreducibleComponent> comps;
  for (const auto& c : d.components()) {
    std::vector<IrreducibleComponent::Factor> fs;
    for (const auto& f : c.factors()) fs.push_back({f.var, checked_mul(f.weight, w[f.var])});
    comps.emplace_back(std::move(fs));
  }
  return Decomposition(d.ring(), std::move(comps));
}

struct WeightingDetection {
  MonomialIdeal squarefree;  // J = radical(I)
  StandardWeighting weighting;
};

/// When no weight conflict exists, I = J_w with J the radical and w_i the
/// common weight of x_i (1 for variables in no component).
inline std::optional<WeightingDetection> detect_standard_weighting(const Decomposition& d) {
  require_minimal(d);
  if (!conflict_set(d).empty()) return std::nullopt;
  std::vector<Exponent> w(d.nvars(), 1);
  for (const auto& c : d.components())
    for (const auto& f : c.factors()) w[f.var] = f.weight;
  return WeightingDetection{radical(ideal_of(d)), StandardWeighting(std::move(w))};
}

/// Vertex set [n] with non-empty, pairwise distinct edges.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::vector<std::vector<VarIndex>> edges) : n_(n), edges_(std::move(edges)) {
    std::set<std::vector<VarIndex>> seen;
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (e.empty()) throw Error(Errc::invalid_argument, "hypergraph edges must be non-empty");
      if (e.back() >= n_) throw Error(Errc::out_of_range, "hypergraph edge vertex out of range");
      if (!seen.insert(e).second) throw Error(Errc::invalid_argument, "duplicate hypergraph edge");
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::span<const std::vector<VarIndex>> edges() const& noexcept { return edges_; }
  std::span<const std::vector<VarIndex>> edges() const&& = delete;
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 2; });
  }

 private:
  std::size_t n_;
  std::vector<std::vector<VarIndex>> edges_;
};

inline Hypergraph build_hypergraph(const Decomposition& d) {
  require_minimal(d);
  std::vector<std::vector<VarIndex>> edges;
  for (const auto& c : d.components()) edges.push_back(c.vars());
  return Hypergraph(d.nvars(), std::move(edges));
}

/// Whiskers A_{j_1}, ..., A_{j_t} attached at i_1, ..., i_t; core = V_1.
struct WhiskerStructure {
  std::vector<std::size_t> whisker_edges;
  std::vector<VarIndex> attach_vertices;
  std::vector<VarIndex> core;  // sorted

  /// No non-whisker edges.
  bool degenerate(const Hypergraph& h) const { return whisker_edges.size() == h.edge_count(); }
};

/// Checks the defining conditions directly: whiskers pairwise disjoint,
/// V_1 meets A_{j_k} exactly in i_k, and every other edge lies inside V_1.
inline bool is_valid_whisker_structure(const Hypergraph& h, const WhiskerStructure& ws) {
  const auto edges = h.edges();
  const auto t = ws.whisker_edges.size();
  if (t == 0 || ws.attach_vertices.size() != t) return false;
  std::set<VarIndex> core(ws.attach_vertices.begin(), ws.attach_vertices.end());
  if (core.size() != t || std::vector<VarIndex>(core.begin(), core.end()) != ws.core) return false;
  std::set<std::size_t> whiskers(ws.whisker_edges.begin(), ws.whisker_edges.end());
  if (whiskers.size() != t) return false;
  for (auto j : ws.whisker_edges)
    if (j >= edges.size()) return false;
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b) {
      const auto& ea = edges[ws.whisker_edges[a]];
      const auto& eb = edges[ws.whisker_edges[b]];
      std::vector<VarIndex> both;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
      if (!both.empty()) return false;
    }
  for (std::size_t k = 0; k < t; ++k) {
    const auto& e = edges[ws.whisker_edges[k]];
    std::vector<VarIndex> meet;
    std::set_intersection(e.begin(), e.end(), ws.core.begin(), ws.core.end(), std::back_inserter(meet));
    if (meet != std::vector<VarIndex>{ws.attach_vertices[k]}) return false;
  }
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (whiskers.count(j)) continue;
    if (!std::includes(ws.core.begin(), ws.core.end(), edges[j].begin(), edges[j].end())) return false;
  }
  return true;
}

struct WhiskerSearchOptions {
  std::uint64_t subset_cap = std::uint64_t{1} << 22;
};

/// Exhaustive search over whisker-edge subsets, largest t first, subsets of
/// equal size in lexicographic order. Attach vertices are forced by the
/// non-whisker edges where possible, otherwise the smallest vertex is used.
inline std::optional<WhiskerStructure> find_whisker_structure(const Hypergraph& h,
                                                              WhiskerSearchOptions opts = {}) {
  const auto edges = h.edges();
  const std::size_t r = edges.size();
  std::uint64_t examined = 0;

  auto try_subset = [&](const std::vector<std::size_t>& pick) -> std::optional<WhiskerStructure> {
    std::vector<bool> is_whisker(r, false);
    for (auto j : pick) is_whisker[j] = true;
    std::set<VarIndex> required;
    for (std::size_t j = 0; j < r; ++j)
      if (!is_whisker[j]) required.insert(edges[j].begin(), edges[j].end());

    std::vector<int> owner(h.vertex_count(), -1);
    for (std::size_t k = 0; k < pick.size(); ++k)
      for (auto v : edges[pick[k]]) {
        if (owner[v] != -1) return std::nullopt;  // whiskers must be disjoint
        owner[v] = static_cast<int>(k);
      }

    WhiskerStructure ws;
    ws.whisker_edges = pick;
    ws.attach_vertices.assign(pick.size(), h.vertex_count());
    for (auto v : required) {
      if (owner[v] == -1) return std::nullopt;
      auto& slot = ws.attach_vertices[static_cast<std::size_t>(owner[v])];
      if (slot != h.vertex_count()) return std::nullopt;  // two core vertices in one whisker
      slot = v;
    }
    for (std::size_t k = 0; k < pick.size(); ++k)
      if (ws.attach_vertices[k] == h.vertex_count()) ws.attach_vertices[k] = edges[pick[k]].front();
    ws.core = ws.attach_vertices;
    std::sort(ws.core.begin(), ws.core.end());
    return ws;
  };

  for (std::size_t t = r; t >= 1; --t) {
    std::vector<std::size_t> pick(t);
    for (std::size_t k = 0; k < t; ++k) pick[k] = k;
    while (true) {
      if (++examined > opts.subset_cap)
        throw Error(Errc::cap_exceeded, "whisker search exceeded its subset cap");
      if (auto ws = try_subset(pick)) return ws;
      std::size_t k = t;
      while (k > 0 && pick[k - 1] == r - t + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t m = k; m < t; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return std::nullopt;
}

/// (i) every whisker weight is at least the weight at its attach vertex;
/// (ii) every non-whisker component j has some attach vertex i_k in A_j with
/// w_{j,i_k} <= w_{j_k,i_k}.
inline bool whisker_weight_conditions(const Decomposition& d, const WhiskerStructure& ws) {
  const auto t = ws.whisker_edges.size();
  for (std::size_t k = 0; k < t; ++k) {
    const auto& c = d[ws.whisker_edges[k]];
    const auto base = c.weight_of(ws.attach_vertices[k]).value();
    for (const auto& f : c.factors())
      if (f.weight < base) return false;
  }
  std::set<std::size_t> whiskers(ws.whisker_edges.begin(), ws.whisker_edges.end());
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (whiskers.count(j)) continue;
    bool ok = false;
    for (std::size_t k = 0; k < t && !ok; ++k) {
      auto wj = d[j].weight_of(ws.attach_vertices[k]);
      auto wk = d[ws.whisker_edges[k]].weight_of(ws.attach_vertices[k]).value();
      if (wj && *wj <= wk) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

/// A proper 2-coloring (0/1 per vertex, isolated vertices get 0), if any.
inline std::optional<std::vector<int>> is_bipartite(const Hypergraph& h) {
  if (!h.is_graph()) throw Error(Errc::not_a_graph, "bipartiteness needs every edge of size 2");
  std::vector<std::vector<VarIndex>> adj(h.vertex_count());
  for (const auto& e : h.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> color(h.vertex_count(), -1);
  for (std::size_t start = 0; start < color.size(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<VarIndex> stack{start};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : adj[v]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

struct ColoringOptions {
  std::size_t vertex_cap = 16;
};

/// Least k such that the vertices can be k-colored with no monochromatic
/// edge. Exact backtracking; colors are introduced in order to break symmetry.
inline unsigned chromatic_number(const Hypergraph& h, ColoringOptions opts = {}) {
  std::vector<VarIndex> verts;
  for (const auto& e : h.edges()) {
    if (e.size() < 2)
      throw Error(Errc::not_colorable, "an edge with one vertex cannot be properly colored");
    verts.insert(verts.end(), e.begin(), e.end());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > opts.vertex_cap)
    throw Error(Errc::cap_exceeded, "chromatic number search limited to " +
                                        std::to_string(opts.vertex_cap) + " vertices");
  if (verts.empty()) return 1;

  // Each edge is checked once its last vertex (in verts order) is colored.
  std::vector<std::size_t> pos(h.vertex_count(), 0);
  for (std::size_t k = 0; k < verts.size(); ++k) pos[verts[k]] = k;
  std::vector<std::vector<const std::vector<VarIndex>*>> closing(verts.size());
  for (const auto& e : h.edges()) closing[pos[e.back()]].push_back(&e);

  std::vector<int> color(h.vertex_count(), -1);
  auto colorable = [&](unsigned k) {
    auto place = [&](auto&& self, std::size_t idx, int used) -> bool {
      if (idx == verts.size()) return true;
      const int limit = std::min<int>(static_cast<int>(k), used + 1);
      for (int c = 0; c < limit; ++c) {
        color[verts[idx]] = c;
        bool ok = true;
        for (const auto* e : closing[idx]) {
          bool mono = true;
          for (auto v : *e)
            if (color[v] != c) {
              mono = false;
              break;
            }
          if (mono) {
            ok = false;
            break;
          }
        }
        if (ok && self(self, idx + 1, std::max(used, c + 1))) return true;
      }
      color[verts[idx]] = -1;
      return false;
    };
    return place(place, 0, 0);
  };
  for (unsigned k = 1;; ++k)
    if (colorable(k)) return k;
}

}  // namespace monideal
