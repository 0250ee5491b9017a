#pragma once

// Slow, direct reimplementations used to cross-check the library. Nothing
// here calls into the library's algorithms beyond the value types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"

namespace oracle {

using monideal::Decomposition;
using monideal::Exponent;
using monideal::IrreducibleComponent;
using monideal::Monomial;
using monideal::VarIndex;

using Vec = std::vector<Exponent>;

inline Vec exps(const Monomial& f) { return Vec(f.exponents().begin(), f.exponents().end()); }

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Every exponent vector with entries in [0, bound[i]].
inline std::vector<Vec> box(const Vec& bound) {
  std::vector<Vec> out{Vec(bound.size(), 0)};
  for (std::size_t i = 0; i < bound.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Exponent e = 0; e <= bound[i]; ++e) {
        auto w = v;
        w[i] = e;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

/// Calls fn on every multiset of size t drawn from {0, ..., k-1}, given as a
/// non-decreasing index list.
inline void multisets(std::size_t k, unsigned t, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == t) {
      fn(pick);
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  if (k > 0 || t == 0) rec(0);
}

/// Minimal elements under componentwise order, as a sorted set.
inline std::set<Vec> minimal(const std::vector<Vec>& vs) {
  std::set<Vec> out;
  for (const auto& v : vs) {
    bool dominated = false;
    for (const auto& u : vs)
      if (u != v && leq(u, v)) dominated = true;
    if (!dominated) out.insert(v);
  }
  return out;
}

inline std::set<Vec> as_set(const monideal::MonomialIdeal& ideal) {
  std::set<Vec> out;
  for (const auto& g : ideal.gens()) out.insert(exps(g));
  return out;
}

/// f in <gens>^t: some product of t generators divides f.
inline bool in_power(const std::vector<Vec>& gens, const Vec& f, unsigned t) {
  bool found = false;
  multisets(gens.size(), t, [&](const std::vector<std::size_t>& pick) {
    if (found) return;
    Vec prod(f.size(), 0);
    for (auto k : pick) prod = add(prod, gens[k]);
    if (leq(prod, f)) found = true;
  });
  return found;
}

inline std::vector<Vec> component_gens(const IrreducibleComponent& c, std::size_t n) {
  std::vector<Vec> out;
  for (const auto& f : c.factors()) {
    Vec v(n, 0);
    v[f.var] = f.weight;
    out.push_back(v);
  }
  return out;
}

/// f in q^s by expanding q^s into products of generators.
inline bool in_component_power(const IrreducibleComponent& c, const Vec& f, unsigned s) {
  return in_power(component_gens(c, f.size()), f, s);
}

inline bool in_symbolic_power(const Decomposition& d, const Vec& f, unsigned s) {
  for (const auto& c : d.components())
    if (!in_component_power(c, f, s)) return false;
  return true;
}

/// Minimal generators of the intersection of the q_j^s, by scanning a box
/// large enough to hold all of them.
inline std::set<Vec> symbolic_power_gens(const Decomposition& d, unsigned s) {
  Vec bound(d.nvars(), 0);
  for (const auto& c : d.components())
    for (const auto& f : c.factors()) bound[f.var] = std::max<Exponent>(bound[f.var], s * f.weight);
  std::vector<Vec> members;
  for (const auto& v : box(bound))
    if (in_symbolic_power(d, v, s)) members.push_back(v);
  return minimal(members);
}

/// f in I^t iff some multiset of t columns of A_1 x ... x A_r meets the
/// membership inequalities; checked by enumerating all of them.
inline bool matrix_system(const Decomposition& d, const Vec& f, unsigned t) {
  std::vector<Vec> cols{Vec(d.nvars(), 0)};
  std::vector<std::vector<VarIndex>> idx{{}};
  for (const auto& c : d.components()) {
    std::vector<std::vector<VarIndex>> next;
    for (const auto& a : idx)
      for (auto v : c.vars()) {
        auto b = a;
        b.push_back(v);
        next.push_back(b);
      }
    idx = std::move(next);
  }
  cols.clear();
  for (const auto& a : idx) {
    Vec col(d.nvars(), 0);
    for (std::size_t i = 0; i < d.nvars(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] == i) col[i] = std::max(col[i], *d[j].weight_of(i));
    cols.push_back(col);
  }
  return in_power(cols, f, t);
}

/// Minimal vertex covers of the generator supports of a squarefree ideal; the
/// minimal primes.
inline std::set<std::vector<VarIndex>> minimal_primes_squarefree(const std::vector<Vec>& gens, std::size_t n) {
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool hit = false;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && (mask >> i & 1)) hit = true;
      ok = ok && hit;
    }
    if (ok) covers.push_back(mask);
  }
  std::set<std::vector<VarIndex>> out;
  for (auto m : covers) {
    bool min = true;
    for (auto o : covers)
      if (o != m && (o & m) == o) min = false;
    if (!min) continue;
    std::vector<VarIndex> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

/// Least k admitting a coloring of n vertices with no monochromatic edge.
inline unsigned chromatic_number(std::size_t n, const std::vector<std::vector<VarIndex>>& edges) {
  for (unsigned k = 1;; ++k) {
    std::vector<unsigned> color(n, 0);
    while (true) {
      bool proper = true;
      for (const auto& e : edges) {
        bool mono = true;
        for (auto v : e) mono = mono && color[v] == color[e.front()];
        if (mono) proper = false;
      }
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
}

}  // namespace oracle
