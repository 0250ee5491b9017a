#pragma once

// Exact minimum of sum(y) over { y >= 0, sum_{i in A_j} y_i / w_{j,i} >= 1 }
// by vertex enumeration inside the box [0, W]^n, W = max weight.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "monideal/decomp.hpp"
#include "monideal/error.hpp"
#include "monideal/rational.hpp"

namespace monideal {

struct LpOptions {
  std::size_t dimension_cap = 24;
  std::uint64_t basis_cap = 50'000'000;
};

struct LpSolution {
  Rational value;
  std::vector<Rational> point;  // length n; variables in no component are 0
};

namespace detail {

using Wide = __int128;

inline Wide wide_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::overflow, "LP arithmetic overflow");
  return out;
}

inline Wide wide_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::overflow, "LP arithmetic overflow");
  return out;
}

/// Bareiss fraction-free determinant of a k x k integer matrix (row-major).
inline Wide bareiss_det(std::vector<Wide> m, std::size_t k) {
  if (k == 0) return 1;
  Wide sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p * k + p] == 0) {
      std::size_t q = p + 1;
      while (q < k && m[q * k + p] == 0) ++q;
      if (q == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(m[p * k + c], m[q * k + c]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) {
        Wide v = wide_add(wide_mul(m[i * k + j], m[p * k + p]), -wide_mul(m[i * k + p], m[p * k + j]));
        m[i * k + j] = v / prev;
      }
    prev = m[p * k + p];
  }
  return sign * m[(k - 1) * k + (k - 1)];
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

inline LpSolution waldschmidt_lp_solution(const Decomposition& d, LpOptions opts = {}) {
  require_standard(d);
  using detail::Wide;

  std::vector<VarIndex> active;
  for (const auto& c : d.components())
    for (auto v : c.vars()) active.push_back(v);
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  const std::size_t m = active.size();
  const std::size_t r = d.size();
  if (m > opts.dimension_cap)
    throw Error(Errc::cap_exceeded, "LP dimension " + std::to_string(m) + " exceeds the cap");
  if (r > 62) throw Error(Errc::cap_exceeded, "LP has too many constraints");

  // Integer rows: sum_v coef[j][v] * y_v >= rhs[j].
  std::vector<std::vector<Wide>> coef(r, std::vector<Wide>(m, 0));
  std::vector<Wide> rhs(r);
  Exponent box = 0;
  for (std::size_t j = 0; j < r; ++j) {
    std::uint64_t l = 1;
    for (const auto& f : d[j].factors()) l = detail::lcm_u64(l, f.weight);
    rhs[j] = static_cast<Wide>(l);
    for (const auto& f : d[j].factors()) {
      auto idx = static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), f.var) - active.begin());
      coef[j][idx] = static_cast<Wide>(l / f.weight);
    }
    box = std::max(box, d[j].max_weight());
  }

  std::optional<std::pair<std::vector<Wide>, Wide>> best;  // numerators, common denominator
  Wide best_num = 0;
  std::uint64_t bases = 0;

  std::vector<Wide> mat, work, y(m);
  for (std::uint64_t free_mask = 0; free_mask < (std::uint64_t{1} << m); ++free_mask) {
    const auto k = static_cast<std::size_t>(std::popcount(free_mask));
    if (k > r) continue;
    std::vector<std::size_t> free_vars, fixed_vars;
    for (std::size_t v = 0; v < m; ++v) (free_mask >> v & 1 ? free_vars : fixed_vars).push_back(v);

    // Row subsets of size k via Gosper's hack.
    std::uint64_t rows = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    while (true) {
      std::vector<std::size_t> picked;
      for (std::size_t j = 0; j < r; ++j)
        if (rows >> j & 1) picked.push_back(j);

      mat.assign(k * k, 0);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) mat[a * k + b] = coef[picked[a]][free_vars[b]];
      Wide det = detail::bareiss_det(mat, k);

      if (det != 0) {
        const std::size_t nfixed = fixed_vars.size();
        for (std::uint64_t at_top = 0; at_top < (std::uint64_t{1} << nfixed); ++at_top) {
          if (++bases > opts.basis_cap) throw Error(Errc::cap_exceeded, "LP vertex enumeration exceeded its cap");
          Wide den = det;
          std::vector<Wide> b(k);
          for (std::size_t a = 0; a < k; ++a) {
            Wide val = rhs[picked[a]];
            for (std::size_t q = 0; q < nfixed; ++q)
              if (at_top >> q & 1) val -= detail::wide_mul(coef[picked[a]][fixed_vars[q]], box);
            b[a] = val;
          }
          // Cramer: y_free[c] = det(mat with column c := b) / det.
          for (std::size_t c = 0; c < k; ++c) {
            work = mat;
            for (std::size_t a = 0; a < k; ++a) work[a * k + c] = b[a];
            y[free_vars[c]] = detail::bareiss_det(work, k);
          }
          for (std::size_t q = 0; q < nfixed; ++q)
            y[fixed_vars[q]] = (at_top >> q & 1) ? detail::wide_mul(static_cast<Wide>(box), den) : 0;
          if (den < 0) {
            den = -den;
            for (auto& v : y) v = -v;
          }

          bool feasible = true;
          for (std::size_t v = 0; v < m && feasible; ++v)
            if (y[v] < 0 || y[v] > detail::wide_mul(static_cast<Wide>(box), den)) feasible = false;
          for (std::size_t j = 0; j < r && feasible; ++j) {
            Wide lhs = 0;
            for (std::size_t v = 0; v < m; ++v) lhs = detail::wide_add(lhs, detail::wide_mul(coef[j][v], y[v]));
            if (lhs < detail::wide_mul(rhs[j], den)) feasible = false;
          }
          if (!feasible) continue;

          Wide num = 0;
          for (auto v : y) num = detail::wide_add(num, v);
          if (!best || detail::wide_mul(num, best->second) < detail::wide_mul(best_num, den)) {
            best = std::make_pair(y, den);
            best_num = num;
          }
        }
      }

      if (k == 0) break;
      // Next subset of {0..r-1} with k bits.
      const std::uint64_t low = rows & -rows;
      const std::uint64_t ripple = rows + low;
      rows = (((ripple ^ rows) >> 2) / low) | ripple;
      if (rows >> r) break;
    }
  }

  if (!best) throw Error(Errc::invalid_argument, "LP has no feasible vertex");
  auto to_cpp = [](Wide v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    boost::multiprecision::cpp_int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? boost::multiprecision::cpp_int(-out) : out;
  };
  LpSolution sol;
  const auto den = to_cpp(best->second);
  sol.point.assign(d.nvars(), Rational(0));
  for (std::size_t v = 0; v < m; ++v) sol.point[active[v]] = Rational(to_cpp(best->first[v]), den);
  sol.value = Rational(to_cpp(best_num), den);
  return sol;
}

inline Rational waldschmidt_lp(const Decomposition& d, LpOptions opts = {}) {
  return waldschmidt_lp_solution(d, opts).value;
}

}  // namespace monideal
