#pragma once

// Symbolic powers of ideals without embedded primes, and the membership
// procedures used to compare them with ordinary powers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"

namespace monideal {

/// f in q^s for q = <x_i^{w_i} : i in A>: sum of floor(b_i / w_i) reaches s.
inline bool in_component_power(const IrreducibleComponent& c, const Monomial& f, unsigned s) {
  std::uint64_t total = 0;
  for (const auto& fac : c.factors()) {
    if (fac.var >= f.nvars()) throw Error(Errc::ring_mismatch, "component variable outside the ring");
    total += f[fac.var] / fac.weight;
    if (total >= s) return true;
  }
  return total >= s;
}

/// Minimal generators of q^s: prod x_i^{w_i k_i} over compositions sum k_i = s.
inline MonomialIdeal component_power(const Ring& ring, const IrreducibleComponent& c, unsigned s) {
  if (s == 0) throw Error(Errc::invalid_argument, "power exponent must be at least 1");
  const auto fs = c.factors();
  std::vector<Monomial> gens;
  std::vector<Exponent> exps(ring.size(), 0);
  auto fill = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == fs.size()) {
      exps[fs[k].var] = checked_mul(fs[k].weight, left);
      gens.emplace_back(exps);
      exps[fs[k].var] = 0;
      return;
    }
    for (unsigned use = 0; use <= left; ++use) {
      exps[fs[k].var] = checked_mul(fs[k].weight, use);
      self(self, k + 1, left - use);
    }
    exps[fs[k].var] = 0;
  };
  fill(fill, 0, s);
  return minimalize(ring, std::move(gens));
}

/// acc intersected with q^s. Generators of acc already in q^s are kept as-is;
/// the rest are lifted by lcm with the generators of q^s.
inline MonomialIdeal intersect_with_component_power(const MonomialIdeal& acc,
                                                    const IrreducibleComponent& c, unsigned s) {
  const MonomialIdeal qs = component_power(acc.ring(), c, s);
  std::vector<Monomial> cands;
  for (const auto& g : acc.gens()) {
    if (in_component_power(c, g, s)) {
      cands.push_back(g);
      continue;
    }
    for (const auto& h : qs.gens()) cands.push_back(lcm(g, h));
  }
  return minimalize(acc.ring(), std::move(cands));
}

/// I^(s) as the intersection of the s-th powers of the irreducible
/// components. Requires a minimal decomposition without embedded primes.
inline MonomialIdeal symbolic_power(const Decomposition& d, unsigned s) {
  if (s == 0) throw Error(Errc::invalid_argument, "symbolic power exponent must be at least 1");
  require_standard(d);
  MonomialIdeal acc = component_power(d.ring(), d[0], s);
  for (std::size_t j = 1; j < d.size(); ++j) acc = intersect_with_component_power(acc, d[j], s);
  return acc;
}

/// f in I^(s), checked component by component.
inline bool in_symbolic_power(const Decomposition& d, const Monomial& f, unsigned s) {
  require_same_ring(d.nvars(), f.nvars());
  return std::all_of(d.components().begin(), d.components().end(),
                     [&](const IrreducibleComponent& c) { return in_component_power(c, f, s); });
}

/// The exponent matrix of I: rows are variables, columns are indexed by
/// a = (a_1, ..., a_r) in A_1 x ... x A_r, with entry at row i the largest
/// w_{j,a_j} over the j with a_j = i (zero when i is no a_j). Columns are
/// computed on demand.
class MembershipMatrix {
 public:
  static constexpr std::size_t default_column_cap = 1'000'000;

  explicit MembershipMatrix(Decomposition d, std::size_t column_cap = default_column_cap)
      : d_(std::move(d)) {
    require_minimal(d_);
    columns_ = 1;
    for (const auto& c : d_.components()) {
      if (columns_ > column_cap / c.height())
        throw Error(Errc::cap_exceeded, "membership matrix has more than " +
                                            std::to_string(column_cap) + " columns");
      columns_ *= c.height();
    }
  }

  const Decomposition& decomposition() const noexcept { return d_; }
  std::size_t rows() const noexcept { return d_.nvars(); }
  std::size_t column_count() const noexcept { return columns_; }

  /// Mixed-radix decoding of a flat column index; the first component varies
  /// slowest.
  std::vector<VarIndex> column_index(std::size_t flat) const {
    if (flat >= columns_) throw Error(Errc::out_of_range, "column index out of range");
    std::vector<VarIndex> a(d_.size());
    for (std::size_t j = d_.size(); j-- > 0;) {
      const auto fs = d_[j].factors();
      a[j] = fs[flat % fs.size()].var;
      flat /= fs.size();
    }
    return a;
  }

  std::vector<Exponent> column(std::span<const VarIndex> a) const {
    if (a.size() != d_.size()) throw Error(Errc::invalid_argument, "column index has wrong length");
    std::vector<Exponent> col(rows(), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto w = d_[j].weight_of(a[j]);
      if (!w) throw Error(Errc::invalid_argument, "column index entry is not in its component");
      col[a[j]] = std::max(col[a[j]], *w);
    }
    return col;
  }

  std::vector<Exponent> column(std::size_t flat) const {
    auto a = column_index(flat);
    return column(std::span<const VarIndex>(a));
  }

 private:
  Decomposition d_;
  std::size_t columns_ = 0;
};

enum class Membership { yes, no, indeterminate };

struct MatrixMembership {
  Membership verdict = Membership::no;
  /// When yes: chosen columns (by their index a) with multiplicities m_a.
  std::vector<std::pair<std::vector<VarIndex>, unsigned>> certificate;
  std::uint64_t nodes = 0;
};

struct MatrixSearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

/// Decides f in I^t by searching for non-negative integers m_a with
/// sum m_a = t and P m <= exponents(f). Only columns with every a_j in
/// supp(f) can carry weight; identical columns are merged.
inline MatrixMembership matrix_membership(const MembershipMatrix& matrix, const Monomial& f,
                                          unsigned t, MatrixSearchOptions opts = {}) {
  require_same_ring(matrix.rows(), f.nvars());
  MatrixMembership out;
  if (t == 0) {
    out.verdict = Membership::yes;
    return out;
  }
  const auto& d = matrix.decomposition();

  std::vector<std::vector<VarIndex>> choices(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    for (auto v : d[j].vars())
      if (f[v] != 0) choices[j].push_back(v);
    if (choices[j].empty()) return out;
  }

  // Distinct columns that fit under f, each with one representative index.
  std::map<std::vector<Exponent>, std::vector<VarIndex>> distinct;
  std::vector<VarIndex> a(d.size());
  auto enumerate = [&](auto&& self, std::size_t j) -> void {
    if (j == d.size()) {
      auto col = matrix.column(std::span<const VarIndex>(a));
      for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] > f[i]) return;
      distinct.emplace(std::move(col), a);
      return;
    }
    for (auto v : choices[j]) {
      a[j] = v;
      self(self, j + 1);
    }
  };
  enumerate(enumerate, 0);

  std::vector<std::vector<Exponent>> cols;
  std::vector<std::vector<VarIndex>> reps;
  for (auto& [col, rep] : distinct) {
    cols.push_back(col);
    reps.push_back(rep);
  }

  std::vector<Exponent> budget(f.exponents().begin(), f.exponents().end());
  std::vector<unsigned> mult(cols.size(), 0);
  bool exhausted = false;
  auto search = [&](auto&& self, std::size_t from, unsigned left) -> bool {
    if (left == 0) return true;
    for (std::size_t k = from; k < cols.size(); ++k) {
      if (++out.nodes > opts.node_budget) {
        exhausted = true;
        return false;
      }
      bool fits = true;
      for (std::size_t i = 0; i < budget.size(); ++i)
        if (cols[k][i] > budget[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t i = 0; i < budget.size(); ++i) budget[i] -= cols[k][i];
      ++mult[k];
      if (self(self, k, left - 1)) return true;
      --mult[k];
      for (std::size_t i = 0; i < budget.size(); ++i) budget[i] += cols[k][i];
      if (exhausted) return false;
    }
    return false;
  };

  if (search(search, 0, t)) {
    out.verdict = Membership::yes;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (mult[k] != 0) out.certificate.emplace_back(reps[k], mult[k]);
  } else {
    out.verdict = exhausted ? Membership::indeterminate : Membership::no;
  }
  return out;
}

struct ContainmentOptions {
  /// Re-check every generator with the matrix procedure as well.
  bool cross_check = false;
  MatrixSearchOptions matrix;
};

/// The first minimal generator of I^(s) outside I^t, if any.
inline std::optional<Monomial> containment_witness(const Decomposition& d, unsigned s, unsigned t,
                                                   ContainmentOptions opts = {}) {
  if (t == 0) throw Error(Errc::invalid_argument, "ordinary power exponent must be at least 1");
  const MonomialIdeal sym = symbolic_power(d, s);
  const MonomialIdeal base = symbolic_power(d, 1);
  std::optional<MembershipMatrix> matrix;
  if (opts.cross_check) matrix.emplace(d);
  for (const auto& g : sym.gens()) {
    const bool inside = in_ordinary_power(base, g, t);
    if (matrix) {
      auto m = matrix_membership(*matrix, g, t, opts.matrix);
      if (m.verdict != Membership::indeterminate && (m.verdict == Membership::yes) != inside)
        throw Error(Errc::oracle_disagreement,
                    "generator and matrix membership disagree on a generator of I^(s)");
    }
    if (!inside) return g;
  }
  return std::nullopt;
}

/// I^(s) contained in I^t.
inline bool containment(const Decomposition& d, unsigned s, unsigned t, ContainmentOptions opts = {}) {
  return !containment_witness(d, s, t, opts).has_value();
}

}  // namespace monideal
