#pragma once

// Monomials and monomial ideals over K[x_1, ..., x_n]. The coefficient field
// never appears: an ideal is stored as its canonical minimal generating set.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monideal/error.hpp"

namespace monideal {

using Exponent = std::uint32_t;
using VarIndex = std::size_t;  // 0-based internally, rendered 1-based

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(Errc::overflow, "exponent overflow in addition");
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(Errc::overflow, "exponent overflow in multiplication");
  return out;
}

/// Polynomial ring K[x_1..x_n]; only the variable count and optional display
/// names are kept.
class Ring {
 public:
  explicit Ring(std::size_t n) : n_(n) {
    if (n == 0) throw Error(Errc::invalid_argument, "ring needs at least one variable");
  }

  Ring(std::size_t n, std::vector<std::string> names) : Ring(n) {
    if (names.size() != n)
      throw Error(Errc::invalid_argument, "ring names must have one entry per variable");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
      throw Error(Errc::invalid_argument, "ring variable names must be distinct");
    names_ = std::move(names);
  }

  std::size_t size() const noexcept { return n_; }
  bool has_names() const noexcept { return !names_.empty(); }

  std::string name(VarIndex i) const {
    if (!names_.empty()) return names_.at(i);
    return "x" + std::to_string(i + 1);
  }

  bool operator==(const Ring&) const = default;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  static Monomial variable(std::size_t nvars, VarIndex i, Exponent e = 1) {
    std::vector<Exponent> exps(nvars, 0);
    exps.at(i) = e;
    return Monomial(std::move(exps));
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](VarIndex i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// Bit i set iff x_i divides this monomial (first 64 variables only).
  std::uint64_t support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
      if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
    return mask;
  }

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

inline void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(Errc::ring_mismatch, "ring mismatch: " + std::to_string(a) + " vs " +
                                         std::to_string(b) + " variables");
}

inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial(std::move(out));
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(out));
}

/// a / b, assuming b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Exponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (b[i] > a[i]) throw Error(Errc::invalid_argument, "quotient of non-divisible monomials");
    out[i] = a[i] - b[i];
  }
  return Monomial(std::move(out));
}

inline std::vector<VarIndex> support(const Monomial& f) {
  std::vector<VarIndex> out;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (f[i] != 0) out.push_back(i);
  return out;
}

/// The squarefree monomial on the support of f.
inline Monomial support_monomial(const Monomial& f) {
  std::vector<Exponent> out(f.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] != 0 ? 1 : 0;
  return Monomial(std::move(out));
}

/// Canonical generator order: total degree first, then lexicographic with
/// x_1 > x_2 > ... > x_n.
inline bool graded_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

class MonomialIdeal;
MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

/// A monomial ideal stored as its minimal generating set in canonical order.
/// No generators encodes the zero ideal; the single generator 1 encodes the
/// unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

  static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring); }
  static MonomialIdeal unit(const Ring& ring) {
    MonomialIdeal out(ring);
    out.gens_.push_back(Monomial::one(ring.size()));
    return out;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.size(); }
  std::span<const Monomial> gens() const& noexcept { return gens_; }
  std::span<const Monomial> gens() const&& = delete;
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars() == b.nvars() && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal elements of gens, sorted canonically.
inline MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ring(ring.size(), g.nvars());
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(ring);
  std::vector<std::uint64_t> masks;
  for (auto& cand : gens) {
    // Only earlier (lower or equal degree) elements can divide cand.
    const auto mask = cand.support_mask();
    bool redundant = false;
    for (std::size_t k = 0; k < out.gens_.size(); ++k) {
      if ((masks[k] & ~mask) != 0) continue;
      if (divides(out.gens_[k], cand)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      masks.push_back(mask);
      out.gens_.push_back(std::move(cand));
    }
  }
  return out;
}

inline MonomialIdeal ideal_of(const Ring& ring, std::vector<Monomial> gens) {
  return minimalize(ring, std::move(gens));
}

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_ring(ideal.nvars(), f.nvars());
  const auto mask = f.support_mask();
  for (const auto& g : ideal.gens()) {
    if ((g.support_mask() & ~mask) != 0) continue;
    if (divides(g, f)) return true;
  }
  return false;
}

/// I is contained in J.
inline bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return contains_monomial(b, g); });
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Monomial> cands;
  cands.reserve(a.size() * b.size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) cands.push_back(lcm(f, g));
  return minimalize(a.ring(), std::move(cands));
}

/// Left fold of pairwise intersections; an empty list yields the unit ideal.
inline MonomialIdeal intersect_all(const Ring& ring, std::span<const MonomialIdeal> ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& ideal : ideals) acc = intersect(acc, ideal);
  return acc;
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ring(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.nvars(), b.nvars());
  std::vector<Monomial> cands;
  cands.reserve(a.size() * b.size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) cands.push_back(multiply(f, g));
  return minimalize(a.ring(), std::move(cands));
}

inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "power exponent must be at least 1");
  MonomialIdeal acc = ideal;
  for (unsigned k = 1; k < t; ++k) acc = product(acc, ideal);
  return acc;
}

/// f in I^t, decided by peeling off generators of I (no power is materialized).
inline bool in_ordinary_power(const MonomialIdeal& ideal, const Monomial& f, unsigned t) {
  require_same_ring(ideal.nvars(), f.nvars());
  if (t == 0) return true;
  const auto gens = ideal.gens();
  // Generators are consumed in non-increasing index order to skip permutations.
  auto search = [&](auto&& self, const Monomial& rest, unsigned left, std::size_t max_idx) -> bool {
    if (left == 0) return true;
    for (std::size_t k = 0; k <= max_idx && k < gens.size(); ++k) {
      if (!divides(gens[k], rest)) continue;
      if (self(self, quotient(rest, gens[k]), left - 1, k)) return true;
    }
    return false;
  };
  return search(search, f, t, gens.size());
}

inline std::uint64_t alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "alpha of the zero ideal");
  if (ideal.is_unit()) throw Error(Errc::unit_ideal, "alpha of the unit ideal");
  // Generators are sorted by degree.
  return ideal.gens().front().degree();
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(support_monomial(g));
  return minimalize(ideal.ring(), std::move(gens));
}

}  // namespace monideal
