#pragma once

// Irreducible decompositions of monomial ideals and the standing hypotheses
// checked on them (distinct radicals, irredundancy, no embedded primes).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/error.hpp"

namespace monideal {

/// q = <x_i^{w_i} : i in A>, held as (variable, weight) pairs sorted by
/// variable. A is non-empty and every weight is positive.
class IrreducibleComponent {
 public:
  struct Factor {
    VarIndex var;
    Exponent weight;
    bool operator==(const Factor&) const = default;
    auto operator<=>(const Factor&) const = default;
  };

  explicit IrreducibleComponent(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::invalid_argument, "irreducible component needs a variable");
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (factors_[k].weight == 0)
        throw Error(Errc::invalid_argument, "component weights must be positive");
      if (k > 0 && factors_[k].var == factors_[k - 1].var)
        throw Error(Errc::invalid_argument, "component repeats a variable");
    }
  }

  /// All weights 1.
  static IrreducibleComponent prime(const std::vector<VarIndex>& vars) {
    std::vector<Factor> fs;
    for (auto v : vars) fs.push_back({v, 1});
    return IrreducibleComponent(std::move(fs));
  }

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::size_t height() const noexcept { return factors_.size(); }

  std::vector<VarIndex> vars() const {
    std::vector<VarIndex> out;
    for (const auto& f : factors_) out.push_back(f.var);
    return out;
  }

  bool contains_var(VarIndex i) const { return weight_of(i).has_value(); }

  std::optional<Exponent> weight_of(VarIndex i) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), i,
                               [](const Factor& f, VarIndex v) { return f.var < v; });
    if (it == factors_.end() || it->var != i) return std::nullopt;
    return it->weight;
  }

  Exponent max_weight() const {
    Exponent w = 0;
    for (const auto& f : factors_) w = std::max(w, f.weight);
    return w;
  }

  VarIndex max_var() const { return factors_.back().var; }

  bool same_radical(const IrreducibleComponent& other) const { return vars() == other.vars(); }

  /// Canonical order: sorted A first, then the weight sequence.
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    auto va = a.vars(), vb = b.vars();
    if (va != vb) return va < vb;
    return a.factors_ < b.factors_;
  }
  bool operator==(const IrreducibleComponent&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// The ideal <x_i^{w_i} : i in A>.
inline MonomialIdeal expand(const Ring& ring, const IrreducibleComponent& c) {
  std::vector<Monomial> gens;
  for (const auto& f : c.factors()) {
    if (f.var >= ring.size())
      throw Error(Errc::out_of_range, "component variable outside the ring");
    gens.push_back(Monomial::variable(ring.size(), f.var, f.weight));
  }
  return minimalize(ring, std::move(gens));
}

/// q_a contained in q_b (as ideals): A_a is a subset of A_b and b's weights
/// there are no larger.
inline bool component_subset(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  for (const auto& fa : a.factors()) {
    auto wb = b.weight_of(fa.var);
    if (!wb || *wb > fa.weight) return false;
  }
  return true;
}

/// Ordered list of irreducible components with validity flags.
class Decomposition {
 public:
  Decomposition(Ring ring, std::vector<IrreducibleComponent> components)
      : ring_(std::move(ring)), components_(std::move(components)) {
    if (components_.empty())
      throw Error(Errc::invalid_argument, "decomposition needs at least one component");
    for (const auto& c : components_)
      if (c.max_var() >= ring_.size())
        throw Error(Errc::out_of_range, "component variable outside the ring");

    irredundant_ = true;
    for (std::size_t j = 0; j < components_.size(); ++j)
      for (std::size_t k = 0; k < components_.size(); ++k)
        if (j != k && component_subset(components_[j], components_[k])) irredundant_ = false;

    distinct_radicals_ = true;
    for (std::size_t j = 0; j < components_.size(); ++j)
      for (std::size_t k = j + 1; k < components_.size(); ++k)
        if (components_[j].same_radical(components_[k])) distinct_radicals_ = false;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.size(); }
  std::span<const IrreducibleComponent> components() const& noexcept { return components_; }
  std::span<const IrreducibleComponent> components() const&& = delete;
  std::size_t size() const noexcept { return components_.size(); }
  const IrreducibleComponent& operator[](std::size_t j) const { return components_[j]; }

  bool irredundant() const noexcept { return irredundant_; }
  bool distinct_radicals() const noexcept { return distinct_radicals_; }
  /// Minimal in the sense of the standing hypotheses: irredundant with
  /// pairwise distinct radicals.
  bool minimal() const noexcept { return irredundant_ && distinct_radicals_; }

  bool operator==(const Decomposition& other) const {
    return nvars() == other.nvars() && components_ == other.components_;
  }

 private:
  Ring ring_;
  std::vector<IrreducibleComponent> components_;
  bool irredundant_ = true;
  bool distinct_radicals_ = true;
};

/// The intersection of the expanded components.
inline MonomialIdeal ideal_of(const Decomposition& d) {
  MonomialIdeal acc = MonomialIdeal::unit(d.ring());
  for (const auto& c : d.components()) acc = intersect(acc, expand(d.ring(), c));
  return acc;
}

namespace detail {

inline IrreducibleComponent component_from_pure_powers(const MonomialIdeal& ideal) {
  std::vector<IrreducibleComponent::Factor> fs;
  for (const auto& g : ideal.gens()) {
    auto s = support(g);
    fs.push_back({s.front(), g[s.front()]});
  }
  return IrreducibleComponent(std::move(fs));
}

inline void split(const MonomialIdeal& ideal, std::vector<IrreducibleComponent>& leaves) {
  // Lexicographically first generator (x_1 > x_2 > ...) with at least two
  // variables.
  const Monomial* pick = nullptr;
  for (const auto& g : ideal.gens()) {
    if (support(g).size() < 2) continue;
    if (pick == nullptr || *pick < g) pick = &g;
  }
  if (pick == nullptr) {
    leaves.push_back(component_from_pure_powers(ideal));
    return;
  }
  const auto i = support(*pick).front();
  const Monomial u = Monomial::variable(ideal.nvars(), i, (*pick)[i]);
  const Monomial v = quotient(*pick, u);
  split(sum(ideal, ideal_of(ideal.ring(), {u})), leaves);
  split(sum(ideal, ideal_of(ideal.ring(), {v})), leaves);
}

}  // namespace detail

/// Irredundant irreducible decomposition by recursive splitting of generators
/// x^a = u*v (coprime, non-unit) into I + <u> and I + <v>.
inline Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "cannot decompose the zero ideal");
  if (ideal.is_unit()) throw Error(Errc::unit_ideal, "cannot decompose the unit ideal");

  std::vector<IrreducibleComponent> leaves;
  detail::split(ideal, leaves);
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

  // q_k is redundant iff some other leaf q_j is contained in it.
  std::vector<IrreducibleComponent> kept;
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j)
      if (j != k && component_subset(leaves[j], leaves[k])) redundant = true;
    if (!redundant) kept.push_back(leaves[k]);
  }
  return Decomposition(ideal.ring(), std::move(kept));
}

inline void require_distinct_radicals(const Decomposition& d) {
  if (!d.distinct_radicals())
    throw Error(Errc::duplicate_radical, "two components share the same radical");
}

inline void require_minimal(const Decomposition& d) {
  require_distinct_radicals(d);
  if (!d.irredundant()) throw Error(Errc::not_minimal, "decomposition is redundant");
}

/// Supports A_j of the associated primes, in component order.
inline std::vector<std::vector<VarIndex>> associated_primes(const Decomposition& d) {
  require_minimal(d);
  std::vector<std::vector<VarIndex>> out;
  for (const auto& c : d.components()) out.push_back(c.vars());
  return out;
}

inline std::size_t big_height(const Decomposition& d) {
  std::size_t h = 0;
  for (const auto& c : d.components()) h = std::max(h, c.height());
  return h;
}

inline bool has_embedded_primes(const Decomposition& d) {
  for (const auto& a : d.components())
    for (const auto& b : d.components()) {
      auto va = a.vars(), vb = b.vars();
      if (va.size() < vb.size() && std::includes(vb.begin(), vb.end(), va.begin(), va.end()))
        return true;
    }
  return false;
}

/// The standing hypothesis for symbolic powers: minimal, no embedded primes.
inline void require_standard(const Decomposition& d) {
  require_minimal(d);
  if (has_embedded_primes(d))
    throw Error(Errc::embedded_primes,
                "ideal has embedded associated primes; symbolic powers are not computed");
}

inline bool all_heights_equal(const Decomposition& d, std::size_t h) {
  return std::all_of(d.components().begin(), d.components().end(),
                     [h](const IrreducibleComponent& c) { return c.height() == h; });
}

}  // namespace monideal
