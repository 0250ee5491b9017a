#pragma once

// Polarization: spread each exponent of x_i over fresh layer variables
// x_{i,1}, ..., x_{i,w_i}, giving a squarefree ideal of the same degrees.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/powers.hpp"

namespace monideal {

/// Index layout of the extended ring: variables (i, d), 1 <= d <= w_i, sorted
/// by i then d. Variables with w_i = 0 get no layers.
class PolarLayout {
 public:
  struct Layer {
    VarIndex source;
    Exponent depth;  // 1-based
    bool operator==(const Layer&) const = default;
  };

  explicit PolarLayout(std::vector<Exponent> layer_counts) : counts_(std::move(layer_counts)) {
    offsets_.resize(counts_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      offsets_[i] = next;
      for (Exponent d = 1; d <= counts_[i]; ++d) layers_.push_back({i, d});
      next += counts_[i];
    }
    if (layers_.empty()) throw Error(Errc::invalid_argument, "polarization of an ideal without variables");
  }

  std::span<const Exponent> layer_counts() const noexcept { return counts_; }
  std::span<const Layer> var_map() const noexcept { return layers_; }
  std::size_t size() const noexcept { return layers_.size(); }

  VarIndex index(VarIndex source, Exponent depth) const {
    if (depth == 0 || depth > counts_.at(source))
      throw Error(Errc::out_of_range, "polarization layer out of range");
    return offsets_[source] + depth - 1;
  }

  Ring ring() const {
    std::vector<std::string> names;
    for (const auto& l : layers_)
      names.push_back("x" + std::to_string(l.source + 1) + "_" + std::to_string(l.depth));
    return Ring(layers_.size(), std::move(names));
  }

  /// x_i^b maps to x_{i,1} ... x_{i,b}.
  Monomial polarize(const Monomial& f) const {
    require_same_ring(counts_.size(), f.nvars());
    std::vector<Exponent> exps(size(), 0);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (f[i] > counts_[i]) throw Error(Errc::out_of_range, "exponent exceeds polarization layers");
      for (Exponent d = 1; d <= f[i]; ++d) exps[index(i, d)] = 1;
    }
    return Monomial(std::move(exps));
  }

  /// Sum of the layer exponents per source variable.
  Monomial depolarize(const Monomial& g) const {
    require_same_ring(size(), g.nvars());
    std::vector<Exponent> exps(counts_.size(), 0);
    for (std::size_t k = 0; k < layers_.size(); ++k)
      exps[layers_[k].source] = checked_add(exps[layers_[k].source], g[k]);
    return Monomial(std::move(exps));
  }

  bool operator==(const PolarLayout& other) const { return counts_ == other.counts_; }

 private:
  std::vector<Exponent> counts_;
  std::vector<std::size_t> offsets_;
  std::vector<Layer> layers_;
};

struct PolarizedIdeal {
  MonomialIdeal ideal;
  PolarLayout layout;
};

/// Layer counts w_i = max exponent of x_i over the minimal generators.
inline PolarLayout generator_layout(const MonomialIdeal& ideal) {
  std::vector<Exponent> counts(ideal.nvars(), 0);
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < g.nvars(); ++i) counts[i] = std::max(counts[i], g[i]);
  return PolarLayout(std::move(counts));
}

/// Layer counts w_i = max_j w_{j,i} over the components.
inline PolarLayout component_layout(const Decomposition& d) {
  std::vector<Exponent> counts(d.nvars(), 0);
  for (const auto& c : d.components())
    for (const auto& f : c.factors()) counts[f.var] = std::max(counts[f.var], f.weight);
  return PolarLayout(std::move(counts));
}

inline PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "polarization of the zero ideal");
  if (ideal.is_unit()) throw Error(Errc::unit_ideal, "polarization of the unit ideal");
  PolarLayout layout = generator_layout(ideal);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(layout.polarize(g));
  return {minimalize(layout.ring(), std::move(gens)), std::move(layout)};
}

struct PolarizedDecomposition {
  Decomposition decomposition;
  PolarLayout layout;
};

/// Components <x_{i,d_i} : i in A_j> for every j and every layer choice
/// 1 <= d_i <= w_{j,i}.
inline PolarizedDecomposition polarized_decomposition(const Decomposition& d) {
  require_standard(d);
  PolarLayout layout = component_layout(d);
  std::vector<IrreducibleComponent> comps;
  for (const auto& c : d.components()) {
    const auto fs = c.factors();
    std::vector<Exponent> depth(fs.size(), 1);
    while (true) {
      std::vector<IrreducibleComponent::Factor> out;
      for (std::size_t k = 0; k < fs.size(); ++k) out.push_back({layout.index(fs[k].var, depth[k]), 1});
      comps.emplace_back(std::move(out));
      std::size_t k = 0;
      while (k < fs.size() && depth[k] == fs[k].weight) depth[k++] = 1;
      if (k == fs.size()) break;
      ++depth[k];
    }
  }
  return {Decomposition(layout.ring(), std::move(comps)), std::move(layout)};
}

/// Both layer-count constructions agree on a minimal decomposition.
inline void check_layout_consistency(const Decomposition& d, const MonomialIdeal& ideal) {
  if (!(generator_layout(ideal) == component_layout(d)))
    throw Error(Errc::oracle_disagreement,
                "polarization layer counts from generators and components differ");
}

/// alpha of the s-th symbolic power of the polarization.
inline std::uint64_t alpha_polarized_symbolic(const Decomposition& d, unsigned s) {
  const auto pol = polarized_decomposition(d);
  return alpha(symbolic_power(pol.decomposition, s));
}

}  // namespace monideal
