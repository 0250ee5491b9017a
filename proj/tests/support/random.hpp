#pragma once

// Hand-rolled generators for property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"

namespace gen {

using namespace monideal;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(eng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

inline Monomial monomial(Rng& rng, std::size_t n, Exponent max_e) {
  std::vector<Exponent> e(n);
  for (auto& x : e) x = static_cast<Exponent>(rng.uniform(0, max_e));
  return Monomial(std::move(e));
}

/// Non-zero, proper ideal with up to k generators.
inline MonomialIdeal ideal(Rng& rng, std::size_t n, std::size_t k, Exponent max_e) {
  while (true) {
    std::vector<Monomial> gens;
    const auto count = rng.uniform(1, k);
    for (std::size_t q = 0; q < count; ++q) gens.push_back(monomial(rng, n, max_e));
    auto out = minimalize(Ring(n), gens);
    if (!out.is_unit()) return out;
  }
}

inline std::vector<VarIndex> subset(Rng& rng, std::size_t n, std::size_t h) {
  std::vector<VarIndex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), std::mt19937_64(rng.uniform(0, UINT64_MAX)));
  all.resize(h);
  std::sort(all.begin(), all.end());
  return all;
}

struct DecompShape {
  std::size_t n = 4;
  std::size_t r_max = 3;
  std::size_t h_max = 3;
  Exponent w_max = 3;
  bool shared_weights = false;  // one weight per variable: a standard linear weighting
  bool height2 = false;
};

/// Decomposition with distinct radicals and no embedded primes.
inline Decomposition decomposition(Rng& rng, const DecompShape& s) {
  while (true) {
    std::vector<Exponent> per_var(s.n);
    for (auto& w : per_var) w = static_cast<Exponent>(rng.uniform(1, s.w_max));
    const auto r = rng.uniform(1, s.r_max);
    std::vector<IrreducibleComponent> comps;
    for (std::size_t j = 0; j < r; ++j) {
      const auto h = s.height2 ? 2 : rng.uniform(1, std::min(s.h_max, s.n));
      std::vector<IrreducibleComponent::Factor> fs;
      for (auto v : subset(rng, s.n, h))
        fs.push_back({v, s.shared_weights ? per_var[v] : static_cast<Exponent>(rng.uniform(1, s.w_max))});
      comps.emplace_back(fs);
    }
    Decomposition d(Ring(s.n), comps);
    if (d.minimal() && !has_embedded_primes(d)) return d;
  }
}

}  // namespace gen
