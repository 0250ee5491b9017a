#pragma once

// Seeded random decompositions for corpus runs. The same config always yields
// the same list.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/asym.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"
#include "monideal/weightgraph.hpp"

namespace monideal {

enum class InstanceFilter {
  none,
  slw_only,            // X_I empty
  conflict_only,       // X_I non-empty
  whiskered,           // H_I has a whisker structure
  whisker_conditions,  // ... and the found structure meets the weight conditions
  general_hypothesis,  // X_I non-empty and A_j not inside A_k u A_l for (k,l) in X_I
};

enum class HeightProfile { all2, mixed };

inline std::string_view to_string(InstanceFilter f) {
  switch (f) {
    case InstanceFilter::none: return "none";
    case InstanceFilter::slw_only: return "slw-only";
    case InstanceFilter::conflict_only: return "conflict-only";
    case InstanceFilter::whiskered: return "whiskered";
    case InstanceFilter::whisker_conditions: return "whisker-conditions";
    case InstanceFilter::general_hypothesis: return "th-general-hypothesis";
  }
  return "?";
}

inline InstanceFilter parse_filter(std::string_view name) {
  for (auto f : {InstanceFilter::none, InstanceFilter::slw_only, InstanceFilter::conflict_only,
                 InstanceFilter::whiskered, InstanceFilter::whisker_conditions,
                 InstanceFilter::general_hypothesis})
    if (to_string(f) == name) return f;
  throw Error(Errc::invalid_argument, "unknown filter '" + std::string(name) + "'");
}

inline std::string_view to_string(HeightProfile p) { return p == HeightProfile::all2 ? "all-2" : "mixed"; }

inline HeightProfile parse_height_profile(std::string_view name) {
  if (name == "all-2") return HeightProfile::all2;
  if (name == "mixed") return HeightProfile::mixed;
  throw Error(Errc::invalid_argument, "unknown height profile '" + std::string(name) + "'");
}

struct GeneratorConfig {
  std::size_t n_min = 3, n_max = 6;
  std::size_t r_min = 2, r_max = 4;
  HeightProfile heights = HeightProfile::mixed;
  std::size_t h_max = 3;  // mixed profile only
  Exponent w_min = 1, w_max = 3;
  InstanceFilter filter = InstanceFilter::none;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t attempts_per_instance = 20000;
};

struct GeneratedInstance {
  std::string label;
  Decomposition decomposition;
};

inline bool passes_filter(const Decomposition& d, InstanceFilter f) {
  if (!d.minimal() || has_embedded_primes(d)) return false;
  switch (f) {
    case InstanceFilter::none: return true;
    case InstanceFilter::slw_only: return conflict_set(d).empty();
    case InstanceFilter::conflict_only: return !conflict_set(d).empty();
    case InstanceFilter::whiskered: return find_whisker_structure(build_hypergraph(d)).has_value();
    case InstanceFilter::whisker_conditions: {
      auto ws = find_whisker_structure(build_hypergraph(d));
      return ws && whisker_weight_conditions(d, *ws);
    }
    case InstanceFilter::general_hypothesis: return !conflict_set(d).empty() && general_hypothesis(d);
  }
  return false;
}

namespace detail {

class Sampler {
 public:
  explicit Sampler(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  std::uint64_t draw(std::uint64_t lo, std::uint64_t hi) { return lo + rng_() % (hi - lo + 1); }

  std::vector<VarIndex> subset(std::size_t n, std::size_t k) {
    std::vector<VarIndex> all(n);
    std::iota(all.begin(), all.end(), VarIndex{0});
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[draw(i, n - 1)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  }

  std::optional<Decomposition> build(std::size_t n, const std::vector<std::vector<VarIndex>>& edges) {
    const bool shared = cfg_.filter == InstanceFilter::slw_only;
    std::vector<Exponent> per_var(n);
    for (auto& w : per_var) w = static_cast<Exponent>(draw(cfg_.w_min, cfg_.w_max));
    std::vector<IrreducibleComponent> comps;
    for (const auto& a : edges) {
      std::vector<IrreducibleComponent::Factor> fs;
      for (auto v : a) fs.push_back({v, shared ? per_var[v] : static_cast<Exponent>(draw(cfg_.w_min, cfg_.w_max))});
      comps.emplace_back(std::move(fs));
    }
    Decomposition d(Ring(n), std::move(comps));
    if (!d.minimal() || has_embedded_primes(d)) return std::nullopt;
    return d;
  }

  std::optional<Decomposition> plain() {
    const auto n = draw(cfg_.n_min, cfg_.n_max);
    const auto r = draw(cfg_.r_min, cfg_.r_max);
    std::vector<std::vector<VarIndex>> edges;
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t h =
          cfg_.heights == HeightProfile::all2 ? 2 : draw(1, std::min<std::size_t>(cfg_.h_max, n));
      if (h > n) return std::nullopt;
      edges.push_back(subset(n, h));
    }
    return build(n, edges);
  }

  // Whisker edges {i_k} u fresh, core edges inside V_1, then a random relabeling.
  std::optional<Decomposition> whiskered() {
    const std::size_t t_cap = std::min<std::size_t>({3, cfg_.n_max / 2, cfg_.r_max});
    if (t_cap == 0) return std::nullopt;
    const auto t = draw(1, t_cap);
    std::size_t next = t;
    std::vector<std::vector<VarIndex>> edges;
    for (std::size_t k = 0; k < t; ++k) {
      std::vector<VarIndex> e{k};
      const auto extra = cfg_.heights == HeightProfile::all2 ? 1 : draw(1, 2);
      for (std::size_t q = 0; q < extra; ++q) e.push_back(next++);
      edges.push_back(std::move(e));
    }
    if (next > cfg_.n_max) return std::nullopt;
    if (t >= 2) {
      const std::size_t lo = cfg_.r_min > t ? cfg_.r_min - t : 0;
      const std::size_t hi = cfg_.r_max - t;
      if (lo > hi) return std::nullopt;
      const auto core_edges = draw(lo, hi);
      for (std::size_t c = 0; c < core_edges; ++c) {
        auto e = subset(t, cfg_.heights == HeightProfile::all2 ? 2 : draw(2, t));
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) return std::nullopt;
        edges.push_back(std::move(e));
      }
    } else if (cfg_.r_min > 1) {
      return std::nullopt;
    }
    const std::size_t n = std::max<std::size_t>(next, draw(cfg_.n_min, cfg_.n_max));
    std::vector<VarIndex> relabel = subset(n, n);
    for (std::size_t i = 0; i < n; ++i) std::swap(relabel[i], relabel[draw(i, n - 1)]);
    for (auto& e : edges) {
      for (auto& v : e) v = relabel[v];
      std::sort(e.begin(), e.end());
    }
    return build(n, edges);
  }

 private:
  const GeneratorConfig& cfg_;
  std::mt19937_64 rng_;
};

}  // namespace detail

inline void validate(const GeneratorConfig& cfg) {
  auto bad = [](const char* what) { throw Error(Errc::invalid_argument, what); };
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) bad("need 1 <= n_min <= n_max");
  if (cfg.r_min < 1 || cfg.r_min > cfg.r_max) bad("need 1 <= r_min <= r_max");
  if (cfg.w_min < 1 || cfg.w_min > cfg.w_max) bad("need 1 <= w_min <= w_max");
  if (cfg.heights == HeightProfile::all2 && cfg.n_max < 2) bad("height-2 instances need n_max >= 2");
  if (cfg.h_max < 1) bad("need h_max >= 1");
}

inline std::vector<GeneratedInstance> generate_instances(const GeneratorConfig& cfg) {
  validate(cfg);
  detail::Sampler sampler(cfg);
  const bool whisker =
      cfg.filter == InstanceFilter::whiskered || cfg.filter == InstanceFilter::whisker_conditions;
  std::vector<GeneratedInstance> out;
  for (std::size_t k = 0; k < cfg.count; ++k) {
    std::optional<Decomposition> found;
    for (std::size_t attempt = 0; attempt < cfg.attempts_per_instance && !found; ++attempt) {
      auto d = whisker ? sampler.whiskered() : sampler.plain();
      if (d && passes_filter(*d, cfg.filter)) found = std::move(d);
    }
    if (!found)
      throw Error(Errc::rejection_cap, "no instance passed filter '" + std::string(to_string(cfg.filter)) +
                                           "' within " + std::to_string(cfg.attempts_per_instance) +
                                           " attempts");
    out.push_back({"s" + std::to_string(cfg.seed) + "-" + std::to_string(k + 1), std::move(*found)});
  }
  return out;
}

}  // namespace monideal
