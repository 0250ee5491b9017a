#pragma once

// Asymptotic invariants (alpha sequence, Waldschmidt LP bound, resurgence
// grid), Simis classification with constructive witnesses, and the two
// conjecture checkers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"
#include "monideal/lp.hpp"
#include "monideal/polar.hpp"
#include "monideal/powers.hpp"
#include "monideal/rational.hpp"
#include "monideal/weightgraph.hpp"

namespace monideal {

/// alpha(I^(s)) / s for s = 1..max_s.
inline std::vector<Rational> alpha_sequence(const Decomposition& d, unsigned max_s) {
  std::vector<Rational> out;
  for (unsigned s = 1; s <= max_s; ++s)
    out.emplace_back(Rational(static_cast<long long>(alpha(symbolic_power(d, s))), static_cast<long long>(s)));
  return out;
}

/// (alpha(I) + h - 1) / h with h the big-height.
inline Rational chudnovsky_bound(const Decomposition& d) {
  const auto a = static_cast<long long>(alpha(ideal_of(d)));
  const auto h = static_cast<long long>(big_height(d));
  return Rational(a + h - 1, h);
}

enum class C1Status { verified, refuted, inconclusive };

inline std::string_view to_string(C1Status s) {
  switch (s) {
    case C1Status::verified: return "Verified";
    case C1Status::refuted: return "Refuted";
    case C1Status::inconclusive: return "Inconclusive";
  }
  return "?";
}

struct C1Report {
  std::uint64_t alpha = 0;
  std::size_t big_height = 0;
  Rational bound;
  Rational lp_value;
  std::vector<Rational> sequence;
  C1Status status = C1Status::inconclusive;
  std::optional<unsigned> refuted_at;
};

/// The LP optimum bounds hat-alpha from below and every alpha(I^(s))/s bounds
/// it from above, so either side can settle the comparison with the bound.
inline C1Report check_c1(const Decomposition& d, unsigned max_s) {
  require_standard(d);
  C1Report rep;
  rep.alpha = alpha(ideal_of(d));
  rep.big_height = big_height(d);
  rep.bound = chudnovsky_bound(d);
  rep.lp_value = waldschmidt_lp(d);
  rep.sequence = alpha_sequence(d, max_s);
  if (rep.lp_value >= rep.bound) {
    rep.status = C1Status::verified;
    return rep;
  }
  for (unsigned s = 1; s <= rep.sequence.size(); ++s)
    if (rep.sequence[s - 1] < rep.bound) {
      rep.status = C1Status::refuted;
      rep.refuted_at = s;
      return rep;
    }
  rep.status = C1Status::inconclusive;
  return rep;
}

/// s times the sum of the whisker weights at their attach vertices.
inline std::uint64_t whisker_ell(const Decomposition& d, const WhiskerStructure& ws, unsigned s) {
  if (!is_valid_whisker_structure(build_hypergraph(d), ws))
    throw Error(Errc::invalid_argument, "whisker structure does not match the decomposition");
  if (!whisker_weight_conditions(d, ws))
    throw Error(Errc::hypothesis_not_met, "whisker weight conditions are violated");
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < ws.whisker_edges.size(); ++k)
    total += d[ws.whisker_edges[k]].weight_of(ws.attach_vertices[k]).value();
  return total * s;
}

struct WhiskerBounds {
  std::uint64_t ell = 0;
  std::uint64_t alpha_symbolic = 0;
  std::uint64_t alpha_polarized = 0;
  bool holds() const { return alpha_symbolic >= ell && ell >= alpha_polarized; }
};

/// ell together with alpha(I^(s)) and alpha(polarized^(s)) for the sandwich
/// alpha(I^(s)) >= ell >= alpha(polarized^(s)).
inline WhiskerBounds whisker_bounds(const Decomposition& d, const WhiskerStructure& ws, unsigned s) {
  WhiskerBounds b;
  b.ell = whisker_ell(d, ws, s);
  b.alpha_symbolic = alpha(symbolic_power(d, s));
  b.alpha_polarized = alpha_polarized_symbolic(d, s);
  return b;
}

struct FailingPair {
  unsigned s;
  unsigned t;
  Monomial witness;  // generator of I^(s) outside I^t
};

struct ResurgenceResult {
  std::optional<Rational> lower_bound;  // max s/t over failing pairs
  std::vector<FailingPair> failing;     // row-major over (s, t)
};

inline ResurgenceResult resurgence_search(const Decomposition& d, unsigned max_s, unsigned max_t) {
  require_standard(d);
  const MonomialIdeal base = ideal_of(d);
  ResurgenceResult out;
  for (unsigned s = 1; s <= max_s; ++s) {
    const MonomialIdeal sym = symbolic_power(d, s);
    for (unsigned t = 1; t <= max_t; ++t) {
      for (const auto& g : sym.gens()) {
        if (in_ordinary_power(base, g, t)) continue;
        out.failing.push_back({s, t, g});
        Rational q(static_cast<long long>(s), static_cast<long long>(t));
        if (!out.lower_bound || q > *out.lower_bound) out.lower_bound = q;
        break;
      }
    }
  }
  return out;
}

struct ContainmentCell {
  unsigned s;
  unsigned t;
  bool holds;
};

/// Cells (s, t) = (t(n-1) - n + 2, t) of the improved containment
/// I^(t(n-1)-n+2) in I^t that fall inside a searched grid. Informational only:
/// the containment is known only for some classes of ideals.
inline std::vector<ContainmentCell> improved_containment_cells(const Decomposition& d, const ResurgenceResult& res,
                                                               unsigned max_s, unsigned max_t) {
  const long long n = static_cast<long long>(d.nvars());
  std::vector<ContainmentCell> out;
  for (unsigned t = 1; t <= max_t; ++t) {
    const long long s = static_cast<long long>(t) * (n - 1) - n + 2;
    if (s < 1 || s > static_cast<long long>(max_s)) continue;
    const bool fails = std::any_of(res.failing.begin(), res.failing.end(), [&](const FailingPair& p) {
      return p.s == static_cast<unsigned>(s) && p.t == t;
    });
    out.push_back({static_cast<unsigned>(s), t, !fails});
  }
  return out;
}

/// h - 1/chi(H_I); only meaningful for ideals with a standard linear weighting.
inline Rational rho_a_upper_bound(const Decomposition& d, ColoringOptions opts = {}) {
  require_standard(d);
  if (!detect_standard_weighting(d))
    throw Error(Errc::not_slw, "ideal has no standard linear weighting");
  const auto chi = chromatic_number(build_hypergraph(d), opts);
  return Rational(static_cast<long long>(big_height(d))) - Rational(1, static_cast<long long>(chi));
}

// ---------------------------------------------------------------------------
// Simis ideals

/// Throws ConstructionMismatch unless f lies in I^(s) and outside I^s by both
/// the generator and the matrix membership procedures.
inline void verify_non_simis_witness(const Decomposition& d, unsigned s, const Monomial& f) {
  if (!in_symbolic_power(d, f, s))
    throw Error(Errc::construction_mismatch, "witness is not in the symbolic power");
  if (in_ordinary_power(ideal_of(d), f, s))
    throw Error(Errc::construction_mismatch, "witness lies in the ordinary power");
  const MembershipMatrix matrix(d);
  if (matrix_membership(matrix, f, s).verdict != Membership::no)
    throw Error(Errc::construction_mismatch, "matrix membership does not exclude the witness");
}

struct BoundedSimisCheck {
  unsigned bound = 0;
  std::optional<unsigned> failing_power;
  std::optional<Monomial> witness;
  bool passed() const { return !failing_power.has_value(); }
};

/// Compares I^(s) with I^s for s = 2..max_s; stops at the first difference.
inline BoundedSimisCheck bounded_simis_check(const Decomposition& d, unsigned max_s) {
  require_standard(d);
  const MonomialIdeal base = ideal_of(d);
  BoundedSimisCheck out;
  out.bound = max_s;
  for (unsigned s = 2; s <= max_s; ++s) {
    const MonomialIdeal sym = symbolic_power(d, s);
    for (const auto& g : sym.gens())
      if (!in_ordinary_power(base, g, s)) {
        verify_non_simis_witness(d, s, g);
        out.failing_power = s;
        out.witness = g;
        return out;
      }
  }
  return out;
}

struct SimisVerdict {
  enum class Kind { simis, not_simis, simis_up_to, reduced_to_squarefree };
  Kind kind = Kind::simis_up_to;
  std::string tag;                         // which result or construction decided it
  unsigned power = 0;                      // not_simis: s; simis_up_to: checked bound
  std::optional<Monomial> witness;         // not_simis
  std::optional<WeightingDetection> reduction;
  std::optional<BoundedSimisCheck> radical_check;
};

inline std::string_view to_string(SimisVerdict::Kind k) {
  switch (k) {
    case SimisVerdict::Kind::simis: return "Simis";
    case SimisVerdict::Kind::not_simis: return "NotSimis";
    case SimisVerdict::Kind::simis_up_to: return "SimisUpTo";
    case SimisVerdict::Kind::reduced_to_squarefree: return "ReducedToSquarefree";
  }
  return "?";
}

inline SimisVerdict simis_check(const Decomposition& d, unsigned max_s) {
  auto check = bounded_simis_check(d, max_s);
  SimisVerdict v;
  v.tag = "bounded check";
  if (check.failing_power) {
    v.kind = SimisVerdict::Kind::not_simis;
    v.power = *check.failing_power;
    v.witness = check.witness;
  } else {
    v.kind = SimisVerdict::Kind::simis_up_to;
    v.power = max_s;
  }
  return v;
}

/// For every weight-conflicting pair (k, l), no other A_j lies inside A_k u A_l.
inline bool general_hypothesis(const Decomposition& d) {
  for (auto [k, l] : conflict_set(d)) {
    auto ak = d[k].vars(), al = d[l].vars();
    std::vector<VarIndex> uni;
    std::set_union(ak.begin(), ak.end(), al.begin(), al.end(), std::back_inserter(uni));
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == k || j == l) continue;
      auto aj = d[j].vars();
      if (std::includes(uni.begin(), uni.end(), aj.begin(), aj.end())) return false;
    }
  }
  return true;
}

enum class WitnessConstruction { automatic, general, general_height2, height2 };

struct NonSimisWitness {
  unsigned power = 0;
  Monomial witness;
  std::string construction;
};

namespace detail {

inline std::optional<VarIndex> first_outside(const IrreducibleComponent& c, const std::vector<VarIndex>& avoid) {
  for (auto v : c.vars())
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) return v;
  return std::nullopt;
}

inline std::vector<VarIndex> merged_vars(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  auto va = a.vars(), vb = b.vars();
  std::vector<VarIndex> out;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

inline Exponent w(const Decomposition& d, std::size_t j, VarIndex i) { return d[j].weight_of(i).value(); }

/// Pivot data shared by the general constructions: a conflict variable i0,
/// a component `first` of least weight at i0 and a component `top` of the
/// greatest weight there.
struct Pivot {
  VarIndex i0;
  Exponent w_low, w_high;
  std::size_t first, top;
};

inline Pivot choose_pivot(const Decomposition& d) {
  const auto conflicts = conflict_set(d);
  if (conflicts.empty()) throw Error(Errc::hypothesis_not_met, "no weight conflict between components");
  const auto [k, l] = conflicts.front();
  std::optional<VarIndex> i0;
  for (const auto& f : d[k].factors()) {
    auto wl = d[l].weight_of(f.var);
    if (wl && *wl != f.weight) {
      i0 = f.var;
      break;
    }
  }
  Pivot p{*i0, 0, 0, 0, 0};
  bool seen = false;
  for (std::size_t j = 0; j < d.size(); ++j) {
    auto wj = d[j].weight_of(p.i0);
    if (!wj) continue;
    if (!seen || *wj < p.w_low) p.w_low = *wj, p.first = j;
    if (!seen || *wj > p.w_high) p.w_high = *wj, p.top = j;
    seen = true;
  }
  return p;
}

/// Witness in I^(q+1) \ I^(q+1) with w_high = q * w_low + rest.
inline NonSimisWitness general_witness(const Decomposition& d) {
  const Pivot pv = choose_pivot(d);
  const Exponent q = pv.w_high / pv.w_low;
  const auto a1_as = merged_vars(d[pv.first], d[pv.top]);
  const auto a1 = d[pv.first].vars();
  const std::size_t n = d.nvars();

  Monomial f = Monomial::one(n);
  for (std::size_t j = 0; j < d.size(); ++j) {
    auto wj = d[j].weight_of(pv.i0);
    std::vector<Exponent> e(n, 0);
    if (wj && *wj == pv.w_low) {
      e[pv.i0] = checked_mul(q + 1, pv.w_low);
    } else if (wj) {
      auto ij = j == pv.top ? first_outside(d[j], a1) : first_outside(d[j], a1_as);
      if (!ij) throw Error(Errc::hypothesis_not_met, "a component lies inside A_1 u A_s");
      e[pv.i0] = *wj;
      e[*ij] = checked_mul(q, w(d, j, *ij));
    } else {
      auto ij = first_outside(d[j], a1_as);
      if (!ij) throw Error(Errc::hypothesis_not_met, "a component lies inside A_1 u A_s");
      e[*ij] = checked_mul(q + 1, w(d, j, *ij));
    }
    f = lcm(f, Monomial(std::move(e)));
  }
  return {q + 1, f, "general"};
}

inline NonSimisWitness general_height2_witness(const Decomposition& d) {
  const Pivot pv = choose_pivot(d);
  if (2 * pv.w_low > pv.w_high) {
    auto out = general_witness(d);
    out.construction = "general-height-2 case 2";
    return out;
  }
  const auto a1_as = merged_vars(d[pv.first], d[pv.top]);
  const auto is = first_outside(d[pv.top], d[pv.first].vars());
  if (!is) throw Error(Errc::hypothesis_not_met, "A_s lies inside A_1");
  std::vector<Exponent> e(d.nvars(), 0);
  e[pv.i0] = pv.w_high;
  e[*is] = w(d, pv.top, *is);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == pv.first || j == pv.top) continue;
    auto ij = first_outside(d[j], a1_as);
    if (!ij) throw Error(Errc::hypothesis_not_met, "a component lies inside A_1 u A_s");
    e[*ij] = std::max(e[*ij], checked_mul(2, w(d, j, *ij)));
  }
  return {2, Monomial(std::move(e)), "general-height-2 case 1"};
}

inline VarIndex other_vertex(const IrreducibleComponent& c, VarIndex v) {
  auto vs = c.vars();
  return vs[0] == v ? vs[1] : vs[0];
}

/// All-height-2 construction for a conflict (k, l) with a third edge A_p
/// inside A_k u A_l.
inline NonSimisWitness height2_witness(const Decomposition& d) {
  if (general_hypothesis(d)) {
    auto out = general_height2_witness(d);
    return out;
  }
  struct Triple {
    std::size_t k, l, p;
    VarIndex i0;
  };
  std::vector<Triple> triples;
  for (auto [a, b] : conflict_set(d)) {
    auto va = d[a].vars(), vb = d[b].vars();
    std::vector<VarIndex> shared;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    const VarIndex i0 = shared.front();
    auto [k, l] = w(d, a, i0) < w(d, b, i0) ? std::pair{a, b} : std::pair{b, a};
    auto uni = merged_vars(d[a], d[b]);
    for (std::size_t p = 0; p < d.size(); ++p) {
      if (p == a || p == b) continue;
      auto vp = d[p].vars();
      if (std::includes(uni.begin(), uni.end(), vp.begin(), vp.end())) triples.push_back({k, l, p, i0});
    }
  }
  if (triples.empty()) throw Error(Errc::hypothesis_not_met, "no conflict pair with a third edge inside it");

  auto top_weight = [&](VarIndex i0) {
    Exponent top = 0;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (auto wj = d[j].weight_of(i0)) top = std::max(top, *wj);
    return top;
  };

  // Prefer a triple whose heavier edge carries the top weight at i0.
  const Triple* pick = nullptr;
  for (const auto& tr : triples)
    if (w(d, tr.l, tr.i0) == top_weight(tr.i0)) {
      pick = &tr;
      break;
    }
  const bool case1 = pick != nullptr;
  if (!case1) pick = &triples.front();

  const auto [k, l, p, i0] = *pick;
  const Exponent wk = w(d, k, i0), w2 = top_weight(i0);
  const VarIndex ik = other_vertex(d[k], i0), il = other_vertex(d[l], i0);
  std::optional<std::size_t> s;
  for (std::size_t j = 0; j < d.size() && !s; ++j)
    if (auto wj = d[j].weight_of(i0); wj && *wj == w2) s = j;
  const VarIndex is = other_vertex(d[*s], i0);

  std::vector<VarIndex> avoid{i0, ik, il};
  if (!case1) avoid.push_back(is);

  Monomial f = Monomial::one(d.nvars());
  for (std::size_t j = 0; j < d.size(); ++j) {
    std::vector<Exponent> e(d.nvars(), 0);
    if (auto wj = d[j].weight_of(i0)) {
      if (*wj <= wk) {
        e[i0] = checked_mul(2, *wj);
      } else {
        const VarIndex ij = other_vertex(d[j], i0);
        e[i0] = *wj;
        e[ij] = w(d, j, ij);
      }
    } else if (j == p) {
      if (case1) {
        e[ik] = w(d, p, ik);
        e[il] = w(d, p, il);
      } else {
        e[il] = checked_mul(2, w(d, p, il));
      }
    } else {
      auto ij = first_outside(d[j], avoid);
      if (!ij) throw Error(Errc::construction_mismatch, "no free vertex for a remaining edge");
      e[*ij] = checked_mul(2, w(d, j, *ij));
    }
    f = lcm(f, Monomial(std::move(e)));
  }
  return {2, f, case1 ? "height-2 case 1" : "height-2 case 2"};
}

}  // namespace detail

/// Builds a monomial in I^(s) outside I^s following the applicable
/// construction, then verifies it with both membership procedures.
inline NonSimisWitness non_simis_witness(const Decomposition& d,
                                         WitnessConstruction how = WitnessConstruction::automatic) {
  require_standard(d);
  if (conflict_set(d).empty()) throw Error(Errc::hypothesis_not_met, "no weight conflict between components");
  const bool height2 = all_heights_equal(d, 2);
  const bool general = general_hypothesis(d);

  if (how == WitnessConstruction::automatic)
    how = height2 ? WitnessConstruction::height2 : WitnessConstruction::general;

  NonSimisWitness out;
  switch (how) {
    case WitnessConstruction::general:
      if (!general) throw Error(Errc::hypothesis_not_met, "a component lies inside the union of a conflicting pair");
      out = detail::general_witness(d);
      break;
    case WitnessConstruction::general_height2:
      if (!general || !height2)
        throw Error(Errc::hypothesis_not_met, "needs all heights 2 and no component inside a conflicting pair");
      out = detail::general_height2_witness(d);
      break;
    case WitnessConstruction::height2:
      if (!height2) throw Error(Errc::hypothesis_not_met, "needs every associated prime of height 2");
      out = detail::height2_witness(d);
      break;
    case WitnessConstruction::automatic:
      break;
  }
  verify_non_simis_witness(d, out.power, out.witness);
  return out;
}

/// The squarefree decomposition of the radical (all weights set to 1).
inline Decomposition radical_decomposition(const Decomposition& d) {
  std::vector<IrreducibleComponent> comps;
  for (const auto& c : d.components()) comps.push_back(IrreducibleComponent::prime(c.vars()));
  return Decomposition(d.ring(), std::move(comps));
}

inline SimisVerdict classify_simis(const Decomposition& d, unsigned max_s = 3) {
  require_standard(d);
  const auto conflicts = conflict_set(d);
  SimisVerdict v;

  auto from_witness = [&](const NonSimisWitness& w) {
    v.kind = SimisVerdict::Kind::not_simis;
    v.tag = w.construction;
    v.power = w.power;
    v.witness = w.witness;
    return v;
  };

  if (all_heights_equal(d, 2)) {
    if (!conflicts.empty()) return from_witness(non_simis_witness(d));
    if (is_bipartite(build_hypergraph(d))) {
      v.kind = SimisVerdict::Kind::simis;
      v.tag = "height 2, standard weighting, bipartite graph";
      return v;
    }
    auto check = bounded_simis_check(d, 2);
    if (!check.failing_power)
      throw Error(Errc::construction_mismatch, "odd cycle but I^(2) = I^2");
    v.kind = SimisVerdict::Kind::not_simis;
    v.tag = "height 2, odd cycle";
    v.power = 2;
    v.witness = check.witness;
    return v;
  }

  if (!conflicts.empty() && general_hypothesis(d)) return from_witness(non_simis_witness(d));

  if (conflicts.empty()) {
    v.kind = SimisVerdict::Kind::reduced_to_squarefree;
    v.tag = "standard weighting of the radical";
    v.reduction = detect_standard_weighting(d);
    v.radical_check = bounded_simis_check(radical_decomposition(d), max_s);
    v.power = max_s;
    return v;
  }

  return simis_check(d, max_s);
}

enum class C2Status { confirmed, confirmed_up_to, vacuous, refuted, inconclusive };

inline std::string_view to_string(C2Status s) {
  switch (s) {
    case C2Status::confirmed: return "Confirmed";
    case C2Status::confirmed_up_to: return "ConfirmedUpTo";
    case C2Status::vacuous: return "Vacuous";
    case C2Status::refuted: return "Refuted";
    case C2Status::inconclusive: return "Inconclusive";
  }
  return "?";
}

struct C2Report {
  SimisVerdict verdict;
  bool has_standard_weighting = false;
  std::optional<BoundedSimisCheck> radical_check;
  C2Status status = C2Status::inconclusive;
};

/// A Simis ideal should be J_w for a Simis squarefree J. Ideals shown not to
/// be Simis satisfy the statement vacuously.
inline C2Report check_c2(const Decomposition& d, unsigned max_s = 3) {
  C2Report rep;
  rep.verdict = classify_simis(d, max_s);
  rep.has_standard_weighting = conflict_set(d).empty();
  using Kind = SimisVerdict::Kind;

  switch (rep.verdict.kind) {
    case Kind::not_simis:
      rep.status = C2Status::vacuous;
      break;
    case Kind::simis:
      if (!rep.has_standard_weighting) {
        rep.status = C2Status::refuted;
        break;
      }
      rep.radical_check = bounded_simis_check(radical_decomposition(d), max_s);
      rep.status = rep.radical_check->passed() ? C2Status::confirmed : C2Status::refuted;
      break;
    case Kind::reduced_to_squarefree: {
      rep.radical_check = rep.verdict.radical_check;
      const auto own = bounded_simis_check(d, max_s);
      if (own.failing_power)
        rep.status = C2Status::vacuous;
      else
        rep.status = rep.radical_check->passed() ? C2Status::confirmed_up_to : C2Status::inconclusive;
      break;
    }
    case Kind::simis_up_to:
      // Bounded evidence only; a conflict here is a candidate, not a proof.
      rep.status = C2Status::inconclusive;
      break;
  }
  return rep;
}

}  // namespace monideal
