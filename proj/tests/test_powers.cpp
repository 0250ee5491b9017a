#include <gtest/gtest.h>

#include "monideal/powers.hpp"
#include "monideal/text.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace monideal;

namespace {

Decomposition dec(std::string_view text, std::optional<std::size_t> n = std::nullopt) {
  return std::get<Decomposition>(parse_ideal(text, n));
}

MonomialIdeal gens(std::string_view text, std::size_t n) {
  return std::get<MonomialIdeal>(parse_ideal(text, n));
}

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

const char* const worked = "(x1, x2^2) & (x2, x3^2)";

}  // namespace

TEST(SymbolicPower, WorkedExampleSecondPower) {
  const auto p = symbolic_power(dec(worked), 2);
  EXPECT_EQ(p, gens("x1*x2^2, x1^2*x2*x3^2, x1^2*x3^4, x2^4", 3));
  EXPECT_EQ(alpha(p), 3u);
  EXPECT_EQ(oracle::as_set(p), oracle::symbolic_power_gens(dec(worked), 2));
}

TEST(SymbolicPower, FirstPowerIsTheIdeal) {
  const auto d = dec(worked);
  EXPECT_EQ(symbolic_power(d, 1), ideal_of(d));
}

TEST(SymbolicPower, MaximalIdealEqualsOrdinaryPower) {
  const auto d = dec("(x1, x2, x3)");
  for (unsigned s = 1; s <= 4; ++s) EXPECT_EQ(symbolic_power(d, s), power(ideal_of(d), s));
}

TEST(SymbolicPower, RejectsEmbeddedPrimes) {
  try {
    symbolic_power(dec("(x1) & (x1^2, x2)"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::embedded_primes);
  }
}

TEST(ComponentPower, FloorCriterion) {
  const IrreducibleComponent q({{0, 1}, {1, 2}});
  EXPECT_TRUE(in_component_power(q, mono({1, 2, 0}), 2));
  EXPECT_FALSE(in_component_power(IrreducibleComponent({{1, 1}, {2, 2}}), mono({0, 1, 0}), 2));
  EXPECT_FALSE(in_component_power(q, mono({0, 0, 0}), 1));
}

TEST(MembershipMatrix, WorkedExampleColumns) {
  const MembershipMatrix m(dec(worked));
  ASSERT_EQ(m.column_count(), 4u);
  const std::vector<std::vector<VarIndex>> idx{{0, 1}, {0, 2}, {1, 1}, {1, 2}};
  const std::vector<std::vector<Exponent>> cols{{1, 1, 0}, {1, 0, 2}, {0, 2, 0}, {0, 2, 2}};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(m.column_index(k), idx[k]);
    EXPECT_EQ(m.column(k), cols[k]);
  }
}

TEST(MembershipMatrix, SmallShapes) {
  const MembershipMatrix one(dec("(x1^2)"));
  ASSERT_EQ(one.column_count(), 1u);
  EXPECT_EQ(one.column(0), (std::vector<Exponent>{2}));
  const MembershipMatrix disjoint(dec("(x1, x2^2) & (x3^3, x4)"));
  for (std::size_t k = 0; k < disjoint.column_count(); ++k) {
    auto col = disjoint.column(k);
    EXPECT_EQ(std::count_if(col.begin(), col.end(), [](Exponent e) { return e > 0; }), 2);
  }
  EXPECT_THROW(MembershipMatrix(dec("(x1, x2) & (x3, x4)"), 3), Error);
}

TEST(MatrixMembership, WorkedExample) {
  const MembershipMatrix m(dec(worked));
  auto r = matrix_membership(m, mono({1, 1, 0}), 1);
  EXPECT_EQ(r.verdict, Membership::yes);
  ASSERT_EQ(r.certificate.size(), 1u);
  EXPECT_EQ(r.certificate[0].first, (std::vector<VarIndex>{0, 1}));
  EXPECT_EQ(matrix_membership(m, mono({1, 2, 0}), 2).verdict, Membership::no);
  r = matrix_membership(m, mono({2, 2, 0}), 2);
  EXPECT_EQ(r.verdict, Membership::yes);
  ASSERT_EQ(r.certificate.size(), 1u);
  EXPECT_EQ(r.certificate[0].second, 2u);
}

TEST(MatrixMembership, BudgetGivesIndeterminate) {
  const MembershipMatrix m(dec("(x1, x2, x3) & (x2, x3, x4) & (x1, x4, x5)"));
  MatrixSearchOptions opts;
  opts.node_budget = 2;
  EXPECT_EQ(matrix_membership(m, mono({3, 3, 3, 3, 3}), 4, opts).verdict, Membership::indeterminate);
}

TEST(Containment, WorkedExample) {
  const auto d = dec(worked);
  EXPECT_FALSE(containment(d, 2, 2));
  EXPECT_EQ(containment_witness(d, 2, 2), mono({1, 2, 0}));
  EXPECT_TRUE(containment(d, 1, 1));
  for (unsigned s = 1; s <= 4; ++s) EXPECT_TRUE(containment(d, s, 1));
}

TEST(PowersProperty, MembershipTriangle) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 250; ++trial) {
    gen::DecompShape shape;
    shape.n = rng.uniform(2, 4);
    shape.r_max = 3;
    shape.w_max = 2;
    const auto d = gen::decomposition(rng, shape);
    const auto ideal = ideal_of(d);
    const MembershipMatrix m(d);
    const auto f = gen::monomial(rng, d.nvars(), 4);
    const auto t = static_cast<unsigned>(rng.uniform(1, 3));
    const bool direct = in_ordinary_power(ideal, f, t);
    const auto mm = matrix_membership(m, f, t);
    ASSERT_NE(mm.verdict, Membership::indeterminate);
    EXPECT_EQ(direct, mm.verdict == Membership::yes) << render(d) << " f=" << render(f) << " t=" << t;
    EXPECT_EQ(direct, oracle::matrix_system(d, oracle::exps(f), t)) << render(d);
    if (mm.verdict == Membership::yes) {
      // The certificate is a genuine solution of the inequality system.
      std::vector<Exponent> used(d.nvars(), 0);
      unsigned total = 0;
      for (const auto& [a, mult] : mm.certificate) {
        auto col = m.column(std::span<const VarIndex>(a));
        for (std::size_t i = 0; i < col.size(); ++i) used[i] += mult * col[i];
        total += mult;
      }
      EXPECT_EQ(total, t);
      for (std::size_t i = 0; i < used.size(); ++i) EXPECT_LE(used[i], f[i]);
    }
  }
}

TEST(PowersProperty, ComponentPowerMatchesExpansion) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<IrreducibleComponent::Factor> fs;
    for (auto v : gen::subset(rng, n, rng.uniform(1, n))) fs.push_back({v, static_cast<Exponent>(rng.uniform(1, 3))});
    const IrreducibleComponent c(fs);
    const auto s = static_cast<unsigned>(rng.uniform(1, 3));
    const auto f = gen::monomial(rng, n, 6);
    const Ring r(n);
    EXPECT_EQ(in_component_power(c, f, s), contains_monomial(power(expand(r, c), s), f));
    EXPECT_EQ(component_power(r, c, s), power(expand(r, c), s));
  }
}

TEST(PowersProperty, SymbolicPowerMatchesBoxScan) {
  gen::Rng rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    gen::DecompShape shape;
    shape.n = rng.uniform(2, 4);
    shape.w_max = 2;
    const auto d = gen::decomposition(rng, shape);
    const auto s = static_cast<unsigned>(rng.uniform(1, 3));
    EXPECT_EQ(oracle::as_set(symbolic_power(d, s)), oracle::symbolic_power_gens(d, s)) << render(d) << " s=" << s;
  }
}

TEST(PowersProperty, ProductsAndOrdinaryPowersLandInside) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = gen::decomposition(rng, {});
    const auto s = static_cast<unsigned>(rng.uniform(1, 2));
    const auto t = static_cast<unsigned>(rng.uniform(1, 2));
    const auto ps = symbolic_power(d, s), pt = symbolic_power(d, t), pst = symbolic_power(d, s + t);
    EXPECT_TRUE(is_subset(product(ps, pt), pst)) << render(d);
    EXPECT_LE(alpha(pst), alpha(ps) + alpha(pt));
    EXPECT_TRUE(is_subset(power(ideal_of(d), s), ps));
  }
}
