#include <gtest/gtest.h>

#include "monideal/text.hpp"
#include "monideal/weightgraph.hpp"
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

using Edges = std::vector<std::vector<VarIndex>>;

const char* const worked = "(x1, x2^2) & (x2, x3^2)";
const char* const whisker_example = "(x1, x2, x3) & (x2, x3, x4) & (x1, x5) & (x2, x6, x7) & (x3, x8) & (x4, x9, x10)";

}  // namespace

TEST(ConflictSet, Examples) {
  EXPECT_EQ(conflict_set(dec(worked)), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_TRUE(conflict_set(dec("(x1, x2) & (x2, x3) & (x1, x3)")).empty());
  EXPECT_TRUE(conflict_set(dec("(x1^2, x2) & (x3^3, x4)")).empty());
}

TEST(DetectWeighting, Examples) {
  const auto hit = detect_standard_weighting(dec("(x1^2, x2) & (x2, x3)"));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->squarefree, gens("x2, x1*x3", 3));
  EXPECT_EQ(hit->weighting, StandardWeighting({2, 1, 1}));
  EXPECT_FALSE(detect_standard_weighting(dec(worked)).has_value());
  const auto sq = detect_standard_weighting(dec("(x1, x2) & (x2, x3)"));
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->weighting, StandardWeighting::ones(3));
}

TEST(ApplyWeighting, Examples) {
  EXPECT_EQ(apply_weighting(gens("x2, x1*x3", 3), StandardWeighting({2, 1, 1})), gens("x2, x1^2*x3", 3));
  EXPECT_EQ(apply_weighting(gens("x1*x2, x3", 3), StandardWeighting::ones(3)), gens("x1*x2, x3", 3));
  EXPECT_EQ(apply_weighting(gens("x1", 2), StandardWeighting({5, 2})), gens("x1^5", 2));
  EXPECT_THROW(StandardWeighting({1, 0}), Error);
}

TEST(Hypergraph, FromDecomposition) {
  const auto hw = build_hypergraph(dec(worked));
  EXPECT_EQ(std::vector(hw.edges().begin(), hw.edges().end()),
            (Edges{{0, 1}, {1, 2}}));
  EXPECT_EQ(build_hypergraph(dec(whisker_example)).edge_count(), 6u);
  EXPECT_EQ(build_hypergraph(dec("(x2, x3)")).edge_count(), 1u);
  EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Hypergraph(3, {{}}), Error);
}

TEST(Whisker, WorkedExampleHypergraph) {
  const auto h = build_hypergraph(dec(whisker_example));
  const auto ws = find_whisker_structure(h);
  ASSERT_TRUE(ws.has_value());
  EXPECT_EQ(ws->core, (std::vector<VarIndex>{0, 1, 2, 3}));
  EXPECT_EQ(ws->whisker_edges, (std::vector<std::size_t>{2, 3, 4, 5}));
  EXPECT_EQ(ws->attach_vertices, (std::vector<VarIndex>{0, 1, 2, 3}));
  EXPECT_FALSE(ws->degenerate(h));
  EXPECT_TRUE(is_valid_whisker_structure(h, *ws));
}

TEST(Whisker, SingleEdgeIsDegenerate) {
  const Hypergraph h(2, {{0, 1}});
  const auto ws = find_whisker_structure(h);
  ASSERT_TRUE(ws.has_value());
  EXPECT_EQ(ws->core, (std::vector<VarIndex>{0}));
  EXPECT_TRUE(ws->degenerate(h));
}

TEST(Whisker, TriangleHasNone) {
  EXPECT_FALSE(find_whisker_structure(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
}

TEST(Whisker, WeightConditions) {
  const auto base = dec(whisker_example);
  const auto ws = *find_whisker_structure(build_hypergraph(base));
  EXPECT_TRUE(whisker_weight_conditions(base, ws));
  // Raise whisker weights away from the attach vertex: (i) still holds.
  const auto raised = dec("(x1, x2, x3) & (x2, x3, x4) & (x1, x5^3) & (x2, x6^2, x7^2) & (x3, x8^2) & (x4, x9, x10^3)");
  EXPECT_TRUE(whisker_weight_conditions(raised, ws));
  // A core edge heavier at every attach vertex than the whiskers there violates (ii).
  const auto heavy = dec("(x1^2, x2^2, x3^2) & (x2, x3, x4) & (x1, x5) & (x2, x6, x7) & (x3, x8) & (x4, x9, x10)");
  EXPECT_FALSE(whisker_weight_conditions(heavy, ws));
  // Attach vertex heavier than another whisker vertex violates (i).
  const auto light = dec("(x1, x2, x3) & (x2, x3, x4) & (x1^2, x5) & (x2, x6, x7) & (x3, x8) & (x4, x9, x10)");
  EXPECT_FALSE(whisker_weight_conditions(light, ws));
}

TEST(Bipartite, Examples) {
  const auto path = is_bipartite(Hypergraph(3, {{0, 1}, {1, 2}}));
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ((*path)[0], (*path)[2]);
  EXPECT_NE((*path)[0], (*path)[1]);
  EXPECT_FALSE(is_bipartite(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
  try {
    is_bipartite(Hypergraph(3, {{0, 1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_graph);
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(Hypergraph(3, {{0, 1}, {1, 2}})), 2u);
  EXPECT_EQ(chromatic_number(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})), 3u);
  EXPECT_EQ(chromatic_number(Hypergraph(3, {{0, 1, 2}})), 2u);
  EXPECT_EQ(chromatic_number(Hypergraph(3, {})), 1u);
  EXPECT_THROW(chromatic_number(Hypergraph(2, {{0}})), Error);
  ColoringOptions small;
  small.vertex_cap = 1;
  EXPECT_THROW(chromatic_number(Hypergraph(3, {{0, 1}}), small), Error);
}

TEST(WeightgraphProperty, DetectionMatchesConflictSetAndRoundTrips) {
  gen::Rng rng(51);
  int detected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    gen::DecompShape shape;
    shape.shared_weights = rng.coin();
    const auto d = gen::decomposition(rng, shape);
    const auto det = detect_standard_weighting(d);
    EXPECT_EQ(det.has_value(), conflict_set(d).empty()) << render(d);
    if (det) {
      ++detected;
      EXPECT_TRUE(det->squarefree.is_squarefree());
      EXPECT_EQ(apply_weighting(det->squarefree, det->weighting), ideal_of(d)) << render(d);
    }
  }
  EXPECT_GT(detected, 100);
}

TEST(WeightgraphProperty, WhiskerStructuresAreValid) {
  gen::Rng rng(52);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 7));
    Edges edges;
    const auto r = rng.uniform(1, 5);
    for (std::size_t j = 0; j < r; ++j) {
      auto e = gen::subset(rng, n, rng.uniform(1, std::min<std::size_t>(3, n)));
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    const Hypergraph h(n, edges);
    if (auto ws = find_whisker_structure(h)) {
      ++found;
      EXPECT_TRUE(is_valid_whisker_structure(h, *ws));
    }
  }
  EXPECT_GT(found, 20);
}

TEST(WeightgraphProperty, ChromaticMatchesBruteForceAndBipartite) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 7));
    const bool graph = rng.coin();
    Edges edges;
    const auto r = rng.uniform(0, 7);
    for (std::size_t j = 0; j < r; ++j) {
      auto e = gen::subset(rng, n, graph ? 2 : rng.uniform(2, std::min<std::size_t>(4, n)));
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    const Hypergraph h(n, edges);
    const auto chi = chromatic_number(h);
    EXPECT_EQ(chi, oracle::chromatic_number(n, edges));
    if (graph && !edges.empty()) {
      const auto col = is_bipartite(h);
      EXPECT_EQ(col.has_value(), chi == 2);
      if (col)
        for (const auto& e : edges) { EXPECT_NE((*col)[e[0]], (*col)[e[1]]); }
    }
  }
}
