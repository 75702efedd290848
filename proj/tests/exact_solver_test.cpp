#include <gtest/gtest.h>

#include "mcs/consistency.hpp"
#include "mcs/errors.hpp"
#include "mcs/exact_solver.hpp"
#include "mcs/random_instances.hpp"
#include "test_support.hpp"

namespace mcs {
namespace {

using testing::make_graph;
using testing::make_path;

ColoredGraph red_star() { return make_graph({1, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}}); }

TEST(BruteForce, McsExamples) {
  EXPECT_EQ(brute_force_mcs(make_path({1, 1, 1, 1})).size(), 1U);
  EXPECT_EQ(brute_force_mcs(make_path({1, 1, 2, 2})).size(), 2U);
  EXPECT_EQ(brute_force_mcs(red_star()).size(), 4U);
}

TEST(BruteForce, MscsExamples) {
  EXPECT_EQ(brute_force_mscs(make_path({3, 3, 3})).size(), 1U);
  EXPECT_EQ(brute_force_mscs(make_path({1, 2, 1})).size(), 3U);
  Certificate c = brute_force_mscs(make_path({1, 1, 2, 2}));
  EXPECT_EQ(c.size(), 2U);
  // {1,4} (1-based) is strict too and precedes {2,3}.
  EXPECT_EQ(c.witness, (VertexSet{0, 3}));
}

TEST(BruteForce, WitnessIsLexicographicallyFirst) {
  // {1,3} and {2,3} (1-based) are both optimal MCS witnesses; {1,3} comes first.
  Certificate c = brute_force_mcs(make_path({1, 1, 2, 2}));
  EXPECT_EQ(c.witness, (VertexSet{0, 2}));
  EXPECT_EQ(c.provenance, Provenance::kBruteForceOptimal);
  EXPECT_EQ(c.variant, Variant::kMcs);
}

TEST(BruteForce, Preconditions) {
  EXPECT_THROW(brute_force_mcs(make_graph({1, 1}, {})), PreconditionError);
  EXPECT_THROW(brute_force_mcs(ColoredGraph({}, 1, {})), PreconditionError);
  std::vector<Color> colors(21, 1);
  EXPECT_THROW(brute_force_mcs(make_path(colors)), PreconditionError);
  EXPECT_NO_THROW(brute_force_mcs(make_path(colors), {.vertex_cap = 21}));
}

TEST(BruteForce, MatchesPlainEnumerationWithAndWithoutPruning) {
  SplitMix64 rng(101);
  for (int k = 0; k < 150; ++k) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(10));
    ColoredGraph g = random_connected_graph(n, 1 + static_cast<Color>(rng.below(3)), 20, rng);
    for (Variant variant : {Variant::kMcs, Variant::kMscs}) {
      const bool strict = variant == Variant::kMscs;
      const std::size_t expected = testing::reference_optimum(g, strict);
      Certificate pruned = brute_force(g, variant);
      Certificate plain = brute_force(g, variant, {.vertex_cap = 20, .prune = false});
      EXPECT_EQ(pruned.size(), expected);
      EXPECT_EQ(plain.size(), expected);
      EXPECT_EQ(pruned.witness, plain.witness);
      EXPECT_TRUE(testing::reference_check(g, pruned.witness, strict));
    }
  }
}

TEST(BruteForce, MscsBoundsAndBlockCoverage) {
  SplitMix64 rng(7);
  for (int k = 0; k < 60; ++k) {
    ColoredGraph g =
        random_connected_graph(1 + static_cast<std::uint32_t>(rng.below(10)), 3, 25, rng);
    Certificate mcs = brute_force_mcs(g);
    Certificate mscs = brute_force_mscs(g);
    EXPECT_GE(mscs.size(), mcs.size());
    const Blocks b = blocks(g);
    for (const VertexSet& block : b.partition) {
      bool hit = false;
      for (Vertex v : mscs.witness) hit |= b.block_of[v] == b.block_of[block.front()];
      EXPECT_TRUE(hit);
    }
  }
}

TEST(BruteForce, Deterministic) {
  SplitMix64 rng(31);
  ColoredGraph g = random_connected_graph(10, 3, 20, rng);
  EXPECT_EQ(brute_force_mcs(g).witness, brute_force_mcs(g).witness);
  EXPECT_EQ(brute_force_mscs(g).witness, brute_force_mscs(g).witness);
}

TEST(Oracle, Examples) {
  ColoredGraph p3 = make_path({1, 1, 1});
  OracleSolution ds = solve_oracle({OracleKind::kDominatingSet, p3});
  EXPECT_EQ(ds.size, 1U);
  EXPECT_EQ(ds.witness, (std::vector<std::uint32_t>{1}));

  ColoredGraph k4 = make_graph({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(solve_oracle({OracleKind::kVertexCover, k4}).size, 3U);

  SetCoverInstance sc{3, {{0}, {0, 1, 2}, {2}}};
  OracleSolution cover = solve_oracle({OracleKind::kSetCover, sc});
  EXPECT_EQ(cover.size, 1U);
  EXPECT_EQ(cover.witness, (std::vector<std::uint32_t>{1}));
}

TEST(Oracle, KindMismatchAndCap) {
  EXPECT_THROW(solve_oracle({OracleKind::kSetCover, make_path({1})}), std::invalid_argument);
  EXPECT_THROW(solve_oracle({OracleKind::kDominatingSet, SetCoverInstance{1, {{0}}}}),
               std::invalid_argument);
  std::vector<Color> colors(8, 1);
  EXPECT_THROW(min_vertex_cover(make_path(colors), 5), PreconditionError);
}

TEST(Oracle, DominationMatchesReference) {
  SplitMix64 rng(41);
  for (int k = 0; k < 40; ++k) {
    ColoredGraph g = random_connected_graph(1 + static_cast<std::uint32_t>(rng.below(9)), 1, 20, rng);
    OracleSolution ds = min_dominating_set(g);
    EXPECT_EQ(ds.size, testing::reference_domination_number(g));
    EXPECT_TRUE(is_dominating_set(g, ds.witness));
  }
}

}  // namespace
}  // namespace mcs
