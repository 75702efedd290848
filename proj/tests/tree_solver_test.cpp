#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "mcs/consistency.hpp"
#include "mcs/errors.hpp"
#include "mcs/exact_solver.hpp"
#include "mcs/random_instances.hpp"
#include "mcs/rooted_tree.hpp"
#include "mcs/tree_solver.hpp"
#include "test_support.hpp"

namespace mcs {
namespace {

using testing::make_graph;
using testing::make_path;

constexpr Color kRedC = 1;
constexpr Color kBlueC = 2;

DpKey leaf_key(ExtDist in, ColorSet cin, ExtDist out, ColorSet cout) {
  DpKey k;
  k.v = 0;
  k.i = 0;
  k.in_dist = in;
  k.in_colors = cin;
  k.out_dist = out;
  k.out_colors = cout;
  return k;
}

TEST(ColorSetTest, Basics) {
  ColorSet a = ColorSet::single(1) | ColorSet::single(3);
  EXPECT_TRUE(a.contains(1));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(a.count(), 2);
  EXPECT_TRUE(ColorSet::single(3).subset_of(a));
  EXPECT_FALSE(ColorSet::single(2).subset_of(a));
  EXPECT_EQ(ColorSet::all(3).bits(), 0b111U);
  EXPECT_EQ(ColorSet::all(64).count(), 64);
  EXPECT_TRUE(ColorSet::single(64).contains(64));
}

TEST(ExtDistTest, InfinityAbsorbs) {
  EXPECT_LT(ExtDist(1000), ExtDist::infinity());
  EXPECT_EQ(ExtDist::infinity().plus_one(), ExtDist::infinity());
  EXPECT_EQ(ExtDist::infinity().minus_one(), ExtDist::infinity());
  EXPECT_EQ(ExtDist(3).plus_one(), ExtDist(4));
}

TEST(RootTree, Examples) {
  RootedTree path = root_tree(make_path({1, 1, 1, 1}), 0);
  EXPECT_EQ(std::vector<Vertex>(path.children(0).begin(), path.children(0).end()),
            (std::vector<Vertex>{1}));
  EXPECT_EQ(path.child(2, 1), 3U);
  EXPECT_EQ(path.height(0), 3U);

  RootedTree star = root_tree(make_graph({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}), 0);
  EXPECT_EQ(star.num_children(0), 3U);
  EXPECT_EQ(star.height(2), 0U);
  EXPECT_EQ(star.child_index(3), 3U);

  RootedTree mid = root_tree(make_path({1, 1, 1}), 1);
  EXPECT_EQ(std::vector<Vertex>(mid.children(1).begin(), mid.children(1).end()),
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(mid.parent(0), 1U);
  EXPECT_EQ(mid.parent(1), kNoVertex);

  EXPECT_THROW(root_tree(testing::make_cycle({1, 1, 1}), 0), PreconditionError);
  EXPECT_THROW(root_tree(make_graph({1, 1, 1}, {{0, 1}}), 0), PreconditionError);
}

TEST(RootTree, PrefixMembership) {
  // 0 has children 1, 2, 3; 2 has child 4.
  RootedTree t = root_tree(make_graph({1, 1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {2, 4}}), 0);
  EXPECT_TRUE(t.in_prefix(0, 0, 0));
  EXPECT_FALSE(t.in_prefix(0, 0, 1));
  EXPECT_TRUE(t.in_prefix(0, 2, 4));
  EXPECT_FALSE(t.in_prefix(0, 2, 3));
  EXPECT_TRUE(t.in_suffix(0, 2, 3));
  EXPECT_EQ(t.prefix_height(0, 1), 1U);
  EXPECT_EQ(t.prefix_height(0, 2), 2U);
  EXPECT_EQ(t.num_prefixes(), 4U);
}

TEST(DpEntry, LeafExamples) {
  TreeMcsSolver solver(make_graph({kRedC, kBlueC}, {{0, 1}}));
  const ColorSet red = ColorSet::single(kRedC);
  const ColorSet blue = ColorSet::single(kBlueC);
  // Vertex 1 (0-based) is a leaf; check it with its own key rather than the
  // root's.
  auto at_leaf = [](DpKey k) {
    k.v = 1;
    return k;
  };
  EXPECT_EQ(solver.value(at_leaf(leaf_key(ExtDist(0), blue, ExtDist(1), blue))), 1U);
  EXPECT_EQ(solver.value(at_leaf(leaf_key(ExtDist::infinity(), {}, ExtDist(1), blue))), 0U);
  EXPECT_EQ(solver.value(at_leaf(leaf_key(ExtDist::infinity(), {}, ExtDist(1), red))),
            kInfeasible);
  // v selected, but Cin is not {C(v)}.
  EXPECT_EQ(solver.value(at_leaf(leaf_key(ExtDist(0), red, ExtDist(1), blue))), kInfeasible);
}

TEST(DpEntry, RejectsInconsistentKeys) {
  TreeMcsSolver solver(make_path({1, 2}));
  EXPECT_THROW(solver.value(leaf_key(ExtDist(0), {}, ExtDist(1), ColorSet::single(1))),
               std::invalid_argument);
  EXPECT_THROW(solver.value(leaf_key(ExtDist::infinity(), ColorSet::single(1), ExtDist(1),
                                     ColorSet::single(1))),
               std::invalid_argument);
  DpKey bad_prefix = leaf_key(ExtDist(0), ColorSet::single(1), ExtDist::infinity(), {});
  bad_prefix.i = 5;
  EXPECT_THROW(solver.value(bad_prefix), std::invalid_argument);
}

TEST(SolveTreeMcs, Examples) {
  Certificate single = solve_tree_mcs(make_path({1}));
  EXPECT_EQ(single.size(), 1U);
  EXPECT_EQ(single.witness, (VertexSet{0}));
  EXPECT_EQ(single.provenance, Provenance::kTreeDpOptimal);

  ColoredGraph rrbb = make_path({1, 1, 2, 2});
  Certificate path = solve_tree_mcs(rrbb);
  EXPECT_EQ(path.size(), 2U);
  EXPECT_TRUE(is_consistent(rrbb, path.witness));

  ColoredGraph star = make_graph({1, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(solve_tree_mcs(star).size(), 4U);
}

TEST(SolveTreeMcs, Preconditions) {
  EXPECT_THROW(solve_tree_mcs(testing::make_cycle({1, 2, 1, 2})), PreconditionError);
  std::vector<Color> colors;
  for (Color c = 1; c <= 65; ++c) colors.push_back(c);
  EXPECT_THROW(solve_tree_mcs(make_path(colors)), PreconditionError);
  colors.pop_back();
  EXPECT_NO_THROW(TreeMcsSolver{make_path(colors)});
}

TEST(SolveTreeMcs, MatchesPlainEnumeration) {
  SplitMix64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(12));
    ColoredGraph g = random_tree(n, 1 + static_cast<Color>(rng.below(3)), rng);
    TreeMcsSolver solver(g);
    auto solution = solver.solve();
    ASSERT_EQ(solution.size, testing::reference_optimum(g, false)) << format_ccg(g);
    EXPECT_EQ(solution.witness.size(), solution.size);
    EXPECT_TRUE(testing::reference_check(g, solution.witness, false));
  }
}

TEST(SolveTreeMcs, NormalizedAndRawKeysAgree) {
  SplitMix64 rng(77);
  for (int k = 0; k < 150; ++k) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(14));
    ColoredGraph g = random_tree(n, 1 + static_cast<Color>(rng.below(3)), rng);
    TreeMcsSolver normalized(g, {.normalize_keys = true});
    TreeMcsSolver raw(g, {.normalize_keys = false});
    auto a = normalized.solve();
    auto b = raw.solve();
    EXPECT_EQ(a.size, b.size);
    EXPECT_TRUE(is_consistent(g, b.witness));
    EXPECT_LE(normalized.memo_entries(), raw.memo_entries());
  }
}

TEST(SolveTreeMcs, OtherRootsGiveTheSameOptimum) {
  SplitMix64 rng(88);
  for (int k = 0; k < 40; ++k) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(12));
    ColoredGraph g = random_tree(n, 3, rng);
    const std::size_t expected = TreeMcsSolver(g).solve().size;
    const auto root = static_cast<Vertex>(rng.below(n));
    TreeMcsSolver other(RootedTree(g, root));
    auto solution = other.solve();
    EXPECT_EQ(solution.size, expected);
    EXPECT_TRUE(is_consistent(g, solution.witness));
  }
}

TEST(SolveTreeMcs, TopLevelAnswerIsTheMinimumOfRootKeys) {
  SplitMix64 rng(4);
  for (int k = 0; k < 30; ++k) {
    ColoredGraph g = random_tree(1 + static_cast<std::uint32_t>(rng.below(10)), 3, rng);
    TreeMcsSolver solver(g);
    const auto best = solver.solve();
    const RootedTree& t = solver.tree();
    DpKey key;
    key.v = t.root();
    key.i = static_cast<std::uint32_t>(t.num_children(t.root()));
    for (std::uint32_t d = 0; d <= t.height(t.root()); ++d) {
      for (std::uint64_t bits = 1; bits < 8; ++bits) {
        key.in_dist = ExtDist(d);
        key.in_colors = ColorSet::from_bits(bits);
        const DpValue v = solver.value(key);
        EXPECT_LE(best.size, v);
        if (v != kInfeasible) {
          EXPECT_TRUE(is_consistent(g, solver.reconstruct(key)));
        }
      }
    }
  }
}

TEST(SolveTreeMcs, MemoIsDeterministic) {
  SplitMix64 rng(5);
  ColoredGraph g = random_tree(12, 3, rng);
  TreeMcsSolver first(g);
  auto a = first.solve();
  const std::size_t entries = first.memo_entries();
  // Re-solving on a warm table must neither change the answer nor grow it.
  auto b = first.solve();
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(first.memo_entries(), entries);
  TreeMcsSolver second(g);
  EXPECT_EQ(second.solve().witness, a.witness);
}

TEST(SolveTreeMcs, MemoRespectsComplexityEnvelope) {
  SplitMix64 rng(6);
  for (int k = 0; k < 20; ++k) {
    const auto n = 2 + static_cast<std::uint32_t>(rng.below(30));
    const auto c = 1 + static_cast<Color>(rng.below(3));
    ColoredGraph g = random_tree(n, c, rng);
    TreeMcsSolver solver(g, {.normalize_keys = false});
    solver.solve();
    const double per_prefix = std::pow(double(n), 3) * std::pow(2.0, 3.0 * c);
    EXPECT_LE(double(solver.max_entries_per_prefix()), per_prefix);
    const double total = double(solver.tree().num_prefixes()) * std::pow(double(n) + 1, 3) *
                         std::pow(2.0, 3.0 * c);
    EXPECT_LE(double(solver.memo_entries()), total);
  }
}

// The key a consistent S induces at (v, i): distances and colors of the
// nearest members of S inside T_i(v), inside T_{i+}(v), and outside T(v).
DpKey induced_key(const RootedTree& t, const std::vector<std::vector<std::uint32_t>>& d,
                  const VertexSet& s, Vertex v, std::uint32_t i) {
  auto nearest = [&](auto&& in_region) {
    ExtDist best = ExtDist::infinity();
    ColorSet colors;
    for (Vertex u : s) {
      if (!in_region(u)) continue;
      const ExtDist du(d[v][u]);
      if (du < best) {
        best = du;
        colors = {};
      }
      if (du == best) colors |= ColorSet::single(t.color(u));
    }
    return std::pair{best, colors};
  };
  DpKey k;
  k.v = v;
  k.i = i;
  std::tie(k.in_dist, k.in_colors) = nearest([&](Vertex u) { return t.in_prefix(v, i, u); });
  std::tie(k.sib_dist, k.sib_colors) = nearest([&](Vertex u) { return t.in_suffix(v, i, u); });
  std::tie(k.out_dist, k.out_colors) = nearest([&](Vertex u) { return !t.in_subtree(v, u); });
  return k;
}

TEST(SolveTreeMcs, SplicedSubsolutionsStayConsistent) {
  SplitMix64 rng(1234);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const auto n = 2 + static_cast<std::uint32_t>(rng.below(10));
    ColoredGraph g = random_tree(n, 1 + static_cast<Color>(rng.below(3)), rng);
    const auto dist = testing::floyd(g);
    // A random consistent S: keep adding random vertices until it passes.
    VertexSet s;
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    for (Vertex j = n; j > 1; --j) std::swap(order[j - 1], order[rng.below(j)]);
    for (Vertex v : order) {
      s.push_back(v);
      std::sort(s.begin(), s.end());
      if (is_consistent(g, s)) break;
    }
    for (bool normalize : {true, false}) {
      TreeMcsSolver solver(g, {.normalize_keys = normalize});
      const RootedTree& t = solver.tree();
      const auto v = static_cast<Vertex>(rng.below(n));
      const auto i = static_cast<std::uint32_t>(rng.below(t.num_children(v) + 1));
      const DpKey key = induced_key(t, dist, s, v, i);

      std::size_t inside = 0;
      for (Vertex u : s) inside += t.in_prefix(v, i, u) ? 1 : 0;
      const DpValue value = solver.value(key);
      ASSERT_NE(value, kInfeasible);
      EXPECT_LE(value, inside);

      VertexSet w = solver.reconstruct(key);
      EXPECT_EQ(w.size(), value);
      VertexSet spliced = w;
      for (Vertex u : s) {
        if (!t.in_prefix(v, i, u)) spliced.push_back(u);
      }
      spliced = make_vertex_set(std::move(spliced));
      ASSERT_FALSE(spliced.empty());
      EXPECT_TRUE(testing::reference_check(g, spliced, false));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 800);
}

}  // namespace
}  // namespace mcs
