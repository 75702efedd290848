#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "mcs/colored_graph.hpp"
#include "mcs/consistency.hpp"
#include "mcs/rooted_tree.hpp"

namespace mcs {

// Membership bit-vector over color ids 1..kMaxColors.
class ColorSet {
 public:
  static constexpr Color kMaxColors = 64;

  constexpr ColorSet() = default;
  static constexpr ColorSet from_bits(std::uint64_t bits) { return ColorSet(bits); }
  static constexpr ColorSet single(Color c) { return ColorSet(std::uint64_t{1} << (c - 1)); }
  // {1, ..., c}
  static constexpr ColorSet all(Color c) {
    return ColorSet(c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int count() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(Color c) const { return (bits_ >> (c - 1)) & 1U; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// A hop distance extended with ∞. ∞ compares greater than every finite value
// and absorbs ±1.
class ExtDist {
 public:
  static constexpr ExtDist infinity() { return ExtDist(kInf); }

  constexpr ExtDist() = default;
  constexpr explicit ExtDist(std::uint32_t value) : value_(value) {}

  constexpr bool is_finite() const noexcept { return value_ != kInf; }
  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr ExtDist plus_one() const { return is_finite() ? ExtDist(value_ + 1) : *this; }
  constexpr ExtDist minus_one() const { return is_finite() ? ExtDist(value_ - 1) : *this; }

  friend constexpr auto operator<=>(ExtDist, ExtDist) = default;

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kInf;
};

// One subproblem of the tree recursion: the cheapest W ⊆ V(T_i(v)) such that
//   * d(v, W) = in_dist and the colors of NN(v, W) are exactly in_colors;
//   * every u ∈ T_i(v) has a nearest neighbor of its own color in W ∪ X ∪ Y,
//     where X is an assumed in_dist-style set in T_{i+}(v) at sib_dist from v
//     spanning sib_colors, and Y the same outside T(v) at out_dist/out_colors.
// A distance is ∞ exactly when its color set is empty.
struct DpKey {
  Vertex v = 0;
  std::uint32_t i = 0;
  ExtDist in_dist;
  ExtDist out_dist;
  ExtDist sib_dist;
  ColorSet in_colors;
  ColorSet out_colors;
  ColorSet sib_colors;

  friend bool operator==(const DpKey&, const DpKey&) = default;
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& k) const noexcept;
};

// Optimal size of a subproblem, or kInfeasible.
using DpValue = std::uint32_t;
inline constexpr DpValue kInfeasible = std::numeric_limits<DpValue>::max();

struct TreeDpOptions {
  // Collapse the sibling/outside pair into the one nearest external summary
  // before the memo lookup (both are reached only through v), and drop it when
  // it lies strictly farther than in_dist. Values are unchanged; the table
  // shrinks by orders of magnitude.
  bool normalize_keys = true;
};

// Exact MCS on colored trees, parameterized by the number of colors.
//
// Recursion (v ∉ W cases are one uniform split):
//   validity   C(v) must be among the colors at min(in, out, sib) distance.
//   i = 0      T_0(v) = {v}: W = {v} or W = ∅.
//   in = 0     v ∈ W; every child subtree is solved independently with v as
//              its outside neighbor at distance 1.
//   in > 0     W = W_a ∪ W_b with W_a ⊆ T_{i-1}(v), W_b ⊆ T(v_i) at distances
//              δ_a, δ_b from v and min(δ_a, δ_b) = in. Both equal (colors
//              split left/right/both), right strictly nearer, or left strictly
//              nearer. Each side sees the other as sibling/outside help.
//
// Tie-breaking: select-v first, then the equal split (color assignments in
// base-3 counting order over the colors of in_colors), then δ_a > δ_b (δ_a
// ascending, ∞ last, left colors in increasing bit order), then δ_b > δ_a in
// the same order. Witnesses are rebuilt top-down along the first optimal
// option, without back-pointers.
//
// A solver owns its memo table; it is not thread-safe.
class TreeMcsSolver {
 public:
  // Roots the tree at its lowest id. Throws PreconditionError when g is not a
  // tree or uses more colors than ColorSet can hold.
  explicit TreeMcsSolver(const ColoredGraph& g, TreeDpOptions options = {});
  explicit TreeMcsSolver(RootedTree tree, TreeDpOptions options = {});

  const RootedTree& tree() const noexcept { return tree_; }

  // The subproblem value; kInfeasible when no W exists.
  DpValue value(const DpKey& key);

  // An optimal W for `key`. Throws std::logic_error when the key is
  // infeasible.
  VertexSet reconstruct(const DpKey& key);

  struct Solution {
    std::size_t size = 0;
    DpKey key;
    VertexSet witness;
  };

  // min over δ and nonempty C' of P(T_{η_r}(r), δ, ∞, ∞, C', ∅, ∅).
  Solution solve();

  // Number of memoized subproblems. i = 0 keys are answered directly and are
  // not stored.
  std::size_t memo_entries() const noexcept { return memo_.size(); }
  // Largest number of stored keys sharing one (v, i).
  std::size_t max_entries_per_prefix() const;

  // The key actually stored for `key` (identity when normalization is off).
  DpKey canonical(const DpKey& key) const;

  // Colors of T_i(v) vertices at exactly distance d from v (d may exceed the
  // prefix height, giving ∅).
  ColorSet prefix_level_colors(Vertex v, std::size_t i, std::uint32_t d) const;
  ColorSet subtree_level_colors(Vertex v, std::uint32_t d) const {
    return prefix_level_colors(v, tree_.num_children(v), d);
  }

 private:
  // W_a ⊆ T_{i-1}(v) and W_b ⊆ T(v_i) solved as two subproblems.
  struct Split {
    DpKey left;
    DpKey right;
  };

  DpValue evaluate(const DpKey& key);
  DpValue compute(const DpKey& key);
  DpValue select_cost(Vertex v, std::size_t i);
  DpValue best_child(Vertex child, DpKey* argmin);
  DpValue split_value(const Split& split, DpValue bound);
  // Calls visit(split) for every split of a key with in_dist > 0 and i >= 1,
  // in tie-break order; stops early when visit returns false.
  template <typename Visit>
  void for_each_split(const DpKey& key, Visit&& visit) const;
  void reconstruct_into(const DpKey& key, VertexSet& out);

  RootedTree tree_;
  TreeDpOptions options_;
  // level_offset_[v] indexes prefix_levels_: for each i in 0..η_v a row of
  // prefix_height(v, η_v) + 1 ColorSets.
  std::vector<std::size_t> level_offset_;
  std::vector<ColorSet> prefix_levels_;
  std::vector<std::size_t> prefix_offset_;
  std::vector<std::size_t> prefix_counts_;
  std::vector<std::vector<DpValue>> select_cache_;
  std::vector<DpValue> best_child_cache_;
  std::unordered_map<DpKey, DpValue, DpKeyHash> memo_;
};

// Convenience wrapper: root at the lowest id, solve, and package the result.
Certificate solve_tree_mcs(const ColoredGraph& g);

}  // namespace mcs
