#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mcs/colored_graph.hpp"

namespace mcs {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// A colored tree with a fixed root and fixed child order (ascending id).
//
// Notation used by the tree solver:
//   T(v)       subtree rooted at v
//   T_i(v)     v together with the subtrees of its first i children
//   T_{i+}(v)  the subtrees of children i+1..η_v
// height(v) is the largest distance from v to a vertex of T(v); leaves have 0.
class RootedTree {
 public:
  // Throws PreconditionError when g is not a tree or root is out of range.
  RootedTree(ColoredGraph g, Vertex root);

  const ColoredGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.num_vertices(); }
  Vertex root() const noexcept { return root_; }
  Color color(Vertex v) const { return graph_.color(v); }

  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::size_t num_children(Vertex v) const { return children_[v].size(); }
  Vertex child(Vertex v, std::size_t i) const { return children_[v][i - 1]; }  // 1-based
  Vertex parent(Vertex v) const { return parent_[v]; }
  // 1-based position of v in its parent's child list; 0 for the root.
  std::size_t child_index(Vertex v) const { return child_index_[v]; }

  std::uint32_t height(Vertex v) const { return height_[v]; }
  std::uint32_t depth(Vertex v) const { return depth_[v]; }
  std::size_t subtree_size(Vertex v) const { return subtree_size_[v]; }

  // Largest distance from v to a vertex of T_i(v).
  std::uint32_t prefix_height(Vertex v, std::size_t i) const;

  // Vertices in preorder, children visited in list order.
  std::span<const Vertex> preorder() const noexcept { return preorder_; }

  bool in_subtree(Vertex v, Vertex u) const {
    return tin_[v] <= tin_[u] && tin_[u] < tin_[v] + subtree_size_[v];
  }
  // u ∈ T_i(v)
  bool in_prefix(Vertex v, std::size_t i, Vertex u) const;
  // u ∈ T_{i+}(v)
  bool in_suffix(Vertex v, std::size_t i, Vertex u) const {
    return in_subtree(v, u) && !in_prefix(v, i, u);
  }

  // Sum of η_v over all vertices, i.e. the number of (v, i) pairs with i >= 1.
  std::size_t num_prefixes() const noexcept { return size() == 0 ? 0 : size() - 1; }

 private:
  ColoredGraph graph_;
  Vertex root_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> child_index_;
  std::vector<std::uint32_t> height_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> tin_;
  std::vector<Vertex> preorder_;
};

RootedTree root_tree(const ColoredGraph& g, Vertex root);

}  // namespace mcs
