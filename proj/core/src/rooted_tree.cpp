#include "mcs/rooted_tree.hpp"

#include <algorithm>

#include "mcs/errors.hpp"

namespace mcs {

RootedTree::RootedTree(ColoredGraph g, Vertex root) : graph_(std::move(g)), root_(root) {
  const std::size_t n = graph_.num_vertices();
  if (!is_tree(graph_)) throw PreconditionError("graph is not a tree");
  if (root >= n) throw PreconditionError("root out of range");

  children_.assign(n, {});
  parent_.assign(n, kNoVertex);
  child_index_.assign(n, 0);
  height_.assign(n, 0);
  depth_.assign(n, 0);
  subtree_size_.assign(n, 1);
  tin_.assign(n, 0);
  preorder_.clear();
  preorder_.reserve(n);

  // Iterative DFS; neighbor lists are ascending so children come out sorted.
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    tin_[v] = preorder_.size();
    preorder_.push_back(v);
    for (Vertex w : graph_.neighbors(v)) {
      if (w == parent_[v]) continue;
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      children_[v].push_back(w);
      child_index_[w] = children_[v].size();
    }
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    Vertex v = *it;
    for (Vertex c : children_[v]) {
      height_[v] = std::max(height_[v], height_[c] + 1);
      subtree_size_[v] += subtree_size_[c];
    }
  }
}

std::uint32_t RootedTree::prefix_height(Vertex v, std::size_t i) const {
  std::uint32_t h = 0;
  for (std::size_t j = 0; j < i; ++j) h = std::max(h, height_[children_[v][j]] + 1);
  return h;
}

bool RootedTree::in_prefix(Vertex v, std::size_t i, Vertex u) const {
  if (u == v) return true;
  if (!in_subtree(v, u) || i == 0) return false;
  // T_i(v) occupies a contiguous preorder range: v, then the first i subtrees.
  Vertex last = children_[v][i - 1];
  return tin_[u] < tin_[last] + subtree_size_[last];
}

RootedTree root_tree(const ColoredGraph& g, Vertex root) { return RootedTree(g, root); }

}  // namespace mcs
