#include "mcs/random_instances.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace mcs {

ColoredGraph random_tree(std::uint32_t n, Color c, SplitMix64& rng) {
  if (n == 0 || c == 0) throw std::invalid_argument("random_tree needs n >= 1 and c >= 1");
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    std::vector<Vertex> code(n - 2);
    for (Vertex& x : code) x = static_cast<Vertex>(rng.below(n));
    std::vector<std::uint32_t> degree(n, 1);
    for (Vertex x : code) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.push(v);
    }
    for (Vertex x : code) {
      const Vertex leaf = leaves.top();
      leaves.pop();
      edges.push_back({leaf, x});
      if (--degree[x] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
  }
  std::vector<Color> colors(n);
  for (Color& color : colors) color = static_cast<Color>(1 + rng.below(c));
  return ColoredGraph(std::move(colors), c, std::move(edges));
}

ColoredGraph random_connected_graph(std::uint32_t n, Color c, std::uint32_t extra_edge_percent,
                                    SplitMix64& rng) {
  ColoredGraph tree = random_tree(n, c, rng);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (tree.has_edge(u, w)) continue;
      if (rng.below(100) < extra_edge_percent) edges.push_back({u, w});
    }
  }
  return ColoredGraph(std::vector<Color>(tree.colors().begin(), tree.colors().end()), c,
                      std::move(edges));
}

SetCoverInstance random_set_cover(std::uint32_t num_elements, std::uint32_t num_sets,
                                  SplitMix64& rng) {
  if (num_sets == 0 && num_elements > 0) {
    throw std::invalid_argument("random_set_cover needs at least one set");
  }
  SetCoverInstance sc;
  sc.num_elements = num_elements;
  sc.sets.resize(num_sets);
  std::vector<char> covered(num_elements, 0);
  for (auto& set : sc.sets) {
    for (std::uint32_t e = 0; e < num_elements; ++e) {
      if (rng.below(2) == 1) {
        set.push_back(e);
        covered[e] = 1;
      }
    }
  }
  for (std::uint32_t e = 0; e < num_elements; ++e) {
    if (covered[e]) continue;
    auto& set = sc.sets[rng.below(num_sets)];
    set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  }
  return sc;
}

TwoSatFormula random_two_sat(std::uint32_t num_vars, std::uint32_t num_clauses, SplitMix64& rng) {
  if (num_vars == 0) throw std::invalid_argument("random_two_sat needs at least one variable");
  TwoSatFormula f;
  f.num_vars = num_vars;
  for (std::uint32_t j = 0; j < num_clauses; ++j) {
    Literal a{static_cast<std::uint32_t>(rng.below(num_vars)), rng.below(2) == 1};
    Literal b;
    if (num_vars >= 2) {
      b.var = static_cast<std::uint32_t>(rng.below(num_vars - 1));
      if (b.var >= a.var) ++b.var;
    } else {
      b.var = 0;
    }
    b.positive = rng.below(2) == 1;
    f.clauses.push_back({a, b});
  }
  return f;
}

}  // namespace mcs
