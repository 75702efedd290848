#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mcs/colored_graph.hpp"

namespace mcs {

using HopDistance = std::uint32_t;
inline constexpr HopDistance kUnreachable = std::numeric_limits<HopDistance>::max();

// Dense all-pairs hop distances, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const ColoredGraph& g);

  std::size_t size() const noexcept { return n_; }
  HopDistance operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::span<const HopDistance> row(Vertex u) const {
    return {d_.data() + u * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<HopDistance> d_;
};

DistanceMatrix all_pairs_hop_distances(const ColoredGraph& g);

// Single-source BFS; unreachable vertices get kUnreachable.
std::vector<HopDistance> bfs_distances(const ColoredGraph& g, Vertex source);

// Multi-source BFS: distance from every vertex to the nearest member of
// `sources` (kUnreachable when `sources` is empty or out of reach).
std::vector<HopDistance> bfs_distances(const ColoredGraph& g,
                                       std::span<const Vertex> sources);

// NN(v, S): the members of S at minimum hop distance from v.
// Throws std::invalid_argument on empty S and PreconditionError when some
// member of S is unreachable from v.
VertexSet nearest_neighbors(const DistanceMatrix& dist, Vertex v,
                            std::span<const Vertex> subset);

}  // namespace mcs
