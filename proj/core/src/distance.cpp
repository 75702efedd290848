#include "mcs/distance.hpp"

#include <stdexcept>

#include "mcs/errors.hpp"

namespace mcs {

std::vector<HopDistance> bfs_distances(const ColoredGraph& g, std::span<const Vertex> sources) {
  std::vector<HopDistance> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<HopDistance> bfs_distances(const ColoredGraph& g, Vertex source) {
  const Vertex sources[] = {source};
  return bfs_distances(g, sources);
}

DistanceMatrix::DistanceMatrix(const ColoredGraph& g) : n_(g.num_vertices()), d_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

DistanceMatrix all_pairs_hop_distances(const ColoredGraph& g) { return DistanceMatrix(g); }

VertexSet nearest_neighbors(const DistanceMatrix& dist, Vertex v, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("nearest_neighbors: empty subset");
  HopDistance best = kUnreachable;
  for (Vertex s : subset) {
    HopDistance d = dist(v, s);
    if (d == kUnreachable) {
      throw PreconditionError("nearest_neighbors: vertex " + std::to_string(s + 1) +
                              " unreachable from " + std::to_string(v + 1));
    }
    best = std::min(best, d);
  }
  VertexSet nn;
  for (Vertex s : subset) {
    if (dist(v, s) == best) nn.push_back(s);
  }
  return make_vertex_set(std::move(nn));
}

}  // namespace mcs
