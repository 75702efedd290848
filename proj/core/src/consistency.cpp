#include "mcs/consistency.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mcs/errors.hpp"

namespace mcs {

std::string_view to_string(Variant variant) {
  return variant == Variant::kMcs ? "mcs" : "mscs";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kBruteForceOptimal: return "brute-force-optimal";
    case Provenance::kTreeDpOptimal: return "tree-dp-optimal";
    case Provenance::kConstructed: return "constructed";
    case Provenance::kUserSupplied: return "user-supplied";
  }
  return "unknown";
}

namespace {

void validate_subset(const ColoredGraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("consistency check on an empty subset");
  for (Vertex s : subset) {
    if (s >= g.num_vertices()) {
      throw std::invalid_argument("subset vertex " + std::to_string(s + 1) + " not in graph");
    }
  }
}

void require_connected(const ColoredGraph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

// strict = false: some nearest neighbor shares the color.
// strict = true: every nearest neighbor shares the color.
bool dense_check(const ColoredGraph& g, const DistanceMatrix& dist,
                 std::span<const Vertex> subset, bool strict) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Color own = g.color(v);
    auto row = dist.row(v);
    HopDistance best = kUnreachable;
    bool same = false;
    bool other = false;
    for (Vertex s : subset) {
      HopDistance d = row[s];
      if (d < best) {
        best = d;
        same = other = false;
      }
      if (d == best) (g.color(s) == own ? same : other) = true;
    }
    if (!same || (strict && other)) return false;
  }
  return true;
}

bool sparse_check(const ColoredGraph& g, std::span<const Vertex> subset, bool strict) {
  std::map<Color, VertexSet> by_color;
  for (Vertex s : subset) by_color[g.color(s)].push_back(s);

  const std::size_t n = g.num_vertices();
  std::vector<HopDistance> nearest(n, kUnreachable);
  std::map<Color, std::vector<HopDistance>> per_color;
  for (const auto& [color, sources] : by_color) {
    auto d = bfs_distances(g, sources);
    for (std::size_t v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], d[v]);
    per_color.emplace(color, std::move(d));
  }
  for (Vertex v = 0; v < n; ++v) {
    auto own = per_color.find(g.color(v));
    if (own == per_color.end() || own->second[v] != nearest[v]) return false;
    if (strict) {
      for (const auto& [color, d] : per_color) {
        if (color != g.color(v) && d[v] == nearest[v]) return false;
      }
    }
  }
  return true;
}

bool run_check(const ColoredGraph& g, std::span<const Vertex> subset, bool strict) {
  validate_subset(g, subset);
  require_connected(g);
  if (g.num_vertices() <= kDenseCheckLimit) {
    return dense_check(g, DistanceMatrix(g), subset, strict);
  }
  return sparse_check(g, subset, strict);
}

}  // namespace

bool is_consistent(const ColoredGraph& g, std::span<const Vertex> subset) {
  return run_check(g, subset, false);
}

bool is_strict_consistent(const ColoredGraph& g, std::span<const Vertex> subset) {
  return run_check(g, subset, true);
}

bool is_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                   std::span<const Vertex> subset) {
  validate_subset(g, subset);
  return dense_check(g, dist, subset, false);
}

bool is_strict_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                          std::span<const Vertex> subset) {
  validate_subset(g, subset);
  return dense_check(g, dist, subset, true);
}

bool check(const ColoredGraph& g, Variant variant, std::span<const Vertex> subset) {
  return variant == Variant::kMcs ? is_consistent(g, subset) : is_strict_consistent(g, subset);
}

Blocks blocks(const ColoredGraph& g) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  Blocks result;
  result.block_of.assign(g.num_vertices(), kUnassigned);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    if (result.block_of[start] != kUnassigned) continue;
    const std::size_t id = result.partition.size();
    VertexSet members;
    result.block_of[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (result.block_of[w] == kUnassigned && g.color(w) == g.color(start)) {
          result.block_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.partition.push_back(std::move(members));
  }
  return result;
}

}  // namespace mcs
