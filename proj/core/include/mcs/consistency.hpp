#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mcs/colored_graph.hpp"
#include "mcs/distance.hpp"

namespace mcs {

enum class Variant { kMcs, kMscs };

enum class Provenance { kBruteForceOptimal, kTreeDpOptimal, kConstructed, kUserSupplied };

std::string_view to_string(Variant variant);
std::string_view to_string(Provenance provenance);

// A candidate (strict) consistent subset together with where it came from.
// The witness is a nonempty VertexSet of 0-based ids.
struct Certificate {
  Variant variant = Variant::kMcs;
  VertexSet witness;
  Provenance provenance = Provenance::kUserSupplied;

  std::size_t size() const noexcept { return witness.size(); }
};

// S is consistent when every vertex v has a nearest neighbor in S of color
// C(v); strict when every nearest neighbor of v in S has color C(v).
//
// Both checkers require a connected graph (PreconditionError otherwise) and a
// nonempty S within V(G) (std::invalid_argument otherwise). Small graphs are
// checked against a dense distance matrix; large ones run one multi-source BFS
// per color present in S.
bool is_consistent(const ColoredGraph& g, std::span<const Vertex> subset);
bool is_strict_consistent(const ColoredGraph& g, std::span<const Vertex> subset);

// Same checks against a precomputed matrix; the caller guarantees
// connectivity.
bool is_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                   std::span<const Vertex> subset);
bool is_strict_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                          std::span<const Vertex> subset);

bool check(const ColoredGraph& g, Variant variant, std::span<const Vertex> subset);

// Graphs above this many vertices skip the dense matrix in the checkers.
inline constexpr std::size_t kDenseCheckLimit = 512;

// Maximal connected monochromatic vertex sets.
struct Blocks {
  std::vector<VertexSet> partition;
  std::vector<std::size_t> block_of;

  std::size_t size() const noexcept { return partition.size(); }
};

// Blocks are numbered in order of their smallest vertex.
Blocks blocks(const ColoredGraph& g);

}  // namespace mcs
