#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "mcs/colored_graph.hpp"
#include "mcs/consistency.hpp"
#include "mcs/set_cover.hpp"

namespace mcs {

// Exhaustive solvers for desk-scale instances.
//
// Enumeration order: subsets by increasing cardinality; within a cardinality,
// lexicographic order of the sorted vertex (or set) lists. The first subset
// that passes wins, so witnesses are deterministic.

struct BruteForceOptions {
  std::size_t vertex_cap = 20;
  // MCS skips subsets that miss a color class; MSCS skips subsets that miss a
  // block. Turning this off is only useful to check that the pruning is sound.
  bool prune = true;
};

// Throws PreconditionError when the graph is disconnected, empty, or above
// the cap.
Certificate brute_force_mcs(const ColoredGraph& g, const BruteForceOptions& options = {});
Certificate brute_force_mscs(const ColoredGraph& g, const BruteForceOptions& options = {});
Certificate brute_force(const ColoredGraph& g, Variant variant,
                        const BruteForceOptions& options = {});

enum class OracleKind { kDominatingSet, kVertexCover, kSetCover };

struct OracleProblem {
  OracleKind kind;
  // A graph for the graph problems (colors ignored), a set-cover instance for
  // kSetCover. A mismatch throws std::invalid_argument.
  std::variant<ColoredGraph, SetCoverInstance> instance;
};

struct OracleSolution {
  std::size_t size = 0;
  // Vertex ids for the graph problems, 0-based set indices for set cover.
  std::vector<std::uint32_t> witness;
};

OracleSolution solve_oracle(const OracleProblem& problem, std::size_t cap = 20);

OracleSolution min_dominating_set(const ColoredGraph& g, std::size_t cap = 20);
OracleSolution min_vertex_cover(const ColoredGraph& g, std::size_t cap = 20);
OracleSolution min_set_cover(const SetCoverInstance& sc, std::size_t cap = 20);

bool is_dominating_set(const ColoredGraph& g, std::span<const Vertex> d);
bool is_vertex_cover(const ColoredGraph& g, std::span<const Vertex> cover);

}  // namespace mcs
