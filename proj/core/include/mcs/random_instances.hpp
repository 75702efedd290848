#pragma once

#include <cstdint>

#include "mcs/colored_graph.hpp"
#include "mcs/set_cover.hpp"
#include "mcs/reductions.hpp"

namespace mcs {

// splitmix64. Every random instance in the project is drawn from this stream
// so corpora are reproducible from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) as next() % bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Uniform labeled tree from a random Prüfer sequence (n - 2 draws of
// below(n)), then one color draw 1 + below(c) per vertex in id order.
ColoredGraph random_tree(std::uint32_t n, Color c, SplitMix64& rng);

// random_tree plus each non-tree pair (u < w, lexicographic) added with
// probability extra_edge_percent / 100.
ColoredGraph random_connected_graph(std::uint32_t n, Color c, std::uint32_t extra_edge_percent,
                                    SplitMix64& rng);

// Every set is drawn element-wise with probability 1/2; uncovered elements
// are then added to a random set.
SetCoverInstance random_set_cover(std::uint32_t num_elements, std::uint32_t num_sets,
                                  SplitMix64& rng);

// Each clause draws two literals over distinct variables when n >= 2.
TwoSatFormula random_two_sat(std::uint32_t num_vars, std::uint32_t num_clauses, SplitMix64& rng);

}  // namespace mcs
