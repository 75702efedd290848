#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "mcs/colored_graph.hpp"
#include "mcs/consistency.hpp"
#include "mcs/reductions.hpp"

namespace mcs {

using Rational = boost::rational<std::int64_t>;

// Closed interval [lo, hi] with lo < hi.
struct Interval {
  Color color = 1;
  Rational lo;
  Rational hi;
};

enum class IntervalRole { kMedium, kGadgetSmall, kGapSmall, kLarge };

// Intervals are indexed by their vertex id in the derived graph.
struct IntervalInstance {
  std::vector<Interval> intervals;
  Color num_colors = 0;

  // Layout of a generated instance; empty for parsed ones.
  std::vector<IntervalRole> roles;
  // Source vertex of the gadget (kMedium, kGadgetSmall) or of the gadget the
  // gap follows (kGapSmall); kNoVertex for the large interval.
  std::vector<Vertex> gadget;
  // Source edge index of a medium interval; -1 otherwise.
  std::vector<std::int32_t> edge_index;
  std::uint32_t per_gadget = 0;  // p
  std::uint32_t per_gap = 0;     // q
};

// Cubic vertex cover -> MCS on interval graphs.
//
// Gadget X_i occupies s_i = [2i, 2i + 1] (i = 1..n, ascending source id): its
// three medium intervals (colors of the incident edges, edges numbered in
// lexicographic order) each span s_i; p pairwise disjoint small intervals of
// color m + 1 lie strictly inside s_i. q disjoint small intervals of color
// m + 1 lie strictly inside each gap (2i + 1, 2i + 2). One large interval of
// color 1 spans everything. Small intervals have width
// 1 / (4 n³ (max(p, q) + 1)).
//
// Interval ids: mediums gadget-major, then gadget smalls, then gap smalls,
// then the large interval. p defaults to n³ and q to n⁴.
struct IntervalReduction {
  IntervalInstance instance;
  ReductionMetadata metadata;
};

// Throws std::invalid_argument when g is not cubic or p, q < 1.
IntervalReduction vc_to_intervals(const ColoredGraph& g,
                                  std::optional<std::uint32_t> per_gadget = std::nullopt,
                                  std::optional<std::uint32_t> per_gap = std::nullopt);

// Edge iff the closed intervals intersect (sort-and-sweep).
ColoredGraph intervals_to_graph(const IntervalInstance& ii);

// Adjacency predicted from the layout roles alone: the large interval meets
// everything, mediums of one gadget meet each other and that gadget's smalls.
std::vector<Edge> predicted_interval_edges(const IntervalInstance& ii);

// Every interval of X_i for v_i in the cover; size |cover| (3 + p).
// Throws std::invalid_argument when `cover` is not a vertex cover of g.
Certificate interval_cover_certificate(const IntervalInstance& ii, const ColoredGraph& g,
                                       std::span<const Vertex> cover);

// `i <id> <color> <lo_num>/<lo_den> <hi_num>/<hi_den>` per interval, ids
// 1-based and consecutive. Comment lines start with `c`.
std::string format_intervals(const IntervalInstance& ii);
IntervalInstance parse_intervals(std::string_view text);

}  // namespace mcs
