#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcs/exact_solver.hpp"
#include "mcs/intervals.hpp"
#include "mcs/rooted_tree.hpp"

namespace mcs {

namespace {

// Places `count` disjoint intervals of the given width strictly inside the
// open unit region (start, start + 1).
void place_smalls(IntervalInstance& ii, Rational start, std::uint32_t count, Rational width,
                  Color color, IntervalRole role, Vertex gadget) {
  const Rational step(1, 2 * static_cast<std::int64_t>(count) + 2);
  for (std::uint32_t k = 0; k < count; ++k) {
    const Rational lo = start + step * (2 * static_cast<std::int64_t>(k) + 1);
    ii.intervals.push_back({color, lo, lo + width});
    ii.roles.push_back(role);
    ii.gadget.push_back(gadget);
    ii.edge_index.push_back(-1);
  }
}

}  // namespace

IntervalReduction vc_to_intervals(const ColoredGraph& g, std::optional<std::uint32_t> per_gadget,
                                  std::optional<std::uint32_t> per_gap) {
  const auto n = static_cast<std::uint32_t>(g.num_vertices());
  if (n == 0) throw std::invalid_argument("empty graph");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw std::invalid_argument("graph is not cubic: vertex " + std::to_string(v + 1) +
                                  " has degree " + std::to_string(g.degree(v)));
    }
  }
  const std::uint64_t n3 = std::uint64_t{n} * n * n;
  const std::uint32_t p = per_gadget.value_or(static_cast<std::uint32_t>(n3));
  const std::uint32_t q = per_gap.value_or(static_cast<std::uint32_t>(n3 * n));
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be at least 1");

  const auto m = static_cast<std::uint32_t>(g.num_edges());
  const Color small_color = m + 1;
  const Rational width(1, 4 * static_cast<std::int64_t>(n3) *
                              (static_cast<std::int64_t>(std::max(p, q)) + 1));

  IntervalInstance ii;
  ii.num_colors = m + 1;
  ii.per_gadget = p;
  ii.per_gap = q;

  auto edges = g.edges();
  for (Vertex v = 0; v < n; ++v) {
    const Rational lo(2 * (static_cast<std::int64_t>(v) + 1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].u != v && edges[e].w != v) continue;
      ii.intervals.push_back({static_cast<Color>(e + 1), lo, lo + 1});
      ii.roles.push_back(IntervalRole::kMedium);
      ii.gadget.push_back(v);
      ii.edge_index.push_back(static_cast<std::int32_t>(e));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    place_smalls(ii, Rational(2 * (static_cast<std::int64_t>(v) + 1)), p, width, small_color,
                 IntervalRole::kGadgetSmall, v);
  }
  for (Vertex v = 0; v < n; ++v) {
    place_smalls(ii, Rational(2 * (static_cast<std::int64_t>(v) + 1) + 1), q, width, small_color,
                 IntervalRole::kGapSmall, v);
  }
  ii.intervals.push_back({1, Rational(1), Rational(2 * static_cast<std::int64_t>(n) + 3)});
  ii.roles.push_back(IntervalRole::kLarge);
  ii.gadget.push_back(kNoVertex);
  ii.edge_index.push_back(-1);

  ReductionMetadata meta;
  meta.reduction = "vc-intervals";
  meta.params = {{"n", std::to_string(n)},
                 {"m", std::to_string(m)},
                 {"p", std::to_string(p)},
                 {"q", std::to_string(q)}};
  meta.formula = "K(k)=k*(3+p)";
  meta.target_size = [p](std::int64_t k) { return k * (3 + static_cast<std::int64_t>(p)); };
  for (std::size_t id = 0; id < ii.intervals.size(); ++id) {
    if (ii.roles[id] == IntervalRole::kMedium) {
      meta.roles.emplace_back("I_e" + std::to_string(ii.edge_index[id] + 1) + "_v" +
                                  std::to_string(ii.gadget[id] + 1),
                              static_cast<Vertex>(id));
    } else if (ii.roles[id] == IntervalRole::kLarge) {
      meta.roles.emplace_back("I_large", static_cast<Vertex>(id));
    }
  }
  return IntervalReduction{std::move(ii), std::move(meta)};
}

ColoredGraph intervals_to_graph(const IntervalInstance& ii) {
  const std::size_t count = ii.intervals.size();
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return ii.intervals[a].lo < ii.intervals[b].lo;
  });

  std::vector<Edge> edges;
  std::vector<std::uint32_t> active;
  for (std::uint32_t id : order) {
    const Rational lo = ii.intervals[id].lo;
    std::erase_if(active, [&](std::uint32_t a) { return ii.intervals[a].hi < lo; });
    for (std::uint32_t a : active) edges.push_back({std::min(a, id), std::max(a, id)});
    active.push_back(id);
  }

  std::vector<Color> colors;
  colors.reserve(count);
  for (const Interval& iv : ii.intervals) colors.push_back(iv.color);
  return ColoredGraph(std::move(colors), ii.num_colors, std::move(edges));
}

std::vector<Edge> predicted_interval_edges(const IntervalInstance& ii) {
  const std::size_t count = ii.intervals.size();
  if (ii.roles.size() != count) throw std::invalid_argument("interval instance has no layout");
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> mediums;
  std::vector<std::vector<Vertex>> smalls;
  for (Vertex id = 0; id < count; ++id) {
    const Vertex gadget = ii.gadget[id];
    if (gadget == kNoVertex) continue;
    if (gadget >= mediums.size()) {
      mediums.resize(gadget + 1);
      smalls.resize(gadget + 1);
    }
    if (ii.roles[id] == IntervalRole::kMedium) mediums[gadget].push_back(id);
    if (ii.roles[id] == IntervalRole::kGadgetSmall) smalls[gadget].push_back(id);
  }
  for (Vertex id = 0; id < count; ++id) {
    if (ii.roles[id] != IntervalRole::kLarge) continue;
    for (Vertex other = 0; other < count; ++other) {
      if (other != id) edges.push_back({std::min(id, other), std::max(id, other)});
    }
  }
  for (std::size_t gadget = 0; gadget < mediums.size(); ++gadget) {
    const auto& med = mediums[gadget];
    for (std::size_t a = 0; a < med.size(); ++a) {
      for (std::size_t b = a + 1; b < med.size(); ++b) {
        edges.push_back({std::min(med[a], med[b]), std::max(med[a], med[b])});
      }
      for (Vertex s : smalls[gadget]) edges.push_back({std::min(med[a], s), std::max(med[a], s)});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Certificate interval_cover_certificate(const IntervalInstance& ii, const ColoredGraph& g,
                                       std::span<const Vertex> cover) {
  if (!is_vertex_cover(g, cover)) throw std::invalid_argument("not a vertex cover of the graph");
  std::vector<char> chosen(g.num_vertices(), 0);
  for (Vertex v : cover) chosen[v] = 1;
  VertexSet s;
  for (std::size_t id = 0; id < ii.intervals.size(); ++id) {
    const IntervalRole role = ii.roles[id];
    if ((role == IntervalRole::kMedium || role == IntervalRole::kGadgetSmall) &&
        chosen[ii.gadget[id]]) {
      s.push_back(static_cast<Vertex>(id));
    }
  }
  return Certificate{Variant::kMcs, std::move(s), Provenance::kConstructed};
}

}  // namespace mcs
