#include "mcs/exact_solver.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mcs/errors.hpp"

namespace mcs {

namespace {

constexpr std::size_t kMaxEnumerable = 63;

// Visits k-subsets of {0..universe-1} for k = k_min..universe in increasing k,
// lexicographic within k. Returns the first subset accepted.
template <typename Accept>
std::optional<std::vector<std::uint32_t>> first_accepted(std::size_t universe, std::size_t k_min,
                                                         Accept&& accept) {
  std::vector<std::uint32_t> idx;
  for (std::size_t k = k_min; k <= universe; ++k) {
    idx.resize(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = static_cast<std::uint32_t>(j);
    std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
      if (accept(idx, mask)) return idx;
      std::size_t j = k;
      while (j > 0 && idx[j - 1] == universe - k + j - 1) --j;
      if (j == 0) break;
      --j;
      mask &= ~(std::uint64_t{1} << idx[j]);
      ++idx[j];
      mask |= std::uint64_t{1} << idx[j];
      for (std::size_t t = j + 1; t < k; ++t) {
        mask &= ~(std::uint64_t{1} << idx[t]);
        idx[t] = idx[t - 1] + 1;
        mask |= std::uint64_t{1} << idx[t];
      }
    }
  }
  return std::nullopt;
}

void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap || size > kMaxEnumerable) {
    throw PreconditionError(std::string(what) + " has " + std::to_string(size) +
                            " elements, above the enumeration cap of " +
                            std::to_string(std::min(cap, kMaxEnumerable)));
  }
}

std::uint64_t to_mask(const VertexSet& vs) {
  std::uint64_t mask = 0;
  for (Vertex v : vs) mask |= std::uint64_t{1} << v;
  return mask;
}

Certificate brute_force_impl(const ColoredGraph& g, Variant variant,
                             const BruteForceOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw PreconditionError("empty graph");
  check_cap(n, options.vertex_cap, "graph");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");

  const DistanceMatrix dist(g);
  const bool strict = variant == Variant::kMscs;

  // Disjoint vertex groups that every feasible subset must meet.
  std::vector<std::uint64_t> groups;
  if (options.prune) {
    if (strict) {
      for (const VertexSet& block : blocks(g).partition) groups.push_back(to_mask(block));
    } else {
      for (const VertexSet& cls : g.color_classes()) {
        if (!cls.empty()) groups.push_back(to_mask(cls));
      }
    }
  }

  auto accept = [&](const std::vector<std::uint32_t>& subset, std::uint64_t mask) {
    for (std::uint64_t group : groups) {
      if ((group & mask) == 0) return false;
    }
    for (Vertex v = 0; v < n; ++v) {
      const Color own = g.color(v);
      auto row = dist.row(v);
      HopDistance best = kUnreachable;
      bool same = false;
      bool other = false;
      for (std::uint32_t s : subset) {
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
  };

  auto found = first_accepted(n, std::max<std::size_t>(1, groups.size()), accept);
  // V(G) itself always passes.
  if (!found) throw std::logic_error("brute force found no consistent subset");
  return Certificate{variant, VertexSet(found->begin(), found->end()),
                     Provenance::kBruteForceOptimal};
}

}  // namespace

Certificate brute_force_mcs(const ColoredGraph& g, const BruteForceOptions& options) {
  return brute_force_impl(g, Variant::kMcs, options);
}

Certificate brute_force_mscs(const ColoredGraph& g, const BruteForceOptions& options) {
  return brute_force_impl(g, Variant::kMscs, options);
}

Certificate brute_force(const ColoredGraph& g, Variant variant, const BruteForceOptions& options) {
  return brute_force_impl(g, variant, options);
}

bool is_dominating_set(const ColoredGraph& g, std::span<const Vertex> d) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (Vertex v : d) {
    if (v >= g.num_vertices()) return false;
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_vertex_cover(const ColoredGraph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) {
    if (v >= g.num_vertices()) return false;
    in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.w]) return false;
  }
  return true;
}

OracleSolution min_dominating_set(const ColoredGraph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  check_cap(n, cap, "graph");
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto found = first_accepted(n, 0, [&](const std::vector<std::uint32_t>& subset, std::uint64_t) {
    std::uint64_t seen = 0;
    for (std::uint32_t v : subset) seen |= closed[v];
    return seen == all;
  });
  return {found->size(), *found};
}

OracleSolution min_vertex_cover(const ColoredGraph& g, std::size_t cap) {
  check_cap(g.num_vertices(), cap, "graph");
  auto found = first_accepted(g.num_vertices(), 0,
                              [&](const std::vector<std::uint32_t>&, std::uint64_t mask) {
                                for (const Edge& e : g.edges()) {
                                  if (!((mask >> e.u) & 1U) && !((mask >> e.w) & 1U)) return false;
                                }
                                return true;
                              });
  return {found->size(), *found};
}

OracleSolution min_set_cover(const SetCoverInstance& sc, std::size_t cap) {
  sc.validate();
  check_cap(sc.sets.size(), cap, "set family");
  if (sc.num_elements > 64) throw PreconditionError("set cover oracle supports at most 64 elements");
  std::vector<std::uint64_t> masks;
  for (const auto& set : sc.sets) {
    std::uint64_t m = 0;
    for (std::uint32_t e : set) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  const std::uint64_t all =
      sc.num_elements == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.num_elements) - 1;
  auto found = first_accepted(sc.sets.size(), 0,
                              [&](const std::vector<std::uint32_t>& subset, std::uint64_t) {
                                std::uint64_t seen = 0;
                                for (std::uint32_t j : subset) seen |= masks[j];
                                return seen == all;
                              });
  return {found->size(), *found};
}

OracleSolution solve_oracle(const OracleProblem& problem, std::size_t cap) {
  const auto* graph = std::get_if<ColoredGraph>(&problem.instance);
  const auto* sets = std::get_if<SetCoverInstance>(&problem.instance);
  switch (problem.kind) {
    case OracleKind::kDominatingSet:
      if (!graph) break;
      return min_dominating_set(*graph, cap);
    case OracleKind::kVertexCover:
      if (!graph) break;
      return min_vertex_cover(*graph, cap);
    case OracleKind::kSetCover:
      if (!sets) break;
      return min_set_cover(*sets, cap);
  }
  throw std::invalid_argument("oracle problem kind does not match its instance");
}

}  // namespace mcs
