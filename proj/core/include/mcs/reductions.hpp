#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcs/colored_graph.hpp"
#include "mcs/consistency.hpp"
#include "mcs/set_cover.hpp"

namespace mcs {

// Describes a generated instance: source parameters, the target-size formula,
// and a labeled role map. Serialized as the sidecar `.meta` file:
//   key=value            (reduction first, then parameters, then formula)
//   role <name> <id>     (1-based vertex id)
struct ReductionMetadata {
  std::string reduction;
  std::vector<std::pair<std::string, std::string>> params;
  std::string formula;
  // Source solution value k -> target certificate size.
  std::function<std::int64_t(std::int64_t)> target_size;
  std::vector<std::pair<std::string, Vertex>> roles;

  std::int64_t target(std::int64_t k) const { return target_size(k); }
};

std::string format_metadata(const ReductionMetadata& meta);

struct ParsedMetadata {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::pair<std::string, Vertex>> roles;  // 0-based ids
};

ParsedMetadata parse_metadata(std::string_view text);

// ---------------------------------------------------------------------------
// Dominating set -> MCS. H = G plus an apex x adjacent to everything; G keeps
// color 1, x gets color 2. γ(G) <= k iff H has a consistent subset of size
// k + 1.

struct DominatingReduction {
  ColoredGraph graph;
  ReductionMetadata metadata;
  Vertex apex = 0;
};

DominatingReduction dominating_to_mcs(const ColoredGraph& g);

// D ∪ {x}. Throws std::invalid_argument when D does not dominate g.
Certificate dominating_mcs_certificate(const DominatingReduction& r, const ColoredGraph& g,
                                       std::span<const Vertex> dominating_set);

// ---------------------------------------------------------------------------
// MAX-2SAT -> MCS on trees.

struct Literal {
  std::uint32_t var = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct TwoSatClause {
  Literal left;
  Literal right;
};

struct TwoSatFormula {
  std::uint32_t num_vars = 0;
  std::vector<TwoSatClause> clauses;

  void validate() const;
  bool satisfies(const TwoSatClause& clause, std::span<const bool> assignment) const;
  std::size_t satisfied_count(std::span<const bool> assignment) const;
};

// DIMACS CNF restricted to 2-literal clauses (`p cnf <n> <m>`, each clause
// line has exactly two nonzero literals followed by 0).
TwoSatFormula parse_two_sat(std::string_view text);
std::string format_two_sat(const TwoSatFormula& f);

// Vertex ids per gadget role. Indices are 0-based (variable i, clause j);
// position a in a path is 0-based (x_i^1 is pos_literal[i][0]).
//
// Vertex ids are allocated variable-major (x_i^1..4, x̄_i^1..4, s_i^1..M,
// s̄_i^1..M), then clause-major (y^1..7, z^1..7, w^1..7), then v1, v2, v3.
// Colors: literal colors (c_i, c̄_i per variable), stabilizer colors
// variable-major, clause colors, the central color.
struct TreeReductionLayout {
  std::uint32_t num_vars = 0;
  std::uint32_t num_clauses = 0;
  std::uint32_t stabilizers = 0;  // M

  std::vector<std::array<Vertex, 4>> pos_literal;
  std::vector<std::array<Vertex, 4>> neg_literal;
  std::vector<std::vector<Vertex>> pos_stabilizers;
  std::vector<std::vector<Vertex>> neg_stabilizers;
  std::vector<std::array<Vertex, 7>> left_path;
  std::vector<std::array<Vertex, 7>> right_path;
  std::vector<std::array<Vertex, 7>> clause_path;
  std::array<Vertex, 3> central{};

  Color literal_color(std::uint32_t var, bool positive) const {
    return 2 * var + (positive ? 1 : 2);
  }
  Color stabilizer_color(std::uint32_t var, std::uint32_t j) const {
    return 2 * num_vars + var * stabilizers + j + 1;
  }
  Color clause_color(std::uint32_t clause) const {
    return 2 * num_vars + num_vars * stabilizers + clause + 1;
  }
  Color central_color() const { return 2 * num_vars + num_vars * stabilizers + num_clauses + 1; }

  // n(2M + 8) + 21m + 3
  std::size_t expected_vertices() const;
  // 2n + nM + m + 1
  std::size_t expected_colors() const;
  // N(k) = n(M + 2) + 2k + 3(m - k) + 1
  std::int64_t target_size(std::int64_t satisfied) const;
  // N(m) < (n + 1) M, the inequality the stabilizer argument needs.
  bool stabilizers_dominate() const;
};

struct TreeReduction {
  ColoredGraph graph;
  TreeReductionLayout layout;
  ReductionMetadata metadata;
};

// M defaults to n³. Throws std::invalid_argument when M < 1.
TreeReduction max2sat_to_tree(const TwoSatFormula& f,
                              std::optional<std::uint32_t> stabilizers = std::nullopt);

// The consistent subset V_A built from a truth assignment; its size is N(k)
// for k satisfied clauses.
Certificate assignment_certificate(const TreeReductionLayout& layout, const TwoSatFormula& f,
                                   std::span<const bool> assignment);

// ---------------------------------------------------------------------------
// Set cover -> MSCS. Blue element vertices x_1..x_n, a blue clique of set
// vertices y_1..y_m with membership edges, red r1 adjacent to every x, red
// r2 adjacent to r1. Cover of size k iff strict consistent subset of size
// k + 1.

inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;

struct SetCoverLayout {
  std::vector<Vertex> elements;
  std::vector<Vertex> sets;
  Vertex r1 = 0;
  Vertex r2 = 0;
};

struct SetCoverReduction {
  ColoredGraph graph;
  ReductionMetadata metadata;
  SetCoverLayout layout;
};

SetCoverReduction setcover_to_mscs(const SetCoverInstance& sc);

// {y_j : j ∈ cover} ∪ {r2}. Throws std::invalid_argument when the sets do not
// cover the universe.
Certificate setcover_mscs_certificate(const SetCoverReduction& r, const SetCoverInstance& sc,
                                      std::span<const std::uint32_t> cover);

// ---------------------------------------------------------------------------
// Dominating set -> MSCS. Each vertex v gets a pendant path
// v - r1(v) - b1(v) - b2(v) - b3(v); V(G) and r1 are red, the b's blue.
// Dominating set of size k iff strict consistent subset of size n + k.
// Planarity is preserved but never checked.

struct PlanarLayout {
  std::vector<Vertex> r1;
  std::vector<Vertex> b1;
  std::vector<Vertex> b2;
  std::vector<Vertex> b3;
};

struct PlanarReduction {
  ColoredGraph graph;
  ReductionMetadata metadata;
  PlanarLayout layout;
};

PlanarReduction ds_planar_to_mscs(const ColoredGraph& g);

// {v, b2(v) : v ∈ D} ∪ {b3(v) : v ∉ D}. Throws std::invalid_argument when D
// does not dominate g.
Certificate ds_mscs_certificate(const PlanarLayout& layout, const ColoredGraph& g,
                                std::span<const Vertex> dominating_set);

}  // namespace mcs
