#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcs {

// Vertices are 0-based inside the library. Every text format and the CLI use
// 1-based ids; conversion happens only in the readers and writers.
using Vertex = std::uint32_t;

// Colors are 1-based everywhere: a graph with c classes uses ids 1..c.
using Color = std::uint32_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex w;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph with a total coloring into classes 1..c.
// Immutable after construction. Connectivity is not required here; solvers
// and checkers state it as a precondition.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Throws std::invalid_argument on a self-loop, a duplicate edge, an
  // endpoint out of range, or a color outside 1..num_colors.
  ColoredGraph(std::vector<Color> colors, Color num_colors,
               std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return colors_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  Color num_colors() const noexcept { return num_colors_; }

  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex w) const;

  // Edges with u < w, in lexicographic order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Vertices of each color class; index 0 is unused.
  std::vector<VertexSet> color_classes() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.num_colors_ == b.num_colors_ && a.colors_ == b.colors_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<Color> colors_;
  Color num_colors_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

bool is_connected(const ColoredGraph& g);

// n-1 edges and connected.
bool is_tree(const ColoredGraph& g);

// Reads the CCG instance format:
//   c <comment>              (anywhere)
//   p ccg <n> <m> <colors>   (first non-comment line)
//   v <id> <color>           (exactly n)
//   e <u> <w>                (exactly m)
// Throws ParseError naming the offending line.
ColoredGraph parse_ccg(std::string_view text);

// Writes the canonical CCG form: header, `v` lines by id, `e` lines in
// lexicographic order. Each comment becomes a `c` line after the header.
std::string format_ccg(const ColoredGraph& g,
                       std::span<const std::string> comments = {});

// Reads a subset file (`s <id> <id> ...`, strictly increasing, 1-based) and
// returns 0-based ids. Ids above `num_vertices` are a ParseError.
VertexSet parse_subset(std::string_view text, std::size_t num_vertices);

std::string format_subset(std::span<const Vertex> subset);

// Normalizes an arbitrary vertex list into a VertexSet.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

}  // namespace mcs
