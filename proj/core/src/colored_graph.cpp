#include "mcs/colored_graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mcs/errors.hpp"
#include "text_lines.hpp"

namespace mcs {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kVertexOutOfRange: return "vertex id out of range";
    case ParseErrorKind::kMissingColor: return "missing color line";
    case ParseErrorKind::kDuplicateColor: return "duplicate color line";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kColorOutOfRange: return "color out of range";
    case ParseErrorKind::kCountMismatch: return "count mismatch";
    case ParseErrorKind::kNotIncreasing: return "ids not strictly increasing";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? std::string(to_string(kind)) + ": " + what
                                   : "line " + std::to_string(line) + ": " +
                                         to_string(kind) + ": " + what),
      kind_(kind),
      line_(line) {}

ColoredGraph::ColoredGraph(std::vector<Color> colors, Color num_colors, std::vector<Edge> edges)
    : colors_(std::move(colors)), num_colors_(num_colors) {
  const std::size_t n = colors_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (colors_[v] < 1 || colors_[v] > num_colors_) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has color " +
                                  std::to_string(colors_[v]) + " outside 1.." +
                                  std::to_string(num_colors_));
    }
  }
  for (Edge& e : edges) {
    if (e.u >= n || e.w >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.w) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.w) std::swap(e.u, e.w);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u + 1) + "-" +
                                std::to_string(dup->w + 1));
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.w];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.w;
    adjacency_[cursor[e.w]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool ColoredGraph::has_edge(Vertex u, Vertex w) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), w);
}

std::vector<VertexSet> ColoredGraph::color_classes() const {
  std::vector<VertexSet> classes(num_colors_ + 1);
  for (Vertex v = 0; v < num_vertices(); ++v) classes[colors_[v]].push_back(v);
  return classes;
}

bool is_connected(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const ColoredGraph& g) {
  return g.num_vertices() > 0 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

using detail::expect_uint;

ColoredGraph parse_ccg(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0, m = 0, c = 0;
  std::vector<Color> colors;
  std::vector<std::size_t> color_line;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::size_t last_line = 0;

  for (const detail::Line& line : detail::split_lines(text)) {
    last_line = line.number;
    const auto& tok = line.tokens;
    if (tok.empty() || tok[0] == "c") continue;

    if (!have_header) {
      if (tok[0] != "p" || tok.size() != 5 || tok[1] != "ccg") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line.number,
                         "expected 'p ccg <n> <m> <colors>'");
      }
      n = expect_uint(tok[2], line.number, ParseErrorKind::kMalformedHeader, "vertex count");
      m = expect_uint(tok[3], line.number, ParseErrorKind::kMalformedHeader, "edge count");
      c = expect_uint(tok[4], line.number, ParseErrorKind::kMalformedHeader, "color count");
      if (c == 0 && n > 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line.number,
                         "color count must be positive");
      }
      if (n > 0xFFFFFFF0ULL || c > 0xFFFFFFF0ULL) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line.number, "count too large");
      }
      colors.assign(n, 0);
      color_line.assign(n, 0);
      have_header = true;
      continue;
    }

    if (tok[0] == "p") {
      throw ParseError(ParseErrorKind::kMalformedHeader, line.number, "second header line");
    }
    if (tok[0] == "v") {
      if (tok.size() != 3) {
        throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'v <id> <color>'");
      }
      auto id = expect_uint(tok[1], line.number, ParseErrorKind::kMalformedLine, "vertex id");
      auto color = expect_uint(tok[2], line.number, ParseErrorKind::kMalformedLine, "color id");
      if (id < 1 || id > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                         "vertex " + std::to_string(id) + " not in 1.." + std::to_string(n));
      }
      if (color < 1 || color > c) {
        throw ParseError(ParseErrorKind::kColorOutOfRange, line.number,
                         "color " + std::to_string(color) + " not in 1.." + std::to_string(c));
      }
      if (color_line[id - 1] != 0) {
        throw ParseError(ParseErrorKind::kDuplicateColor, line.number,
                         "vertex " + std::to_string(id) + " already colored on line " +
                             std::to_string(color_line[id - 1]));
      }
      colors[id - 1] = static_cast<Color>(color);
      color_line[id - 1] = line.number;
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) {
        throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'e <u> <w>'");
      }
      auto u = expect_uint(tok[1], line.number, ParseErrorKind::kMalformedLine, "vertex id");
      auto w = expect_uint(tok[2], line.number, ParseErrorKind::kMalformedLine, "vertex id");
      for (auto x : {u, w}) {
        if (x < 1 || x > n) {
          throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                           "vertex " + std::to_string(x) + " not in 1.." + std::to_string(n));
        }
      }
      if (u == w) {
        throw ParseError(ParseErrorKind::kSelfLoop, line.number,
                         "edge " + std::to_string(u) + "-" + std::to_string(w));
      }
      if (edges.size() == m) {
        throw ParseError(ParseErrorKind::kCountMismatch, line.number,
                         "more than " + std::to_string(m) + " edge lines");
      }
      Edge e{static_cast<Vertex>(std::min(u, w) - 1), static_cast<Vertex>(std::max(u, w) - 1)};
      edges.push_back(e);
      edge_line.push_back(line.number);
      continue;
    }
    throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                     "unknown line type '" + std::string(tok[0]) + "'");
  }

  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, last_line, "missing 'p ccg' header");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (color_line[v] == 0) {
      throw ParseError(ParseErrorKind::kMissingColor, last_line,
                       "no color line for vertex " + std::to_string(v + 1));
    }
  }
  if (edges.size() != m) {
    throw ParseError(ParseErrorKind::kCountMismatch, last_line,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a] < edges[b] || (edges[a] == edges[b] && edge_line[a] < edge_line[b]);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (edges[order[k]] == edges[order[k - 1]]) {
        const Edge& e = edges[order[k]];
        throw ParseError(ParseErrorKind::kDuplicateEdge, edge_line[order[k]],
                         "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.w + 1) +
                             " already given on line " + std::to_string(edge_line[order[k - 1]]));
      }
    }
  }
  return ColoredGraph(std::move(colors), static_cast<Color>(c), std::move(edges));
}

std::string format_ccg(const ColoredGraph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  out << "p ccg " << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.num_colors() << '\n';
  for (const std::string& comment : comments) out << "c " << comment << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "v " << v + 1 << ' ' << g.color(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.w + 1 << '\n';
  return out.str();
}

VertexSet parse_subset(std::string_view text, std::size_t num_vertices) {
  std::optional<VertexSet> subset;
  std::size_t last_line = 0;
  for (const detail::Line& line : detail::split_lines(text)) {
    last_line = line.number;
    const auto& tok = line.tokens;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] != "s" || subset) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       subset ? "more than one 's' line" : "expected 's <id> ...'");
    }
    subset.emplace();
    for (std::size_t k = 1; k < tok.size(); ++k) {
      auto id = expect_uint(tok[k], line.number, ParseErrorKind::kMalformedLine, "vertex id");
      if (id < 1 || id > num_vertices) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                         "vertex " + std::to_string(id) + " not in 1.." +
                             std::to_string(num_vertices));
      }
      if (!subset->empty() && id - 1 <= subset->back()) {
        throw ParseError(ParseErrorKind::kNotIncreasing, line.number,
                         "vertex " + std::to_string(id) + " after " +
                             std::to_string(subset->back() + 1));
      }
      subset->push_back(static_cast<Vertex>(id - 1));
    }
  }
  if (!subset) throw ParseError(ParseErrorKind::kMalformedLine, last_line, "missing 's' line");
  return *subset;
}

std::string format_subset(std::span<const Vertex> subset) {
  std::string out = "s";
  for (Vertex v : subset) {
    out += ' ';
    out += std::to_string(v + 1);
  }
  out += '\n';
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace mcs
