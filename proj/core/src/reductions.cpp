#include "mcs/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mcs/errors.hpp"
#include "mcs/exact_solver.hpp"
#include "text_lines.hpp"

namespace mcs {

std::string format_metadata(const ReductionMetadata& meta) {
  std::ostringstream out;
  out << "reduction=" << meta.reduction << '\n';
  for (const auto& [key, value] : meta.params) out << key << '=' << value << '\n';
  out << "formula=" << meta.formula << '\n';
  for (const auto& [name, v] : meta.roles) out << "role " << name << ' ' << v + 1 << '\n';
  return out.str();
}

ParsedMetadata parse_metadata(std::string_view text) {
  ParsedMetadata meta;
  for (const detail::Line& line : detail::split_lines(text)) {
    const auto& tok = line.tokens;
    if (tok.empty()) continue;
    if (tok[0] == "role") {
      if (tok.size() != 3) {
        throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'role <name> <id>'");
      }
      const auto id =
          detail::expect_uint(tok[2], line.number, ParseErrorKind::kMalformedLine, "vertex id");
      if (id < 1) throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number, "vertex 0");
      meta.roles.emplace_back(std::string(tok[1]), static_cast<Vertex>(id - 1));
      continue;
    }
    // Values may contain spaces; split the raw line at the first '='.
    const std::string_view first = tok.front();
    const char* begin = first.data();
    const char* end = tok.back().data() + tok.back().size();
    const std::string_view raw(begin, static_cast<std::size_t>(end - begin));
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'key=value'");
    }
    meta.entries.emplace_back(std::string(raw.substr(0, eq)), std::string(raw.substr(eq + 1)));
  }
  return meta;
}

namespace {

std::string name(const char* prefix, std::size_t a) { return prefix + std::to_string(a); }

std::string name(const char* prefix, std::size_t a, std::size_t b) {
  return prefix + std::to_string(a) + "_" + std::to_string(b);
}

void require_dominating(const ColoredGraph& g, std::span<const Vertex> d) {
  if (!is_dominating_set(g, d)) throw std::invalid_argument("vertex set does not dominate the graph");
}

}  // namespace

// ---------------------------------------------------------------------------

DominatingReduction dominating_to_mcs(const ColoredGraph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});
  std::vector<Color> colors(n, 1);
  colors.push_back(2);

  DominatingReduction r{ColoredGraph(std::move(colors), 2, std::move(edges)), {}, n};
  r.metadata.reduction = "dominating-mcs";
  r.metadata.params = {{"n", std::to_string(n)}, {"m", std::to_string(g.num_edges())}};
  r.metadata.formula = "k+1";
  r.metadata.target_size = [](std::int64_t k) { return k + 1; };
  r.metadata.roles = {{"x", n}};
  return r;
}

Certificate dominating_mcs_certificate(const DominatingReduction& r, const ColoredGraph& g,
                                       std::span<const Vertex> dominating_set) {
  require_dominating(g, dominating_set);
  std::vector<Vertex> s(dominating_set.begin(), dominating_set.end());
  s.push_back(r.apex);
  return Certificate{Variant::kMcs, make_vertex_set(std::move(s)), Provenance::kConstructed};
}

// ---------------------------------------------------------------------------

std::size_t TreeReductionLayout::expected_vertices() const {
  return std::size_t{num_vars} * (2 * std::size_t{stabilizers} + 8) + 21 * std::size_t{num_clauses} +
         3;
}

std::size_t TreeReductionLayout::expected_colors() const {
  return 2 * std::size_t{num_vars} + std::size_t{num_vars} * stabilizers + num_clauses + 1;
}

std::int64_t TreeReductionLayout::target_size(std::int64_t satisfied) const {
  const std::int64_t n = num_vars;
  const std::int64_t m = num_clauses;
  return n * (std::int64_t{stabilizers} + 2) + 2 * satisfied + 3 * (m - satisfied) + 1;
}

bool TreeReductionLayout::stabilizers_dominate() const {
  return target_size(num_clauses) < (std::int64_t{num_vars} + 1) * stabilizers;
}

TreeReduction max2sat_to_tree(const TwoSatFormula& f, std::optional<std::uint32_t> stabilizers) {
  f.validate();
  const std::uint32_t n = f.num_vars;
  const auto m = static_cast<std::uint32_t>(f.clauses.size());
  const std::uint32_t big_m = stabilizers.value_or(n * n * n);
  if (big_m < 1) throw std::invalid_argument("stabilizer count M must be at least 1");

  TreeReductionLayout layout;
  layout.num_vars = n;
  layout.num_clauses = m;
  layout.stabilizers = big_m;

  std::vector<Color> colors;
  std::vector<Edge> edges;
  auto add_vertex = [&](Color c) {
    colors.push_back(c);
    return static_cast<Vertex>(colors.size() - 1);
  };
  auto add_path = [&](auto& path, Color c) {
    for (std::size_t a = 0; a < path.size(); ++a) {
      path[a] = add_vertex(c);
      if (a > 0) edges.push_back({path[a - 1], path[a]});
    }
  };

  layout.pos_literal.resize(n);
  layout.neg_literal.resize(n);
  layout.pos_stabilizers.assign(n, std::vector<Vertex>(big_m));
  layout.neg_stabilizers.assign(n, std::vector<Vertex>(big_m));
  for (std::uint32_t i = 0; i < n; ++i) {
    add_path(layout.pos_literal[i], layout.literal_color(i, true));
    add_path(layout.neg_literal[i], layout.literal_color(i, false));
    for (std::uint32_t j = 0; j < big_m; ++j) {
      layout.pos_stabilizers[i][j] = add_vertex(layout.stabilizer_color(i, j));
      edges.push_back({layout.pos_stabilizers[i][j], layout.pos_literal[i][0]});
    }
    for (std::uint32_t j = 0; j < big_m; ++j) {
      layout.neg_stabilizers[i][j] = add_vertex(layout.stabilizer_color(i, j));
      edges.push_back({layout.neg_stabilizers[i][j], layout.neg_literal[i][0]});
    }
  }

  layout.left_path.resize(m);
  layout.right_path.resize(m);
  layout.clause_path.resize(m);
  for (std::uint32_t j = 0; j < m; ++j) {
    const TwoSatClause& c = f.clauses[j];
    add_path(layout.left_path[j], layout.literal_color(c.left.var, c.left.positive));
    add_path(layout.right_path[j], layout.literal_color(c.right.var, c.right.positive));
    add_path(layout.clause_path[j], layout.clause_color(j));
    edges.push_back({layout.left_path[j][0], layout.clause_path[j][1]});
    edges.push_back({layout.right_path[j][0], layout.clause_path[j][5]});
  }

  add_path(layout.central, layout.central_color());
  const Vertex v1 = layout.central[0];
  for (std::uint32_t i = 0; i < n; ++i) {
    edges.push_back({layout.pos_literal[i][0], v1});
    edges.push_back({layout.neg_literal[i][0], v1});
  }
  for (std::uint32_t j = 0; j < m; ++j) edges.push_back({layout.clause_path[j][3], v1});

  ColoredGraph graph(std::move(colors), static_cast<Color>(layout.expected_colors()),
                     std::move(edges));

  ReductionMetadata meta;
  meta.reduction = "max2sat-tree";
  meta.params = {{"n", std::to_string(n)},
                 {"m", std::to_string(m)},
                 {"M", std::to_string(big_m)},
                 {"stabilizers_dominate", layout.stabilizers_dominate() ? "true" : "false"}};
  meta.formula = "N(k)=n*(M+2)+2k+3(m-k)+1";
  meta.target_size = [layout_copy = layout](std::int64_t k) { return layout_copy.target_size(k); };
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < 4; ++a) {
      meta.roles.emplace_back(name("x", i + 1, a + 1), layout.pos_literal[i][a]);
    }
    for (std::size_t a = 0; a < 4; ++a) {
      meta.roles.emplace_back(name("nx", i + 1, a + 1), layout.neg_literal[i][a]);
    }
    for (std::uint32_t j = 0; j < big_m; ++j) {
      meta.roles.emplace_back(name("s", i + 1, j + 1), layout.pos_stabilizers[i][j]);
    }
    for (std::uint32_t j = 0; j < big_m; ++j) {
      meta.roles.emplace_back(name("ns", i + 1, j + 1), layout.neg_stabilizers[i][j]);
    }
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::size_t a = 0; a < 7; ++a) meta.roles.emplace_back(name("y", j + 1, a + 1), layout.left_path[j][a]);
    for (std::size_t a = 0; a < 7; ++a) meta.roles.emplace_back(name("z", j + 1, a + 1), layout.right_path[j][a]);
    for (std::size_t a = 0; a < 7; ++a) meta.roles.emplace_back(name("w", j + 1, a + 1), layout.clause_path[j][a]);
  }
  for (std::size_t a = 0; a < 3; ++a) meta.roles.emplace_back(name("v", a + 1), layout.central[a]);

  return TreeReduction{std::move(graph), std::move(layout), std::move(meta)};
}

Certificate assignment_certificate(const TreeReductionLayout& layout, const TwoSatFormula& f,
                                   std::span<const bool> assignment) {
  if (assignment.size() != layout.num_vars || f.num_vars != layout.num_vars ||
      f.clauses.size() != layout.num_clauses) {
    throw std::invalid_argument("assignment, formula and layout sizes disagree");
  }
  std::vector<Vertex> s;
  for (std::uint32_t i = 0; i < layout.num_vars; ++i) {
    if (assignment[i]) {
      s.insert(s.end(), layout.pos_stabilizers[i].begin(), layout.pos_stabilizers[i].end());
      s.push_back(layout.pos_literal[i][1]);
      s.push_back(layout.neg_literal[i][3]);
    } else {
      s.insert(s.end(), layout.neg_stabilizers[i].begin(), layout.neg_stabilizers[i].end());
      s.push_back(layout.pos_literal[i][3]);
      s.push_back(layout.neg_literal[i][1]);
    }
  }
  for (std::uint32_t j = 0; j < layout.num_clauses; ++j) {
    const TwoSatClause& c = f.clauses[j];
    const bool left = assignment[c.left.var] == c.left.positive;
    const bool right = assignment[c.right.var] == c.right.positive;
    if (left) {
      s.push_back(layout.clause_path[j][6]);
      s.push_back(layout.right_path[j][0]);
    } else if (right) {
      s.push_back(layout.clause_path[j][0]);
      s.push_back(layout.left_path[j][0]);
    } else {
      s.push_back(layout.clause_path[j][0]);
      s.push_back(layout.left_path[j][0]);
      s.push_back(layout.right_path[j][6]);
    }
  }
  s.push_back(layout.central[2]);
  return Certificate{Variant::kMcs, make_vertex_set(std::move(s)), Provenance::kConstructed};
}

// ---------------------------------------------------------------------------

SetCoverReduction setcover_to_mscs(const SetCoverInstance& sc) {
  sc.validate();
  const std::uint32_t n = sc.num_elements;
  const auto m = static_cast<std::uint32_t>(sc.sets.size());

  SetCoverLayout layout;
  for (Vertex i = 0; i < n; ++i) layout.elements.push_back(i);
  for (Vertex j = 0; j < m; ++j) layout.sets.push_back(n + j);
  layout.r1 = n + m;
  layout.r2 = n + m + 1;

  std::vector<Edge> edges;
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::uint32_t e : sc.sets[j]) edges.push_back({layout.elements[e], layout.sets[j]});
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) edges.push_back({layout.sets[a], layout.sets[b]});
  }
  for (Vertex x : layout.elements) edges.push_back({x, layout.r1});
  edges.push_back({layout.r1, layout.r2});

  std::vector<Color> colors(n + m, kBlue);
  colors.push_back(kRed);
  colors.push_back(kRed);

  ReductionMetadata meta;
  meta.reduction = "setcover-mscs";
  meta.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
  meta.formula = "k+1";
  meta.target_size = [](std::int64_t k) { return k + 1; };
  for (std::uint32_t i = 0; i < n; ++i) meta.roles.emplace_back(name("x", i + 1), layout.elements[i]);
  for (std::uint32_t j = 0; j < m; ++j) meta.roles.emplace_back(name("y", j + 1), layout.sets[j]);
  meta.roles.emplace_back("r1", layout.r1);
  meta.roles.emplace_back("r2", layout.r2);

  return SetCoverReduction{ColoredGraph(std::move(colors), 2, std::move(edges)), std::move(meta),
                           std::move(layout)};
}

Certificate setcover_mscs_certificate(const SetCoverReduction& r, const SetCoverInstance& sc,
                                      std::span<const std::uint32_t> cover) {
  std::vector<char> covered(sc.num_elements, 0);
  for (std::uint32_t j : cover) {
    if (j >= sc.sets.size()) throw std::invalid_argument("cover names a set out of range");
    for (std::uint32_t e : sc.sets[j]) covered[e] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw std::invalid_argument("sets do not cover every element");
  }
  std::vector<Vertex> s;
  for (std::uint32_t j : cover) s.push_back(r.layout.sets[j]);
  s.push_back(r.layout.r2);
  return Certificate{Variant::kMscs, make_vertex_set(std::move(s)), Provenance::kConstructed};
}

// ---------------------------------------------------------------------------

PlanarReduction ds_planar_to_mscs(const ColoredGraph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  PlanarLayout layout;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Color> colors(5 * std::size_t{n}, kBlue);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex base = n + 4 * v;
    layout.r1.push_back(base);
    layout.b1.push_back(base + 1);
    layout.b2.push_back(base + 2);
    layout.b3.push_back(base + 3);
    colors[v] = kRed;
    colors[base] = kRed;
    edges.push_back({v, base});
    edges.push_back({base, base + 1});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 2, base + 3});
  }

  ReductionMetadata meta;
  meta.reduction = "dominating-mscs";
  meta.params = {{"n", std::to_string(n)}, {"m", std::to_string(g.num_edges())}};
  meta.formula = "n+k";
  meta.target_size = [n](std::int64_t k) { return std::int64_t{n} + k; };
  for (Vertex v = 0; v < n; ++v) {
    meta.roles.emplace_back(name("r1_", v + 1), layout.r1[v]);
    meta.roles.emplace_back(name("b1_", v + 1), layout.b1[v]);
    meta.roles.emplace_back(name("b2_", v + 1), layout.b2[v]);
    meta.roles.emplace_back(name("b3_", v + 1), layout.b3[v]);
  }

  return PlanarReduction{ColoredGraph(std::move(colors), 2, std::move(edges)), std::move(meta),
                         std::move(layout)};
}

Certificate ds_mscs_certificate(const PlanarLayout& layout, const ColoredGraph& g,
                                std::span<const Vertex> dominating_set) {
  require_dominating(g, dominating_set);
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : dominating_set) in[v] = 1;
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      s.push_back(v);
      s.push_back(layout.b2[v]);
    } else {
      s.push_back(layout.b3[v]);
    }
  }
  return Certificate{Variant::kMscs, make_vertex_set(std::move(s)), Provenance::kConstructed};
}

}  // namespace mcs
