#include "mcs/tree_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcs/errors.hpp"

namespace mcs {

namespace {

constexpr DpValue kUnknown = kInfeasible - 1;

struct Nearest {
  ExtDist dist;
  ColorSet colors;
};

// The nearer of two (distance, colors) summaries; ties merge colors.
Nearest nearer(Nearest a, Nearest b) {
  if (a.dist < b.dist) return a;
  if (b.dist < a.dist) return b;
  return {a.dist, a.colors | b.colors};
}

DpValue add(DpValue a, DpValue b) {
  if (a == kInfeasible || b == kInfeasible) return kInfeasible;
  return a + b;
}

// Nonempty submasks of `mask` in increasing numeric order.
template <typename Visit>
bool for_each_submask(std::uint64_t mask, Visit&& visit) {
  for (std::uint64_t sub = (0 - mask) & mask; sub != 0; sub = (sub - mask) & mask) {
    if (!visit(ColorSet::from_bits(sub))) return false;
  }
  return true;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::size_t DpKeyHash::operator()(const DpKey& k) const noexcept {
  std::uint64_t h = mix((std::uint64_t{k.v} << 32) | k.i);
  h = mix(h ^ ((std::uint64_t{k.in_dist.value()} << 32) | k.out_dist.value()));
  h = mix(h ^ k.sib_dist.value());
  h = mix(h ^ k.in_colors.bits());
  h = mix(h ^ k.out_colors.bits());
  h = mix(h ^ k.sib_colors.bits());
  return static_cast<std::size_t>(h);
}

TreeMcsSolver::TreeMcsSolver(const ColoredGraph& g, TreeDpOptions options)
    : TreeMcsSolver(RootedTree(g, 0), options) {}

TreeMcsSolver::TreeMcsSolver(RootedTree tree, TreeDpOptions options)
    : tree_(std::move(tree)), options_(options) {
  if (tree_.graph().num_colors() > ColorSet::kMaxColors) {
    throw PreconditionError("tree DP supports at most " + std::to_string(ColorSet::kMaxColors) +
                            " colors, got " + std::to_string(tree_.graph().num_colors()));
  }
  const std::size_t n = tree_.size();
  level_offset_.assign(n, 0);
  prefix_offset_.assign(n, 0);
  std::size_t levels = 0;
  std::size_t prefixes = 0;
  for (Vertex v = 0; v < n; ++v) {
    level_offset_[v] = levels;
    levels += (tree_.num_children(v) + 1) * (tree_.height(v) + 1);
    prefix_offset_[v] = prefixes;
    prefixes += tree_.num_children(v);
  }
  prefix_levels_.assign(levels, ColorSet{});
  prefix_counts_.assign(prefixes, 0);

  auto preorder = tree_.preorder();
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const Vertex v = *it;
    const std::size_t width = tree_.height(v) + 1;
    ColorSet* rows = prefix_levels_.data() + level_offset_[v];
    rows[0] = ColorSet::single(tree_.color(v));
    for (std::size_t i = 1; i <= tree_.num_children(v); ++i) {
      ColorSet* row = rows + i * width;
      std::copy(row - width, row, row);
      const Vertex c = tree_.child(v, i);
      for (std::uint32_t d = 1; d <= tree_.height(c) + 1; ++d) {
        row[d] |= subtree_level_colors(c, d - 1);
      }
    }
  }

  select_cache_.resize(n);
  for (Vertex v = 0; v < n; ++v) select_cache_[v].assign(tree_.num_children(v) + 1, kUnknown);
  best_child_cache_.assign(n, kUnknown);
}

ColorSet TreeMcsSolver::prefix_level_colors(Vertex v, std::size_t i, std::uint32_t d) const {
  const std::size_t width = tree_.height(v) + 1;
  if (d >= width) return {};
  return prefix_levels_[level_offset_[v] + i * width + d];
}

std::size_t TreeMcsSolver::max_entries_per_prefix() const {
  if (prefix_counts_.empty()) return 0;
  return *std::max_element(prefix_counts_.begin(), prefix_counts_.end());
}

DpKey TreeMcsSolver::canonical(const DpKey& key) const {
  if (!options_.normalize_keys) return key;
  Nearest ext = nearer({key.out_dist, key.out_colors}, {key.sib_dist, key.sib_colors});
  if (key.in_dist.is_finite() && ext.dist > key.in_dist) ext = {};
  DpKey out = key;
  out.out_dist = ext.dist;
  out.out_colors = ext.colors;
  out.sib_dist = ExtDist::infinity();
  out.sib_colors = {};
  return out;
}

DpValue TreeMcsSolver::value(const DpKey& key) {
  if (key.v >= tree_.size() || key.i > tree_.num_children(key.v)) {
    throw std::invalid_argument("DP key names a prefix outside the tree");
  }
  const ColorSet palette = ColorSet::all(tree_.graph().num_colors());
  auto check = [&](ExtDist d, ColorSet c, const char* which) {
    if (d.is_finite() == c.empty() || !c.subset_of(palette)) {
      throw std::invalid_argument(std::string("DP key has inconsistent ") + which + " parameters");
    }
  };
  check(key.in_dist, key.in_colors, "in");
  check(key.out_dist, key.out_colors, "out");
  check(key.sib_dist, key.sib_colors, "sib");
  return evaluate(key);
}

DpValue TreeMcsSolver::evaluate(const DpKey& key) {
  const Vertex v = key.v;
  Nearest nearest = nearer(nearer({key.in_dist, key.in_colors}, {key.out_dist, key.out_colors}),
                           {key.sib_dist, key.sib_colors});
  if (!nearest.colors.contains(tree_.color(v))) return kInfeasible;

  if (key.in_dist.is_finite()) {
    const std::uint32_t d = key.in_dist.value();
    if (d > tree_.prefix_height(v, key.i) ||
        !key.in_colors.subset_of(prefix_level_colors(v, key.i, d))) {
      return kInfeasible;
    }
    if (d == 0) {
      return key.in_colors == ColorSet::single(tree_.color(v)) ? select_cost(v, key.i)
                                                               : kInfeasible;
    }
  }
  // With i = 0 the only survivor here is W = ∅.
  if (key.i == 0) return 0;

  const DpKey stored = canonical(key);
  if (auto it = memo_.find(stored); it != memo_.end()) return it->second;
  const DpValue result = compute(stored);
  memo_.emplace(stored, result);
  ++prefix_counts_[prefix_offset_[v] + key.i - 1];
  return result;
}

DpValue TreeMcsSolver::compute(const DpKey& key) {
  DpValue best = kInfeasible;
  for_each_split(key, [&](const Split& split) {
    best = std::min(best, split_value(split, best));
    return true;
  });
  return best;
}

DpValue TreeMcsSolver::split_value(const Split& split, DpValue bound) {
  const DpValue left = evaluate(split.left);
  if (left >= bound) return kInfeasible;
  const DpValue right = evaluate(split.right);
  return add(left, right);
}

DpValue TreeMcsSolver::select_cost(Vertex v, std::size_t i) {
  if (i == 0) return 1;
  DpValue& slot = select_cache_[v][i];
  if (slot == kUnknown) slot = add(select_cost(v, i - 1), best_child(tree_.child(v, i), nullptr));
  return slot;
}

DpValue TreeMcsSolver::best_child(Vertex child, DpKey* argmin) {
  if (argmin == nullptr && best_child_cache_[child] != kUnknown) return best_child_cache_[child];
  DpKey key;
  key.v = child;
  key.i = static_cast<std::uint32_t>(tree_.num_children(child));
  key.out_dist = ExtDist(1);
  key.out_colors = ColorSet::single(tree_.color(tree_.parent(child)));

  DpValue best = kInfeasible;
  auto consider = [&](const DpKey& candidate) {
    const DpValue value = evaluate(candidate);
    if (value < best) {
      best = value;
      if (argmin) *argmin = candidate;
    }
  };
  for (std::uint32_t d = 0; d <= tree_.height(child); ++d) {
    key.in_dist = ExtDist(d);
    for_each_submask(subtree_level_colors(child, d).bits(), [&](ColorSet c) {
      key.in_colors = c;
      consider(key);
      return true;
    });
  }
  key.in_dist = ExtDist::infinity();
  key.in_colors = {};
  consider(key);
  best_child_cache_[child] = best;
  return best;
}

template <typename Visit>
void TreeMcsSolver::for_each_split(const DpKey& key, Visit&& visit) const {
  const Vertex v = key.v;
  const Vertex vi = tree_.child(v, key.i);
  const auto vi_children = static_cast<std::uint32_t>(tree_.num_children(vi));

  auto emit = [&](ExtDist da, ColorSet ca, ExtDist db, ColorSet cb) {
    const Nearest x = nearer({db, cb}, {key.sib_dist, key.sib_colors});
    const Nearest ext =
        nearer(nearer({da, ca}, {key.sib_dist, key.sib_colors}), {key.out_dist, key.out_colors});
    Split split;
    split.left = DpKey{v,        key.i - 1,     da, key.out_dist, x.dist,
                       ca,       key.out_colors, x.colors};
    split.right = DpKey{vi,      vi_children,         db.minus_one(), ext.dist.plus_one(),
                        ExtDist::infinity(), cb, ext.colors, ColorSet{}};
    return visit(split);
  };

  if (!key.in_dist.is_finite()) {
    emit(ExtDist::infinity(), {}, ExtDist::infinity(), {});
    return;
  }
  const ExtDist in = key.in_dist;
  const ColorSet cin = key.in_colors;

  // Equal distances: every color of Cin goes left, right, or both.
  std::vector<Color> colors;
  for (Color c = 1; c <= ColorSet::kMaxColors; ++c) {
    if (cin.contains(c)) colors.push_back(c);
  }
  std::vector<int> digit(colors.size(), 0);
  while (true) {
    ColorSet ca;
    ColorSet cb;
    for (std::size_t j = 0; j < colors.size(); ++j) {
      if (digit[j] != 1) ca |= ColorSet::single(colors[j]);
      if (digit[j] != 0) cb |= ColorSet::single(colors[j]);
    }
    if (!ca.empty() && !cb.empty() && !emit(in, ca, in, cb)) return;
    std::size_t j = 0;
    while (j < digit.size() && digit[j] == 2) digit[j++] = 0;
    if (j == digit.size()) break;
    ++digit[j];
  }

  // Right side strictly nearer.
  const std::uint32_t left_height = tree_.prefix_height(v, key.i - 1);
  for (std::uint32_t da = in.value() + 1; da <= left_height; ++da) {
    const bool go = for_each_submask(prefix_level_colors(v, key.i - 1, da).bits(),
                                     [&](ColorSet ca) { return emit(ExtDist(da), ca, in, cin); });
    if (!go) return;
  }
  if (!emit(ExtDist::infinity(), {}, in, cin)) return;

  // Left side strictly nearer.
  for (std::uint32_t db = in.value() + 1; db <= tree_.height(vi) + 1; ++db) {
    const bool go = for_each_submask(subtree_level_colors(vi, db - 1).bits(),
                                     [&](ColorSet cb) { return emit(in, cin, ExtDist(db), cb); });
    if (!go) return;
  }
  emit(in, cin, ExtDist::infinity(), {});
}

VertexSet TreeMcsSolver::reconstruct(const DpKey& key) {
  if (value(key) == kInfeasible) throw std::logic_error("reconstruct on an infeasible DP key");
  VertexSet out;
  reconstruct_into(key, out);
  return make_vertex_set(std::move(out));
}

void TreeMcsSolver::reconstruct_into(const DpKey& key, VertexSet& out) {
  if (key.in_dist == ExtDist(0)) {
    out.push_back(key.v);
    for (std::size_t j = 1; j <= key.i; ++j) {
      DpKey child_key;
      best_child(tree_.child(key.v, j), &child_key);
      reconstruct_into(child_key, out);
    }
    return;
  }
  if (key.i == 0) return;

  const DpKey stored = canonical(key);
  const DpValue target = evaluate(stored);
  bool found = false;
  for_each_split(stored, [&](const Split& split) {
    if (split_value(split, kInfeasible) != target) return true;
    reconstruct_into(split.left, out);
    reconstruct_into(split.right, out);
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("DP table lost the optimal split during reconstruction");
}

TreeMcsSolver::Solution TreeMcsSolver::solve() {
  const Vertex r = tree_.root();
  DpKey key;
  key.v = r;
  key.i = static_cast<std::uint32_t>(tree_.num_children(r));

  Solution best;
  DpValue best_value = kInfeasible;
  for (std::uint32_t d = 0; d <= tree_.height(r); ++d) {
    key.in_dist = ExtDist(d);
    for_each_submask(subtree_level_colors(r, d).bits(), [&](ColorSet c) {
      key.in_colors = c;
      const DpValue v = evaluate(key);
      if (v < best_value) {
        best_value = v;
        best.key = key;
      }
      return true;
    });
  }
  // W = V(T) is always feasible, so some key wins.
  if (best_value == kInfeasible) throw std::logic_error("tree DP found no consistent subset");
  best.size = best_value;
  best.witness = reconstruct(best.key);
  return best;
}

Certificate solve_tree_mcs(const ColoredGraph& g) {
  TreeMcsSolver solver(g);
  return Certificate{Variant::kMcs, solver.solve().witness, Provenance::kTreeDpOptimal};
}

}  // namespace mcs
