// mcs: solve, verify, generate, inspect and benchmark consistent-subset
// instances.
//
// Exit codes: 0 success, 1 verification failed, 2 parse error or invalid
// parameters, 3 solver precondition violated.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcs/colored_graph.hpp"
#include "mcs/consistency.hpp"
#include "mcs/errors.hpp"
#include "mcs/exact_solver.hpp"
#include "mcs/intervals.hpp"
#include "mcs/random_instances.hpp"
#include "mcs/reductions.hpp"
#include "mcs/tree_solver.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

// Bad input that is not a ParseError: unreadable files, invalid flag
// combinations. Maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write " + path);
}

mcs::Variant parse_variant(const std::string& name) {
  return name == "mscs" ? mcs::Variant::kMscs : mcs::Variant::kMcs;
}

std::string join_ids(std::span<const mcs::Vertex> ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ids[k] + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string variant = "mcs";
  std::string algo = "auto";
  std::size_t cap = 20;
};

int cmd_solve(const SolveArgs& a) {
  const mcs::Variant variant = parse_variant(a.variant);
  if (a.algo == "tree-dp" && variant != mcs::Variant::kMcs) {
    throw UsageError("--algo tree-dp solves only --variant mcs");
  }
  const mcs::ColoredGraph g = mcs::parse_ccg(read_file(a.input));

  std::string algo = a.algo;
  if (algo == "auto") {
    algo = variant == mcs::Variant::kMcs && mcs::is_tree(g) ? "tree-dp" : "brute";
  }
  mcs::Certificate cert;
  if (algo == "tree-dp") {
    cert = mcs::solve_tree_mcs(g);
  } else {
    cert = mcs::brute_force(g, variant, {.vertex_cap = a.cap, .prune = true});
  }
  std::cout << "size=" << cert.size() << '\n'
            << "witness=" << join_ids(cert.witness) << '\n'
            << "algo=" << algo << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string subset;
  std::string variant = "mcs";
};

int cmd_verify(const VerifyArgs& a) {
  const mcs::ColoredGraph g = mcs::parse_ccg(read_file(a.input));
  const mcs::VertexSet s = mcs::parse_subset(read_file(a.subset), g.num_vertices());
  if (s.empty()) throw UsageError("subset is empty");
  const bool consistent = mcs::is_consistent(g, s);
  const bool strict = mcs::is_strict_consistent(g, s);
  std::cout << "consistent=" << (consistent ? "true" : "false") << '\n'
            << "strict=" << (strict ? "true" : "false") << '\n';
  const bool pass = parse_variant(a.variant) == mcs::Variant::kMcs ? consistent : strict;
  return pass ? 0 : kExitFailed;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string reduction;
  std::string input;
  std::string output;
  std::string certificate;
  std::optional<std::uint32_t> stabilizers;
  std::optional<std::uint32_t> per_gadget;
  std::optional<std::uint32_t> per_gap;
  std::uint32_t n = 10;
  std::uint32_t c = 2;
  std::uint32_t extra = 10;
  std::uint64_t seed = 1;
};

std::string require_input(const GenArgs& a) {
  if (a.input.empty()) throw UsageError("--reduction " + a.reduction + " needs --input");
  return read_file(a.input);
}

// Certificate inputs reuse the subset format over source ids (vertices,
// sets, or the variables set to true).
std::optional<std::vector<std::uint32_t>> read_certificate(const GenArgs& a, std::size_t universe) {
  if (a.certificate.empty()) return std::nullopt;
  auto ids = mcs::parse_subset(read_file(a.certificate), universe);
  return std::vector<std::uint32_t>(ids.begin(), ids.end());
}

void report_graph(const mcs::ColoredGraph& g) {
  std::cout << "vertices=" << g.num_vertices() << '\n'
            << "edges=" << g.num_edges() << '\n'
            << "colors=" << g.num_colors() << '\n';
}

void emit(const GenArgs& a, const mcs::ColoredGraph& g, const mcs::ReductionMetadata* meta,
          const std::optional<mcs::Certificate>& cert) {
  write_file(a.output + ".ccg", mcs::format_ccg(g));
  if (meta) write_file(a.output + ".meta", mcs::format_metadata(*meta));
  report_graph(g);
  if (cert) {
    write_file(a.output + ".cert", mcs::format_subset(cert->witness));
    std::cout << "certificate_size=" << cert->size() << '\n';
  }
}

int cmd_gen(const GenArgs& a) {
  const std::string& r = a.reduction;
  if (r == "random-tree" || r == "random-graph") {
    if (a.n < 1 || a.c < 1) throw UsageError("--n and --c must be at least 1");
    mcs::SplitMix64 rng(a.seed);
    const mcs::ColoredGraph g = r == "random-tree"
                                    ? mcs::random_tree(a.n, a.c, rng)
                                    : mcs::random_connected_graph(a.n, a.c, a.extra, rng);
    emit(a, g, nullptr, std::nullopt);
    return 0;
  }
  if (r == "ds-mcs" || r == "ds-mscs" || r == "vc-intervals") {
    const mcs::ColoredGraph src = mcs::parse_ccg(require_input(a));
    const auto cert_ids = read_certificate(a, src.num_vertices());
    if (r == "ds-mcs") {
      const auto red = mcs::dominating_to_mcs(src);
      std::optional<mcs::Certificate> cert;
      if (cert_ids) cert = mcs::dominating_mcs_certificate(red, src, *cert_ids);
      emit(a, red.graph, &red.metadata, cert);
    } else if (r == "ds-mscs") {
      const auto red = mcs::ds_planar_to_mscs(src);
      std::optional<mcs::Certificate> cert;
      if (cert_ids) cert = mcs::ds_mscs_certificate(red.layout, src, *cert_ids);
      emit(a, red.graph, &red.metadata, cert);
    } else {
      const auto red = mcs::vc_to_intervals(src, a.per_gadget, a.per_gap);
      write_file(a.output + ".intervals", mcs::format_intervals(red.instance));
      std::optional<mcs::Certificate> cert;
      if (cert_ids) cert = mcs::interval_cover_certificate(red.instance, src, *cert_ids);
      emit(a, mcs::intervals_to_graph(red.instance), &red.metadata, cert);
    }
    return 0;
  }
  if (r == "sc-mscs") {
    const mcs::SetCoverInstance sc = mcs::parse_set_cover(require_input(a));
    const auto red = mcs::setcover_to_mscs(sc);
    std::optional<mcs::Certificate> cert;
    if (auto ids = read_certificate(a, sc.sets.size())) {
      cert = mcs::setcover_mscs_certificate(red, sc, *ids);
    }
    emit(a, red.graph, &red.metadata, cert);
    return 0;
  }
  if (r == "2sat-tree") {
    const mcs::TwoSatFormula f = mcs::parse_two_sat(require_input(a));
    const auto red = mcs::max2sat_to_tree(f, a.stabilizers);
    if (!red.layout.stabilizers_dominate()) {
      std::cerr << "warning: N(m) >= (n+1)M; M is too small for the stabilizer argument\n";
    }
    std::optional<mcs::Certificate> cert;
    if (auto ids = read_certificate(a, f.num_vars)) {
      // std::vector<bool> has no contiguous storage to view as a span.
      const auto values = std::make_unique<bool[]>(f.num_vars);
      for (auto v : *ids) values[v] = true;
      const std::span<const bool> assignment(values.get(), f.num_vars);
      cert = mcs::assignment_certificate(red.layout, f, assignment);
      std::cout << "satisfied=" << f.satisfied_count(assignment) << '\n';
    }
    emit(a, red.graph, &red.metadata, cert);
    return 0;
  }
  throw UsageError("unknown reduction '" + r + "'");
}

// ---------------------------------------------------------------------------

int cmd_inspect(const std::string& input) {
  const mcs::ColoredGraph g = mcs::parse_ccg(read_file(input));
  std::cout << "n=" << g.num_vertices() << '\n'
            << "m=" << g.num_edges() << '\n'
            << "colors=" << g.num_colors() << '\n'
            << "connected=" << (mcs::is_connected(g) ? "true" : "false") << '\n'
            << "tree=" << (mcs::is_tree(g) ? "true" : "false") << '\n'
            << "blocks=" << mcs::blocks(g).partition.size() << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string suite = "random-trees";
  std::uint32_t count = 10;
  std::uint32_t max_n = 12;
  std::uint32_t max_c = 3;
  std::uint64_t seed = 1;
  std::string algo = "both";
  std::size_t cap = 20;
};

std::string millis_since(std::chrono::steady_clock::time_point start) {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

int cmd_bench(const BenchArgs& a) {
  if (a.max_n < 1 || a.max_c < 1) throw UsageError("--max-n and --max-c must be at least 1");
  if (a.max_c > mcs::ColorSet::kMaxColors) throw UsageError("--max-c above 64");
  const bool brute = a.algo != "tree-dp";
  const bool dp = a.algo != "brute";
  if (brute && a.max_n > a.cap) throw UsageError("--max-n exceeds the brute-force --cap");

  std::cout << "n,c,seed,algo,size,millis,memo_entries\n";
  for (std::uint32_t idx = 0; idx < a.count; ++idx) {
    const std::uint64_t seed = a.seed + idx;
    mcs::SplitMix64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + rng.below(a.max_n));
    const auto c = static_cast<mcs::Color>(1 + rng.below(a.max_c));
    const mcs::ColoredGraph g = mcs::random_tree(n, c, rng);
    const std::string prefix =
        std::to_string(n) + ',' + std::to_string(c) + ',' + std::to_string(seed) + ',';
    if (brute) {
      const auto start = std::chrono::steady_clock::now();
      const mcs::Certificate cert = mcs::brute_force_mcs(g, {.vertex_cap = a.cap, .prune = true});
      std::cout << prefix << "brute," << cert.size() << ',' << millis_since(start) << ",0\n";
    }
    if (dp) {
      const auto start = std::chrono::steady_clock::now();
      mcs::TreeMcsSolver solver(g);
      const auto solution = solver.solve();
      std::cout << prefix << "tree-dp," << solution.size << ',' << millis_since(start) << ','
                << solver.memo_entries() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and reduction generators for minimum consistent subsets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mcs 0.1.0");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve MCS or MSCS exactly");
  solve_cmd->add_option("graph", solve.input, "CCG instance file")->required();
  solve_cmd->add_option("--variant", solve.variant)->check(CLI::IsMember({"mcs", "mscs"}));
  solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({"auto", "brute", "tree-dp"}));
  solve_cmd->add_option("--cap", solve.cap, "Brute-force vertex cap");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a subset against both definitions");
  verify_cmd->add_option("graph", verify.input, "CCG instance file")->required();
  verify_cmd->add_option("subset", verify.subset, "Subset file")->required();
  verify_cmd->add_option("--variant", verify.variant)->check(CLI::IsMember({"mcs", "mscs"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reduction or random instance");
  gen_cmd->alias("generate");
  gen_cmd->add_option("--reduction", gen.reduction)
      ->required()
      ->check(CLI::IsMember(
          {"ds-mcs", "2sat-tree", "vc-intervals", "sc-mscs", "ds-mscs", "random-tree",
           "random-graph"}));
  gen_cmd->add_option("--input", gen.input, "Source instance");
  gen_cmd->add_option("--output", gen.output, "Output path prefix")->required();
  gen_cmd->add_option("--certificate", gen.certificate,
                      "Subset file of source ids to build the forward certificate from");
  gen_cmd->add_option("--M", gen.stabilizers, "Stabilizer pairs per variable (default n^3)");
  gen_cmd->add_option("--p", gen.per_gadget, "Small intervals per gadget (default n^3)");
  gen_cmd->add_option("--q", gen.per_gap, "Small intervals per gap (default n^4)");
  gen_cmd->add_option("--n", gen.n, "Vertices for random instances");
  gen_cmd->add_option("--c", gen.c, "Colors for random instances");
  gen_cmd->add_option("--extra-edges", gen.extra, "Percent chance of each non-tree edge");
  gen_cmd->add_option("--seed", gen.seed);

  std::string inspect_input;
  auto* inspect_cmd = app.add_subcommand("inspect", "Print instance statistics");
  inspect_cmd->add_option("graph", inspect_input, "CCG instance file")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time brute force against the tree DP");
  bench_cmd->add_option("--suite", bench.suite)->check(CLI::IsMember({"random-trees"}));
  bench_cmd->add_option("--count", bench.count);
  bench_cmd->add_option("--max-n", bench.max_n);
  bench_cmd->add_option("--max-c", bench.max_c);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--algo", bench.algo)->check(CLI::IsMember({"both", "brute", "tree-dp"}));
  bench_cmd->add_option("--cap", bench.cap, "Brute-force vertex cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*gen_cmd) return cmd_gen(gen);
    if (*inspect_cmd) return cmd_inspect(inspect_input);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const mcs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mcs::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
