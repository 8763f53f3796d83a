// Command-line front end: run one BFS kernel, compare all of them, summarize
// a graph, or verify the masking identities on random inputs.
//
// Exit codes: 0 success, 1 usage errors, 2 input/configuration errors,
// 3 verification failure (--check oracle mismatch or a failed verify claim).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flab/algebra_verify.hpp"
#include "flab/bfs_baselines.hpp"
#include "flab/bfs_oracle.hpp"
#include "flab/bfs_parallel.hpp"
#include "flab/bfs_submatrix.hpp"
#include "flab/gen.hpp"
#include "flab/ingest.hpp"
#include "flab/run_record.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitVerifyFailed = 3;

struct LoadedGraph {
  flab::ParsedGraph parsed;
  std::string name;  // basename or generator spec, for the report column
};

std::string basename_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

bool ends_with(const std::string& str, const std::string& suffix) {
  return str.size() >= suffix.size() &&
         str.compare(str.size() - suffix.size(), suffix.size(), suffix) == 0;
}

flab::ParsedGraph with_identity_ids(flab::EdgeList g) {
  flab::ParsedGraph parsed;
  parsed.external_ids.resize(g.n);
  for (flab::Vertex v = 0; v < g.n; ++v) parsed.external_ids[v] = v;
  parsed.graph = std::move(g);
  return parsed;
}

// "random:<n>:<p>" generates a seeded G(n, p); anything ending in ".flab" is
// a binary cache; everything else is edge-list text.
LoadedGraph load_graph(const std::string& spec, bool directed,
                       std::uint64_t seed) {
  LoadedGraph loaded;
  if (spec.rfind("random:", 0) == 0) {
    std::size_t colon = spec.find(':', 7);
    if (colon == std::string::npos)
      throw std::runtime_error("random graph spec is random:<n>:<p>");
    unsigned long n = std::stoul(spec.substr(7, colon - 7));
    double p = std::stod(spec.substr(colon + 1));
    flab::RngEngine rng(seed);
    loaded.parsed = with_identity_ids(
        flab::gnp_graph(static_cast<flab::Vertex>(n), p, rng, directed));
    loaded.name = spec;
    return loaded;
  }
  if (ends_with(spec, ".flab")) {
    loaded.parsed = with_identity_ids(flab::read_cache(spec, directed));
    loaded.name = basename_of(spec);
    return loaded;
  }
  loaded.parsed = flab::parse_snap(spec, directed);
  loaded.name = basename_of(spec);
  return loaded;
}

flab::Vertex map_source(const flab::ParsedGraph& parsed, std::uint64_t external,
                        bool have_source) {
  if (parsed.graph.n == 0) throw std::runtime_error("graph has no vertices");
  if (!have_source) return 0;  // lowest external id
  return parsed.internal_id(external);
}

struct KernelChoice {
  std::string algo = "submatrix";
  unsigned threads = 0;  // 0: pick a machine default for the parallel kernel
};

flab::KernelRun dispatch(const flab::CsrMatrix& a, flab::Vertex source,
                         const flab::Semiring& s, const KernelChoice& choice) {
  if (choice.algo == "parallel") {
    unsigned workers = choice.threads;
    if (workers == 0)
      workers = std::max(1u, std::thread::hardware_concurrency());
    return flab::bfs_parallel(a, source, s, workers);
  }
  switch (flab::variant_by_name(choice.algo)) {
    case flab::Variant::SpMV: return flab::bfs_spmv(a, source, s);
    case flab::Variant::SpMSpV: return flab::bfs_spmspv(a, source, s);
    case flab::Variant::SpMmSpV: return flab::bfs_spmmspv(a, source, s);
    case flab::Variant::Submatrix: return flab::bfs_submatrix(a, source, s);
    case flab::Variant::SubmatrixAllNz:
      return flab::bfs_submatrix_allnz(a, source, s);
    default: break;
  }
  throw std::runtime_error("unknown algorithm: " + choice.algo);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int check_against_oracle(const flab::CsrMatrix& a, flab::Vertex source,
                         const std::vector<std::uint32_t>& levels,
                         const std::string& label) {
  flab::BfsOutput oracle = flab::bfs_combinatorial(a, source);
  if (oracle.levels == levels) return kExitOk;
  std::cerr << "check failed: " << label
            << " levels disagree with the combinatorial oracle\n";
  return kExitVerifyFailed;
}

int cmd_run(const LoadedGraph& loaded, std::uint64_t source_ext,
            bool have_source, const std::string& semiring_name,
            const KernelChoice& choice, bool count_ops, bool check,
            const std::string& format) {
  const flab::Semiring& s = flab::semiring_by_name(semiring_name);
  flab::Vertex source = map_source(loaded.parsed, source_ext, have_source);
  flab::CsrMatrix a = flab::build_csr(loaded.parsed.graph, s);

  flab::RunRecord rec;
  rec.graph = loaded.name;
  rec.n = loaded.parsed.graph.n;
  rec.m = loaded.parsed.graph.edges.size();
  rec.source = loaded.parsed.external_ids[source];
  rec.semiring = semiring_name;
  rec.workers = 1;

  std::vector<std::uint32_t> levels;
  auto t0 = std::chrono::steady_clock::now();
  if (choice.algo == "combinatorial") {
    flab::BfsOutput out = flab::bfs_combinatorial(a, source);
    rec.wallclock_seconds = seconds_since(t0);
    rec.variant = "combinatorial";
    rec.steps = out.frontier_sizes.size();
    rec.reached = out.reached;
    levels = std::move(out.levels);
  } else {
    flab::KernelRun run = dispatch(a, source, s, choice);
    rec.wallclock_seconds = seconds_since(t0);
    rec.variant = flab::variant_name(run.variant);
    if (run.variant == flab::Variant::Parallel)
      rec.workers = choice.threads
                        ? choice.threads
                        : std::max(1u, std::thread::hardware_concurrency());
    rec.steps = run.ops.steps;
    rec.reached = run.output.reached;
    if (count_ops) {
      rec.semiring_evals = run.ops.semiring_evals;
      rec.nonzeros_touched = run.ops.nonzeros_touched;
    }
    levels = std::move(run.output.levels);
  }

  if (format == "json")
    std::cout << flab::run_record_json(rec) << "\n";
  else
    std::cout << flab::run_record_csv_header() << "\n"
              << flab::run_record_csv_row(rec) << "\n";

  if (check) return check_against_oracle(a, source, levels, rec.variant);
  return kExitOk;
}

int cmd_compare(const LoadedGraph& loaded, std::uint64_t source_ext,
                bool have_source, const std::string& semiring_name, bool check,
                const std::string& format) {
  const flab::Semiring& s = flab::semiring_by_name(semiring_name);
  flab::Vertex source = map_source(loaded.parsed, source_ext, have_source);
  flab::CsrMatrix a = flab::build_csr(loaded.parsed.graph, s);

  const std::vector<std::string> algos = {"submatrix", "submatrix-allnz",
                                          "spmmspv", "spmspv", "spmv"};
  std::vector<flab::RunRecord> rows;
  std::uint64_t base_evals = 0;
  int status = kExitOk;
  for (const std::string& algo : algos) {
    KernelChoice choice;
    choice.algo = algo;
    auto t0 = std::chrono::steady_clock::now();
    flab::KernelRun run = dispatch(a, source, s, choice);
    double secs = seconds_since(t0);

    flab::RunRecord rec;
    rec.graph = loaded.name;
    rec.n = loaded.parsed.graph.n;
    rec.m = loaded.parsed.graph.edges.size();
    rec.source = loaded.parsed.external_ids[source];
    rec.variant = flab::variant_name(run.variant);
    rec.semiring = semiring_name;
    rec.workers = 1;
    rec.steps = run.ops.steps;
    rec.reached = run.output.reached;
    rec.semiring_evals = run.ops.semiring_evals;
    rec.nonzeros_touched = run.ops.nonzeros_touched;
    rec.wallclock_seconds = secs;
    if (algo == "submatrix") base_evals = rec.semiring_evals;
    rows.push_back(rec);

    if (check) {
      int rc = check_against_oracle(a, source, run.output.levels, rec.variant);
      if (rc != kExitOk) status = rc;
    }
  }

  auto log10_of = [](std::uint64_t v) {
    return v == 0 ? 0.0 : std::log10(static_cast<double>(v));
  };
  auto ratio_of = [&](std::uint64_t v) {
    return base_evals == 0 ? 0.0
                           : static_cast<double>(v) /
                                 static_cast<double>(base_evals);
  };

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const flab::RunRecord& rec : rows) {
      nlohmann::json row = nlohmann::json::parse(flab::run_record_json(rec));
      row["evals_log10"] = log10_of(rec.semiring_evals);
      row["ratio_vs_submatrix"] = ratio_of(rec.semiring_evals);
      arr.push_back(row);
    }
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << flab::run_record_csv_header()
              << ",evals_log10,ratio_vs_submatrix\n";
    for (const flab::RunRecord& rec : rows) {
      char extra[64];
      std::snprintf(extra, sizeof extra, "%.3f,%.3f",
                    log10_of(rec.semiring_evals),
                    ratio_of(rec.semiring_evals));
      std::cout << flab::run_record_csv_row(rec) << ',' << extra << "\n";
    }
  }
  return status;
}

int cmd_stats(const LoadedGraph& loaded, std::uint64_t source_ext,
              bool have_source, int sweep, const std::string& cache_path,
              const std::string& format) {
  const flab::EdgeList& g = loaded.parsed.graph;
  flab::Vertex source = map_source(loaded.parsed, source_ext, have_source);
  flab::CsrMatrix a = flab::build_csr(g, flab::boolean_semiring());

  if (sweep > 0) source = flab::find_far_source(a, source, sweep).first;
  flab::GraphStats st = flab::graph_stats(g, source);

  bool have_degrees = !g.directed;
  flab::DegreeStats deg;
  if (have_degrees) deg = flab::degree_stats(a);

  if (!cache_path.empty()) flab::write_cache(cache_path, g);

  std::uint64_t source_out = loaded.parsed.external_ids[source];
  if (format == "json") {
    nlohmann::json j{{"graph", loaded.name},
                     {"n", st.n},
                     {"m", st.m},
                     {"directed", g.directed},
                     {"source", source_out},
                     {"eccentricity_from_source", st.eccentricity_from_source},
                     {"levels", st.eccentricity_from_source + 1},
                     {"reached_from_source", st.reached_from_source}};
    if (have_degrees) {
      j["min_degree"] = deg.min_degree;
      j["max_degree"] = deg.max_degree;
      j["mean_degree"] = deg.mean_degree;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "graph,n,m,directed,source,eccentricity_from_source,levels,"
                 "reached_from_source,min_degree,max_degree,mean_degree\n";
    std::cout << loaded.name << ',' << st.n << ',' << st.m << ','
              << (g.directed ? 1 : 0) << ',' << source_out << ','
              << st.eccentricity_from_source << ','
              << st.eccentricity_from_source + 1 << ','
              << st.reached_from_source << ',';
    if (have_degrees) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", deg.mean_degree);
      std::cout << deg.min_degree << ',' << deg.max_degree << ',' << buf;
    } else {
      std::cout << ",,";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, int graphs, unsigned max_n,
               const std::string& format) {
  flab::IdentitySuiteResult result = flab::run_identity_suite(
      seed, graphs, static_cast<flab::Vertex>(max_n));
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const flab::IdentityCheck& c : result.checks)
      arr.push_back({{"claim", c.name},
                     {"checked", c.checked},
                     {"failed", c.failed},
                     {"pass", c.failed == 0}});
    std::cout << arr.dump() << "\n";
  } else {
    for (const flab::IdentityCheck& c : result.checks) {
      if (c.failed == 0)
        std::cout << "PASS " << c.name << " (" << c.checked << " checks)\n";
      else
        std::cout << "FAIL " << c.name << " (" << c.failed << " of "
                  << c.checked << " checks failed)\n";
    }
  }
  return result.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic BFS kernels over masked submatrices"};
  app.require_subcommand(1);

  std::string graph_spec;
  bool directed = false;
  std::uint64_t source_ext = 0;
  std::string semiring_name = "boolean";
  std::string format = "csv";
  std::uint64_t seed = 1;

  KernelChoice choice;
  bool count_ops = false;
  bool check = false;

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_spec,
                    "edge-list text, .flab cache, or random:<n>:<p>")
        ->required();
    cmd->add_flag("--directed", directed, "treat edges as arcs");
    cmd->add_option("--source", source_ext, "source vertex (input id space)");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed, "seed for generated graphs");
  };

  CLI::App* run = app.add_subcommand("run", "run one BFS kernel");
  add_graph_options(run);
  run->add_option("--algo", choice.algo, "kernel to run")
      ->check(CLI::IsMember({"combinatorial", "spmv", "spmspv", "spmmspv",
                             "submatrix", "submatrix-allnz", "parallel"}));
  run->add_option("--semiring", semiring_name, "boolean, arithmetic, tropical")
      ->check(CLI::IsMember({"boolean", "arithmetic", "tropical"}));
  run->add_option("--threads", choice.threads, "workers for the parallel kernel");
  run->add_flag("--count-ops", count_ops, "emit semiring operation counts");
  run->add_flag("--check", check, "compare levels with the oracle");

  CLI::App* compare = app.add_subcommand("compare", "run every kernel variant");
  add_graph_options(compare);
  compare->add_option("--semiring", semiring_name,
                      "boolean, arithmetic, tropical")
      ->check(CLI::IsMember({"boolean", "arithmetic", "tropical"}));
  compare->add_flag("--check", check, "compare levels with the oracle");

  int sweep = 0;
  std::string cache_path;
  CLI::App* stats = app.add_subcommand("stats", "summarize a graph");
  add_graph_options(stats);
  stats->add_option("--sweep", sweep,
                    "hop to a far source this many times before reporting");
  stats->add_option("--write-cache", cache_path,
                    "write the normalized edges as a .flab cache");

  int graphs = 200;
  unsigned max_n = 32;
  CLI::App* verify =
      app.add_subcommand("verify", "check the masking identities");
  verify->add_option("--seed", seed, "random graph seed");
  verify->add_option("--graphs", graphs, "number of random graphs")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-n", max_n, "largest graph order, at most 32")
      ->check(CLI::Range(2u, 32u));
  verify->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(seed, graphs, max_n, format);

    LoadedGraph loaded = load_graph(graph_spec, directed, seed);
    if (run->parsed())
      return cmd_run(loaded, source_ext, run->count("--source") > 0,
                     semiring_name, choice, count_ops, check, format);
    if (compare->parsed())
      return cmd_compare(loaded, source_ext, compare->count("--source") > 0,
                         semiring_name, check, format);
    if (stats->parsed())
      return cmd_stats(loaded, source_ext, stats->count("--source") > 0, sweep,
                       cache_path, format);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
