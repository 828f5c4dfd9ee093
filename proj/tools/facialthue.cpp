// Command-line surface: generate plane graphs, run the list colouring
// algorithm, verify, replay-check logs, reproduce the counting analysis and
// benchmark failure proportions.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "facialthue/analysis.hpp"
#include "facialthue/experiments.hpp"
#include "facialthue/replay.hpp"
#include "facialthue/words.hpp"

using namespace facialthue;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_exhausted = 2;
constexpr int exit_invariant = 3;

struct LoadedGraph {
  PlaneGraph graph;
  std::string label;
  std::optional<std::vector<std::vector<int>>> document_lists;
};

LoadedGraph load_graph(const std::string& source) {
  static const std::regex family_re(R"(^(path|cycle|wheel):(\d+)$)");
  static const std::regex grid_re(R"(^grid:(\d+)x(\d+)$)");
  std::smatch match;
  if (std::regex_match(source, match, family_re))
    return {build_graph(generate(match[1], {std::stoi(match[2])})), source, std::nullopt};
  if (std::regex_match(source, match, grid_re))
    return {build_graph(generate("grid", {std::stoi(match[1]), std::stoi(match[2])})), source, std::nullopt};

  std::ifstream in(source);
  if (!in) fail(Errc::SyntaxError, "cannot open graph file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  GraphDocument doc = parse_document(buffer.str());
  return {build_graph(doc.rotation), source, doc.lists};
}

ListAssignment load_lists(const std::string& spec, const LoadedGraph& g, int default_k) {
  const int m = g.graph.edge_count();
  static const std::regex uniform_re(R"(^uniform(?::(\d+))?$)");
  static const std::regex random_re(R"(^random:(\d+):(\d+)$)");
  std::smatch match;
  if (spec.empty() || std::regex_match(spec, match, uniform_re)) {
    int k = default_k;
    if (!spec.empty() && match[1].matched) k = std::stoi(match[1]);
    return ListAssignment::uniform(m, k);
  }
  if (std::regex_match(spec, match, random_re))
    return ListAssignment::random_distinct(m, std::stoi(match[1]), std::stoull(match[2]));
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) fail(Errc::SyntaxError, "cannot open lists file '" + spec.substr(5) + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
      fail(Errc::SyntaxError, err.what());
    }
    if (doc.is_object() && doc.contains("lists")) doc = doc["lists"];
    if (!doc.is_array()) fail(Errc::SemanticError, "lists file must hold an array of arrays");
    ListAssignment L;
    L.lists = doc.get<std::vector<std::vector<int>>>();
    L.k = L.lists.empty() ? 0 : static_cast<int>(L.lists[0].size());
    return L;
  }
  if (spec == "document") {
    if (!g.document_lists) fail(Errc::SemanticError, "graph document carries no lists");
    ListAssignment L;
    L.lists = *g.document_lists;
    L.k = L.lists.empty() ? 0 : static_cast<int>(L.lists[0].size());
    return L;
  }
  fail(Errc::SyntaxError, "unknown lists source '" + spec + "' (uniform:k | random:k:seed | file:path | document)");
}

std::string status_name(RunStatus s) { return s == RunStatus::Completed ? "Completed" : "Exhausted"; }

// step-grid tokens: plain integer, or multiples of the edge count such as
// "m", "4m", "m-1", "2m+5"
long long parse_step_token(const std::string& token, int m) {
  static const std::regex plain_re(R"(^\d+$)");
  static const std::regex m_re(R"(^(\d*)m([+-]\d+)?$)");
  std::smatch match;
  if (std::regex_match(token, match, plain_re)) return std::stoll(token);
  if (std::regex_match(token, match, m_re)) {
    long long factor = match[1].length() ? std::stoll(match[1]) : 1;
    long long offset = match[2].matched ? std::stoll(match[2]) : 0;
    return factor * m + offset;
  }
  fail(Errc::SyntaxError, "bad step token '" + token + "' (expected e.g. 100, m, 2m, m-1)");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int run_color(const std::string& graph_src, const std::string& lists_src, int k, std::uint64_t seed,
              long long max_steps, const std::string& trace_path, const std::string& out_path) {
  LoadedGraph g = load_graph(graph_src);
  ListAssignment L = load_lists(lists_src, g, k);

  const auto t0 = std::chrono::steady_clock::now();
  RandomizedRun run = run_randomized(g.graph, L, seed, {.max_steps = max_steps});
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  VerifyReport report = verify_coloring(g.graph, L, run.outcome.coloring);
  const bool verified = run.outcome.completed() ? report.valid() : report.repetitions.empty();

  std::cout << "graph: " << g.label << " (V=" << g.graph.vertex_count() << " E=" << g.graph.edge_count()
            << " F=" << g.graph.face_count() << ")\n";
  std::cout << "k: " << L.k << "  seed: " << seed << "  max-steps: ";
  if (max_steps == 0)
    std::cout << "unlimited\n";
  else
    std::cout << max_steps << "\n";
  std::cout << "status: " << status_name(run.outcome.status) << "  steps-used: " << run.outcome.steps_used
            << "  resample-events: " << run.outcome.resample_events() << "\n";
  if (run.outcome.completed())
    std::cout << "verification: " << (verified ? "valid" : "INVALID") << "\n";
  else
    std::cout << "verification: " << (verified ? "partial (no repetition among coloured edges)" : "INVALID")
              << "\n";
  std::cout << "wall-time-ms: " << std::fixed << std::setprecision(3) << ms << "\n";

  if (!trace_path.empty()) {
    std::ofstream trace(trace_path);
    if (!trace) fail(Errc::SyntaxError, "cannot open trace file '" + trace_path + "'");
    write_trace(trace, run.outcome);
  }
  if (!out_path.empty()) {
    nlohmann::ordered_json artifact;
    artifact["graph"] = g.label;
    artifact["k"] = L.k;
    artifact["seed"] = seed;
    artifact["status"] = status_name(run.outcome.status);
    artifact["steps_used"] = run.outcome.steps_used;
    artifact["coloring"] = run.outcome.coloring;
    auto record = nlohmann::ordered_json::array();
    for (const auto& r : run.outcome.record) {
      if (r)
        record.push_back({r->h, r->q, r->a, r->o});
      else
        record.push_back(nullptr);
    }
    artifact["record"] = record;
    artifact["verified"] = verified;
    std::ofstream out(out_path);
    if (!out) fail(Errc::SyntaxError, "cannot open output file '" + out_path + "'");
    out << artifact.dump(2) << "\n";
  }

  if (!run.outcome.completed()) return exit_exhausted;
  return verified ? exit_ok : exit_invariant;
}

int run_replay_check(const std::string& graph_src, const std::string& lists_src, int k, int trials,
                     std::uint64_t seed, long long max_steps, const std::string& trace_path, bool serial) {
  LoadedGraph g = load_graph(graph_src);
  ListAssignment L = load_lists(lists_src, g, k);

  if (!trace_path.empty()) {
    std::ifstream in(trace_path);
    if (!in) fail(Errc::SyntaxError, "cannot open trace file '" + trace_path + "'");
    std::vector<TraceStep> steps = read_trace(in);
    Outcome rebuilt = rebuild_from_trace(g.graph, L, steps);
    InputVector input = invert_log(g.graph, L, rebuilt.coloring, rebuilt.record);
    Outcome rerun = run_deterministic(g.graph, L, input);
    if (rerun.coloring != rebuilt.coloring || rerun.record != rebuilt.record)
      fail(Errc::InconsistentLog, "re-running the recovered input does not reproduce the trace");
    std::cout << "trace verified: " << rebuilt.steps_used << " steps, input recovered and replayed\n";
    return exit_ok;
  }

  if (trials < 1) fail(Errc::ParamOutOfRange, "trials must be >= 1");
  std::cout << "graph: " << g.label << "  k: " << L.k << "  base-seed: " << seed << "\n";
  auto results = replay_trials(g.graph, L, seed, trials, max_steps, !serial);
  int passed = 0;
  std::optional<std::uint64_t> failing;
  for (const ReplayTrial& trial : results) {
    if (trial.round_trip_ok)
      ++passed;
    else if (!failing)
      failing = trial.seed;
  }
  std::cout << "trials passed " << passed << "/" << trials << "\n";
  if (failing) {
    std::cout << "first failing seed: " << *failing << "\n";
    return exit_invariant;
  }
  return exit_ok;
}

int run_analyze(int n_max, int m, int k, long catalan_max, const std::string& section, std::ostream& out) {
  const bool all = section == "all";

  if (all || section == "counts") {
    const int brute_cap = std::min(n_max, 20);
    std::vector<CountValue> compact = a_table(n_max);
    GrowthEstimate growth = growth_constant(std::max(20, n_max));
    const double lambda0 = cardano_roots().lambda0;
    out << "# counts\n";
    out << "n\ta_n\tratio\tbrute\tconvolution\tbound\n";
    for (int n = 1; n <= n_max; ++n) {
      out << n << '\t' << compact[n - 1].get_str() << '\t';
      if (n == 1)
        out << "-";
      else
        out << std::fixed << std::setprecision(6)
            << mpz_get_d(compact[n - 1].get_mpz_t()) / mpz_get_d(compact[n - 2].get_mpz_t());
      out << '\t';
      if (n <= brute_cap)
        out << (a_bruteforce(n) == compact[n - 1] ? "ok" : "MISMATCH");
      else
        out << "-";
      out << '\t' << (a_recurrence(n, RecurrenceForm::Convolution) == compact[n - 1] ? "ok" : "MISMATCH");
      out << '\t' << std::scientific << std::setprecision(6)
          << growth.c0 * 1.001 * std::exp(n * std::log(lambda0)) << "\n";
    }
  }

  if (all || section == "roots") {
    RootTriple r = cardano_roots();
    out << "# roots of x^3 - 3x^2 - x - 1\n";
    out << std::fixed << std::setprecision(9);
    out << "lambda0\t" << r.lambda0 << "\tresidual\t" << std::scientific << r.residuals[0] << "\n";
    out << std::fixed << "lambda1\t" << r.lambda1.real() << (r.lambda1.imag() >= 0 ? "+" : "") << r.lambda1.imag()
        << "i\tresidual\t" << std::scientific << r.residuals[1] << "\n";
    out << std::fixed << "lambda2\t" << r.lambda2.real() << (r.lambda2.imag() >= 0 ? "+" : "") << r.lambda2.imag()
        << "i\tresidual\t" << std::scientific << r.residuals[2] << "\n";
    out << std::fixed << "|lambda1|\t" << std::abs(r.lambda1) << "\n";
  }

  if (all || section == "growth") {
    GrowthEstimate growth = growth_constant(std::max(20, n_max));
    out << "# growth constant estimate a_n / lambda0^n\n";
    out << "n\testimate\n" << std::fixed << std::setprecision(12);
    for (auto [n, est] : growth.history) out << n << '\t' << est << "\n";
    out << "c0\t" << growth.c0 << "\n";
  }

  if (all || section == "threshold") {
    out << "# threshold: smallest t with (k+1)^m * a_{2t} < k^t\n";
    out << "m\tk\tt\n";
    const long long t = threshold_steps(m, k);
    out << m << '\t' << k << '\t' << t << "\n";
  }

  if (all || section == "catalan") {
    out << "# catalan numbers vs 4^t / (sqrt(pi) t^1.5)\n";
    out << "t\tC_t\tbound\tratio\tholds\n";
    for (long t = 1; t <= catalan_max; ++t) {
      CatalanCheck c = catalan_check(t);
      const double ratio = std::exp(log_count(c.catalan)) / c.bound;
      out << t << '\t' << c.catalan.get_str() << '\t' << std::scientific << std::setprecision(6) << c.bound << '\t'
          << std::fixed << std::setprecision(6) << ratio << '\t' << (c.holds ? "yes" : "NO") << "\n";
    }
  }
  return exit_ok;
}

int run_bench(const std::string& graphs_arg, const std::string& lists_src, int k, int trials,
              const std::string& steps_arg, std::uint64_t seed, bool serial, const std::string& out_path) {
  if (trials < 30) fail(Errc::ParamOutOfRange, "bench needs at least 30 trials per cell");

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) fail(Errc::SyntaxError, "cannot open output file '" + out_path + "'");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  out << "# seed " << seed << ", trials " << trials << " per cell\n";
  out << "graph\tm\tk\tt\ttrials\tfailures\tfailure_fraction\n";
  for (const std::string& graph_src : split(graphs_arg, ',')) {
    LoadedGraph g = load_graph(graph_src);
    ListAssignment L = load_lists(lists_src, g, k);
    const int m = g.graph.edge_count();

    std::vector<long long> grid;
    for (const std::string& token : split(steps_arg, ',')) grid.push_back(parse_step_token(token, m));
    long long t_max = 1;
    for (long long t : grid) t_max = std::max(t_max, t);

    auto results = color_trials(g.graph, L, seed, trials, t_max, false, !serial);
    for (long long t : grid) {
      int failures = 0;
      for (const ColorTrial& trial : results)
        failures += !(trial.completed && trial.steps_used <= t);
      out << g.label << '\t' << m << '\t' << L.k << '\t' << t << '\t' << trials << '\t' << failures << '\t'
          << std::fixed << std::setprecision(4) << double(failures) / trials << "\n";
    }
  }
  return exit_ok;
}

int exit_code_for(const Error& err) {
  switch (err.code()) {
    case Errc::UncolouredEdge:
    case Errc::InvalidDescriptor:
      return exit_invariant;  // library misuse pointing at an internal bug
    default:
      return exit_usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"facial nonrepetitive list edge colouring of plane graphs"};
  app.require_subcommand(1);

  std::string graph_src, lists_src, trace_path, out_path, steps_arg = "m,2m,4m,8m", section = "all";
  std::string graphs_arg;
  int k = 12, trials = 100, n_max = 30, m_param = 5;
  long catalan_max = 40;
  std::uint64_t seed = 1;
  long long max_steps = 0;
  bool serial = false;

  CLI::App* color = app.add_subcommand("color", "run the randomized colouring and verify it");
  color->add_option("--graph", graph_src, "family shorthand (path:N, cycle:N, wheel:N, grid:AxB) or document path")
      ->required();
  color->add_option("--lists", lists_src, "uniform:k | random:k:seed | file:path | document");
  color->add_option("--k", k, "list size for default uniform lists");
  color->add_option("--seed", seed, "random seed");
  color->add_option("--max-steps", max_steps, "step budget, 0 = run to completion");
  color->add_option("--trace", trace_path, "write the step trace to this file");
  color->add_option("--out", out_path, "write a JSON artifact to this file");

  CLI::App* replay = app.add_subcommand("replay-check", "invert logs and compare against the consumed input");
  replay->add_option("--graph", graph_src)->required();
  replay->add_option("--lists", lists_src);
  replay->add_option("--k", k);
  replay->add_option("--trials", trials);
  replay->add_option("--seed", seed);
  replay->add_option("--max-steps", max_steps, "step budget per trial, 0 = run to completion");
  replay->add_option("--trace", trace_path, "verify a previously written trace file instead");
  replay->add_flag("--serial", serial, "disable OpenMP across trials");

  CLI::App* analyze = app.add_subcommand("analyze", "counting tables, roots, growth, threshold, catalan");
  analyze->add_option("--n-max", n_max, "rows of the a_n table");
  analyze->add_option("--m", m_param, "edge count for the threshold scan");
  analyze->add_option("--k", k, "list size for the threshold scan");
  analyze->add_option("--catalan-max", catalan_max, "rows of the catalan table");
  analyze->add_option("--section", section, "all | counts | roots | growth | threshold | catalan");
  analyze->add_option("--out", out_path, "write tables to this file");

  CLI::App* bench = app.add_subcommand("bench", "failure proportion per step budget");
  bench->add_option("--graphs", graphs_arg, "comma-separated graph sources")->required();
  bench->add_option("--lists", lists_src);
  bench->add_option("--k", k);
  bench->add_option("--trials", trials, "trials per cell (>= 30)");
  bench->add_option("--steps", steps_arg, "comma-separated budgets; tokens like 100, m, 2m, m-1");
  bench->add_option("--seed", seed);
  bench->add_flag("--serial", serial, "disable OpenMP across trials");
  bench->add_option("--out", out_path, "write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? exit_usage : exit_ok;
  }

  try {
    if (color->parsed()) return run_color(graph_src, lists_src, k, seed, max_steps, trace_path, out_path);
    if (replay->parsed())
      return run_replay_check(graph_src, lists_src, k, trials, seed, max_steps, trace_path, serial);
    if (analyze->parsed()) {
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) fail(Errc::SyntaxError, "cannot open output file '" + out_path + "'");
        return run_analyze(n_max, m_param, k, catalan_max, section, file);
      }
      return run_analyze(n_max, m_param, k, catalan_max, section, std::cout);
    }
    if (bench->parsed()) return run_bench(graphs_arg, lists_src, k, trials, steps_arg, seed, serial, out_path);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return exit_invariant;
  }
  return exit_usage;
}
