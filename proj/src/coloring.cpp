#include "facialthue/coloring.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace facialthue {

int Outcome::resample_events() const {
  int n = 0;
  for (const auto& r : record) n += r.has_value() ? 1 : 0;
  return n;
}

namespace {

struct RunState {
  const PlaneGraph& g;
  const ListAssignment& lists;
  Coloring colours;
  std::set<EdgeId> uncoloured;  // J
  Outcome out;

  RunState(const PlaneGraph& graph, const ListAssignment& L) : g(graph), lists(L) {
    L.validate(g.edge_count());
    colours.assign(g.edge_count(), 0);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) uncoloured.insert(e);
  }

  void check_loop_invariant() const {
    // Before every step no fully coloured facial path is repetitive.
    VerifyReport report = verify_coloring(g, lists, colours);
    if (!report.repetitions.empty())
      fail(Errc::SemanticError, "loop invariant violated: repetitive path survived a step");
  }

  void step(int p_i, bool check_invariants) {
    if (check_invariants) check_loop_invariant();
    const EdgeId j = *uncoloured.begin();
    const int colour = lists.colour_at(j, p_i);
    colours[j - 1] = colour;
    auto hit = find_repetition(g, colours, j);
    if (hit) {
      const auto& [path, descriptor] = *hit;
      const int h = descriptor.h;
      for (int l = h; l < 2 * h; ++l) {  // second half, contains j
        EdgeId e = path.edges[l];
        colours[e - 1] = 0;
        uncoloured.insert(e);
      }
      out.record.push_back(descriptor);
    } else {
      uncoloured.erase(j);
      out.record.push_back(std::nullopt);
    }
    ++out.steps_used;
    out.steps.push_back({j, colour, g.edge_count() - static_cast<int>(uncoloured.size())});
  }

  Outcome finish() {
    out.status = uncoloured.empty() ? RunStatus::Completed : RunStatus::Exhausted;
    out.coloring = colours;
    out.uncoloured.assign(uncoloured.begin(), uncoloured.end());
    return std::move(out);
  }
};

}  // namespace

Outcome run_deterministic(const PlaneGraph& g, const ListAssignment& lists, const InputVector& p,
                          const RunOptions& options) {
  if (p.empty()) fail(Errc::EmptyInput, "input vector is empty");
  for (int p_i : p)
    if (p_i < 1 || p_i > lists.k)
      fail(Errc::ParamOutOfRange, "input entry " + std::to_string(p_i) + " outside [1," + std::to_string(lists.k) + "]");

  RunState state(g, lists);
  for (int p_i : p) {
    if (state.uncoloured.empty()) break;
    state.step(p_i, options.check_invariants);
  }
  return state.finish();
}

RandomizedRun run_randomized(const PlaneGraph& g, const ListAssignment& lists, std::uint64_t seed,
                             const RunOptions& options) {
  RandomizedRun run;
  RunState state(g, lists);
  std::mt19937_64 rng(seed);
  while (!state.uncoloured.empty() &&
         (options.max_steps == 0 || state.out.steps_used < options.max_steps)) {
    int p_i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(lists.k));
    run.input.push_back(p_i);
    state.step(p_i, options.check_invariants);
  }
  run.outcome = state.finish();
  return run;
}

void write_trace(std::ostream& out, const Outcome& outcome) {
  out << "facialthue-trace 1\n";
  for (int i = 0; i < outcome.steps_used; ++i) {
    const StepTrace& s = outcome.steps[i];
    out << i + 1 << ' ' << s.edge << ' ' << s.colour;
    if (outcome.record[i]) {
      const PathDescriptor& d = *outcome.record[i];
      out << ' ' << d.h << ' ' << d.q << ' ' << d.a << ' ' << d.o;
    } else {
      out << " -";
    }
    out << '\n';
  }
}

std::vector<TraceStep> read_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "facialthue-trace 1")
    fail(Errc::SyntaxError, "missing or unknown trace header");

  std::vector<TraceStep> steps;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    TraceStep s;
    std::string marker;
    if (!(fields >> s.step >> s.edge >> s.colour >> marker))
      fail(Errc::SyntaxError, "line " + std::to_string(line_no) + ": expected 'i j colour (h q a o | -)'");
    if (marker != "-") {
      PathDescriptor d;
      std::istringstream head(marker);
      if (!(head >> d.h) || !(fields >> d.q >> d.a >> d.o))
        fail(Errc::SyntaxError, "line " + std::to_string(line_no) + ": malformed descriptor");
      s.record = d;
    }
    if (s.step != static_cast<int>(steps.size()) + 1)
      fail(Errc::SyntaxError, "line " + std::to_string(line_no) + ": step numbers must be consecutive from 1");
    steps.push_back(s);
  }
  if (steps.empty()) fail(Errc::SyntaxError, "trace has no steps");
  return steps;
}

}  // namespace facialthue
