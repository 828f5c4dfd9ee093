#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "facialthue/facial.hpp"
#include "facialthue/lists.hpp"
#include "facialthue/plane_graph.hpp"

namespace facialthue {

// Sequence of list positions ("die throws"), each in [1,k].
using InputVector = std::vector<int>;

// Per-step record entry: the descriptor of the cancelled repetition, or
// empty when the step coloured an edge for good.
using Record = std::vector<std::optional<PathDescriptor>>;

enum class RunStatus { Completed, Exhausted };

struct StepTrace {
  EdgeId edge = 0;        // the edge coloured in this step (min of J)
  int colour = 0;         // colour it received
  int coloured_after = 0; // number of non-zero edges after the step
};

struct Outcome {
  RunStatus status = RunStatus::Exhausted;
  Coloring coloring;
  Record record;  // one entry per executed step
  int steps_used = 0;
  std::vector<EdgeId> uncoloured;  // final J, ascending
  std::vector<StepTrace> steps;

  bool completed() const { return status == RunStatus::Completed; }
  int resample_events() const;
};

struct RunOptions {
  long long max_steps = 0;      // randomized runs: 0 = run to completion
  bool check_invariants = false;  // assert the repetition-free loop invariant
                                  // against the brute-force oracle (slow)
};

// Algorithm 1: deterministic core driven by the input vector. At step i the
// lowest uncoloured edge receives the p_i-th colour of its list; if that
// closes a repetitively coloured facial path, the preferred path's second
// half is uncoloured and its descriptor recorded.
Outcome run_deterministic(const PlaneGraph& g, const ListAssignment& lists, const InputVector& p,
                          const RunOptions& options = {});

struct RandomizedRun {
  Outcome outcome;
  InputVector input;  // the consumed prefix of die throws
};

// Same loop with p drawn lazily from a seeded mt19937_64
// (p_i = 1 + next % k). Identical seed, identical outcome.
RandomizedRun run_randomized(const PlaneGraph& g, const ListAssignment& lists, std::uint64_t seed,
                             const RunOptions& options = {});

// Trace file: header line "facialthue-trace 1", then one line per step:
//   i j colour h q a o     (repetition cancelled, descriptor recorded)
//   i j colour -           (empty record entry)
struct TraceStep {
  int step = 0;
  EdgeId edge = 0;
  int colour = 0;
  std::optional<PathDescriptor> record;
};

void write_trace(std::ostream& out, const Outcome& outcome);
std::vector<TraceStep> read_trace(std::istream& in);

}  // namespace facialthue
