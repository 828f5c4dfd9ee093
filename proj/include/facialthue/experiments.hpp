#pragma once

#include <cstdint>
#include <vector>

#include "facialthue/coloring.hpp"
#include "facialthue/replay.hpp"

namespace facialthue {

// Multi-trial drivers. Trials are independent (seed = base_seed + index)
// and results are stored by index, so the parallel and serial paths
// produce identical tables; the serial path is the reference.

struct ColorTrial {
  std::uint64_t seed = 0;
  bool completed = false;
  int steps_used = 0;
  int resamples = 0;
  bool verified = false;  // only meaningful when `verify` was requested
};

std::vector<ColorTrial> color_trials(const PlaneGraph& g, const ListAssignment& lists,
                                     std::uint64_t base_seed, int trials, long long max_steps,
                                     bool verify, bool parallel);

struct ReplayTrial {
  std::uint64_t seed = 0;
  bool round_trip_ok = false;
  int steps_used = 0;
};

// Runs the randomized colourer, inverts the log and compares against the
// consumed input vector.
std::vector<ReplayTrial> replay_trials(const PlaneGraph& g, const ListAssignment& lists,
                                       std::uint64_t base_seed, int trials, long long max_steps,
                                       bool parallel);

}  // namespace facialthue
