#include "facialthue/experiments.hpp"

namespace facialthue {

std::vector<ColorTrial> color_trials(const PlaneGraph& g, const ListAssignment& lists,
                                     std::uint64_t base_seed, int trials, long long max_steps,
                                     bool verify, bool parallel) {
#ifndef _OPENMP
  (void)parallel;  // built without OpenMP: the serial path is the only path
#endif
  std::vector<ColorTrial> results(trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    RandomizedRun run = run_randomized(g, lists, seed, {.max_steps = max_steps});
    ColorTrial& trial = results[i];
    trial.seed = seed;
    trial.completed = run.outcome.completed();
    trial.steps_used = run.outcome.steps_used;
    trial.resamples = run.outcome.resample_events();
    if (verify && trial.completed) trial.verified = verify_coloring(g, lists, run.outcome.coloring).valid();
  }
  return results;
}

std::vector<ReplayTrial> replay_trials(const PlaneGraph& g, const ListAssignment& lists,
                                       std::uint64_t base_seed, int trials, long long max_steps,
                                       bool parallel) {
#ifndef _OPENMP
  (void)parallel;
#endif
  std::vector<ReplayTrial> results(trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    RandomizedRun run = run_randomized(g, lists, seed, {.max_steps = max_steps});
    ReplayTrial& trial = results[i];
    trial.seed = seed;
    trial.steps_used = run.outcome.steps_used;
    try {
      InputVector recovered = invert_log(g, lists, run.outcome.coloring, run.outcome.record);
      trial.round_trip_ok = recovered == run.input;
    } catch (const Error&) {
      trial.round_trip_ok = false;
    }
  }
  return results;
}

}  // namespace facialthue
