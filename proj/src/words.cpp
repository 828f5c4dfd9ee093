#include "facialthue/words.hpp"

namespace facialthue {

std::optional<RepetitionWitness> first_repetition(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int s = 0; s < n; ++s)
    for (int h = 1; s + 2 * h <= n; ++h) {
      bool repetition = true;
      for (int i = 0; i < h && repetition; ++i) repetition = word[s + i] == word[s + h + i];
      if (repetition) return RepetitionWitness{s, h};
    }
  return std::nullopt;
}

Word thue_ternary(int n) {
  if (n < 0) fail(Errc::ParamOutOfRange, "word length must be nonnegative");
  if (n == 0) return {};
  Word w{1};
  while (static_cast<int>(w.size()) < n) {
    Word next;
    next.reserve(w.size() * 3);
    for (int symbol : w) {
      switch (symbol) {
        case 1: next.insert(next.end(), {1, 2, 3}); break;
        case 2: next.insert(next.end(), {1, 3}); break;
        default: next.push_back(2); break;
      }
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

SequenceResult sequence_from_lists(const std::vector<std::vector<int>>& lists, std::uint64_t seed,
                                   long long max_steps) {
  if (lists.empty()) fail(Errc::EmptyInput, "no lists given");
  const int n = static_cast<int>(lists.size());

  ListAssignment L;
  L.k = static_cast<int>(lists[0].size());
  L.lists = lists;

  const PlaneGraph g = build_graph(generate("path", {n + 1}));
  RandomizedRun run = run_randomized(g, L, seed, {.max_steps = max_steps});

  return SequenceResult{run.outcome.status, run.outcome.coloring, run.outcome.steps_used};
}

}  // namespace facialthue
