#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "facialthue/coloring.hpp"

namespace facialthue {

using Word = std::vector<int>;

struct RepetitionWitness {
  int offset = 0;  // 0-based start of the repeated block
  int h = 0;       // half-length
};

// Reference repetition oracle: direct window scan, first witness in
// (offset, h) order, nullopt iff the word is nonrepetitive.
std::optional<RepetitionWitness> first_repetition(std::span<const int> word);

inline bool is_nonrepetitive(std::span<const int> word) { return !first_repetition(word).has_value(); }

// First n symbols of the fixed point of the squarefree morphism
// 1 -> 123, 2 -> 13, 3 -> 2.
Word thue_ternary(int n);

struct SequenceResult {
  RunStatus status = RunStatus::Exhausted;
  Word word;  // chosen symbols, in list order (0 where unchosen)
  int steps_used = 0;
};

// Nonrepetitive sequence construction from lists, via the colouring
// algorithm on a path graph with one edge per list.
SequenceResult sequence_from_lists(const std::vector<std::vector<int>>& lists, std::uint64_t seed,
                                   long long max_steps);

}  // namespace facialthue
