#pragma once

#include <cstdint>
#include <vector>

#include "facialthue/error.hpp"

namespace facialthue {

// Per-edge colour, 0 = unpainted. Indexed by edge id - 1.
using Coloring = std::vector<int>;

// Per-edge ordered colour lists. The list order is the fixed linear
// ordering used to interpret input-vector positions.
struct ListAssignment {
  int k = 0;
  std::vector<std::vector<int>> lists;  // lists[e-1], each of size k

  // identical lists (1..k) on every edge
  static ListAssignment uniform(int edge_count, int k);
  // k distinct colours per edge drawn from [1, 4k], seeded
  static ListAssignment random_distinct(int edge_count, int k, std::uint64_t seed);

  // Throws ListSizeMismatch / SemanticError naming the offending edge.
  void validate(int edge_count) const;

  // 1-based position of `colour` in the list of edge e, or 0 if absent.
  int position(int e, int colour) const {
    const auto& lst = lists[e - 1];
    for (int i = 0; i < static_cast<int>(lst.size()); ++i)
      if (lst[i] == colour) return i + 1;
    return 0;
  }

  int colour_at(int e, int pos) const { return lists[e - 1][pos - 1]; }

  bool contains(int e, int colour) const { return position(e, colour) != 0; }
};

}  // namespace facialthue
