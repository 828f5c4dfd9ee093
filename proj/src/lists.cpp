#include "facialthue/lists.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace facialthue {

ListAssignment ListAssignment::uniform(int edge_count, int k) {
  ListAssignment L;
  L.k = k;
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 1);
  L.lists.assign(edge_count, base);
  return L;
}

ListAssignment ListAssignment::random_distinct(int edge_count, int k, std::uint64_t seed) {
  ListAssignment L;
  L.k = k;
  std::mt19937_64 rng(seed);
  std::vector<int> pool(4 * k);
  std::iota(pool.begin(), pool.end(), 1);
  for (int e = 0; e < edge_count; ++e) {
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng() % (pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    L.lists.emplace_back(pool.begin(), pool.begin() + k);
  }
  return L;
}

void ListAssignment::validate(int edge_count) const {
  if (k < 1 || k > 64) fail(Errc::ListSizeMismatch, "k = " + std::to_string(k) + " outside [1,64]");
  if (static_cast<int>(lists.size()) != edge_count)
    fail(Errc::ListSizeMismatch,
         std::to_string(lists.size()) + " lists for " + std::to_string(edge_count) + " edges");
  for (int e = 1; e <= edge_count; ++e) {
    const auto& lst = lists[e - 1];
    if (static_cast<int>(lst.size()) != k)
      fail(Errc::ListSizeMismatch, "list of edge " + std::to_string(e) + " has size " +
                                       std::to_string(lst.size()) + ", expected " + std::to_string(k));
    std::vector<int> sorted = lst;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1)
      fail(Errc::SemanticError, "list of edge " + std::to_string(e) + " contains a non-positive colour");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::SemanticError, "list of edge " + std::to_string(e) + " contains a duplicate colour");
  }
}

}  // namespace facialthue
