#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "facialthue/facial.hpp"
#include "facialthue/plane_graph.hpp"

namespace testutil {

inline facialthue::PlaneGraph family(const std::string& kind, std::vector<int> params) {
  return facialthue::build_graph(facialthue::generate(kind, params));
}

inline std::vector<facialthue::EdgeId> face_edges(const facialthue::PlaneGraph& g, int face) {
  std::vector<facialthue::EdgeId> edges;
  for (const auto& d : g.face(face).darts) edges.push_back(d.edge);
  return edges;
}

// Independent reference for find_repetition: filter the exhaustive path
// enumeration and take the minimum canonical descriptor.
inline std::optional<std::pair<std::vector<facialthue::EdgeId>, facialthue::PathDescriptor>> oracle_find_repetition(
    const facialthue::PlaneGraph& g, const facialthue::Coloring& colours, facialthue::EdgeId e_j) {
  using namespace facialthue;
  std::optional<std::pair<std::vector<EdgeId>, PathDescriptor>> best;
  for (const FacialPath& path : enumerate_facial_paths(g, g.longest_walk())) {
    const int len = static_cast<int>(path.edges.size());
    if (len % 2) continue;
    bool through = false, complete = true;
    for (EdgeId e : path.edges) {
      through = through || e == e_j;
      complete = complete && colours[e - 1] != 0;
    }
    if (!through || !complete) continue;
    const int h = len / 2;
    bool repetition = true;
    for (int i = 0; i < h && repetition; ++i)
      repetition = colours[path.edges[i] - 1] == colours[path.edges[i + h] - 1];
    if (!repetition) continue;
    PathDescriptor d = encode_path(g, e_j, path.edges);
    if (!best || d < best->second) best = {{path.edges, d}};
  }
  return best;
}

// Random partial colouring: each edge coloured with probability `density`
// from [1, k].
inline facialthue::Coloring random_partial_coloring(int edge_count, int k, double density, std::mt19937_64& rng) {
  facialthue::Coloring c(edge_count, 0);
  for (int e = 0; e < edge_count; ++e) {
    const bool painted = (rng() % 1000) < static_cast<std::uint64_t>(density * 1000);
    if (painted) c[e] = 1 + static_cast<int>(rng() % k);
  }
  return c;
}

}  // namespace testutil
