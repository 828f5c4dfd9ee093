#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "facialthue/lists.hpp"
#include "facialthue/plane_graph.hpp"

namespace facialthue {

// Names a facial path relative to a reference edge: half-length h, position
// q of the edge within the path (always in the second half, q in [h+1,2h]),
// appearance label a and orientation flag o. For fixed h there are exactly
// 4h descriptors.
struct PathDescriptor {
  int h = 0;
  int q = 0;
  int a = 0;
  int o = 0;

  auto operator<=>(const PathDescriptor&) const = default;
};

// Vertex-simple path whose edges are consecutive on a face boundary walk.
// The witness records where the edge sequence occurs: window of `edges.size()`
// positions starting at `start` in walk `face`; if `reversed`, the path reads
// the window backwards.
struct FacialPath {
  std::vector<EdgeId> edges;
  int face = -1;
  int start = -1;
  bool reversed = false;
};

// True if the two edge sequences name the same (undirected) path.
bool same_path(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b);

// Reconstructs the unique facial path P with v(e,P) = d. Throws
// InvalidDescriptor when the descriptor names no path (malformed tuple,
// window longer than its walk, or window not vertex-simple).
FacialPath decode_path(const PlaneGraph& g, EdgeId e, const PathDescriptor& d);

// Canonical descriptor of a facial path relative to a contained edge: the
// path is oriented so that e falls in the second half, and among the valid
// (a,o) realizations the lexicographically smallest (h,q,a,o) is returned.
// Throws OddLength, EdgeNotOnPath or NotFacial.
PathDescriptor encode_path(const PlaneGraph& g, EdgeId e, const std::vector<EdgeId>& path_edges);

// All vertex-simple contiguous windows of every face walk with length
// <= max_len, deduplicated by edge sequence up to reversal.
std::vector<FacialPath> enumerate_facial_paths(const PlaneGraph& g, int max_len);

// Scans the facial paths of even length through the just-coloured edge e_j
// for one whose edges are all coloured and whose colour sequence is a
// repetition, in lexicographic (h,q,a,o) preference order. Returns the
// first hit with its canonical descriptor, or nullopt. Throws
// UncolouredEdge if c(e_j) = 0.
std::optional<std::pair<FacialPath, PathDescriptor>> find_repetition(const PlaneGraph& g,
                                                                     const Coloring& colours,
                                                                     EdgeId e_j);

// Brute-force verification report. Independent of find_repetition by
// construction: it filters the exhaustive path enumeration instead of
// decoding descriptors.
struct VerifyReport {
  struct Repetition {
    FacialPath path;
    std::vector<int> colours;
  };
  std::vector<Repetition> repetitions;
  std::vector<EdgeId> list_violations;  // coloured outside the edge's list
  std::vector<EdgeId> uncoloured;

  bool valid() const { return repetitions.empty() && list_violations.empty() && uncoloured.empty(); }
};

VerifyReport verify_coloring(const PlaneGraph& g, const ListAssignment& lists, const Coloring& colours);

}  // namespace facialthue
