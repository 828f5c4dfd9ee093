#include "facialthue/facial.hpp"

#include <algorithm>
#include <set>

namespace facialthue {

namespace {

int mod(int x, int w) { return ((x % w) + w) % w; }

bool pairwise_distinct(std::vector<VertexId>& verts) {
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

}  // namespace

bool same_path(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  if (a == b) return true;
  return std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

FacialPath decode_path(const PlaneGraph& g, EdgeId e, const PathDescriptor& d) {
  if (d.h < 1 || d.q < d.h + 1 || d.q > 2 * d.h || d.a < 1 || d.a > 2 || d.o < 1 || d.o > 2)
    fail(Errc::InvalidDescriptor, "malformed descriptor (h=" + std::to_string(d.h) + ",q=" + std::to_string(d.q) +
                                      ",a=" + std::to_string(d.a) + ",o=" + std::to_string(d.o) + ")");

  const Appearance app = g.appearance(e, d.a);
  const FaceWalk& walk = g.face(app.face);
  const int W = walk.length();
  const int len = 2 * d.h;
  if (len > W)
    fail(Errc::InvalidDescriptor, "window of length " + std::to_string(len) + " exceeds walk of length " +
                                      std::to_string(W));

  const int s = (d.o == 1) ? mod(app.position - (d.q - 1), W) : mod(app.position - (len - d.q), W);

  std::vector<VertexId> verts;
  verts.reserve(len + 1);
  verts.push_back(walk.darts[s].tail);
  for (int i = 0; i < len; ++i) verts.push_back(walk.darts[(s + i) % W].head);
  if (!pairwise_distinct(verts))
    fail(Errc::InvalidDescriptor, "window at face " + std::to_string(app.face) + " position " + std::to_string(s) +
                                      " is not vertex-simple");

  FacialPath p;
  p.face = app.face;
  p.start = s;
  p.reversed = (d.o == 2);
  p.edges.resize(len);
  for (int i = 0; i < len; ++i) {
    EdgeId ei = walk.darts[(s + i) % W].edge;
    p.edges[d.o == 1 ? i : len - 1 - i] = ei;
  }
  return p;
}

PathDescriptor encode_path(const PlaneGraph& g, EdgeId e, const std::vector<EdgeId>& path_edges) {
  const int len = static_cast<int>(path_edges.size());
  if (len == 0 || len % 2 != 0) fail(Errc::OddLength, "path length " + std::to_string(len) + " is not even positive");
  const int h = len / 2;

  int pos = 0, count = 0;
  for (int i = 0; i < len; ++i)
    if (path_edges[i] == e) {
      pos = i + 1;
      ++count;
    }
  if (count != 1)
    fail(Errc::EdgeNotOnPath, "edge " + std::to_string(e) + " occurs " + std::to_string(count) + " times on the path");

  // Orient so that e falls in the second half; exactly one of pos, 2h+1-pos
  // exceeds h.
  std::vector<EdgeId> oriented = path_edges;
  int q = pos;
  if (pos <= h) {
    std::reverse(oriented.begin(), oriented.end());
    q = 2 * h + 1 - pos;
  }

  for (int a = 1; a <= 2; ++a)
    for (int o = 1; o <= 2; ++o) {
      PathDescriptor d{h, q, a, o};
      try {
        if (decode_path(g, e, d).edges == oriented) return d;
      } catch (const Error& err) {
        if (err.code() != Errc::InvalidDescriptor) throw;
      }
    }
  fail(Errc::NotFacial, "edge sequence is not a facial path through edge " + std::to_string(e));
}

std::vector<FacialPath> enumerate_facial_paths(const PlaneGraph& g, int max_len) {
  std::vector<FacialPath> out;
  std::set<std::vector<EdgeId>> seen;
  std::vector<char> used(g.vertex_count() + 1, 0);

  for (const FaceWalk& walk : g.faces()) {
    const int W = walk.length();
    const int cap = std::min(max_len, W);
    for (int s = 0; s < W; ++s) {
      std::vector<VertexId> touched;
      auto touch = [&](VertexId v) {
        if (used[v]) return false;
        used[v] = 1;
        touched.push_back(v);
        return true;
      };
      touch(walk.darts[s].tail);
      std::vector<EdgeId> edges;
      for (int len = 1; len <= cap; ++len) {
        const Dart& d = walk.darts[(s + len - 1) % W];
        if (!touch(d.head)) break;
        edges.push_back(d.edge);
        std::vector<EdgeId> rev(edges.rbegin(), edges.rend());
        const std::vector<EdgeId>& key = std::min(edges, rev);
        if (seen.insert(key).second) out.push_back(FacialPath{edges, walk.face_index, s, false});
      }
      for (VertexId v : touched) used[v] = 0;
    }
  }
  return out;
}

std::optional<std::pair<FacialPath, PathDescriptor>> find_repetition(const PlaneGraph& g, const Coloring& colours,
                                                                     EdgeId e_j) {
  if (colours[e_j - 1] == 0) fail(Errc::UncolouredEdge, "edge " + std::to_string(e_j) + " has colour 0");

  // Around each appearance, measure the maximal run of coloured positions;
  // a candidate window is fully coloured iff it stays inside that run, so
  // infeasible (h,q,a,o) tuples are rejected in O(1).
  struct Ctx {
    const FaceWalk* walk;
    int p, W, max_left, max_right;
  };
  Ctx ctx[2];
  int hcap = 0;
  for (int a = 1; a <= 2; ++a) {
    const Appearance app = g.appearance(e_j, a);
    const FaceWalk& walk = g.face(app.face);
    const int W = walk.length();
    auto coloured = [&](int pos) { return colours[walk.darts[mod(pos, W)].edge - 1] != 0; };
    int left = 0;
    while (left < W - 1 && coloured(app.position - left - 1)) ++left;
    int right = 0;
    while (right < W - 1 && coloured(app.position + right + 1)) ++right;
    ctx[a - 1] = {&walk, app.position, W, left, right};
    hcap = std::max(hcap, std::min(W, left + right + 1) / 2);
  }

  std::vector<VertexId> verts;
  for (int h = 1; h <= hcap; ++h) {
    const int len = 2 * h;
    // feasible q interval per (a,o): the window extends q-1 or 2h-q
    // positions to each side of the appearance
    int lo[2][2], hi[2][2];
    for (int a = 0; a < 2; ++a)
      for (int o = 0; o < 2; ++o) {
        const Ctx& c = ctx[a];
        if (len > c.W) {
          lo[a][o] = 1;
          hi[a][o] = 0;
          continue;
        }
        if (o == 0) {
          lo[a][o] = std::max(h + 1, len - c.max_right);
          hi[a][o] = std::min(len, c.max_left + 1);
        } else {
          lo[a][o] = std::max(h + 1, len - c.max_left);
          hi[a][o] = std::min(len, c.max_right + 1);
        }
      }

    for (int q = h + 1; q <= len; ++q)
      for (int a = 0; a < 2; ++a)
        for (int o = 0; o < 2; ++o) {
          if (q < lo[a][o] || q > hi[a][o]) continue;
          const Ctx& c = ctx[a];
          const int s = (o == 0) ? mod(c.p - (q - 1), c.W) : mod(c.p - (len - q), c.W);
          auto edge_at = [&](int i) {  // 0-based path position -> edge id
            int w = (o == 0) ? i : len - 1 - i;
            return c.walk->darts[(s + w) % c.W].edge;
          };
          bool repetition = true;
          for (int i = 0; i < h && repetition; ++i)
            repetition = colours[edge_at(i) - 1] == colours[edge_at(i + h) - 1];
          if (!repetition) continue;

          verts.clear();
          verts.push_back(c.walk->darts[s].tail);
          for (int i = 0; i < len; ++i) verts.push_back(c.walk->darts[(s + i) % c.W].head);
          if (!pairwise_distinct(verts)) continue;

          FacialPath p;
          p.face = c.walk->face_index;
          p.start = s;
          p.reversed = (o == 1);
          p.edges.resize(len);
          for (int i = 0; i < len; ++i) p.edges[i] = edge_at(i);
          return std::make_pair(std::move(p), PathDescriptor{h, q, a + 1, o + 1});
        }
  }
  return std::nullopt;
}

VerifyReport verify_coloring(const PlaneGraph& g, const ListAssignment& lists, const Coloring& colours) {
  VerifyReport report;
  for (int e = 1; e <= g.edge_count(); ++e) {
    if (colours[e - 1] == 0)
      report.uncoloured.push_back(e);
    else if (!lists.contains(e, colours[e - 1]))
      report.list_violations.push_back(e);
  }

  for (FacialPath& path : enumerate_facial_paths(g, g.longest_walk())) {
    const int len = static_cast<int>(path.edges.size());
    if (len % 2) continue;
    const int h = len / 2;
    std::vector<int> cs(len);
    bool complete = true;
    for (int i = 0; i < len; ++i) {
      cs[i] = colours[path.edges[i] - 1];
      complete = complete && cs[i] != 0;
    }
    if (!complete) continue;
    bool repetition = true;
    for (int i = 0; i < h && repetition; ++i) repetition = cs[i] == cs[i + h];
    if (repetition) report.repetitions.push_back({std::move(path), std::move(cs)});
  }
  return report;
}

}  // namespace facialthue
