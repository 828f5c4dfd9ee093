#include "facialthue/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

namespace facialthue {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::HasLoop: return "HasLoop";
    case Errc::HasParallelEdge: return "HasParallelEdge";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::NotFacial: return "NotFacial";
    case Errc::OddLength: return "OddLength";
    case Errc::EdgeNotOnPath: return "EdgeNotOnPath";
    case Errc::UncolouredEdge: return "UncolouredEdge";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ListSizeMismatch: return "ListSizeMismatch";
    case Errc::CorruptRecord: return "CorruptRecord";
    case Errc::InconsistentLog: return "InconsistentLog";
    case Errc::OverflowingRecord: return "OverflowingRecord";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::KTooSmall: return "KTooSmall";
  }
  return "UnknownError";
}

void validate_rotation_system(const RotationSystem& spec) {
  const int n = spec.vertex_count;
  const int m = spec.edge_count();
  if (n < 1) fail(Errc::SemanticError, "vertex count must be positive");
  if (m < 1) fail(Errc::SemanticError, "graph has no edges");

  std::set<std::pair<int, int>> seen;
  for (int e = 1; e <= m; ++e) {
    auto [u, v] = spec.edges[e - 1];
    if (u < 1 || u > n || v < 1 || v > n)
      fail(Errc::SemanticError, "edge " + std::to_string(e) + " references vertex outside 1.." + std::to_string(n));
    if (u == v) fail(Errc::HasLoop, "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(Errc::HasParallelEdge, "edge " + std::to_string(e) + " duplicates pair {" + std::to_string(key.first) +
                                      "," + std::to_string(key.second) + "}");
  }

  if (static_cast<int>(spec.rotations.size()) != n)
    fail(Errc::SemanticError, "rotations array has " + std::to_string(spec.rotations.size()) +
                                  " entries, expected " + std::to_string(n));

  // Each edge must appear exactly once in the rotation of each endpoint.
  std::vector<std::vector<EdgeId>> incident(n + 1);
  for (int e = 1; e <= m; ++e) {
    incident[spec.edges[e - 1].first].push_back(e);
    incident[spec.edges[e - 1].second].push_back(e);
  }
  for (int v = 1; v <= n; ++v) {
    std::vector<EdgeId> rot = spec.rotations[v - 1];
    std::vector<EdgeId> inc = incident[v];
    std::sort(rot.begin(), rot.end());
    std::sort(inc.begin(), inc.end());
    if (rot != inc)
      fail(Errc::SemanticError,
           "rotation of vertex " + std::to_string(v) + " does not list its incident edges exactly once");
  }

  // Connectivity.
  std::vector<char> reached(n + 1, 0);
  std::queue<int> bfs;
  bfs.push(1);
  reached[1] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (EdgeId e : incident[v]) {
      auto [a, b] = spec.edges[e - 1];
      int w = (a == v) ? b : a;
      if (!reached[w]) {
        reached[w] = 1;
        bfs.push(w);
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!reached[v]) fail(Errc::NotConnected, "vertex " + std::to_string(v) + " is unreachable from vertex 1");
}

namespace {

// Darts are indexed 0..2m-1: dart 2(e-1) runs first->second of edge e,
// dart 2(e-1)+1 is its twin.
struct Tracer {
  const RotationSystem& rs;
  // position of edge e in the rotation at its first/second endpoint
  std::vector<int> pos_first, pos_second;

  explicit Tracer(const RotationSystem& spec) : rs(spec) {
    const int m = rs.edge_count();
    pos_first.assign(m + 1, -1);
    pos_second.assign(m + 1, -1);
    for (int v = 1; v <= rs.vertex_count; ++v) {
      const auto& rot = rs.rotations[v - 1];
      for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
        EdgeId e = rot[i];
        if (rs.edges[e - 1].first == v)
          pos_first[e] = i;
        else
          pos_second[e] = i;
      }
    }
  }

  Dart dart(int d) const {
    EdgeId e = d / 2 + 1;
    auto [u, v] = rs.edges[e - 1];
    return (d % 2 == 0) ? Dart{e, u, v} : Dart{e, v, u};
  }

  int dart_from(EdgeId e, VertexId tail) const {
    return 2 * (e - 1) + (rs.edges[e - 1].first == tail ? 0 : 1);
  }

  int next(int d) const {
    Dart cur = dart(d);
    VertexId w = cur.head;
    const auto& rot = rs.rotations[w - 1];
    int idx = (rs.edges[cur.edge - 1].first == w) ? pos_first[cur.edge] : pos_second[cur.edge];
    EdgeId e2 = rot[(idx + 1) % rot.size()];
    return dart_from(e2, w);
  }
};

}  // namespace

PlaneGraph build_graph(const RotationSystem& spec) {
  validate_rotation_system(spec);

  PlaneGraph g;
  g.rotation_ = spec;
  const int m = spec.edge_count();

  Tracer tracer(spec);
  std::vector<char> visited(2 * m, 0);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (visited[d0]) continue;
    FaceWalk walk;
    walk.face_index = static_cast<int>(g.faces_.size());
    int d = d0;
    do {
      visited[d] = 1;
      walk.darts.push_back(tracer.dart(d));
      d = tracer.next(d);
    } while (d != d0);
    g.longest_walk_ = std::max(g.longest_walk_, walk.length());
    g.faces_.push_back(std::move(walk));
  }

  const int V = spec.vertex_count, F = g.face_count();
  if (V - m + F != 2)
    fail(Errc::EulerViolation, "V - E + F = " + std::to_string(V) + " - " + std::to_string(m) + " + " +
                                   std::to_string(F) + " != 2; rotation system is not a plane embedding");

  g.appearances_.assign(m, {});
  std::vector<int> count(m + 1, 0);
  for (const FaceWalk& f : g.faces_) {
    for (int pos = 0; pos < f.length(); ++pos) {
      EdgeId e = f.darts[pos].edge;
      g.appearances_[e - 1][count[e]++] = Appearance{f.face_index, pos};
    }
  }
  // Traversal order is lexicographic in (face, position), so label 1 is
  // already the smaller slot; counts are exactly 2 since each dart lies on
  // one walk.
  return g;
}

namespace {

struct Point {
  double x, y;
};

// Rotation = incident edges sorted counterclockwise by direction to the
// other endpoint. Works for any family with straight-line planar drawing
// and distinct neighbour directions.
RotationSystem from_coordinates(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<Point>& pos) {
  RotationSystem rs;
  rs.vertex_count = n;
  rs.edges = edges;
  rs.rotations.assign(n, {});
  std::vector<std::vector<std::pair<double, EdgeId>>> around(n + 1);
  for (int e = 1; e <= static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[e - 1];
    around[u].push_back({std::atan2(pos[v].y - pos[u].y, pos[v].x - pos[u].x), e});
    around[v].push_back({std::atan2(pos[u].y - pos[v].y, pos[u].x - pos[v].x), e});
  }
  for (int v = 1; v <= n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto& [angle, e] : around[v]) rs.rotations[v - 1].push_back(e);
  }
  return rs;
}

}  // namespace

RotationSystem generate(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      fail(Errc::ParamOutOfRange, kind + " takes " + std::to_string(count) + " parameter(s)");
  };

  if (kind == "path") {
    need(1);
    int n = params[0];
    if (n < 2) fail(Errc::ParamOutOfRange, "path needs n >= 2 vertices, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pos(n + 1);
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    for (int i = 1; i <= n; ++i) pos[i] = {double(i), 0.0};
    return from_coordinates(n, edges, pos);
  }
  if (kind == "cycle") {
    need(1);
    int n = params[0];
    if (n < 3) fail(Errc::ParamOutOfRange, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pos(n + 1);
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n, 1});
    for (int i = 1; i <= n; ++i) {
      double a = 2.0 * M_PI * (i - 1) / n;
      pos[i] = {std::cos(a), std::sin(a)};
    }
    return from_coordinates(n, edges, pos);
  }
  if (kind == "wheel") {
    need(1);
    int n = params[0];
    if (n < 3) fail(Errc::ParamOutOfRange, "wheel needs n >= 3 rim vertices, got " + std::to_string(n));
    // rim 1..n, hub n+1; rim edges first, then spokes
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pos(n + 2);
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n, 1});
    for (int i = 1; i <= n; ++i) edges.push_back({i, n + 1});
    for (int i = 1; i <= n; ++i) {
      double a = 2.0 * M_PI * (i - 1) / n;
      pos[i] = {std::cos(a), std::sin(a)};
    }
    pos[n + 1] = {0.0, 0.0};
    return from_coordinates(n + 1, edges, pos);
  }
  if (kind == "grid") {
    need(2);
    int a = params[0], b = params[1];
    if (a < 2 || b < 2) fail(Errc::ParamOutOfRange, "grid needs a,b >= 2, got " + std::to_string(a) + "x" + std::to_string(b));
    auto id = [&](int r, int c) { return r * b + c + 1; };
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pos(a * b + 1);
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < b; ++c) {
        if (c + 1 < b) edges.push_back({id(r, c), id(r, c + 1)});
        if (r + 1 < a) edges.push_back({id(r, c), id(r + 1, c)});
        pos[id(r, c)] = {double(c), double(-r)};
      }
    return from_coordinates(a * b, edges, pos);
  }
  fail(Errc::UnknownFamily, "unknown graph family '" + kind + "'");
}

std::string serialize(const RotationSystem& rs, const std::optional<std::vector<std::vector<int>>>& lists) {
  nlohmann::ordered_json doc;
  doc["vertices"] = rs.vertex_count;
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : rs.edges) doc["edges"].push_back({u, v});
  doc["rotations"] = rs.rotations;
  if (lists) doc["lists"] = *lists;
  return doc.dump(2) + "\n";
}

GraphDocument parse_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    fail(Errc::SyntaxError, err.what());
  }

  if (!doc.is_object()) fail(Errc::SemanticError, "document root is not an object");
  for (const char* field : {"vertices", "edges", "rotations"})
    if (!doc.contains(field)) fail(Errc::SemanticError, std::string("missing field '") + field + "'");

  GraphDocument out;
  if (!doc["vertices"].is_number_integer()) fail(Errc::SemanticError, "'vertices' must be an integer");
  out.rotation.vertex_count = doc["vertices"].get<int>();

  if (!doc["edges"].is_array()) fail(Errc::SemanticError, "'edges' must be an array");
  int e_index = 0;
  for (const auto& item : doc["edges"]) {
    ++e_index;
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      fail(Errc::SemanticError, "edges[" + std::to_string(e_index - 1) + "] must be a pair of integers");
    out.rotation.edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }

  if (!doc["rotations"].is_array()) fail(Errc::SemanticError, "'rotations' must be an array");
  int v_index = 0;
  for (const auto& rot : doc["rotations"]) {
    ++v_index;
    if (!rot.is_array())
      fail(Errc::SemanticError, "rotations[" + std::to_string(v_index - 1) + "] must be an array of edge ids");
    std::vector<EdgeId> r;
    for (const auto& item : rot) {
      if (!item.is_number_integer())
        fail(Errc::SemanticError, "rotations[" + std::to_string(v_index - 1) + "] contains a non-integer");
      r.push_back(item.get<int>());
    }
    out.rotation.rotations.push_back(std::move(r));
  }

  if (doc.contains("lists")) {
    if (!doc["lists"].is_array()) fail(Errc::SemanticError, "'lists' must be an array");
    std::vector<std::vector<int>> lists;
    int l_index = 0;
    for (const auto& lst : doc["lists"]) {
      ++l_index;
      if (!lst.is_array()) fail(Errc::SemanticError, "lists[" + std::to_string(l_index - 1) + "] must be an array");
      std::vector<int> values;
      for (const auto& item : lst) {
        if (!item.is_number_integer())
          fail(Errc::SemanticError, "lists[" + std::to_string(l_index - 1) + "] contains a non-integer");
        values.push_back(item.get<int>());
      }
      lists.push_back(std::move(values));
    }
    out.lists = std::move(lists);
  }

  validate_rotation_system(out.rotation);
  return out;
}

}  // namespace facialthue
