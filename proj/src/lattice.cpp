#include "tilings/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace tilings {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::string lattice_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::tri: return "tri";
    case LatticeKind::sq: return "sq";
    case LatticeKind::hex: return "hex";
  }
  fail("lattice_name: bad kind");
}

LatticeKind lattice_from_name(const std::string& name) {
  if (name == "tri") return LatticeKind::tri;
  if (name == "sq") return LatticeKind::sq;
  if (name == "hex") return LatticeKind::hex;
  fail("unknown lattice: " + name);
}

std::vector<Cell> cell_neighbors(LatticeKind k, const Cell& c) {
  switch (k) {
    case LatticeKind::tri:
      if (c.c == 0)
        return {tri_down(c.a, c.b), tri_down(c.a, c.b - 1), tri_down(c.a - 1, c.b)};
      return {tri_up(c.a, c.b), tri_up(c.a, c.b + 1), tri_up(c.a + 1, c.b)};
    case LatticeKind::sq:
      return {sq_cell(c.a + 1, c.b), sq_cell(c.a - 1, c.b), sq_cell(c.a, c.b + 1),
              sq_cell(c.a, c.b - 1)};
    case LatticeKind::hex:
      return {hex_cell(c.a + 1, c.b),     hex_cell(c.a - 1, c.b),
              hex_cell(c.a, c.b + 1),     hex_cell(c.a, c.b - 1),
              hex_cell(c.a + 1, c.b - 1), hex_cell(c.a - 1, c.b + 1)};
  }
  fail("cell_neighbors: bad lattice");
}

bool cells_adjacent(LatticeKind k, const Cell& a, const Cell& b) {
  auto n = cell_neighbors(k, a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

int cell_class(LatticeKind k, const Cell& c) {
  switch (k) {
    case LatticeKind::tri: return c.c;
    case LatticeKind::sq: return ((c.a + c.b) % 2 + 2) % 2;
    case LatticeKind::hex: return -1;
  }
  fail("cell_class: bad lattice");
}

EmbeddedPoint cell_center(LatticeKind k, const Cell& c) {
  switch (k) {
    case LatticeKind::tri: {
      std::int64_t r = c.a, col = c.b;
      if (c.c == 0) return {6 * col + 3 * r + 3, 3 * r + 1};
      return {6 * col + 3 * r + 6, 3 * r + 2};
    }
    case LatticeKind::sq:
      return {2LL * c.a + 1, 2LL * c.b + 1};
    case LatticeKind::hex: {
      // center = A + B*w with A = 1 + 2q + r, B = q + 2r; store (2A - B, B)
      std::int64_t A = 1 + 2LL * c.a + c.b, B = c.a + 2LL * c.b;
      return {2 * A - B, B};
    }
  }
  fail("cell_center: bad lattice");
}

bool Region::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

ExactRational Region::weight(const Cell& a, const Cell& b) const {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = weights.find(key);
  return it == weights.end() ? ExactRational(1) : it->second;
}

Region make_region(LatticeKind k, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Region r;
  r.lattice = k;
  r.cells = std::move(cells);
  return r;
}

void set_weight(Region& region, const Cell& a, const Cell& b, const ExactRational& w) {
  if (!region.contains(a) || !region.contains(b)) fail("set_weight: cell outside region");
  if (!cells_adjacent(region.lattice, a, b)) fail("set_weight: cells not adjacent");
  if (w <= 0) fail("set_weight: weight must be positive");
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (w == 1)
    region.weights.erase(key);
  else
    region.weights[key] = w;
}

Region translated(const Region& region, int da, int db) {
  Region out;
  out.lattice = region.lattice;
  out.cells.reserve(region.cells.size());
  for (const Cell& c : region.cells) out.cells.push_back(Cell{c.a + da, c.b + db, c.c});
  std::sort(out.cells.begin(), out.cells.end());
  for (const auto& [key, w] : region.weights) {
    Cell a{key.first.a + da, key.first.b + db, key.first.c};
    Cell b{key.second.a + da, key.second.b + db, key.second.c};
    out.weights[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = w;
  }
  return out;
}

Region canonical_translate(const Region& region) {
  if (region.cells.empty()) return region;
  int mina = region.cells.front().a;  // cells sorted by (a, b, c)
  int minb = region.cells.front().b;
  for (const Cell& c : region.cells)
    if (c.a == mina) minb = std::min(minb, c.b);
  return translated(region, -mina, -minb);
}

std::pair<std::size_t, std::size_t> class_counts(const Region& region) {
  std::pair<std::size_t, std::size_t> n{0, 0};
  for (const Cell& c : region.cells) {
    int cls = cell_class(region.lattice, c);
    if (cls == 1)
      ++n.second;
    else
      ++n.first;
  }
  return n;
}

int DualGraph::vertex_of(const Cell& c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) return -1;
  return static_cast<int>(it - cells.begin());
}

DualGraph dual_graph(const Region& region) {
  DualGraph g;
  g.lattice = region.lattice;
  g.cells = region.cells;
  g.pos.reserve(g.cells.size());
  for (const Cell& c : g.cells) g.pos.push_back(cell_center(g.lattice, c));
  for (int u = 0; u < static_cast<int>(g.cells.size()); ++u) {
    for (const Cell& nb : cell_neighbors(g.lattice, g.cells[u])) {
      int v = g.vertex_of(nb);
      if (v > u) g.edges.push_back({u, v, region.weight(g.cells[u], nb)});
    }
  }
  for (const auto& [key, w] : region.weights) {
    if (g.vertex_of(key.first) < 0 || g.vertex_of(key.second) < 0)
      fail("dual_graph: weight keyed by cell outside region");
  }
  g.inc.assign(g.cells.size(), {});
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    g.inc[g.edges[e].u].push_back({g.edges[e].v, e});
    g.inc[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  if (g.lattice == LatticeKind::hex) {
    // attempt a 2-coloring; hex adjacency usually has odd cycles
    g.color.assign(g.cells.size(), -1);
    g.bipartite = true;
    for (std::size_t s = 0; s < g.cells.size() && g.bipartite; ++s) {
      if (g.color[s] != -1) continue;
      g.color[s] = 0;
      std::deque<int> bfs{static_cast<int>(s)};
      while (!bfs.empty() && g.bipartite) {
        int u = bfs.front();
        bfs.pop_front();
        for (auto [v, e] : g.inc[u]) {
          if (g.color[v] == -1) {
            g.color[v] = 1 - g.color[u];
            bfs.push_back(v);
          } else if (g.color[v] == g.color[u]) {
            g.bipartite = false;
          }
        }
      }
    }
    if (!g.bipartite) g.color.assign(g.cells.size(), -1);
  } else {
    g.bipartite = true;
    g.color.reserve(g.cells.size());
    for (const Cell& c : g.cells) g.color.push_back(cell_class(g.lattice, c));
  }
  return g;
}

Region region_of(const DualGraph& graph) {
  Region r;
  r.lattice = graph.lattice;
  r.cells = graph.cells;
  std::size_t adjacentPairs = 0;
  for (int u = 0; u < static_cast<int>(graph.cells.size()); ++u)
    for (const Cell& nb : cell_neighbors(graph.lattice, graph.cells[u]))
      if (graph.vertex_of(nb) > u) ++adjacentPairs;
  if (adjacentPairs != graph.edges.size())
    throw std::runtime_error("region_of: graph is not an induced lattice dual");
  for (const auto& e : graph.edges) {
    if (e.w != 1) {
      Cell a = graph.cells[e.u], b = graph.cells[e.v];
      r.weights[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = e.w;
    }
  }
  return r;
}

namespace {

void check_axis(LatticeKind k, const Axis& axis) {
  if (k == LatticeKind::tri && axis.dir == AxisDir::triVertical) return;
  if (k == LatticeKind::sq && axis.dir == AxisDir::sqDiagonal) {
    if (axis.d % 2 != 0) fail("square diagonal axis needs an even doubled offset");
    return;
  }
  fail("axis direction incompatible with lattice");
}

}  // namespace

Cell reflect_cell(LatticeKind k, const Axis& axis, const Cell& c) {
  check_axis(k, axis);
  if (k == LatticeKind::tri) {
    auto d = static_cast<std::int32_t>(axis.d);
    if (c.c == 0) return tri_up(c.a, d - 1 - c.b - c.a);
    return tri_down(c.a, d - 2 - c.b - c.a);
  }
  auto t = static_cast<std::int32_t>(axis.d / 2);
  return sq_cell(c.b - t, c.a + t);
}

int cell_axis_side(LatticeKind k, const Axis& axis, const Cell& c) {
  check_axis(k, axis);
  std::int64_t lhs;
  if (k == LatticeKind::tri) {
    lhs = cell_center(k, c).x - 3 * axis.d;
  } else {
    lhs = 2LL * (c.b - c.a) - axis.d;
  }
  return lhs > 0 ? 1 : lhs < 0 ? -1 : 0;
}

Region reflect(const Region& region, const Axis& axis) {
  Region out;
  out.lattice = region.lattice;
  out.cells.reserve(region.cells.size());
  for (const Cell& c : region.cells) out.cells.push_back(reflect_cell(region.lattice, axis, c));
  std::sort(out.cells.begin(), out.cells.end());
  for (const auto& [key, w] : region.weights) {
    Cell a = reflect_cell(region.lattice, axis, key.first);
    Cell b = reflect_cell(region.lattice, axis, key.second);
    out.weights[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = w;
  }
  return out;
}

bool is_axis_symmetric(const Region& region, const Axis& axis) {
  Region image = reflect(region, axis);
  return image.cells == region.cells && image.weights == region.weights;
}

AxisVertices axis_vertices(const DualGraph& graph, const Axis& axis) {
  if (!is_axis_symmetric(region_of(graph), axis))
    fail("axis_vertices: graph not symmetric about the axis");
  std::vector<int> on;
  for (int v = 0; v < static_cast<int>(graph.cells.size()); ++v)
    if (cell_axis_side(graph.lattice, axis, graph.cells[v]) == 0) on.push_back(v);
  if (on.empty()) fail("axis_vertices: no vertex on the axis");
  std::sort(on.begin(), on.end(), [&](int u, int v) {
    if (axis.dir == AxisDir::triVertical) return graph.pos[u].y > graph.pos[v].y;
    return graph.pos[u].x < graph.pos[v].x;
  });
  AxisVertices out;
  out.order = std::move(on);
  out.width = static_cast<int>(out.order.size() / 2);
  return out;
}

namespace {

// quadrant-then-cross-product angular order of direction vectors, starting
// just above the positive x-axis and turning counterclockwise
bool angle_less(const EmbeddedPoint& p, const EmbeddedPoint& q) {
  auto half = [](const EmbeddedPoint& v) { return v.y > 0 || (v.y == 0 && v.x > 0) ? 0 : 1; };
  int hp = half(p), hq = half(q);
  if (hp != hq) return hp < hq;
  return p.x * q.y - p.y * q.x > 0;
}

}  // namespace

std::vector<int> components(const DualGraph& graph) {
  std::vector<int> comp(graph.cells.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < graph.cells.size(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::deque<int> bfs{static_cast<int>(s)};
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (auto [v, e] : graph.inc[u])
        if (comp[v] == -1) {
          comp[v] = next;
          bfs.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

DualGraph induced_subgraph(const DualGraph& graph, const std::vector<int>& keep) {
  DualGraph g;
  g.lattice = graph.lattice;
  std::vector<int> newId(graph.cells.size(), -1);
  for (int v : keep) {
    if (v < 0 || v >= static_cast<int>(graph.cells.size())) fail("induced_subgraph: bad vertex");
    if (newId[v] != -1) fail("induced_subgraph: duplicate vertex");
  }
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    newId[sorted[i]] = static_cast<int>(i);
    g.cells.push_back(graph.cells[sorted[i]]);
    g.pos.push_back(graph.pos[sorted[i]]);
  }
  for (const auto& e : graph.edges)
    if (newId[e.u] != -1 && newId[e.v] != -1) {
      int u = newId[e.u], v = newId[e.v];
      if (u > v) std::swap(u, v);
      g.edges.push_back({u, v, e.w});
    }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const DualGraph::Edge& a, const DualGraph::Edge& b) {
              return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
            });
  g.inc.assign(g.cells.size(), {});
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    g.inc[g.edges[e].u].push_back({g.edges[e].v, e});
    g.inc[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  if (graph.lattice == LatticeKind::hex) {
    g.color.assign(g.cells.size(), -1);
    g.bipartite = true;
    for (std::size_t s = 0; s < g.cells.size() && g.bipartite; ++s) {
      if (g.color[s] != -1) continue;
      g.color[s] = 0;
      std::deque<int> bfs{static_cast<int>(s)};
      while (!bfs.empty() && g.bipartite) {
        int u = bfs.front();
        bfs.pop_front();
        for (auto [v, e] : g.inc[u]) {
          if (g.color[v] == -1) {
            g.color[v] = 1 - g.color[u];
            bfs.push_back(v);
          } else if (g.color[v] == g.color[u]) {
            g.bipartite = false;
          }
        }
      }
    }
    if (!g.bipartite) g.color.assign(g.cells.size(), -1);
  } else {
    g.bipartite = true;
    for (const Cell& c : g.cells) g.color.push_back(cell_class(g.lattice, c));
  }
  return g;
}

PlanarFaces compute_faces(const DualGraph& graph) {
  auto comp = components(graph);
  for (int c : comp)
    if (c != 0) fail("compute_faces: graph must be connected");
  PlanarFaces out;
  if (graph.cells.empty()) fail("compute_faces: empty graph");
  if (graph.edges.empty()) {
    out.faces.push_back({0});
    out.outer = 0;
    return out;
  }
  // rotation system: incident edges sorted counterclockwise
  std::vector<std::vector<std::pair<int, int>>> rot(graph.cells.size());
  for (std::size_t v = 0; v < graph.cells.size(); ++v) {
    rot[v] = graph.inc[v];
    std::sort(rot[v].begin(), rot[v].end(), [&](const auto& a, const auto& b) {
      EmbeddedPoint pa{graph.pos[a.first].x - graph.pos[v].x,
                       graph.pos[a.first].y - graph.pos[v].y};
      EmbeddedPoint pb{graph.pos[b.first].x - graph.pos[v].x,
                       graph.pos[b.first].y - graph.pos[v].y};
      return angle_less(pa, pb);
    });
  }
  auto rotIndex = [&](int v, int nb) {
    for (std::size_t i = 0; i < rot[v].size(); ++i)
      if (rot[v][i].first == nb) return static_cast<int>(i);
    throw std::runtime_error("compute_faces: rotation lookup failed");
  };
  // trace faces: arriving at v from u, leave along the neighbor just
  // clockwise of u in the rotation at v (keeps the face on the left)
  std::map<std::pair<int, int>, int> seen;  // directed edge -> face id
  std::int64_t area2Total = 0;
  for (const auto& e0 : graph.edges) {
    for (auto [su, sv] : {std::make_pair(e0.u, e0.v), std::make_pair(e0.v, e0.u)}) {
      if (seen.count({su, sv})) continue;
      int faceId = static_cast<int>(out.faces.size());
      std::vector<int> cycle;
      std::int64_t area2 = 0;
      int u = su, v = sv;
      do {
        seen[{u, v}] = faceId;
        cycle.push_back(u);
        area2 += graph.pos[u].x * graph.pos[v].y - graph.pos[v].x * graph.pos[u].y;
        int k = rotIndex(v, u);
        int deg = static_cast<int>(rot[v].size());
        int w = rot[v][(k - 1 + deg) % deg].first;
        u = v;
        v = w;
      } while (!(u == su && v == sv));
      out.faces.push_back(std::move(cycle));
      if (area2 <= 0) {
        if (out.outer != -1 && area2 < 0) throw std::runtime_error("compute_faces: two outer faces");
        if (out.outer == -1 || area2 < 0) out.outer = faceId;
      }
      area2Total += area2;
    }
  }
  std::int64_t V = static_cast<std::int64_t>(graph.cells.size());
  std::int64_t E = static_cast<std::int64_t>(graph.edges.size());
  std::int64_t F = static_cast<std::int64_t>(out.faces.size());
  if (V - E + F != 2) throw std::runtime_error("compute_faces: Euler check failed");
  if (out.outer == -1) throw std::runtime_error("compute_faces: no outer face");
  return out;
}

std::vector<int> boundary_vertices(const DualGraph& graph) {
  auto comp = components(graph);
  int n = 0;
  for (int c : comp) n = std::max(n, c + 1);
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    std::vector<int> keep;
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) keep.push_back(static_cast<int>(v));
    DualGraph sub = induced_subgraph(graph, keep);
    PlanarFaces faces = compute_faces(sub);
    std::vector<bool> mark(sub.cells.size(), false);
    for (int v : faces.faces[faces.outer]) mark[v] = true;
    for (std::size_t v = 0; v < mark.size(); ++v)
      if (mark[v]) out.push_back(keep[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Json cell_to_json(LatticeKind k, const Cell& c) {
  if (k == LatticeKind::tri) return Json::array({c.a, c.b, c.c});
  return Json::array({c.a, c.b});
}

Cell cell_from_json(LatticeKind k, const Json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) fail("region JSON: bad cell");
  int a = j[0].get<int>(), b = j[1].get<int>();
  int c = j.size() == 3 ? j[2].get<int>() : 0;
  if (k == LatticeKind::tri) {
    if (j.size() != 3 || (c != 0 && c != 1)) fail("region JSON: tri cell needs [r,c,o], o in {0,1}");
  } else if (c != 0) {
    fail("region JSON: non-tri cell has a nonzero third entry");
  }
  return Cell{a, b, c};
}

}  // namespace

std::string region_to_json(const Region& region) {
  Json j;
  j["lattice"] = lattice_name(region.lattice);
  Json cells = Json::array();
  for (const Cell& c : region.cells) cells.push_back(cell_to_json(region.lattice, c));
  j["cells"] = std::move(cells);
  Json weights = Json::array();
  for (const auto& [key, w] : region.weights) {
    if (w == 1) continue;
    weights.push_back(Json::array({cell_to_json(region.lattice, key.first),
                                   cell_to_json(region.lattice, key.second), to_string(w)}));
  }
  j["weights"] = std::move(weights);
  return j.dump() + "\n";
}

Region region_from_json(const std::string& text) {
  Json j = Json::parse(text);
  if (!j.is_object() || !j.contains("lattice") || !j.contains("cells"))
    fail("region JSON: need lattice and cells");
  LatticeKind k = lattice_from_name(j["lattice"].get<std::string>());
  std::vector<Cell> cells;
  for (const auto& jc : j["cells"]) cells.push_back(cell_from_json(k, jc));
  Region region = make_region(k, std::move(cells));
  if (j.contains("weights")) {
    for (const auto& jw : j["weights"]) {
      if (!jw.is_array() || jw.size() != 3) fail("region JSON: bad weight entry");
      Cell a = cell_from_json(k, jw[0]);
      Cell b = cell_from_json(k, jw[1]);
      ExactRational w =
          jw[2].is_string() ? parse_rational(jw[2].get<std::string>()) : ExactRational(jw[2].get<long>());
      set_weight(region, a, b, w);
    }
  }
  return region;
}

namespace {

struct Pt {
  double x, y;
};

std::vector<Pt> cell_corners(LatticeKind k, const Cell& c) {
  const double s3 = 1.7320508075688772;
  switch (k) {
    case LatticeKind::tri: {
      auto pt = [&](double x, double y) { return Pt{x + y / 2, y * s3 / 2}; };
      if (c.c == 0) return {pt(c.b, c.a), pt(c.b + 1, c.a), pt(c.b, c.a + 1)};
      return {pt(c.b + 1, c.a), pt(c.b, c.a + 1), pt(c.b + 1, c.a + 1)};
    }
    case LatticeKind::sq:
      return {Pt{double(c.a), double(c.b)}, Pt{double(c.a + 1), double(c.b)},
              Pt{double(c.a + 1), double(c.b + 1)}, Pt{double(c.a), double(c.b + 1)}};
    case LatticeKind::hex: {
      double A = 1 + 2.0 * c.a + c.b, B = c.a + 2.0 * c.b;
      double cx = A - B / 2, cy = B * s3 / 2;
      std::vector<Pt> out;
      const double dirs[6][2] = {{1, 0},  {0.5, s3 / 2},  {-0.5, s3 / 2},
                                 {-1, 0}, {-0.5, -s3 / 2}, {0.5, -s3 / 2}};
      for (auto& d : dirs) out.push_back(Pt{cx + d[0], cy + d[1]});
      return out;
    }
  }
  fail("cell_corners: bad lattice");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Region& region) {
  const double scale = 36.0;
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool first = true;
  std::vector<std::vector<Pt>> polys;
  for (const Cell& c : region.cells) {
    polys.push_back(cell_corners(region.lattice, c));
    for (const Pt& p : polys.back()) {
      if (first || p.x < minx) minx = p.x;
      if (first || p.y < miny) miny = p.y;
      if (first || p.x > maxx) maxx = p.x;
      if (first || p.y > maxy) maxy = p.y;
      first = false;
    }
  }
  double w = (maxx - minx) * scale + 20, h = (maxy - miny) * scale + 20;
  auto tx = [&](double x) { return (x - minx) * scale + 10; };
  auto ty = [&](double y) { return (maxy - y) * scale + 10; };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                    fmt(w) + "\" height=\"" + fmt(h) + "\">\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    svg += "<polygon points=\"";
    for (std::size_t j = 0; j < polys[i].size(); ++j) {
      if (j) svg += " ";
      svg += fmt(tx(polys[i][j].x)) + "," + fmt(ty(polys[i][j].y));
    }
    svg += "\" fill=\"#f4e8d0\" stroke=\"#4a4a4a\" stroke-width=\"1\"/>\n";
  }
  for (const auto& [key, wgt] : region.weights) {
    EmbeddedPoint pa = cell_center(region.lattice, key.first);
    EmbeddedPoint pb = cell_center(region.lattice, key.second);
    double sx, sy;
    if (region.lattice == LatticeKind::tri) {
      sx = (pa.x + pb.x) / 12.0;
      sy = (pa.y + pb.y) / 2.0 / 3.0 * 1.7320508075688772 / 2;
    } else if (region.lattice == LatticeKind::sq) {
      sx = (pa.x + pb.x) / 4.0;
      sy = (pa.y + pb.y) / 4.0;
    } else {
      sx = (pa.x + pb.x) / 4.0;
      sy = (pa.y + pb.y) / 4.0 * 1.7320508075688772;
    }
    svg += "<ellipse cx=\"" + fmt(tx(sx)) + "\" cy=\"" + fmt(ty(sy)) +
           "\" rx=\"8.00\" ry=\"5.00\" fill=\"#9db4d0\" opacity=\"0.8\"><title>" +
           to_string(wgt) + "</title></ellipse>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_ascii(const Region& region) {
  if (region.cells.empty()) return "(empty region)\n";
  int minA = region.cells.front().a, maxA = minA;
  int minB = 0, maxB = 0;
  bool first = true;
  auto colOf = [&](const Cell& c) {
    // spread columns so each cell gets one character slot
    if (region.lattice == LatticeKind::tri) return 2 * c.b + c.a + c.c;
    if (region.lattice == LatticeKind::sq) return c.a;
    return 2 * c.a + c.b;
  };
  for (const Cell& c : region.cells) {
    minA = std::min(minA, c.a);
    maxA = std::max(maxA, c.a);
    int col = colOf(c);
    if (first || col < minB) minB = col;
    if (first || col > maxB) maxB = col;
    first = false;
  }
  std::vector<std::string> rows(maxA - minA + 1, std::string(maxB - minB + 1, ' '));
  for (const Cell& c : region.cells) {
    char glyph = '#';
    if (region.lattice == LatticeKind::tri) glyph = c.c == 0 ? 'A' : 'V';
    if (region.lattice == LatticeKind::hex) glyph = 'O';
    rows[c.a - minA][colOf(c) - minB] = glyph;
  }
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::string line = *it;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace tilings
