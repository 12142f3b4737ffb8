#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tilings/lattice.hpp"

#include <algorithm>
#include <set>

using namespace tilings;

namespace {

// unit hexagon (all six sides 1) as a raw cell list
std::vector<Cell> unitHexCells() {
  return {tri_up(0, 0),  tri_up(1, -1),  tri_up(1, 0),
          tri_down(0, -1), tri_down(0, 0), tri_down(1, -1)};
}

}  // namespace

TEST_CASE("triangular adjacency is symmetric and three-way") {
  Cell u = tri_up(2, -1);
  auto nb = cell_neighbors(LatticeKind::tri, u);
  CHECK(nb.size() == 3);
  for (const Cell& n : nb) {
    CHECK(n.c == 1);  // up cells touch only down cells
    auto back = cell_neighbors(LatticeKind::tri, n);
    CHECK(std::count(back.begin(), back.end(), u) == 1);
  }
  CHECK(cells_adjacent(LatticeKind::tri, tri_up(0, 0), tri_down(0, 0)));
  CHECK(cells_adjacent(LatticeKind::tri, tri_up(0, 0), tri_down(0, -1)));
  CHECK(cells_adjacent(LatticeKind::tri, tri_up(0, 0), tri_down(-1, 0)));
  CHECK(!cells_adjacent(LatticeKind::tri, tri_up(0, 0), tri_down(1, 0)));
  CHECK(!cells_adjacent(LatticeKind::tri, tri_up(0, 0), tri_up(0, 1)));
}

TEST_CASE("square and hex adjacency") {
  CHECK(cell_neighbors(LatticeKind::sq, sq_cell(3, 4)).size() == 4);
  CHECK(cells_adjacent(LatticeKind::sq, sq_cell(0, 0), sq_cell(0, 1)));
  CHECK(!cells_adjacent(LatticeKind::sq, sq_cell(0, 0), sq_cell(1, 1)));
  CHECK(cell_neighbors(LatticeKind::hex, hex_cell(0, 0)).size() == 6);
  // three mutually adjacent hex cells: an odd cycle
  CHECK(cells_adjacent(LatticeKind::hex, hex_cell(0, 0), hex_cell(1, 0)));
  CHECK(cells_adjacent(LatticeKind::hex, hex_cell(0, 0), hex_cell(0, 1)));
  CHECK(cells_adjacent(LatticeKind::hex, hex_cell(1, 0), hex_cell(0, 1)));
}

TEST_CASE("bipartition classes") {
  CHECK(cell_class(LatticeKind::tri, tri_up(5, -2)) == 0);
  CHECK(cell_class(LatticeKind::tri, tri_down(5, -2)) == 1);
  CHECK(cell_class(LatticeKind::sq, sq_cell(2, 3)) == 1);
  CHECK(cell_class(LatticeKind::sq, sq_cell(-1, -1)) == 0);
  CHECK(cell_class(LatticeKind::hex, hex_cell(0, 0)) == -1);
}

TEST_CASE("unit hexagon dual is a six-cycle") {
  Region r = make_region(LatticeKind::tri, unitHexCells());
  CHECK(r.size() == 6);
  auto [ups, downs] = class_counts(r);
  CHECK(ups == 3);
  CHECK(downs == 3);
  DualGraph g = dual_graph(r);
  CHECK(g.order() == 6);
  CHECK(g.edges.size() == 6);
  for (const auto& inc : g.inc) CHECK(inc.size() == 2);
  CHECK(g.bipartite);
  PlanarFaces faces = compute_faces(g);
  CHECK(faces.faces.size() == 2);
  CHECK(faces.outer >= 0);
  CHECK(faces.faces[faces.outer].size() == 6);
  CHECK(boundary_vertices(g).size() == 6);
}

TEST_CASE("small square regions") {
  // order-1 diamond: the four unit squares around the origin
  Region ad1 = make_region(
      LatticeKind::sq, {sq_cell(-1, -1), sq_cell(0, -1), sq_cell(-1, 0), sq_cell(0, 0)});
  DualGraph g = dual_graph(ad1);
  CHECK(g.order() == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.bipartite);

  std::vector<Cell> block;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block.push_back(sq_cell(i, j));
  DualGraph b = dual_graph(make_region(LatticeKind::sq, block));
  auto bd = boundary_vertices(b);
  CHECK(bd.size() == 8);
  int center = b.vertex_of(sq_cell(1, 1));
  CHECK(std::find(bd.begin(), bd.end(), center) == bd.end());
}

TEST_CASE("single cell and non-bipartite hex patch") {
  DualGraph one = dual_graph(make_region(LatticeKind::sq, {sq_cell(7, -3)}));
  CHECK(one.order() == 1);
  CHECK(one.edges.empty());
  PlanarFaces f = compute_faces(one);
  CHECK(f.faces.size() == 1);
  CHECK(f.outer == 0);

  DualGraph tri3 = dual_graph(
      make_region(LatticeKind::hex, {hex_cell(0, 0), hex_cell(1, 0), hex_cell(0, 1)}));
  CHECK(!tri3.bipartite);
  CHECK(tri3.edges.size() == 3);

  DualGraph pair = dual_graph(make_region(LatticeKind::hex, {hex_cell(0, 0), hex_cell(1, 0)}));
  CHECK(pair.bipartite);
}

TEST_CASE("vertical reflection on the triangular lattice") {
  // axis half a unit right of an up cell's center maps it one column right
  for (int c : {-2, 0, 3}) {
    Axis axis{AxisDir::triVertical, 2 * c + 2};
    CHECK(reflect_cell(LatticeKind::tri, axis, tri_up(0, c)) == tri_up(0, c + 1));
  }
  Axis axis{AxisDir::triVertical, 1};
  for (const Cell& c : unitHexCells()) {
    Cell image = reflect_cell(LatticeKind::tri, axis, c);
    CHECK(reflect_cell(LatticeKind::tri, axis, image) == c);
    CHECK(image.c == c.c);
  }
  Region hexRegion = make_region(LatticeKind::tri, unitHexCells());
  CHECK(is_axis_symmetric(hexRegion, axis));
  CHECK(!is_axis_symmetric(hexRegion, Axis{AxisDir::triVertical, 2}));
  // weights must transported symmetrically too
  Region weighted = hexRegion;
  set_weight(weighted, tri_up(0, 0), tri_down(0, 0), make_rational(1, 2));
  CHECK(!is_axis_symmetric(weighted, axis));
  set_weight(weighted, tri_up(0, 0), tri_down(0, -1), make_rational(1, 2));
  CHECK(is_axis_symmetric(weighted, axis));
  Region twice = reflect(reflect(weighted, axis), axis);
  CHECK(twice.cells == weighted.cells);
  CHECK(twice.weights == weighted.weights);
}

TEST_CASE("diagonal reflection on the square lattice") {
  Axis axis{AxisDir::sqDiagonal, 0};
  CHECK(reflect_cell(LatticeKind::sq, axis, sq_cell(0, 1)) == sq_cell(1, 0));
  CHECK(reflect_cell(LatticeKind::sq, axis, sq_cell(2, 2)) == sq_cell(2, 2));
  CHECK(cell_axis_side(LatticeKind::sq, axis, sq_cell(0, 3)) == 1);   // northwest
  CHECK(cell_axis_side(LatticeKind::sq, axis, sq_cell(3, 0)) == -1);  // southeast
  CHECK(cell_axis_side(LatticeKind::sq, axis, sq_cell(2, 2)) == 0);
  Axis shifted{AxisDir::sqDiagonal, 4};
  CHECK(reflect_cell(LatticeKind::sq, shifted, sq_cell(0, 0)) == sq_cell(-2, 2));
  CHECK_THROWS(reflect_cell(LatticeKind::sq, Axis{AxisDir::sqDiagonal, 3}, sq_cell(0, 0)));
  CHECK_THROWS(reflect_cell(LatticeKind::sq, Axis{AxisDir::triVertical, 0}, sq_cell(0, 0)));
  CHECK_THROWS(reflect_cell(LatticeKind::hex, Axis{AxisDir::triVertical, 0}, hex_cell(0, 0)));
}

TEST_CASE("axis side on the triangular lattice") {
  Axis axis{AxisDir::triVertical, 1};
  CHECK(cell_axis_side(LatticeKind::tri, axis, tri_up(0, 0)) == 0);
  CHECK(cell_axis_side(LatticeKind::tri, axis, tri_down(1, -1)) == 0);
  CHECK(cell_axis_side(LatticeKind::tri, axis, tri_down(0, 0)) == 1);
  CHECK(cell_axis_side(LatticeKind::tri, axis, tri_down(0, -1)) == -1);
}

TEST_CASE("axis vertices on the unit hexagon") {
  Region r = make_region(LatticeKind::tri, unitHexCells());
  DualGraph g = dual_graph(r);
  Axis axis{AxisDir::triVertical, 1};
  AxisVertices av = axis_vertices(g, axis);
  REQUIRE(av.order.size() == 2);
  CHECK(av.width == 1);
  // top to bottom: the crossed down cell sits above the crossed up cell
  CHECK(g.cells[av.order[0]] == tri_down(1, -1));
  CHECK(g.cells[av.order[1]] == tri_up(0, 0));
  CHECK_THROWS(axis_vertices(g, Axis{AxisDir::triVertical, 2}));
  // no on-axis vertex: axis between lattice columns misses every center
  Region two = make_region(LatticeKind::tri, {tri_up(0, 0), tri_up(0, -1)});
  DualGraph g2 = dual_graph(two);
  CHECK_THROWS(axis_vertices(g2, Axis{AxisDir::triVertical, 0}));
}

TEST_CASE("region JSON round trip is canonical") {
  Region r = make_region(LatticeKind::tri, unitHexCells());
  set_weight(r, tri_up(0, 0), tri_down(0, 0), make_rational(1, 2));
  std::string j1 = region_to_json(r);
  Region parsed = region_from_json(j1);
  CHECK(parsed.cells == r.cells);
  CHECK(parsed.weights == r.weights);
  CHECK(region_to_json(parsed) == j1);
  // order independence
  std::string scrambled = R"({"lattice":"tri","cells":[[1,0,0],[0,0,0],[0,-1,1],[1,-1,1],[0,0,1],[1,-1,0]],
    "weights":[[[0,0,0],[0,0,1],"1/2"]]})";
  CHECK(region_to_json(region_from_json(scrambled)) == j1);
  // square cells serialize as pairs
  Region s = make_region(LatticeKind::sq, {sq_cell(0, 0), sq_cell(1, 0)});
  std::string js = region_to_json(s);
  CHECK(js.find("[0,0]") != std::string::npos);
  CHECK(region_to_json(region_from_json(js)) == js);
  CHECK_THROWS(region_from_json(R"({"lattice":"tri","cells":[[0,0]]})"));
  CHECK_THROWS(region_from_json(R"({"lattice":"nope","cells":[]})"));
}

TEST_CASE("weight validation") {
  Region r = make_region(LatticeKind::sq, {sq_cell(0, 0), sq_cell(1, 0), sq_cell(5, 5)});
  CHECK_THROWS(set_weight(r, sq_cell(0, 0), sq_cell(5, 5), make_rational(1, 2)));
  CHECK_THROWS(set_weight(r, sq_cell(0, 0), sq_cell(0, 1), make_rational(1, 2)));
  CHECK_THROWS(set_weight(r, sq_cell(0, 0), sq_cell(1, 0), ExactRational(0)));
  set_weight(r, sq_cell(0, 0), sq_cell(1, 0), make_rational(3, 2));
  CHECK(r.weight(sq_cell(1, 0), sq_cell(0, 0)) == make_rational(3, 2));
  set_weight(r, sq_cell(0, 0), sq_cell(1, 0), ExactRational(1));
  CHECK(r.weights.empty());
}

TEST_CASE("translation and canonical form") {
  Region r = make_region(LatticeKind::tri, unitHexCells());
  set_weight(r, tri_up(0, 0), tri_down(0, 0), make_rational(1, 2));
  Region t = translated(r, 3, -5);
  CHECK(t.size() == r.size());
  CHECK(t.weight(tri_up(3, -5), tri_down(3, -5)) == make_rational(1, 2));
  Region c1 = canonical_translate(r);
  Region c2 = canonical_translate(t);
  CHECK(c1.cells == c2.cells);
  CHECK(c1.weights == c2.weights);
}

TEST_CASE("induced subgraphs and components") {
  Region r = make_region(LatticeKind::sq, {sq_cell(0, 0), sq_cell(1, 0), sq_cell(4, 4),
                                           sq_cell(4, 5), sq_cell(5, 4)});
  DualGraph g = dual_graph(r);
  auto comp = components(g);
  std::set<int> ids(comp.begin(), comp.end());
  CHECK(ids.size() == 2);
  DualGraph sub = induced_subgraph(g, {g.vertex_of(sq_cell(4, 4)), g.vertex_of(sq_cell(4, 5)),
                                       g.vertex_of(sq_cell(5, 4))});
  CHECK(sub.order() == 3);
  CHECK(sub.edges.size() == 2);
}

TEST_CASE("renders are deterministic and nonempty") {
  Region r = make_region(LatticeKind::tri, unitHexCells());
  set_weight(r, tri_up(0, 0), tri_down(0, 0), make_rational(1, 2));
  std::string svg = render_svg(r);
  CHECK(svg == render_svg(r));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg.find("ellipse") != std::string::npos);
  std::string ascii = render_ascii(r);
  CHECK(ascii == render_ascii(r));
  CHECK(ascii.find('A') != std::string::npos);
  CHECK(ascii.find('V') != std::string::npos);
  for (LatticeKind k : {LatticeKind::sq, LatticeKind::hex}) {
    Region s = make_region(k, {Cell{0, 0, 0}, Cell{1, 0, 0}});
    CHECK(render_svg(s).find("</svg>") != std::string::npos);
    CHECK(!render_ascii(s).empty());
  }
}
