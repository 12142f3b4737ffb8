#pragma once

#include "tilings/exactnum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tilings {

enum class LatticeKind { tri, sq, hex };

std::string lattice_name(LatticeKind k);
LatticeKind lattice_from_name(const std::string& name);

// One cell on any of the three lattices, packed as three ints.
//   tri: (r, c, o) - horizontal band r, column c, o = 0 up-pointing, 1 down-pointing.
//        The up cell (r,c) has corners (c,r), (c+1,r), (c,r+1) in axial lattice
//        coordinates (x,y) with Cartesian position (x + y/2, y*sqrt(3)/2); the down
//        cell (r,c) has corners (c+1,r), (c,r+1), (c+1,r+1).
//   sq:  (x, y, 0) - unit square [x,x+1] x [y,y+1].
//   hex: (q, r, 0) - axial coordinates; center 1 + q(2+w) + r(1+2w) with w = e^{2*pi*i/3}.
struct Cell {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t c = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell tri_up(int r, int c) { return Cell{r, c, 0}; }
inline Cell tri_down(int r, int c) { return Cell{r, c, 1}; }
inline Cell sq_cell(int x, int y) { return Cell{x, y, 0}; }
inline Cell hex_cell(int q, int r) { return Cell{q, r, 0}; }

std::vector<Cell> cell_neighbors(LatticeKind k, const Cell& c);
bool cells_adjacent(LatticeKind k, const Cell& a, const Cell& b);

// Bipartition class: tri = orientation, sq = chessboard parity. Hex cell
// adjacency contains triangles, so there is no class; returns -1.
int cell_class(LatticeKind k, const Cell& c);

// Exact embedding of the cell center, scaled per lattice so coordinates are
// integers. Only ratios/signs are used, so the per-lattice scale is harmless:
//   tri: (6*X, 6*Y/sqrt(3)) of the true centroid
//   sq:  (2x+1, 2y+1)
//   hex: (2*Re, 2*Im/sqrt(3)) of the true center
struct EmbeddedPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
  friend auto operator<=>(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};
EmbeddedPoint cell_center(LatticeKind k, const Cell& c);

struct Region {
  LatticeKind lattice = LatticeKind::tri;
  std::vector<Cell> cells;  // kept sorted and unique
  // Tile-position weights, keyed by the ordered (lo, hi) adjacent cell pair.
  // Absent pairs weigh 1.
  std::map<std::pair<Cell, Cell>, ExactRational> weights;

  bool contains(const Cell& c) const;
  std::size_t size() const { return cells.size(); }
  ExactRational weight(const Cell& a, const Cell& b) const;
};

Region make_region(LatticeKind k, std::vector<Cell> cells);
// Validates membership and adjacency; weight 1 erases the entry.
void set_weight(Region& region, const Cell& a, const Cell& b, const ExactRational& w);
Region translated(const Region& region, int da, int db);
// Translate so the minimal (a,b,c) cell sits at the origin; for comparing
// regions that differ only by position.
Region canonical_translate(const Region& region);
// Counts per bipartition class (up/down or chessboard); {size, 0} for hex.
std::pair<std::size_t, std::size_t> class_counts(const Region& region);

struct DualGraph {
  LatticeKind lattice = LatticeKind::tri;
  std::vector<Cell> cells;           // vertex i <-> cells[i], sorted
  std::vector<EmbeddedPoint> pos;    // exact embedding per vertex
  std::vector<int> color;           // 0/1 when bipartite, else -1
  bool bipartite = false;
  struct Edge {
    int u, v;  // u < v
    ExactRational w;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> inc;  // per vertex: (neighbor, edge id)

  int vertex_of(const Cell& c) const;  // -1 when absent
  std::size_t order() const { return cells.size(); }
};

DualGraph dual_graph(const Region& region);
Region region_of(const DualGraph& graph);  // inverse for induced duals

// Symmetry axes. Offsets are doubled so half-integer axes stay integral:
//   tri vertical: the line X = d/2 (X in column units of the tri embedding)
//   sq diagonal:  the line y = x + d/2 (d must be even for a cell-to-cell map)
enum class AxisDir { triVertical, sqDiagonal };
struct Axis {
  AxisDir dir = AxisDir::triVertical;
  std::int64_t d = 0;
};

Cell reflect_cell(LatticeKind k, const Axis& axis, const Cell& c);
// -1 below / 0 on the axis / +1 above. "Above" is the side that becomes the
// upper half-plane when the axis is rotated to horizontal: the right side of
// a vertical tri axis (rotating 90 degrees counterclockwise), the northwest
// side of a square diagonal.
int cell_axis_side(LatticeKind k, const Axis& axis, const Cell& c);
Region reflect(const Region& region, const Axis& axis);
bool is_axis_symmetric(const Region& region, const Axis& axis);

struct AxisVertices {
  std::vector<int> order;  // on-axis vertex ids, ordered along the axis
                           // (top-to-bottom for vertical, southwest-to-northeast
                           // for diagonal); positions 0,2,4,... are the a-vertices
                           // and 1,3,5,... the b-vertices
  int width = 0;           // floor(count / 2)
};
// Requires the graph to be symmetric about the axis and to touch it.
AxisVertices axis_vertices(const DualGraph& graph, const Axis& axis);

// Faces of one connected component under the lattice embedding.
struct PlanarFaces {
  std::vector<std::vector<int>> faces;  // vertex cycles, one per face
  int outer = -1;                       // index of the unbounded face
};
PlanarFaces compute_faces(const DualGraph& graph);  // requires connected graph
std::vector<int> components(const DualGraph& graph);  // vertex -> component id
DualGraph induced_subgraph(const DualGraph& graph, const std::vector<int>& keep);
// Vertices on the unbounded face of v's component.
std::vector<int> boundary_vertices(const DualGraph& graph);

std::string region_to_json(const Region& region);
Region region_from_json(const std::string& text);

std::string render_svg(const Region& region);
std::string render_ascii(const Region& region);

}  // namespace tilings
