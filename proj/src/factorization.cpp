#include "tilings/factorization.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilings {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

ExactRational pow2(std::int64_t e) {
  ExactInt shifted = ExactInt(1) << static_cast<unsigned long>(e >= 0 ? e : -e);
  if (e >= 0) return ExactRational(shifted);
  return make_rational(1, shifted);
}

struct CutParts {
  Region plus, minus;
  std::uint64_t width = 0;
  int whiteClass = 0;
};

// Core of the cutting procedure, working on any region and axis line, with
// no symmetry requirement (the shifted-line split reuses it on regions that
// are only nearly symmetric). whiteIsFirst gives the white role to the first
// on-axis cell in axis order.
CutParts cut_region(const Region& region, const Axis& axis, bool whiteIsFirst) {
  std::vector<Cell> on;
  for (const Cell& c : region.cells)
    if (cell_axis_side(region.lattice, axis, c) == 0) on.push_back(c);
  std::sort(on.begin(), on.end(), [&](const Cell& a, const Cell& b) {
    EmbeddedPoint pa = cell_center(region.lattice, a);
    EmbeddedPoint pb = cell_center(region.lattice, b);
    return axis.dir == AxisDir::triVertical ? pa.y > pb.y : pa.x < pb.x;
  });

  CutParts out;
  out.width = on.size() / 2;
  if (!on.empty()) {
    int firstClass = cell_class(region.lattice, on.front());
    out.whiteClass = whiteIsFirst ? firstClass : 1 - firstClass;
  }

  std::map<Cell, bool> axisBelow;
  for (std::size_t i = 0; i < on.size(); ++i) {
    bool white = cell_class(region.lattice, on[i]) == out.whiteClass;
    axisBelow[on[i]] = (i % 2 == 0) == white;
  }

  std::vector<Cell> plusCells, minusCells;
  for (const Cell& c : region.cells) {
    int side = cell_axis_side(region.lattice, axis, c);
    if (side == 0 ? axisBelow[c] : side < 0)
      minusCells.push_back(c);
    else
      plusCells.push_back(c);
  }
  out.plus = make_region(region.lattice, std::move(plusCells));
  out.minus = make_region(region.lattice, std::move(minusCells));

  auto carry = [&](Region& part) {
    for (const auto& [key, w] : region.weights)
      if (part.contains(key.first) && part.contains(key.second))
        set_weight(part, key.first, key.second, w);
  };
  carry(out.plus);
  carry(out.minus);
  for (std::size_t i = 0; i + 1 < on.size(); ++i) {
    const Cell& a = on[i];
    const Cell& b = on[i + 1];
    if (!cells_adjacent(region.lattice, a, b)) continue;
    Region& part = axisBelow[a] ? out.minus : out.plus;
    set_weight(part, a, b, region.weight(a, b) / 2);
  }
  return out;
}

ExactRational count_of(const Region& region) { return match_count_kasteleyn(dual_graph(region)).value; }

}  // namespace

std::pair<DualGraph, DualGraph> cut(const DualGraph& graph, const Axis& axis,
                                    LeftmostColor leftmost) {
  axis_vertices(graph, axis);
  CutParts parts = cut_region(region_of(graph), axis, leftmost == LeftmostColor::white);
  return {dual_graph(parts.plus), dual_graph(parts.minus)};
}

IdentityReport factorize_even(const DualGraph& graph, const Axis& axis) {
  AxisVertices av = axis_vertices(graph, axis);
  if (graph.order() % 2 != 0) fail("factorize_even: vertex count is odd");
  CutParts parts = cut_region(region_of(graph), axis, true);

  IdentityReport rep;
  rep.width = static_cast<std::uint64_t>(av.width);
  ExactRational whole = match_count_kasteleyn(graph).value;
  ExactRational upper = count_of(parts.plus);
  ExactRational lower = count_of(parts.minus);
  rep.lhs = whole;
  rep.rhs = pow2(static_cast<std::int64_t>(rep.width)) * upper * lower;
  rep.pass = rep.lhs == rep.rhs;
  rep.parts = {parts.plus, parts.minus};
  rep.terms = {whole, upper, lower};
  return rep;
}

IdentityReport factorize_odd(const DualGraph& graph, const Axis& axis, int v) {
  AxisVertices av = axis_vertices(graph, axis);
  if (v < 0 || v >= static_cast<int>(graph.order())) fail("factorize_odd: vertex out of range");
  int side = cell_axis_side(graph.lattice, axis, graph.cells[v]);
  if (side == 0) fail("factorize_odd: v lies on the axis");
  std::vector<int> rim = boundary_vertices(graph);
  if (std::find(rim.begin(), rim.end(), v) == rim.end())
    fail("factorize_odd: v must lie on the unbounded face");

  Cell vUp = graph.cells[v];
  if (side < 0) vUp = reflect_cell(graph.lattice, axis, vUp);
  Cell vDown = reflect_cell(graph.lattice, axis, vUp);
  CutParts parts = cut_region(region_of(graph), axis, true);
  bool vWhite = cell_class(graph.lattice, vUp) == parts.whiteClass;

  IdentityReport rep;
  rep.width = static_cast<std::uint64_t>(av.width);
  ExactRational removed = match_count_minus(graph, {v}, Engine::kasteleyn);
  DualGraph upper = dual_graph(parts.plus);
  DualGraph lower = dual_graph(parts.minus);
  ExactRational upperTerm, lowerTerm;
  if (vWhite) {
    upperTerm = match_count_kasteleyn(upper).value;
    lowerTerm = match_count_minus(lower, {lower.vertex_of(vDown)}, Engine::kasteleyn);
  } else {
    upperTerm = match_count_minus(upper, {upper.vertex_of(vUp)}, Engine::kasteleyn);
    lowerTerm = match_count_kasteleyn(lower).value;
  }
  rep.lhs = removed;
  rep.rhs = pow2(static_cast<std::int64_t>(rep.width)) * upperTerm * lowerTerm;
  rep.pass = rep.lhs == rep.rhs;
  rep.parts = {parts.plus, parts.minus};
  rep.terms = {removed, upperTerm, lowerTerm};
  return rep;
}

IdentityReport semi_factorize(const Region& region) {
  if (region.lattice != LatticeKind::tri) fail("semi_factorize: triangular-lattice regions only");
  if (region.cells.empty()) fail("semi_factorize: empty region");
  if (!region.weights.empty()) fail("semi_factorize: weighted regions are not supported");

  std::int64_t B = 0, T = 0, W = 0, E = 0, Sw = 0, Ne = 0;
  bool first = true;
  for (const Cell& c : region.cells) {
    std::int64_t yLo = c.a, yHi = c.a + 1, xLo = c.b, xHi = c.b + 1;
    std::int64_t sLo = c.a + c.b + (c.c == 0 ? 0 : 1);
    std::int64_t sHi = sLo + 1;
    if (first) {
      B = yLo, T = yHi, W = xLo, E = xHi, Sw = sLo, Ne = sHi;
      first = false;
    } else {
      B = std::min(B, yLo), T = std::max(T, yHi);
      W = std::min(W, xLo), E = std::max(E, xHi);
      Sw = std::min(Sw, sLo), Ne = std::max(Ne, sHi);
    }
  }
  if (W + Ne != E + Sw) fail("semi_factorize: support hexagon is not symmetric about a vertical axis");
  std::int64_t D = W + Ne;
  Axis mirror{AxisDir::triVertical, D};

  std::vector<Cell> hullCells;
  for (std::int64_t r = B; r < T; ++r)
    for (std::int64_t c = W; c < E; ++c) {
      if (c + r >= Sw && c + r + 1 <= Ne)
        hullCells.push_back(tri_up(static_cast<int>(r), static_cast<int>(c)));
      if (c + r + 1 >= Sw && c + r + 2 <= Ne)
        hullCells.push_back(tri_down(static_cast<int>(r), static_cast<int>(c)));
    }
  Region hull = make_region(LatticeKind::tri, std::move(hullCells));

  std::vector<Cell> holes;
  std::set_difference(hull.cells.begin(), hull.cells.end(), region.cells.begin(),
                      region.cells.end(), std::back_inserter(holes));
  if (holes.empty()) fail("semi_factorize: region has no holes");

  std::vector<Cell> cluster;
  cluster.reserve(holes.size());
  for (const Cell& h : holes) cluster.push_back(Cell{h.a + 1, h.b - 1, h.c});
  std::sort(cluster.begin(), cluster.end());
  for (const Cell& c : cluster)
    if (!hull.contains(c)) fail("semi_factorize: hole cluster does not fit the hexagon");
  Region clusterRegion = make_region(LatticeKind::tri, cluster);
  if (!is_axis_symmetric(clusterRegion, mirror))
    fail("semi_factorize: hole cluster is not symmetric about the axis");

  std::vector<Cell> unshifted;
  std::set_difference(hull.cells.begin(), hull.cells.end(), clusterRegion.cells.begin(),
                      clusterRegion.cells.end(), std::back_inserter(unshifted));
  if (count_of(make_region(LatticeKind::tri, std::move(unshifted))) == 0)
    throw std::domain_error("semi_factorize: hexagon minus the unshifted holes is untileable");

  Axis shifted{AxisDir::triVertical, D + 1};
  CutParts white = cut_region(region, shifted, true);
  CutParts black = cut_region(region, shifted, false);
  std::size_t crossed = 0;
  for (const Cell& c : region.cells)
    if (cell_axis_side(LatticeKind::tri, shifted, c) == 0) ++crossed;
  if (crossed % 2 != 0) fail("semi_factorize: odd number of cells crossed by the shifted line");

  IdentityReport rep;
  rep.width = crossed / 2;
  ExactRational whole = count_of(region);
  ExactRational wp = count_of(white.plus), wm = count_of(white.minus);
  ExactRational bp = count_of(black.plus), bm = count_of(black.minus);
  rep.lhs = whole;
  rep.rhs = pow2(static_cast<std::int64_t>(rep.width) - 1) * (wp * wm + bp * bm);
  rep.pass = rep.lhs == rep.rhs;
  rep.parts = {white.plus, white.minus, black.plus, black.minus};
  rep.terms = {whole, wp, wm, bp, bm};
  return rep;
}

namespace {

bool cyclic_word(const std::array<int, 4>& w) {
  bool fwd = true, rev = true;
  for (int i = 0; i < 4; ++i) {
    if (w[(i + 1) % 4] != (w[i] + 1) % 4) fwd = false;
    if (w[(i + 1) % 4] != (w[i] + 3) % 4) rev = false;
  }
  return fwd || rev;
}

bool cofacial_in_order(const DualGraph& graph, const std::array<int, 4>& vs) {
  std::vector<int> comp = components(graph);
  for (int i = 1; i < 4; ++i)
    if (comp[vs[i]] != comp[vs[0]]) return false;
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(graph.order()); ++u)
    if (comp[u] == comp[vs[0]]) keep.push_back(u);
  DualGraph sub = induced_subgraph(graph, keep);
  std::array<int, 4> sv;
  for (int i = 0; i < 4; ++i) sv[i] = sub.vertex_of(graph.cells[vs[i]]);
  PlanarFaces faces = compute_faces(sub);
  for (const auto& face : faces.faces) {
    std::array<std::vector<int>, 4> occ;
    for (int p = 0; p < static_cast<int>(face.size()); ++p)
      for (int i = 0; i < 4; ++i)
        if (face[p] == sv[i]) occ[i].push_back(p);
    if (occ[0].empty() || occ[1].empty() || occ[2].empty() || occ[3].empty()) continue;
    for (int pa : occ[0])
      for (int pb : occ[1])
        for (int pc : occ[2])
          for (int pd : occ[3]) {
            std::array<std::pair<int, int>, 4> order{{{pa, 0}, {pb, 1}, {pc, 2}, {pd, 3}}};
            std::sort(order.begin(), order.end());
            if (cyclic_word({order[0].second, order[1].second, order[2].second, order[3].second}))
              return true;
          }
  }
  return false;
}

}  // namespace

IdentityReport kuo_check(const DualGraph& graph, int a, int b, int c, int d, KuoVariant variant) {
  int n = static_cast<int>(graph.order());
  for (int x : {a, b, c, d})
    if (x < 0 || x >= n) fail("kuo_check: vertex out of range");
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    fail("kuo_check: vertices must be distinct");
  if (!graph.bipartite) fail("kuo_check: bipartite graph required");
  std::size_t class0 = 0;
  for (int col : graph.color)
    if (col == 0) ++class0;
  if (class0 * 2 != graph.order()) fail("kuo_check: vertex classes have unequal sizes");

  int ca = graph.color[a], cb = graph.color[b], cc = graph.color[c], cd = graph.color[d];
  if (variant == KuoVariant::sameClassPairs) {
    if (!(ca == cb && cc == cd && ca != cc))
      fail("kuo_check: need a,b in one class and c,d in the other");
  } else {
    if (!(ca == cc && cb == cd && ca != cb))
      fail("kuo_check: need alternating classes around the face");
  }
  if (!cofacial_in_order(graph, {a, b, c, d}))
    fail("kuo_check: vertices do not lie in cyclic order on a face");

  auto minus = [&](std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    return match_count_minus(graph, removed, Engine::kasteleyn);
  };

  IdentityReport rep;
  if (variant == KuoVariant::sameClassPairs) {
    ExactRational mad = minus({a, d}), mbc = minus({b, c});
    ExactRational whole = minus({}), mall = minus({a, b, c, d});
    ExactRational mac = minus({a, c}), mbd = minus({b, d});
    rep.lhs = mad * mbc;
    rep.rhs = whole * mall + mac * mbd;
    rep.terms = {mad, mbc, whole, mall, mac, mbd};
  } else {
    ExactRational whole = minus({}), mall = minus({a, b, c, d});
    ExactRational mab = minus({a, b}), mcd = minus({c, d});
    ExactRational mad = minus({a, d}), mbc = minus({b, c});
    rep.lhs = whole * mall;
    rep.rhs = mab * mcd + mad * mbc;
    rep.terms = {whole, mall, mab, mcd, mad, mbc};
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace tilings
