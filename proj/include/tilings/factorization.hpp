#pragma once

#include "tilings/counting.hpp"
#include "tilings/lattice.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tilings {

enum class LeftmostColor { white, black };

// Split a graph symmetric about `axis` into the parts on either side.
// On-axis vertices are 2-colored by the lattice bipartition; `leftmost`
// names the color of the first on-axis vertex in axis order. A vertex at
// position i on the axis joins the lower part exactly when (i is even) ==
// (its color is `leftmost`), keeping only the edges on its own side; an
// edge joining two on-axis vertices stays within its part with half its
// weight. Throws std::invalid_argument when the graph is asymmetric or
// misses the axis.
std::pair<DualGraph, DualGraph> cut(const DualGraph& graph, const Axis& axis,
                                    LeftmostColor leftmost);

// Both sides of a product identity, together with the data behind the right
// side: `width` is the exponent of the power-of-two prefactor, `parts` the
// sub-regions whose matching counts enter the products, and `terms` the raw
// counts in the order they appear in the identity.
struct IdentityReport {
  ExactRational lhs;
  ExactRational rhs;
  bool pass = false;
  std::uint64_t width = 0;
  std::vector<Region> parts;
  std::vector<ExactRational> terms;
};

// Checks M(G) == 2^width * M(G+) * M(G-) for a symmetric graph with an even
// number of vertices, where (G+, G-) = cut(graph, axis, white) and width is
// half the number of on-axis vertices rounded down.
IdentityReport factorize_even(const DualGraph& graph, const Axis& axis);

// One-vertex-removed analogue. v must lie off the axis on the unbounded
// face; a vertex below the axis is replaced by its mirror image first. With
// v' the mirror of v and (G+, G-) = cut(graph, axis, white):
//   white v: M(G \ v) == 2^width * M(G+) * M(G- \ v')
//   black v: M(G \ v) == 2^width * M(G+ \ v) * M(G-)
// An even vertex count is accepted and reports 0 == 0.
IdentityReport factorize_odd(const DualGraph& graph, const Axis& axis, int v);

// Averaging identity for a hexagonal region whose axis-symmetric hole
// cluster sits one unit southeast of its mirror-symmetric position. The
// hexagon is recovered from the region's support; cutting half a unit right
// of its symmetry axis under both leftmost colors gives parts
// (P+, P-, Q+, Q-), and the report checks
//   M(R) == 2^(width-1) * (M(P+) M(P-) + M(Q+) M(Q-))
// with width = half the number of cells the shifted line crosses. Throws
// std::invalid_argument when the region does not have that shape and
// std::domain_error when the hexagon minus the unshifted holes is
// untileable.
IdentityReport semi_factorize(const Region& region);

// Condensation identities for four distinct vertices lying in cyclic order
// a, b, c, d on one face (outer face included, either traversal direction),
// on a bipartite graph with equal class sizes.
//   sameClassPairs (a,b in one class, c,d in the other):
//     M(G\{a,d}) M(G\{b,c}) == M(G) M(G\{a,b,c,d}) + M(G\{a,c}) M(G\{b,d})
//   alternating (a,c in one class, b,d in the other):
//     M(G) M(G\{a,b,c,d}) == M(G\{a,b}) M(G\{c,d}) + M(G\{a,d}) M(G\{b,c})
enum class KuoVariant { sameClassPairs, alternating };
IdentityReport kuo_check(const DualGraph& graph, int a, int b, int c, int d,
                         KuoVariant variant);

}  // namespace tilings
