#pragma once

#include "tilings/lattice.hpp"

#include <cstdint>

namespace tilings {

enum class Engine { bruteforce, kasteleyn };

struct CountStats {
  std::uint64_t nodes = 0;            // branch nodes explored (bruteforce)
  std::uint64_t eliminationSize = 0;  // largest matrix dimension (kasteleyn)
};

struct CountResult {
  ExactRational value;
  Engine engine = Engine::bruteforce;
  CountStats stats;
};

struct BruteforceOptions {
  bool minDegreeBranching = true;
  bool forcedEdges = true;
  bool componentSplit = true;
  bool parallel = true;
  // With everything off this is the plain reference enumeration: branch on
  // the lowest-index uncovered vertex and sum over its edges.
  static BruteforceOptions reference() { return {false, false, false, false}; }
};

// Sum of edge-weight products over all perfect matchings. Works on any
// finite graph (no bipartite assumption); empty graph counts 1.
CountResult match_count_bruteforce(const DualGraph& graph, const BruteforceOptions& opt = {});

// Same value via a Pfaffian orientation of the planar embedding and a
// fraction-free determinant. Bipartite components use the signed biadjacency
// determinant; non-bipartite ones the skew determinant (squared Pfaffian).
CountResult match_count_kasteleyn(const DualGraph& graph);

ExactRational match_count(const DualGraph& graph, Engine engine);
// Both engines; throws (with a region JSON reproducer) on disagreement.
ExactRational match_count_checked(const DualGraph& graph);

CountResult near_match_count(const DualGraph& graph, int v, Engine engine = Engine::bruteforce);
ExactRational match_count_minus(const DualGraph& graph, const std::vector<int>& removed,
                                Engine engine = Engine::bruteforce);

struct TrimerTileSet {
  bool leftStone = true;
  bool rightStone = true;
  bool verticalBone = true;
  bool risingBone = true;
  bool fallingBone = true;
  static TrimerTileSet all() { return {}; }
  static TrimerTileSet verticalBoneFree() { return {true, true, false, true, true}; }
  bool any() const { return leftStone || rightStone || verticalBone || risingBone || fallingBone; }
};

// Exact covers of a hex-lattice region by the allowed stones and bones.
ExactInt trimer_count(const Region& region, const TrimerTileSet& tiles);

// Repeatedly commits cells with a unique live neighbor (forced tile
// positions) and removes them. Multiplies the forced weights into outWeight
// when given. Throws if a dead cell (no tiling) appears.
Region remove_forced_tiles(const Region& region, ExactRational* outWeight = nullptr);

}  // namespace tilings
