#include "tilings/counting.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace tilings {

namespace {

struct SearchState {
  std::vector<signed char> alive;
  std::vector<int> deg;
  int aliveCount = 0;
};

SearchState initial_state(const DualGraph& g) {
  SearchState s;
  s.alive.assign(g.order(), 1);
  s.deg.assign(g.order(), 0);
  s.aliveCount = static_cast<int>(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) s.deg[v] = static_cast<int>(g.inc[v].size());
  return s;
}

class Searcher {
 public:
  Searcher(const DualGraph& g, const BruteforceOptions& opt) : g_(g), opt_(opt) {}

  std::uint64_t nodes = 0;

  ExactRational run(SearchState& s) {
    ++nodes;
    int u = pick(s);
    if (u < 0) return 1;
    if (s.deg[u] == 0) return 0;
    if (opt_.componentSplit && split_helps(s, u)) return run_split(s, u);
    if (opt_.forcedEdges && s.deg[u] == 1) {
      auto [v, e] = live_neighbor(s, u);
      remove_pair(s, u, v);
      ExactRational r = g_.edges[e].w * run(s);
      restore_pair(s, u, v);
      return r;
    }
    ExactRational total = 0;
    auto branches = live_neighbors(s, u);
    for (auto [v, e] : branches) {
      remove_pair(s, u, v);
      total += g_.edges[e].w * run(s);
      restore_pair(s, u, v);
    }
    return total;
  }

  int pick(const SearchState& s) const {
    if (!opt_.minDegreeBranching) {
      for (std::size_t v = 0; v < s.alive.size(); ++v)
        if (s.alive[v]) return static_cast<int>(v);
      return -1;
    }
    int best = -1;
    for (std::size_t v = 0; v < s.alive.size(); ++v)
      if (s.alive[v] && (best < 0 || s.deg[v] < s.deg[best])) best = static_cast<int>(v);
    return best;
  }

  std::pair<int, int> live_neighbor(const SearchState& s, int u) const {
    for (auto [v, e] : g_.inc[u])
      if (s.alive[v]) return {v, e};
    throw std::runtime_error("searcher: degree bookkeeping broke");
  }

  std::vector<std::pair<int, int>> live_neighbors(const SearchState& s, int u) const {
    std::vector<std::pair<int, int>> out;
    for (auto [v, e] : g_.inc[u])
      if (s.alive[v]) out.push_back({v, e});
    return out;
  }

  void remove_pair(SearchState& s, int u, int v) {
    for (int x : {u, v}) {
      s.alive[x] = 0;
      --s.aliveCount;
    }
    for (int x : {u, v})
      for (auto [w, e] : g_.inc[x])
        if (s.alive[w]) --s.deg[w];
  }

  void restore_pair(SearchState& s, int u, int v) {
    // exact mirror of remove_pair: adjust degrees while both are still dead
    for (int x : {u, v})
      for (auto [w, e] : g_.inc[x])
        if (s.alive[w]) ++s.deg[w];
    for (int x : {u, v}) {
      s.alive[x] = 1;
      ++s.aliveCount;
    }
  }

 private:
  bool split_helps(const SearchState& s, int u) {
    comp_.clear();
    std::deque<int> bfs{u};
    std::vector<signed char> seen(s.alive.size(), 0);
    seen[u] = 1;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      comp_.push_back(x);
      for (auto [w, e] : g_.inc[x])
        if (s.alive[w] && !seen[w]) {
          seen[w] = 1;
          bfs.push_back(w);
        }
    }
    return static_cast<int>(comp_.size()) < s.aliveCount;
  }

  ExactRational run_split(SearchState& s, int u) {
    std::vector<int> comp = comp_;  // split_helps filled it for u
    if (static_cast<int>(comp.size()) % 2 == 1) return 0;
    std::vector<int> rest;
    std::vector<signed char> inComp(s.alive.size(), 0);
    for (int x : comp) inComp[x] = 1;
    for (std::size_t v = 0; v < s.alive.size(); ++v)
      if (s.alive[v] && !inComp[v]) rest.push_back(static_cast<int>(v));
    auto hide = [&](const std::vector<int>& xs) {
      for (int x : xs) {
        s.alive[x] = 0;
        --s.aliveCount;
      }
      for (int x : xs)
        for (auto [w, e] : g_.inc[x])
          if (s.alive[w]) --s.deg[w];
    };
    auto unhide = [&](const std::vector<int>& xs) {
      for (int x : xs)
        for (auto [w, e] : g_.inc[x])
          if (s.alive[w]) ++s.deg[w];
      for (int x : xs) {
        s.alive[x] = 1;
        ++s.aliveCount;
      }
    };
    hide(rest);
    ExactRational a = run(s);
    unhide(rest);
    if (a == 0) return 0;
    hide(comp);
    ExactRational b = run(s);
    unhide(comp);
    return a * b;
  }

  const DualGraph& g_;
  BruteforceOptions opt_;
  std::vector<int> comp_;
};

struct Subproblem {
  SearchState state;
  ExactRational multiplier;
};

}  // namespace

CountResult match_count_bruteforce(const DualGraph& graph, const BruteforceOptions& opt) {
  CountResult out;
  out.engine = Engine::bruteforce;
  SearchState root = initial_state(graph);
  int threads = opt.parallel ? omp_get_max_threads() : 1;
  if (threads <= 1 || graph.order() < 20) {
    Searcher searcher(graph, opt);
    out.value = searcher.run(root);
    out.stats.nodes = searcher.nodes;
    return out;
  }

  // breadth-first expansion into independent subproblems, then a parallel sweep
  Searcher expander(graph, opt);
  std::deque<Subproblem> queue;
  queue.push_back({std::move(root), 1});
  std::vector<Subproblem> ready;
  ExactRational settled = 0;
  std::uint64_t expandNodes = 0;
  const std::size_t target = static_cast<std::size_t>(threads) * 8;
  while (!queue.empty() && queue.size() < target) {
    Subproblem sub = std::move(queue.front());
    queue.pop_front();
    ++expandNodes;
    int u = expander.pick(sub.state);
    if (u < 0) {
      settled += sub.multiplier;
      continue;
    }
    if (sub.state.deg[u] == 0) continue;
    auto branches = expander.live_neighbors(sub.state, u);
    for (auto [v, e] : branches) {
      Subproblem next{sub.state, sub.multiplier * graph.edges[e].w};
      expander.remove_pair(next.state, u, v);
      queue.push_back(std::move(next));
    }
  }
  for (auto& sub : queue) ready.push_back(std::move(sub));

  std::vector<ExactRational> partial(ready.size());
  std::uint64_t nodeTotal = expandNodes;
#pragma omp parallel for schedule(dynamic) reduction(+ : nodeTotal)
  for (std::size_t i = 0; i < ready.size(); ++i) {
    Searcher searcher(graph, opt);
    partial[i] = ready[i].multiplier * searcher.run(ready[i].state);
    nodeTotal += searcher.nodes;
  }
  ExactRational total = settled;
  for (const ExactRational& p : partial) total += p;
  out.value = total;
  out.stats.nodes = nodeTotal;
  return out;
}

namespace {

ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  ExactInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExactInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Pfaffian orientation: spanning-tree edges oriented low->high, then bounded
// faces settled one free edge at a time so each ends with an odd number of
// edges disagreeing with its counterclockwise traversal.
std::vector<int> pfaffian_orientation(const DualGraph& g, const PlanarFaces& faces) {
  std::vector<int> orient(g.edges.size(), 0);  // +1: u->v, -1: v->u, 0: unset
  std::vector<signed char> visited(g.order(), 0);
  std::deque<int> bfs{0};
  visited[0] = 1;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (auto [v, e] : g.inc[u])
      if (!visited[v]) {
        visited[v] = 1;
        orient[e] = 1;
        bfs.push_back(v);
      }
  }
  std::map<std::pair<int, int>, int> edgeId;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    edgeId[{g.edges[e].u, g.edges[e].v}] = static_cast<int>(e);
  auto idOf = [&](int u, int v) {
    auto it = edgeId.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    if (it == edgeId.end()) throw std::runtime_error("orientation: missing edge");
    return it->second;
  };

  struct FaceInfo {
    std::vector<std::pair<int, int>> steps;  // directed (u,v) around the face
    int unset = 0;
  };
  std::vector<FaceInfo> info;
  std::vector<std::vector<int>> facesOfEdge(g.edges.size());
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    if (static_cast<int>(f) == faces.outer) continue;
    FaceInfo fi;
    const auto& cyc = faces.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      fi.steps.push_back({u, v});
      int e = idOf(u, v);
      facesOfEdge[e].push_back(static_cast<int>(info.size()));
      if (orient[e] == 0) ++fi.unset;
    }
    info.push_back(std::move(fi));
  }
  auto cwParity = [&](const FaceInfo& fi) {
    int cw = 0;
    for (auto [u, v] : fi.steps) {
      int e = idOf(u, v);
      if (orient[e] == 0) continue;
      bool alongUv = g.edges[e].u == u;
      bool agrees = (orient[e] == 1) == alongUv;
      if (!agrees) ++cw;
    }
    return cw % 2;
  };
  std::deque<int> readyFaces;
  for (std::size_t f = 0; f < info.size(); ++f)
    if (info[f].unset == 1) readyFaces.push_back(static_cast<int>(f));
  std::size_t settledFaces = 0;
  while (!readyFaces.empty()) {
    int f = readyFaces.front();
    readyFaces.pop_front();
    if (info[f].unset != 1) continue;
    ++settledFaces;
    int freeEdge = -1;
    bool alongUv = true;
    for (auto [u, v] : info[f].steps) {
      int e = idOf(u, v);
      if (orient[e] == 0) {
        freeEdge = e;
        alongUv = g.edges[e].u == u;
        break;
      }
    }
    // choose the free edge so the face's disagreement count turns odd
    int parityWithout = cwParity(info[f]);
    bool needDisagree = parityWithout == 0;
    orient[freeEdge] = (needDisagree ^ alongUv) ? 1 : -1;
    info[f].unset = 0;
    for (int f2 : facesOfEdge[freeEdge])
      if (f2 != f && info[f2].unset > 0 && --info[f2].unset == 1) readyFaces.push_back(f2);
  }
  if (settledFaces != info.size())
    throw std::runtime_error("orientation: face sweep did not settle");
  for (const auto& fi : info)
    if (cwParity(fi) != 1) throw std::runtime_error("orientation: face parity check failed");
  for (int o : orient)
    if (o == 0) throw std::runtime_error("orientation: edge left unset");
  return orient;
}

ExactRational kasteleyn_component(const DualGraph& g, std::uint64_t* dim) {
  if (g.order() == 0) return 1;
  if (g.order() % 2 == 1) return 0;
  if (g.edges.empty()) return 0;
  PlanarFaces faces = compute_faces(g);
  std::vector<int> orient = pfaffian_orientation(g, faces);
  ExactInt scale = 1;
  for (const auto& e : g.edges) {
    ExactInt den = e.w.get_den();
    ExactInt gcd;
    mpz_gcd(gcd.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    scale = scale / gcd * den;
  }
  auto scaled = [&](const ExactRational& w) { return to_integer(w * ExactRational(scale)); };

  if (g.bipartite) {
    std::vector<int> rows, cols;
    for (std::size_t v = 0; v < g.order(); ++v)
      (g.color[v] == 0 ? rows : cols).push_back(static_cast<int>(v));
    if (rows.size() != cols.size()) return 0;
    std::size_t n = rows.size();
    *dim = std::max<std::uint64_t>(*dim, n);
    std::vector<int> rowIdx(g.order(), -1), colIdx(g.order(), -1);
    for (std::size_t i = 0; i < n; ++i) rowIdx[rows[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) colIdx[cols[i]] = static_cast<int>(i);
    std::vector<std::vector<ExactInt>> m(n, std::vector<ExactInt>(n, ExactInt(0)));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      int u = g.edges[e].u, v = g.edges[e].v;
      if (g.color[u] != 0) std::swap(u, v);
      // +1 when the orientation points from the 0-class to the 1-class
      bool uvIsLowHigh = g.edges[e].u == u;
      int sgn = (orient[e] == 1) == uvIsLowHigh ? 1 : -1;
      m[rowIdx[u]][colIdx[v]] = sgn * scaled(g.edges[e].w);
    }
    ExactInt det = bareiss_determinant(std::move(m));
    ExactInt mag = abs(det);
    ExactInt scalePow;
    mpz_pow_ui(scalePow.get_mpz_t(), scale.get_mpz_t(), n);
    return make_rational(mag, scalePow);
  }

  std::size_t n = g.order();
  *dim = std::max<std::uint64_t>(*dim, n);
  std::vector<std::vector<ExactInt>> m(n, std::vector<ExactInt>(n, ExactInt(0)));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    ExactInt w = scaled(g.edges[e].w);
    if (orient[e] == 1) {
      m[u][v] = w;
      m[v][u] = -w;
    } else {
      m[u][v] = -w;
      m[v][u] = w;
    }
  }
  ExactInt det = bareiss_determinant(std::move(m));
  if (det < 0) throw std::runtime_error("kasteleyn: negative skew determinant");
  ExactInt pf = isqrt_exact(det);
  ExactInt scalePow;
  mpz_pow_ui(scalePow.get_mpz_t(), scale.get_mpz_t(), n / 2);
  return make_rational(pf, scalePow);
}

}  // namespace

CountResult match_count_kasteleyn(const DualGraph& graph) {
  CountResult out;
  out.engine = Engine::kasteleyn;
  auto comp = components(graph);
  int nComp = 0;
  for (int c : comp) nComp = std::max(nComp, c + 1);
  ExactRational value = 1;
  for (int c = 0; c < nComp && value != 0; ++c) {
    std::vector<int> keep;
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) keep.push_back(static_cast<int>(v));
    DualGraph sub = induced_subgraph(graph, keep);
    value *= kasteleyn_component(sub, &out.stats.eliminationSize);
  }
  out.value = graph.order() == 0 ? ExactRational(1) : value;
  return out;
}

ExactRational match_count(const DualGraph& graph, Engine engine) {
  return engine == Engine::bruteforce ? match_count_bruteforce(graph).value
                                      : match_count_kasteleyn(graph).value;
}

ExactRational match_count_checked(const DualGraph& graph) {
  ExactRational b = match_count_bruteforce(graph).value;
  ExactRational k = match_count_kasteleyn(graph).value;
  if (b != k) {
    throw std::runtime_error("engine disagreement: bruteforce=" + to_string(b) +
                             " kasteleyn=" + to_string(k) +
                             " region=" + region_to_json(region_of(graph)));
  }
  return b;
}

CountResult near_match_count(const DualGraph& graph, int v, Engine engine) {
  if (v < 0 || v >= static_cast<int>(graph.order()))
    throw std::invalid_argument("near_match_count: unknown vertex");
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(graph.order()); ++u)
    if (u != v) keep.push_back(u);
  DualGraph sub = induced_subgraph(graph, keep);
  CountResult out = engine == Engine::bruteforce ? match_count_bruteforce(sub)
                                                 : match_count_kasteleyn(sub);
  return out;
}

ExactRational match_count_minus(const DualGraph& graph, const std::vector<int>& removed,
                                Engine engine) {
  std::vector<signed char> drop(graph.order(), 0);
  for (int v : removed) {
    if (v < 0 || v >= static_cast<int>(graph.order()))
      throw std::invalid_argument("match_count_minus: unknown vertex");
    drop[v] = 1;
  }
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(graph.order()); ++u)
    if (!drop[u]) keep.push_back(u);
  DualGraph sub = induced_subgraph(graph, keep);
  return engine == Engine::bruteforce ? match_count_bruteforce(sub).value
                                      : match_count_kasteleyn(sub).value;
}

namespace {

std::vector<std::array<Cell, 3>> placements_covering(const Region& region, const Cell& c,
                                                     const TrimerTileSet& tiles) {
  std::vector<std::array<Cell, 3>> out;
  auto add = [&](int dq, int dr, int q1, int r1, int q2, int r2) {
    Cell a{c.a + dq, c.b + dr, 0};
    Cell b{a.a + q1, a.b + r1, 0};
    Cell d{a.a + q2, a.b + r2, 0};
    if (region.contains(a) && region.contains(b) && region.contains(d))
      out.push_back({a, b, d});
  };
  auto shape = [&](int q1, int r1, int q2, int r2) {
    add(0, 0, q1, r1, q2, r2);
    add(-q1, -r1, q1, r1, q2, r2);
    add(-q2, -r2, q1, r1, q2, r2);
  };
  if (tiles.rightStone) shape(1, 0, 0, 1);
  if (tiles.leftStone) shape(1, 0, 1, -1);
  if (tiles.verticalBone) shape(0, 1, 0, 2);
  if (tiles.risingBone) shape(1, 0, 2, 0);
  if (tiles.fallingBone) shape(1, -1, 2, -2);
  return out;
}

ExactInt trimer_rec(const Region& region, std::vector<signed char>& covered,
                    const TrimerTileSet& tiles) {
  std::size_t first = 0;
  while (first < covered.size() && covered[first]) ++first;
  if (first == covered.size()) return 1;
  const Cell& c = region.cells[first];
  ExactInt total = 0;
  for (const auto& placement : placements_covering(region, c, tiles)) {
    bool free = true;
    std::array<std::size_t, 3> idx{};
    for (int i = 0; i < 3; ++i) {
      auto it = std::lower_bound(region.cells.begin(), region.cells.end(), placement[i]);
      idx[i] = static_cast<std::size_t>(it - region.cells.begin());
      if (covered[idx[i]]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (std::size_t i : idx) covered[i] = 1;
    total += trimer_rec(region, covered, tiles);
    for (std::size_t i : idx) covered[i] = 0;
  }
  return total;
}

}  // namespace

ExactInt trimer_count(const Region& region, const TrimerTileSet& tiles) {
  if (region.lattice != LatticeKind::hex)
    throw std::invalid_argument("trimer_count: hex-lattice regions only");
  if (!tiles.any()) throw std::invalid_argument("trimer_count: empty tile set");
  if (region.cells.empty()) return 1;
  if (region.cells.size() % 3 != 0) return 0;
  std::vector<signed char> covered(region.cells.size(), 0);
  return trimer_rec(region, covered, tiles);
}

Region remove_forced_tiles(const Region& region, ExactRational* outWeight) {
  Region cur = region;
  ExactRational acc = 1;
  for (;;) {
    DualGraph g = dual_graph(cur);
    int forcedVertex = -1;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (g.inc[v].empty())
        throw std::domain_error("remove_forced_tiles: dead cell, region has no tiling");
      if (g.inc[v].size() == 1) {
        forcedVertex = static_cast<int>(v);
        break;
      }
    }
    if (forcedVertex < 0) break;
    auto [nbr, e] = g.inc[forcedVertex][0];
    acc *= g.edges[e].w;
    Cell a = g.cells[forcedVertex], b = g.cells[nbr];
    std::vector<Cell> cells;
    for (const Cell& c : cur.cells)
      if (c != a && c != b) cells.push_back(c);
    Region next = make_region(cur.lattice, std::move(cells));
    for (const auto& [key, w] : cur.weights)
      if (next.contains(key.first) && next.contains(key.second))
        set_weight(next, key.first, key.second, w);
    cur = std::move(next);
  }
  if (outWeight) *outWeight = acc;
  return cur;
}

}  // namespace tilings
