#pragma once

// Graph generators and brute-force oracles for the property suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "artin/graph_core.hpp"

namespace testsupport {

using artin::PresentationGraph;
using artin::VertexSet;

inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }

/// Edge slots of K_n in (i<j) order.
inline std::vector<std::pair<int, int>> edge_slots(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// Graph on v0..v{n-1} whose edges are the set bits of `mask`, labelled by
/// `label(slot)`.
inline PresentationGraph graph_from_mask(int n, std::uint64_t mask, const std::function<int(int)>& label) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(vname(i));
  std::vector<std::tuple<std::string, std::string, int>> edges;
  auto slots = edge_slots(n);
  for (int k = 0; k < static_cast<int>(slots.size()); ++k)
    if (mask >> k & 1) edges.emplace_back(vname(slots[k].first), vname(slots[k].second), label(k));
  return PresentationGraph(names, edges);
}

// Bitmask adjacency helpers, independent of the library's graph code.
struct BitGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  static BitGraph of(const PresentationGraph& g) {
    BitGraph b;
    b.n = static_cast<int>(g.size());
    b.adj.assign(b.n, 0);
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j)
        if (g.adjacent(i, j)) b.adj[i] |= 1u << j;
    return b;
  }

  bool connected(std::uint32_t s) const {
    if (s == 0) return true;
    std::uint32_t seen = s & -s, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == s;
  }

  bool has_cut_vertex(std::uint32_t s) const {
    if (__builtin_popcount(s) < 3) return false;
    for (int v = 0; v < n; ++v)
      if ((s >> v & 1) && !connected(s & ~(1u << v))) return true;
    return false;
  }

  bool has_separating_edge(std::uint32_t s) const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((s >> a & 1) && (s >> b & 1) && (adj[a] >> b & 1)) {
          std::uint32_t rest = s & ~(1u << a) & ~(1u << b);
          if (rest && !connected(rest)) return true;
        }
    return false;
  }
};

/// Maximal vertex subsets (>= 3 vertices) inducing a connected subgraph
/// with no cut-vertex and no separating edge, sorted.
inline std::vector<VertexSet> brute_force_chunks(const PresentationGraph& g) {
  auto b = BitGraph::of(g);
  std::vector<std::uint32_t> cands;
  for (std::uint32_t s = 1; s < (1u << b.n); ++s) {
    if (__builtin_popcount(s) < 3) continue;
    if (b.connected(s) && !b.has_cut_vertex(s) && !b.has_separating_edge(s)) cands.push_back(s);
  }
  std::vector<VertexSet> out;
  for (auto s : cands) {
    bool maximal = std::none_of(cands.begin(), cands.end(), [&](std::uint32_t t) { return t != s && (s & t) == s; });
    if (!maximal) continue;
    VertexSet vs;
    for (int v = 0; v < b.n; ++v)
      if (s >> v & 1) vs.push_back(v);
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_no_cut_vertex(const PresentationGraph& g) {
  auto b = BitGraph::of(g);
  std::uint32_t all = (1u << b.n) - 1;
  return b.connected(all) && !b.has_cut_vertex(all);
}

/// Canonical edge mask: least mask over all vertex relabellings.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  auto slots = edge_slots(n);
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
    slot_of[slots[k].first][slots[k].second] = k;
    slot_of[slots[k].second][slots[k].first] = k;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (int k = 0; k < static_cast<int>(slots.size()); ++k)
      if (mask >> k & 1) m |= std::uint64_t{1} << slot_of[perm[slots[k].first]][perm[slots[k].second]];
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All simple graphs on n vertices up to isomorphism, as canonical masks,
/// built by adding one vertex at a time.
inline std::vector<std::vector<std::uint64_t>> graphs_up_to_iso(int max_n) {
  std::vector<std::vector<std::uint64_t>> by_n(max_n + 1);
  by_n[0] = {0};
  if (max_n >= 1) by_n[1] = {0};
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    auto old_slots = edge_slots(n - 1);
    auto new_slots = edge_slots(n);
    for (auto mask : by_n[n - 1]) {
      std::uint64_t lifted = 0;
      for (int k = 0; k < static_cast<int>(old_slots.size()); ++k)
        if (mask >> k & 1) {
          auto it = std::find(new_slots.begin(), new_slots.end(), old_slots[k]);
          lifted |= std::uint64_t{1} << (it - new_slots.begin());
        }
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        std::uint64_t m = lifted;
        for (int v = 0; v < n - 1; ++v)
          if (nb >> v & 1) {
            auto it = std::find(new_slots.begin(), new_slots.end(), std::pair<int, int>{v, n - 1});
            m |= std::uint64_t{1} << (it - new_slots.begin());
          }
        seen.insert(canonical_mask(n, m));
      }
    }
    by_n[n].assign(seen.begin(), seen.end());
  }
  return by_n;
}

/// Random connected graph without cut-vertex on n vertices (rejection).
inline PresentationGraph random_biconnected(std::mt19937_64& rng, int n, const std::vector<int>& labels) {
  auto slots = edge_slots(n);
  std::uniform_real_distribution<double> density(0.25, 0.8);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (;;) {
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (coin(rng)) mask |= std::uint64_t{1} << k;
    std::vector<int> lab(slots.size());
    for (auto& l : lab) l = labels[pick(rng)];
    auto g = graph_from_mask(n, mask, [&](int k) { return lab[k]; });
    if (connected_no_cut_vertex(g)) return g;
  }
}

}  // namespace testsupport
