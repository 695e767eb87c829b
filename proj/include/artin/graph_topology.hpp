#pragma once

// Cut-vertices, separating edges, chunks and the chunk tree, induced
// cycles and the graph of induced cycles.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/graph_core.hpp"

namespace artin {

/// Connected components of g restricted to `within` minus `removed`.
/// Components are sorted vertex lists, ordered by smallest vertex.
inline std::vector<VertexSet> components(const PresentationGraph& g, const VertexSet& within,
                                         const VertexSet& removed = {}) {
  std::vector<char> alive(g.size(), 0);
  for (auto v : within) alive[v] = 1;
  for (auto v : removed) alive[v] = 0;
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> out;
  for (auto start : within) {
    if (!alive[start] || seen[start]) continue;
    VertexSet comp;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (alive[w] && !seen[w] && g.adjacent(u, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline VertexSet all_vertices(const PresentationGraph& g) {
  VertexSet v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

inline bool is_connected(const PresentationGraph& g) { return components(g, all_vertices(g)).size() <= 1; }

/// Cut-vertices of the subgraph induced on `within` (assumed connected).
inline VertexSet cut_vertices_within(const PresentationGraph& g, const VertexSet& within) {
  VertexSet out;
  if (within.size() < 3) return out;
  for (auto v : within)
    if (components(g, within, {v}).size() > 1) out.push_back(v);
  return out;
}

/// Separating edges of the subgraph induced on `within`: edges {a,b} whose
/// removal (with both endpoints) leaves >= 2 components.
inline std::vector<LabelledEdge> separating_edges_within(const PresentationGraph& g, const VertexSet& within) {
  std::vector<LabelledEdge> out;
  for (std::size_t i = 0; i < within.size(); ++i)
    for (std::size_t j = i + 1; j < within.size(); ++j) {
      auto a = within[i], b = within[j];
      if (g.adjacent(a, b) && components(g, within, {a, b}).size() > 1) out.push_back({a, b, g.label(a, b)});
    }
  return out;
}

inline VertexSet cut_vertices(const PresentationGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::precondition, "cut_vertices: graph is disconnected");
  return cut_vertices_within(g, all_vertices(g));
}

inline void require_connected_no_cut_vertex(const PresentationGraph& g, const char* op) {
  if (!is_connected(g)) throw Error(ErrorKind::precondition, std::string(op) + ": graph is disconnected");
  auto cv = cut_vertices(g);
  if (!cv.empty()) {
    throw Error(ErrorKind::precondition, std::string(op) + ": graph has cut-vertex '" + g.name(cv[0]) + "'");
  }
}

inline std::vector<LabelledEdge> separating_edges(const PresentationGraph& g) {
  require_connected_no_cut_vertex(g, "separating_edges");
  return separating_edges_within(g, all_vertices(g));
}

/// Chunks as sorted vertex sets, in lexicographic order.
inline std::vector<VertexSet> chunks(const PresentationGraph& g) {
  require_connected_no_cut_vertex(g, "chunks");
  if (g.size() < 3) throw Error(ErrorKind::precondition, "chunks: graph needs at least 3 vertices");
  std::vector<VertexSet> out;
  std::vector<VertexSet> work{all_vertices(g)};
  while (!work.empty()) {
    auto piece = std::move(work.back());
    work.pop_back();
    auto sep = separating_edges_within(g, piece);
    if (sep.empty()) {
      out.push_back(std::move(piece));
      continue;
    }
    const auto a = sep[0].u, b = sep[0].v;
    for (auto comp : components(g, piece, {a, b})) {
      comp.push_back(a);
      comp.push_back(b);
      std::sort(comp.begin(), comp.end());
      work.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Bipartite tree: chunk nodes, separating-edge nodes, and containment.
struct ChunkTree {
  std::vector<VertexSet> chunk_nodes;
  std::vector<LabelledEdge> edge_nodes;
  std::vector<std::pair<std::size_t, std::size_t>> incidence;  // (edge node, chunk node)

  std::size_t node_count() const { return chunk_nodes.size() + edge_nodes.size(); }

  bool is_tree() const {
    const auto n = node_count();
    if (n == 0 || incidence.size() + 1 != n) return false;
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [e, c] : incidence) {
      adj[chunk_nodes.size() + e].push_back(c);
      adj[c].push_back(chunk_nodes.size() + e);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      ++count;
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return count == n;
  }

  /// Graph-grammar export: chunk nodes C<i>, edge nodes E<j>; incidence
  /// edges carry the separating edge's label.
  std::string export_graph(const PresentationGraph& g) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < chunk_nodes.size(); ++i) {
      os << "# C" << i << " chunk:";
      for (auto v : chunk_nodes[i]) os << ' ' << g.name(v);
      os << '\n';
    }
    for (std::size_t j = 0; j < edge_nodes.size(); ++j) {
      const auto& e = edge_nodes[j];
      os << "# E" << j << " separating edge: " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.label << '\n';
    }
    os << "vertex";
    for (std::size_t i = 0; i < chunk_nodes.size(); ++i) os << " C" << i;
    for (std::size_t j = 0; j < edge_nodes.size(); ++j) os << " E" << j;
    os << '\n';
    for (auto [e, c] : incidence) os << "edge E" << e << " C" << c << ' ' << edge_nodes[e].label << '\n';
    return os.str();
  }
};

inline ChunkTree chunk_tree(const PresentationGraph& g) {
  ChunkTree t;
  t.chunk_nodes = chunks(g);
  t.edge_nodes = separating_edges_within(g, all_vertices(g));
  for (std::size_t e = 0; e < t.edge_nodes.size(); ++e)
    for (std::size_t c = 0; c < t.chunk_nodes.size(); ++c) {
      const auto& ch = t.chunk_nodes[c];
      if (std::binary_search(ch.begin(), ch.end(), t.edge_nodes[e].u) &&
          std::binary_search(ch.begin(), ch.end(), t.edge_nodes[e].v))
        t.incidence.emplace_back(e, c);
    }
  return t;
}

using Cycle = std::vector<std::size_t>;

/// Rotation starting at the least vertex, direction with the smaller
/// second vertex.
inline Cycle canonical_cycle(Cycle c) {
  if (c.size() < 3) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

inline std::size_t max_cycles_from_env() {
  if (const char* env = std::getenv("ARTIN_MAX_CYCLES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

/// All chordless cycles of length >= 3, canonical and sorted.
inline std::vector<Cycle> induced_cycles(const PresentationGraph& g, std::size_t cap = max_cycles_from_env()) {
  std::vector<Cycle> out;
  const auto n = g.size();
  Cycle path;
  std::vector<char> on_path(n, 0);
  auto extend = [&](auto&& self) -> void {
    const auto v = path.front(), x = path.back();
    for (std::size_t y = v + 1; y < n; ++y) {
      if (on_path[y] || !g.adjacent(x, y)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], y);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(v, y)) {
        if (path[1] < y) {
          auto c = path;
          c.push_back(y);
          out.push_back(std::move(c));
          if (out.size() > cap) {
            throw Error(ErrorKind::resource,
                        "induced cycle count exceeds cap " + std::to_string(cap) + " (set ARTIN_MAX_CYCLES)");
          }
        }
        continue;
      }
      path.push_back(y);
      on_path[y] = 1;
      self(self);
      on_path[y] = 0;
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    path = {v};
    on_path[v] = 1;
    extend(extend);
    on_path[v] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::pair<std::size_t, std::size_t>> cycle_edges(const Cycle& c) {
  std::set<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto a = c[i], b = c[(i + 1) % c.size()];
    es.insert({std::min(a, b), std::max(a, b)});
  }
  return es;
}

inline bool cycles_share_edge(const Cycle& a, const Cycle& b) {
  auto ea = cycle_edges(a), eb = cycle_edges(b);
  return std::any_of(ea.begin(), ea.end(), [&](const auto& e) { return eb.count(e) > 0; });
}

struct InducedCycleGraph {
  std::vector<Cycle> cycles;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // i < j
  std::size_t component_count = 0;

  bool connected() const { return component_count <= 1; }
};

inline InducedCycleGraph cycle_graph(const PresentationGraph& g) {
  InducedCycleGraph cg;
  cg.cycles = induced_cycles(g);
  const auto n = cg.cycles.size();
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> es(n);
  for (std::size_t i = 0; i < n; ++i) es[i] = cycle_edges(cg.cycles[i]);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::any_of(es[i].begin(), es[i].end(), [&](const auto& e) { return es[j].count(e) > 0; })) {
        cg.adjacency.emplace_back(i, j);
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cg.component_count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return cg;
}

struct CycleChain {
  std::size_t vertex = 0;
  std::vector<Cycle> chain;
};

/// Whether `w` is a valid chain from c1 to c2 around w.vertex.
inline bool valid_cycle_chain(const PresentationGraph& g, const Cycle& c1, const Cycle& c2, const CycleChain& w) {
  const auto& ch = w.chain;
  if (ch.empty() || ch.front() != canonical_cycle(c1) || ch.back() != canonical_cycle(c2)) return false;
  if (canonical_cycle(c1) == canonical_cycle(c2)) return ch.size() == 1;
  if (ch.size() < 3) return false;
  auto is_induced = [&](const Cycle& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
        if (g.adjacent(c[i], c[j]) != consecutive) return false;
      }
    return c.size() >= 3;
  };
  std::set<Cycle> distinct(ch.begin(), ch.end());
  if (distinct.size() != ch.size()) return false;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (!is_induced(ch[i])) return false;
    const auto& next = ch[(i + 1) % ch.size()];
    auto shared_at_v = false;
    auto ea = cycle_edges(ch[i]), eb = cycle_edges(next);
    for (const auto& e : ea)
      if (eb.count(e) && (e.first == w.vertex || e.second == w.vertex)) shared_at_v = true;
    if (!shared_at_v) return false;
  }
  return true;
}

/// For induced cycles c1, c2 sharing an edge, finds a vertex v of a shared
/// edge and a chain c1 = g_1, ..., g_n = c2 (n >= 3) of induced cycles,
/// consecutive ones sharing an edge through v, that avoids the direct step
/// c1 -> c2.
inline CycleChain cycle_chain_witness(const PresentationGraph& g, const Cycle& c1_in, const Cycle& c2_in) {
  require_connected_no_cut_vertex(g, "cycle_chain_witness");
  if (!separating_edges_within(g, all_vertices(g)).empty()) {
    throw Error(ErrorKind::precondition, "cycle_chain_witness: graph has a separating edge");
  }
  const auto cycles = induced_cycles(g);
  const Cycle c1 = canonical_cycle(c1_in), c2 = canonical_cycle(c2_in);
  for (const auto* c : {&c1, &c2})
    if (!std::binary_search(cycles.begin(), cycles.end(), *c)) {
      throw Error(ErrorKind::precondition, "cycle_chain_witness: argument is not an induced cycle");
    }
  if (!cycles_share_edge(c1, c2)) {
    throw Error(ErrorKind::precondition, "cycle_chain_witness: cycles share no edge");
  }
  if (c1 == c2) {
    CycleChain w{c1[0], {c1}};
    return w;
  }
  auto e1 = cycle_edges(c1), e2 = cycle_edges(c2);
  std::set<std::size_t> candidates;
  for (const auto& e : e1)
    if (e2.count(e)) {
      candidates.insert(e.first);
      candidates.insert(e.second);
    }
  for (auto v : candidates) {
    // H_v: induced cycles through v, adjacent when sharing an edge at v.
    std::vector<std::size_t> members;
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> at_v;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      if (std::find(c.begin(), c.end(), v) == c.end()) continue;
      std::set<std::pair<std::size_t, std::size_t>> es;
      for (const auto& e : cycle_edges(c))
        if (e.first == v || e.second == v) es.insert(e);
      members.push_back(i);
      at_v.push_back(std::move(es));
    }
    auto idx_of = [&](const Cycle& c) {
      for (std::size_t k = 0; k < members.size(); ++k)
        if (cycles[members[k]] == c) return k;
      return members.size();
    };
    const auto src = idx_of(c1), dst = idx_of(c2);
    auto linked = [&](std::size_t a, std::size_t b) {
      if ((a == src && b == dst) || (a == dst && b == src)) return false;
      return std::any_of(at_v[a].begin(), at_v[a].end(), [&](const auto& e) { return at_v[b].count(e) > 0; });
    };
    std::vector<std::size_t> parent(members.size(), members.size());
    std::vector<char> seen(members.size(), 0);
    std::deque<std::size_t> queue{src};
    seen[src] = 1;
    while (!queue.empty() && !seen[dst]) {
      auto a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < members.size(); ++b)
        if (!seen[b] && linked(a, b)) {
          seen[b] = 1;
          parent[b] = a;
          queue.push_back(b);
        }
    }
    if (!seen[dst]) continue;
    CycleChain w{v, {}};
    for (auto k = dst; k != members.size(); k = parent[k]) w.chain.push_back(cycles[members[k]]);
    std::reverse(w.chain.begin(), w.chain.end());
    if (!valid_cycle_chain(g, c1, c2, w)) {
      throw Error(ErrorKind::invalid, "cycle_chain_witness: internal chain failed validation");
    }
    return w;
  }
  throw Error(ErrorKind::exhausted, "cycle_chain_witness: no chain found around any shared vertex");
}

}  // namespace artin
