#pragma once

// Labelled presentation graphs: storage, the text format, type
// predicates, labelled isomorphisms and the fundamental-domain complex.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

using VertexSet = std::vector<std::size_t>;  // sorted vertex indices
using VertexMap = std::vector<std::size_t>;  // image index per source vertex

struct LabelledEdge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  int label = 2;

  friend bool operator==(const LabelledEdge&, const LabelledEdge&) = default;
  friend auto operator<=>(const LabelledEdge&, const LabelledEdge&) = default;
};

/// Finite simplicial graph with integer labels m_st >= 2. Vertices are kept
/// in lexicographic name order and addressed by index; a missing edge means
/// m_st = infinity.
class PresentationGraph {
 public:
  PresentationGraph() = default;

  /// Builds and validates. Edge endpoints must be listed in `vertices`.
  PresentationGraph(std::vector<std::string> vertices,
                    const std::vector<std::tuple<std::string, std::string, int>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!is_generator_name(vertices[i])) {
        throw Error(ErrorKind::invalid, "bad vertex name '" + vertices[i] + "'");
      }
      if (i > 0 && vertices[i] == vertices[i - 1]) {
        throw Error(ErrorKind::invalid, "duplicate vertex '" + vertices[i] + "'");
      }
    }
    names_ = std::move(vertices);
    labels_.assign(names_.size() * names_.size(), 0);
    for (const auto& [a, b, m] : edges) add_edge(a, b, m);
  }

  /// Vertex set = union of edge endpoints plus `extra`.
  static PresentationGraph from_edges(
      const std::vector<std::tuple<std::string, std::string, int>>& edges,
      std::vector<std::string> extra = {}) {
    std::set<std::string> names(extra.begin(), extra.end());
    for (const auto& [a, b, m] : edges) {
      names.insert(a);
      names.insert(b);
    }
    return PresentationGraph({names.begin(), names.end()}, edges);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error(ErrorKind::invalid, "unknown vertex '" + std::string(name) + "'");
    return *i;
  }

  /// 0 when not adjacent.
  int label(std::size_t u, std::size_t v) const { return labels_[u * size() + v]; }
  int label(std::string_view a, std::string_view b) const { return label(index(a), index(b)); }
  bool adjacent(std::size_t u, std::size_t v) const { return label(u, v) != 0; }

  std::vector<LabelledEdge> edges() const {
    std::vector<LabelledEdge> out;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v)
        if (adjacent(u, v)) out.push_back({u, v, label(u, v)});
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v) n += adjacent(u, v);
    return n;
  }

  std::vector<std::size_t> neighbours(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
      if (adjacent(u, v)) out.push_back(v);
    return out;
  }

  std::size_t degree(std::size_t u) const { return neighbours(u).size(); }

  /// The induced subgraph on `keep` (indices into this graph).
  PresentationGraph induced(const VertexSet& keep) const {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, int>> es;
    for (auto i : keep) vs.push_back(names_.at(i));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (adjacent(keep[a], keep[b])) es.emplace_back(name(keep[a]), name(keep[b]), label(keep[a], keep[b]));
    return PresentationGraph(vs, es);
  }

  /// Same vertex set, labels copied with a vertex renaming `perm` applied
  /// (perm[i] is the new index of old vertex i).
  PresentationGraph permuted(const VertexMap& perm) const {
    std::vector<std::tuple<std::string, std::string, int>> es;
    for (const auto& e : edges()) es.emplace_back(name(perm[e.u]), name(perm[e.v]), e.label);
    return PresentationGraph(names_, es);
  }

  /// Stable text identity of the labelled graph.
  std::string serialize() const {
    std::ostringstream os;
    if (!names_.empty()) {
      os << "vertex";
      for (const auto& n : names_) os << ' ' << n;
      os << '\n';
    }
    for (const auto& e : edges()) os << "edge " << name(e.u) << ' ' << name(e.v) << ' ' << e.label << '\n';
    return os.str();
  }

  /// Short FNV-1a digest of serialize(), used in map headers.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

  friend bool operator==(const PresentationGraph& a, const PresentationGraph& b) {
    return a.names_ == b.names_ && a.labels_ == b.labels_;
  }
  friend bool operator<(const PresentationGraph& a, const PresentationGraph& b) {
    return std::tie(a.names_, a.labels_) < std::tie(b.names_, b.labels_);
  }

 private:
  void add_edge(const std::string& a, const std::string& b, int m) {
    if (a == b) throw Error(ErrorKind::invalid, "loop edge at '" + a + "'");
    if (m < 2) {
      throw Error(ErrorKind::invalid, "label " + std::to_string(m) + " < 2 on edge " + a + " " + b);
    }
    auto u = find(a), v = find(b);
    if (!u || !v) {
      throw Error(ErrorKind::invalid, "edge " + a + " " + b + " uses an unknown vertex");
    }
    if (adjacent(*u, *v)) throw Error(ErrorKind::invalid, "duplicate edge " + a + " " + b);
    labels_[*u * size() + *v] = m;
    labels_[*v * size() + *u] = m;
  }

  std::vector<std::string> names_;
  std::vector<int> labels_;
};

/// Reads the line-based graph format:
///   # comment
///   vertex <name>...
///   edge <u> <v> <m>
/// Edges may only mention vertices declared by a `vertex` line when any
/// `vertex` line is present; otherwise endpoints are declared implicitly.
inline PresentationGraph parse_graph(std::string_view text) {
  std::vector<std::string> declared;
  std::vector<std::tuple<std::string, std::string, int>> edges;
  std::set<std::pair<std::string, std::string>> seen;
  bool explicit_vertices = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "vertex") {
      explicit_vertices = true;
      std::string v;
      while (ls >> v) {
        if (!is_generator_name(v)) fail("bad vertex name '" + v + "'");
        declared.push_back(v);
      }
    } else if (kw == "edge") {
      std::string a, b, ms, extra;
      if (!(ls >> a >> b >> ms) || (ls >> extra)) fail("expected 'edge <u> <v> <m>'");
      if (!is_generator_name(a) || !is_generator_name(b)) fail("bad vertex name in edge");
      if (a == b) fail("loop edge at '" + a + "'");
      int m = 0;
      auto [p, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
      if (ec != std::errc() || p != ms.data() + ms.size()) fail("bad label '" + ms + "'");
      if (m < 2) fail("label " + ms + " < 2");
      auto key = a < b ? std::pair{a, b} : std::pair{b, a};
      if (!seen.insert(key).second) fail("duplicate edge " + a + " " + b);
      edges.emplace_back(a, b, m);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  std::set<std::string> dset(declared.begin(), declared.end());
  if (dset.size() != declared.size()) throw Error(ErrorKind::parse, "duplicate vertex declaration");
  if (explicit_vertices) {
    for (const auto& [a, b, m] : edges) {
      if (!dset.count(a) || !dset.count(b)) {
        throw Error(ErrorKind::parse, "edge " + a + " " + b + " uses an undeclared vertex");
      }
    }
  }
  return PresentationGraph::from_edges(edges, declared);
}

struct TypeFlags {
  bool large = true;
  bool xxxl = true;
  bool hyperbolic_type = true;
  bool free_of_infinity = true;
  bool is_even_edge = false;
  std::size_t rank = 0;
};

inline TypeFlags classify(const PresentationGraph& g) {
  TypeFlags f;
  f.rank = g.size();
  for (const auto& e : g.edges()) {
    f.large = f.large && e.label >= 3;
    f.xxxl = f.xxxl && e.label >= 6;
  }
  const auto n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) f.free_of_infinity = false;
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.label(a, b) == 3 && g.label(b, c) == 3 && g.label(a, c) == 3) f.hyperbolic_type = false;
    }
  f.is_even_edge = n == 2 && g.adjacent(0, 1) && g.label(0, 1) % 2 == 0;
  return f;
}

/// Label-preserving bijections V(g) -> V(h) that also preserve
/// non-adjacency, in lexicographic order of the image sequence.
inline std::vector<VertexMap> labelled_isomorphisms(const PresentationGraph& g,
                                                    const PresentationGraph& h) {
  std::vector<VertexMap> out;
  const auto n = g.size();
  if (n != h.size() || g.edge_count() != h.edge_count()) return out;
  std::vector<std::multiset<int>> gp(n), hp(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) gp[i].insert(g.label(i, j));
      if (h.adjacent(i, j)) hp[i].insert(h.label(i, j));
    }
  VertexMap map(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(map);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || gp[i] != hp[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = g.label(i, k) == h.label(j, map[k]);
      if (!ok) continue;
      used[j] = true;
      map[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  extend(extend, 0);
  return out;
}

/// The finite complex K_Gamma for a large-type graph. Vertex tags are the
/// generating sets of the spherical standard parabolics: {}, {a}, {a,b}.
struct FundamentalDomain {
  struct Vertex {
    std::string tag;
    int type = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> simplices;  // maximal chains, ordered by type
};

inline FundamentalDomain fundamental_domain(const PresentationGraph& g) {
  if (!classify(g).large) {
    throw Error(ErrorKind::precondition, "fundamental domain needs a large-type graph (all labels >= 3)");
  }
  FundamentalDomain k;
  k.vertices.push_back({"{}", 0});
  std::vector<std::size_t> type1(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    type1[v] = k.vertices.size();
    k.vertices.push_back({"{" + g.name(v) + "}", 1});
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> type2;
  for (const auto& e : g.edges()) {
    type2[{e.u, e.v}] = k.vertices.size();
    k.vertices.push_back({"{" + g.name(e.u) + "," + g.name(e.v) + "}", 2});
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto nb = g.neighbours(v);
    if (nb.empty()) k.simplices.push_back({0, type1[v]});
    for (auto w : nb) k.simplices.push_back({0, type1[v], type2.at({std::min(v, w), std::max(v, w)})});
  }
  return k;
}

}  // namespace artin
