#pragma once

// Combinatorial Gauss-Bonnet audit of typed triangular disc diagrams.
// Curvature is an integer in units of pi/6 (2 pi = 12). Angles: type 0
// gets 2, type 1 gets 3, type 2 gets 1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artin/error.hpp"
#include "artin/report.hpp"

namespace artin {

inline constexpr int kFullTurn = 12;

inline int angle_units(int type) {
  switch (type) {
    case 0: return 2;
    case 1: return 3;
    default: return 1;
  }
}

struct DiscDiagram {
  std::vector<std::string> names;  // vertex ids
  std::vector<int> types;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::size_t> boundary;  // cyclic
  std::set<std::size_t> transitions;
  std::optional<std::size_t> basepoint;

  std::size_t vertex_count() const { return names.size(); }

  bool on_boundary(std::size_t v) const {
    return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
  }
};

namespace detail {

using EdgeKey = std::pair<std::size_t, std::size_t>;

inline EdgeKey edge_key(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

// Whether the edge list forms a single path (open=true) or a single cycle.
inline bool edges_form(const std::vector<EdgeKey>& es, bool open) {
  if (es.empty()) return false;
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto [a, b] : es) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t ends = 0;
  for (auto& [v, nb] : adj) {
    if (nb.size() > 2) return false;
    ends += nb.size() == 1;
  }
  if (open ? ends != 2 : ends != 0) return false;
  if (!open && es.size() < 3) return false;
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack{adj.begin()->first};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : adj[u])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == adj.size();
}

inline bool same_cycle(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
      if (ok) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

}  // namespace detail

/// Checks the disc invariants: typed simplicial triangles, every edge in one
/// or two triangles, boundary edges forming the declared boundary cycle,
/// links that are paths on the boundary and cycles inside, connected with
/// Euler characteristic 1, markings on the boundary and of type 2. Throws at
/// the first violation.
inline void validate_disc(const DiscDiagram& d) {
  auto name = [&](std::size_t v) { return "'" + d.names.at(v) + "'"; };
  const auto nv = d.vertex_count();
  if (d.types.size() != nv) throw Error(ErrorKind::invalid, "types do not cover all vertices");
  if (d.triangles.empty()) throw Error(ErrorKind::invalid, "diagram has no triangles");
  std::set<std::array<std::size_t, 3>> seen_tri;
  std::map<detail::EdgeKey, int> edge_count;
  for (const auto& t : d.triangles) {
    std::array<int, 3> ts{};
    for (int i = 0; i < 3; ++i) {
      if (t[i] >= nv) throw Error(ErrorKind::invalid, "triangle uses an unknown vertex");
      ts[i] = d.types[t[i]];
    }
    std::sort(ts.begin(), ts.end());
    if (ts != std::array<int, 3>{0, 1, 2}) {
      throw Error(ErrorKind::invalid, "triangle " + name(t[0]) + "," + name(t[1]) + "," + name(t[2]) +
                                          " does not have one vertex of each type");
    }
    auto sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (!seen_tri.insert(sorted).second) throw Error(ErrorKind::invalid, "duplicate triangle");
    for (int i = 0; i < 3; ++i) ++edge_count[detail::edge_key(t[i], t[(i + 1) % 3])];
  }
  std::vector<detail::EdgeKey> boundary_edges;
  for (auto& [e, c] : edge_count) {
    if (c > 2) {
      throw Error(ErrorKind::invalid, "edge " + name(e.first) + "-" + name(e.second) + " lies in more than two triangles");
    }
    if (c == 1) boundary_edges.push_back(e);
  }
  if (!detail::edges_form(boundary_edges, false)) {
    throw Error(ErrorKind::invalid, "not a disc: boundary edges do not form a single cycle");
  }
  // recover the boundary cycle and compare with the declared one
  std::map<std::size_t, std::vector<std::size_t>> badj;
  for (auto [a, b] : boundary_edges) {
    badj[a].push_back(b);
    badj[b].push_back(a);
  }
  std::vector<std::size_t> cycle{boundary_edges[0].first};
  std::size_t prev = cycle[0], cur = badj[cycle[0]][0];
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    auto next = badj[cur][0] == prev ? badj[cur][1] : badj[cur][0];
    prev = cur;
    cur = next;
  }
  if (!detail::same_cycle(cycle, d.boundary)) {
    throw Error(ErrorKind::invalid, "declared boundary does not match the boundary edges of the triangles");
  }
  std::vector<char> on_bd(nv, 0);
  for (auto v : d.boundary) on_bd[v] = 1;
  std::vector<std::vector<detail::EdgeKey>> links(nv);
  for (const auto& t : d.triangles)
    for (int i = 0; i < 3; ++i) links[t[i]].push_back(detail::edge_key(t[(i + 1) % 3], t[(i + 2) % 3]));
  for (std::size_t v = 0; v < nv; ++v) {
    if (links[v].empty()) throw Error(ErrorKind::invalid, "vertex " + name(v) + " lies in no triangle");
    if (!detail::edges_form(links[v], on_bd[v] != 0)) {
      throw Error(ErrorKind::invalid, "not a disc: link of vertex " + name(v) + " is not a " +
                                          (on_bd[v] ? "path" : "cycle"));
    }
  }
  // connectivity and Euler characteristic
  std::vector<std::vector<std::size_t>> adj(nv);
  for (auto& [e, c] : edge_count) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> seen(nv, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    ++reached;
    for (auto w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (reached != nv) throw Error(ErrorKind::invalid, "not a disc: diagram is disconnected");
  const long euler = static_cast<long>(nv) - static_cast<long>(edge_count.size()) + static_cast<long>(d.triangles.size());
  if (euler != 1) throw Error(ErrorKind::invalid, "not a disc: Euler characteristic " + std::to_string(euler));
  for (auto v : d.transitions) {
    if (v >= nv || !on_bd[v]) throw Error(ErrorKind::invalid, "transition " + name(v) + " is not on the boundary");
    if (d.types[v] != 2) throw Error(ErrorKind::invalid, "transition " + name(v) + " is not of type 2");
  }
  if (d.basepoint) {
    auto v = *d.basepoint;
    if (v >= nv || !on_bd[v]) throw Error(ErrorKind::invalid, "basepoint " + name(v) + " is not on the boundary");
    if (d.types[v] != 2) throw Error(ErrorKind::invalid, "basepoint " + name(v) + " is not of type 2");
  }
}

inline void require_no_type0_on_boundary(const DiscDiagram& d) {
  for (auto v : d.boundary)
    if (d.types[v] == 0) {
      throw Error(ErrorKind::precondition,
                  "boundary visits type-0 vertex '" + d.names[v] + "'; diagram is not polygonalizable");
    }
}

/// Reads the JSON diagram schema: triangles, types, boundary, transitions,
/// basepoint. Vertex ids may be strings or integers.
inline DiscDiagram load_diagram(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("diagram is not valid JSON: ") + e.what());
  }
  DiscDiagram d;
  std::map<std::string, std::size_t> index;
  auto id_of = [&](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::parse, "vertex id must be a string or an integer");
  };
  auto vertex = [&](const nlohmann::json& v) {
    auto id = id_of(v);
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorKind::invalid, "vertex '" + id + "' has no type");
    return it->second;
  };
  try {
    if (!j.is_object()) throw Error(ErrorKind::parse, "diagram must be a JSON object");
    for (const char* key : {"triangles", "types", "boundary"})
      if (!j.contains(key)) throw Error(ErrorKind::parse, std::string("diagram lacks field '") + key + "'");
    const auto& types = j.at("types");
    if (!types.is_object()) throw Error(ErrorKind::parse, "'types' must be an object");
    for (auto it = types.begin(); it != types.end(); ++it) {
      int ty = it.value().get<int>();
      if (ty < 0 || ty > 2) throw Error(ErrorKind::invalid, "vertex '" + it.key() + "' has type outside 0..2");
      index[it.key()] = d.names.size();
      d.names.push_back(it.key());
      d.types.push_back(ty);
    }
    for (const auto& t : j.at("triangles")) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::parse, "triangle must list 3 vertices");
      d.triangles.push_back({vertex(t[0]), vertex(t[1]), vertex(t[2])});
    }
    for (const auto& v : j.at("boundary")) d.boundary.push_back(vertex(v));
    if (j.contains("transitions"))
      for (const auto& v : j.at("transitions")) d.transitions.insert(vertex(v));
    if (j.contains("basepoint") && !j.at("basepoint").is_null()) d.basepoint = vertex(j.at("basepoint"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("diagram schema: ") + e.what());
  }
  validate_disc(d);
  require_no_type0_on_boundary(d);
  return d;
}

inline std::string dump_diagram(const DiscDiagram& d) {
  nlohmann::json j;
  j["types"] = nlohmann::json::object();
  for (std::size_t v = 0; v < d.vertex_count(); ++v) j["types"][d.names[v]] = d.types[v];
  j["triangles"] = nlohmann::json::array();
  for (const auto& t : d.triangles) j["triangles"].push_back({d.names[t[0]], d.names[t[1]], d.names[t[2]]});
  j["boundary"] = nlohmann::json::array();
  for (auto v : d.boundary) j["boundary"].push_back(d.names[v]);
  j["transitions"] = nlohmann::json::array();
  for (auto v : d.transitions) j["transitions"].push_back(d.names[v]);
  j["basepoint"] = d.basepoint ? nlohmann::json(d.names[*d.basepoint]) : nlohmann::json(nullptr);
  return j.dump();
}

/// One polygon per type-0 vertex, on its link.
struct Polygon {
  std::size_t center = 0;
  std::vector<std::size_t> cycle;  // alternating type 1 / type 2
};

struct PolygonalDiagram {
  std::vector<Polygon> polygons;
  std::vector<int> polygon_count;  // n_v per vertex (0 for type-0 vertices)
};

inline PolygonalDiagram polygonalize(const DiscDiagram& d) {
  require_no_type0_on_boundary(d);
  PolygonalDiagram pd;
  pd.polygon_count.assign(d.vertex_count(), 0);
  std::map<std::size_t, std::vector<detail::EdgeKey>> links;
  for (const auto& t : d.triangles)
    for (int i = 0; i < 3; ++i)
      if (d.types[t[i]] == 0) links[t[i]].push_back(detail::edge_key(t[(i + 1) % 3], t[(i + 2) % 3]));
  for (auto& [c, es] : links) {
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (auto [a, b] : es) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& [v, nb] : adj)
      if (nb.size() != 2) throw Error(ErrorKind::invalid, "link of type-0 vertex '" + d.names[c] + "' is not a cycle");
    Polygon p{c, {adj.begin()->first}};
    std::size_t prev = p.cycle[0], cur = std::min(adj[prev][0], adj[prev][1]);
    while (cur != p.cycle[0]) {
      p.cycle.push_back(cur);
      auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    if (p.cycle.size() != adj.size()) {
      throw Error(ErrorKind::invalid, "link of type-0 vertex '" + d.names[c] + "' is not a single cycle");
    }
    for (auto v : p.cycle) ++pd.polygon_count[v];
    pd.polygons.push_back(std::move(p));
  }
  return pd;
}

enum class MarkClass { unmarked, corner, almost_corner, basepoint_other, violation };

inline const char* to_string(MarkClass c) {
  switch (c) {
    case MarkClass::unmarked: return "unmarked";
    case MarkClass::corner: return "corner";
    case MarkClass::almost_corner: return "almost-corner";
    case MarkClass::basepoint_other: return "basepoint";
    case MarkClass::violation: return "violation";
  }
  return "?";
}

struct CurvatureReport {
  PolygonalDiagram polygonal;
  std::vector<int> vertex_kappa;   // type 1 and 2 vertices; 0 for type 0
  std::vector<int> polygon_kappa;  // parallel to polygonal.polygons
  std::vector<MarkClass> mark;
  int total = 0;
  std::vector<Check> checks;

  std::vector<std::size_t> corners() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < mark.size(); ++v)
      if (mark[v] == MarkClass::corner) out.push_back(v);
    return out;
  }
};

/// kappa(v) = 12 - 6 chi(lk v) - sum of angles at v; a polygon carries the
/// curvature of its erased type-0 vertex.
inline CurvatureReport curvatures(const DiscDiagram& d) {
  CurvatureReport r;
  r.polygonal = polygonalize(d);
  const auto nv = d.vertex_count();
  std::vector<int> angle_sum(nv, 0);
  for (const auto& t : d.triangles)
    for (auto v : t) angle_sum[v] += angle_units(d.types[v]);
  std::vector<char> on_bd(nv, 0);
  for (auto v : d.boundary) on_bd[v] = 1;
  r.vertex_kappa.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v)
    if (d.types[v] != 0) r.vertex_kappa[v] = kFullTurn - 6 * (on_bd[v] ? 1 : 0) - angle_sum[v];
  for (const auto& p : r.polygonal.polygons) r.polygon_kappa.push_back(kFullTurn - angle_sum[p.center]);
  for (auto k : r.vertex_kappa) r.total += k;
  for (auto k : r.polygon_kappa) r.total += k;
  r.checks.push_back({"gauss_bonnet", r.total == kFullTurn,
                      "total=" + std::to_string(r.total) + " expected=" + std::to_string(kFullTurn) + " unit=pi/6"});

  const auto& n = r.polygonal.polygon_count;
  r.mark.assign(nv, MarkClass::unmarked);
  std::string bad;
  for (std::size_t v = 0; v < nv; ++v) {
    const bool transition = d.transitions.count(v) > 0;
    const bool base = d.basepoint && *d.basepoint == v;
    if (!transition && !base) continue;
    if (n[v] == 1) {
      r.mark[v] = MarkClass::corner;
    } else if (n[v] >= 5) {
      r.mark[v] = MarkClass::almost_corner;
    } else if (base) {
      r.mark[v] = MarkClass::basepoint_other;
    } else {
      r.mark[v] = MarkClass::violation;
      bad += " " + d.names[v] + "(n=" + std::to_string(n[v]) + ")";
    }
  }
  r.checks.push_back({"transition_dichotomy", bad.empty(), bad.empty() ? "n_v=1 or n_v>=5" : "violations:" + bad});

  std::string interior2, interior1;
  for (std::size_t v = 0; v < nv; ++v) {
    if (on_bd[v]) continue;
    if (d.types[v] == 2 && n[v] < 12) interior2 += " " + d.names[v] + "(n=" + std::to_string(n[v]) + ")";
    if (d.types[v] == 1 && r.vertex_kappa[v] > 0) interior1 += " " + d.names[v];
  }
  r.checks.push_back({"interior_type2_min_polygons", interior2.empty(),
                      interior2.empty() ? "all interior type-2 vertices in >=12 polygons" : "below 12:" + interior2});
  r.checks.push_back({"interior_type1_nonpositive", interior1.empty(),
                      interior1.empty() ? "kappa<=0" : "positive:" + interior1});
  return r;
}

struct CornerCell {
  std::size_t polygon = 0;
  std::vector<std::size_t> corners;
  std::vector<std::size_t> outer_path;  // u ... u'
  std::vector<std::size_t> inner_path;  // u' ... u
  std::size_t boundary_components = 0;
  std::vector<std::size_t> special;     // one entry per slot (at most two)
  std::size_t inner_type2 = 0;
};

struct RedistributedReport {
  CurvatureReport base;
  std::vector<CornerCell> cells;
  std::vector<int> vertex_kappa_prime;
  std::vector<int> polygon_kappa_prime;
  int total_prime = 0;
  std::vector<Check> checks;
  bool inconsistent = true;
  std::string verdict;

  std::vector<std::string> failed_lemmas() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c.name);
    return out;
  }
};

namespace detail {

inline CornerCell corner_cell(const DiscDiagram& d, const Polygon& p, std::size_t index,
                              const std::vector<std::size_t>& corners) {
  std::set<EdgeKey> bd_edges;
  for (std::size_t i = 0; i < d.boundary.size(); ++i)
    bd_edges.insert(edge_key(d.boundary[i], d.boundary[(i + 1) % d.boundary.size()]));
  const auto& c = p.cycle;
  const auto L = c.size();
  std::vector<char> edge_on(L, 0);  // edge i = (c[i], c[i+1])
  for (std::size_t i = 0; i < L; ++i) edge_on[i] = bd_edges.count(edge_key(c[i], c[(i + 1) % L])) > 0;
  CornerCell cell;
  cell.polygon = index;
  cell.corners = corners;
  if (std::all_of(edge_on.begin(), edge_on.end(), [](char e) { return e != 0; })) {
    throw Error(ErrorKind::precondition, "redistribute: diagram is a single polygon");
  }
  // runs of boundary edges, each as [start vertex position, edge count]
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t start = 0;
  while (edge_on[start]) ++start;  // an off edge exists; runs start after it
  for (std::size_t k = 1; k <= L; ++k) {
    std::size_t i = (start + k) % L;
    if (edge_on[i] && !edge_on[(i + L - 1) % L]) {
      std::size_t len = 0;
      while (edge_on[(i + len) % L]) ++len;
      runs.emplace_back(i, len);
    }
  }
  std::vector<char> covered(L, 0);
  for (auto [s, len] : runs)
    for (std::size_t k = 0; k <= len; ++k) covered[(s + k) % L] = 1;
  std::size_t isolated = 0;
  for (std::size_t i = 0; i < L; ++i)
    if (!covered[i] && d.on_boundary(c[i])) ++isolated;
  cell.boundary_components = runs.size() + isolated;

  // outer path: the run through the first corner
  const auto first_corner = corners.front();
  const auto pos = static_cast<std::size_t>(std::find(c.begin(), c.end(), first_corner) - c.begin());
  std::size_t run_start = pos, run_len = 0;
  for (auto [s, len] : runs)
    for (std::size_t k = 0; k <= len; ++k)
      if ((s + k) % L == pos) {
        run_start = s;
        run_len = len;
      }
  for (std::size_t k = 0; k <= run_len; ++k) cell.outer_path.push_back(c[(run_start + k) % L]);
  for (std::size_t k = run_len; k <= L; ++k) cell.inner_path.push_back(c[(run_start + k) % L]);

  std::vector<std::size_t> t2;
  for (auto v : cell.inner_path)
    if (d.types[v] == 2) t2.push_back(v);
  cell.inner_type2 = t2.size();
  if (!t2.empty()) cell.special = {t2.front(), t2.back()};
  return cell;
}

}  // namespace detail

/// Moves 2 units from each corner-cell to each of its special-vertex slots
/// and evaluates the inequality lemmas. A valid diagram always totals 12,
/// while the lemmas together cap the total at 6, so at least one lemma must
/// fail; the diagram is then reported as inconsistent with the hypotheses.
inline RedistributedReport redistribute(const DiscDiagram& d) {
  RedistributedReport r;
  r.base = curvatures(d);
  const auto& polys = r.base.polygonal.polygons;
  if (polys.size() <= 1) throw Error(ErrorKind::precondition, "redistribute: diagram is a single polygon");
  const auto corners = r.base.corners();
  if (corners.empty()) throw Error(ErrorKind::precondition, "redistribute: diagram has no corner");

  r.vertex_kappa_prime = r.base.vertex_kappa;
  r.polygon_kappa_prime = r.base.polygon_kappa;
  std::map<std::size_t, std::set<std::size_t>> special_cells;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<std::size_t> in_p;
    for (auto v : corners)
      if (std::find(polys[i].cycle.begin(), polys[i].cycle.end(), v) != polys[i].cycle.end()) in_p.push_back(v);
    if (in_p.empty()) continue;
    auto cell = detail::corner_cell(d, polys[i], i, in_p);
    for (auto v : cell.special) {
      r.vertex_kappa_prime[v] += 2;
      r.polygon_kappa_prime[i] -= 2;
      special_cells[v].insert(i);
    }
    r.cells.push_back(std::move(cell));
  }
  for (auto k : r.vertex_kappa_prime) r.total_prime += k;
  for (auto k : r.polygon_kappa_prime) r.total_prime += k;

  auto nm = [&](std::size_t v) { return d.names[v]; };
  auto add = [&](std::string name, const std::string& failures, const std::string& ok) {
    r.checks.push_back({std::move(name), failures.empty(), failures.empty() ? ok : failures.substr(1)});
  };
  std::string f;
  for (const auto& c : r.cells)
    if (c.boundary_components != 1) f += " cell" + std::to_string(c.polygon) + ":components=" + std::to_string(c.boundary_components);
  add("corner_cell_boundary_connected", f, "every corner-cell meets the boundary in one interval");
  f.clear();
  for (const auto& c : r.cells)
    if (c.inner_type2 < 2) f += " cell" + std::to_string(c.polygon) + ":type2=" + std::to_string(c.inner_type2);
  add("inner_path_two_type2", f, "every inner path has >=2 type-2 vertices");
  f.clear();
  for (const auto& [v, cs] : special_cells)
    if (cs.size() > 2) f += " " + nm(v) + ":cells=" + std::to_string(cs.size());
  add("special_at_most_two", f, "no vertex is special for more than two corner-cells");
  r.checks.push_back({"kappa_prime_total", r.total_prime == kFullTurn,
                      "total=" + std::to_string(r.total_prime) + " expected=" + std::to_string(kFullTurn)});
  f.clear();
  for (auto v : corners)
    if (r.vertex_kappa_prime[v] != 4) f += " " + nm(v) + ":" + std::to_string(r.vertex_kappa_prime[v]);
  add("corner_kappa_prime", f, "every corner has kappa'=4");
  f.clear();
  const bool base_is_corner = d.basepoint && r.base.mark[*d.basepoint] == MarkClass::corner;
  if (d.basepoint && !base_is_corner && r.vertex_kappa_prime[*d.basepoint] > 6) {
    f = " " + nm(*d.basepoint) + ":" + std::to_string(r.vertex_kappa_prime[*d.basepoint]);
  }
  add("basepoint_kappa_prime", f, "non-corner basepoint has kappa'<=6");
  f.clear();
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (d.types[v] == 0 || r.base.mark[v] == MarkClass::corner) continue;
    if (d.basepoint && *d.basepoint == v) continue;
    if (r.vertex_kappa_prime[v] > 0) f += " " + nm(v) + ":" + std::to_string(r.vertex_kappa_prime[v]);
  }
  add("other_vertices_kappa_prime", f, "all other vertices have kappa'<=0");
  f.clear();
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (r.polygon_kappa_prime[i] > 0) f += " polygon" + std::to_string(i) + ":" + std::to_string(r.polygon_kappa_prime[i]);
  add("polygons_kappa_prime", f, "all polygons have kappa'<=0");
  f.clear();
  for (const auto& c : r.cells) {
    int s = r.polygon_kappa_prime[c.polygon];
    for (auto v : c.corners) s += r.vertex_kappa_prime[v];
    if (s > 0) f += " cell" + std::to_string(c.polygon) + ":" + std::to_string(s);
  }
  add("corner_cell_inequality", f, "kappa'(P)+sum corners kappa'<=0 for every corner-cell");

  const auto failed = r.failed_lemmas();
  r.inconsistent = true;
  if (failed.empty()) {
    r.verdict = "inconsistent: inequality chain caps the total at 6 but Gauss-Bonnet gives " +
                std::to_string(r.total_prime);
  } else {
    std::string names;
    for (const auto& n : failed) names += (names.empty() ? "" : ",") + n;
    r.verdict = "inconsistent: no diagram satisfying the hypotheses; failed " + names;
  }
  return r;
}

/// Line-oriented audit report.
inline std::vector<std::string> audit_lines(const DiscDiagram& d, const CurvatureReport& c,
                                            const std::optional<RedistributedReport>& r) {
  std::vector<std::string> out;
  out.push_back("vertices: " + std::to_string(d.vertex_count()));
  out.push_back("triangles: " + std::to_string(d.triangles.size()));
  out.push_back("polygons: " + std::to_string(c.polygonal.polygons.size()));
  out.push_back("total: " + std::to_string(c.total));
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (d.types[v] == 0) continue;
    std::ostringstream os;
    os << "vertex: " << d.names[v] << " type=" << d.types[v] << " n=" << c.polygonal.polygon_count[v]
       << " kappa=" << c.vertex_kappa[v];
    if (c.mark[v] != MarkClass::unmarked) os << " class=" << to_string(c.mark[v]);
    if (r) os << " kappa'=" << r->vertex_kappa_prime[v];
    out.push_back(os.str());
  }
  for (std::size_t i = 0; i < c.polygonal.polygons.size(); ++i) {
    const auto& p = c.polygonal.polygons[i];
    std::ostringstream os;
    os << "polygon: " << i << " center=" << d.names[p.center] << " sides=" << p.cycle.size()
       << " kappa=" << c.polygon_kappa[i];
    if (r) os << " kappa'=" << r->polygon_kappa_prime[i];
    out.push_back(os.str());
  }
  for (const auto& ch : c.checks) out.push_back(ch.line());
  if (r) {
    for (const auto& cell : r->cells) {
      std::ostringstream os;
      os << "corner-cell: " << cell.polygon << " outer=";
      for (std::size_t k = 0; k < cell.outer_path.size(); ++k) os << (k ? "," : "") << d.names[cell.outer_path[k]];
      os << " inner=";
      for (std::size_t k = 0; k < cell.inner_path.size(); ++k) os << (k ? "," : "") << d.names[cell.inner_path[k]];
      os << " special=";
      for (std::size_t k = 0; k < cell.special.size(); ++k) os << (k ? "," : "") << d.names[cell.special[k]];
      out.push_back(os.str());
    }
    out.push_back("total': " + std::to_string(r->total_prime));
    for (const auto& ch : r->checks) out.push_back(ch.line());
    out.push_back("verdict: " + r->verdict);
  }
  return out;
}

}  // namespace artin
