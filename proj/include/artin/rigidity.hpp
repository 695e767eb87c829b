#pragma once

// Edge-twists and twist families, Aut generating sets, the Out-finiteness
// and co-Hopf deciders, hom shapes, labelled embeddings, proper
// self-embeddings at cut-vertices, and verification of generator maps.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "artin/dihedral_garside.hpp"
#include "artin/error.hpp"
#include "artin/graph_core.hpp"
#include "artin/graph_topology.hpp"
#include "artin/report.hpp"
#include "artin/word.hpp"

namespace artin {

/// A candidate homomorphism A_source -> A_target given on generators.
struct GeneratorMap {
  PresentationGraph source;
  PresentationGraph target;
  std::map<std::string, Word> assignment;
  std::string tag;   // conjugation, graph-auto, inversion, twist, composite, ...
  std::string note;  // e.g. the conjugating generator
  std::vector<GeneratorMap> factors;  // composite = factors[0] o factors[1] o ...

  Word image(const Word& w) const { return w.substitute(assignment); }

  std::string serialize() const {
    std::ostringstream os;
    os << "map: " << tag;
    if (!note.empty()) os << ' ' << note;
    os << '\n' << "source: " << source.hash() << '\n' << "target: " << target.hash() << '\n';
    if (!factors.empty()) os << "factors: " << factors.size() << '\n';
    for (const auto& [v, w] : assignment) os << v << " -> " << w.str() << '\n';
    return os.str();
  }
};

inline GeneratorMap identity_map(const PresentationGraph& g) {
  GeneratorMap f{g, g, {}, "identity", "", {}};
  for (const auto& v : g.names()) f.assignment[v] = Word::letter(v);
  return f;
}

/// f o g (apply g first). Factor lists are flattened.
inline GeneratorMap compose(const GeneratorMap& f, const GeneratorMap& g) {
  if (!(f.source == g.target)) throw Error(ErrorKind::invalid, "compose: domain mismatch");
  GeneratorMap out{g.source, f.target, {}, "composite", "", {}};
  for (const auto& [v, w] : g.assignment) out.assignment[v] = f.image(w);
  for (const auto* m : {&f, &g}) {
    if (m->factors.empty()) {
      if (m->tag != "identity") out.factors.push_back(*m);
    } else {
      out.factors.insert(out.factors.end(), m->factors.begin(), m->factors.end());
    }
  }
  if (out.factors.size() == 1) return out.factors[0];
  if (out.factors.empty()) {
    out.tag = "identity";
  }
  return out;
}

inline GeneratorMap conjugation_map(const PresentationGraph& g, const Word& h, std::string note = "") {
  GeneratorMap f{g, g, {}, "conjugation", note.empty() ? "by " + h.str() : std::move(note), {}};
  for (const auto& v : g.names()) f.assignment[v] = conjugate(h, Word::letter(v));
  return f;
}

inline GeneratorMap inversion_map(const PresentationGraph& g) {
  GeneratorMap f{g, g, {}, "inversion", "", {}};
  for (const auto& v : g.names()) f.assignment[v] = Word::letter(v, -1);
  return f;
}

/// The generator permutation induced by a vertex bijection g -> h.
inline GeneratorMap vertex_map(const PresentationGraph& g, const PresentationGraph& h, const VertexMap& pi,
                               std::string tag = "graph-auto") {
  GeneratorMap f{g, h, {}, std::move(tag), "", {}};
  std::string perm;
  for (std::size_t i = 0; i < g.size(); ++i) {
    f.assignment[g.name(i)] = Word::letter(h.name(pi[i]));
    if (g.name(i) != h.name(pi[i])) perm += (perm.empty() ? "" : ",") + g.name(i) + ">" + h.name(pi[i]);
  }
  f.note = perm.empty() ? "identity" : perm;
  return f;
}

// ---------------------------------------------------------------------------
// Edge-twists

/// Data of an edge-twist: the separating edge {a, b} (a < b by name) and the
/// twisted side (vertex names, including a and b).
struct TwistData {
  std::string a, b;
  std::vector<std::string> side;

  std::string str() const {
    std::string s = a + "-" + b + " side=";
    for (std::size_t i = 0; i < side.size(); ++i) s += (i ? "," : "") + side[i];
    return s;
  }
};

namespace detail {

inline Word edge_delta(const PresentationGraph& g, const std::string& a, const std::string& b) {
  return alt_product(Word::letter(a), Word::letter(b), g.label(a, b));
}

inline void validate_twist(const PresentationGraph& g, const TwistData& t) {
  auto ia = g.find(t.a), ib = g.find(t.b);
  if (!ia || !ib || !g.adjacent(*ia, *ib)) {
    throw Error(ErrorKind::precondition, "edge_twist: " + t.a + "-" + t.b + " is not an edge");
  }
  VertexSet side;
  for (const auto& n : t.side) side.push_back(g.index(n));
  std::sort(side.begin(), side.end());
  if (!std::binary_search(side.begin(), side.end(), *ia) || !std::binary_search(side.begin(), side.end(), *ib)) {
    throw Error(ErrorKind::precondition, "edge_twist: side must contain both endpoints");
  }
  VertexSet other;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!std::binary_search(side.begin(), side.end(), v) || v == *ia || v == *ib) other.push_back(v);
  if (side.size() < 3 || other.size() < 3) {
    throw Error(ErrorKind::precondition, "edge_twist: " + t.a + "-" + t.b + " with this side is not separating");
  }
  for (auto x : side)
    for (auto y : other)
      if (x != *ia && x != *ib && y != *ia && y != *ib && g.adjacent(x, y)) {
        throw Error(ErrorKind::precondition,
                    "edge_twist: side is not a part of a decomposition along " + t.a + "-" + t.b);
      }
  if (components(g, side).size() != 1 || components(g, other).size() != 1) {
    throw Error(ErrorKind::precondition, "edge_twist: both parts must be connected");
  }
}

}  // namespace detail

struct TwistResult {
  PresentationGraph graph;
  GeneratorMap map;      // A_g -> A_graph
  GeneratorMap inverse;  // A_graph -> A_g
};

/// Reglues the side along {a,b}: endpoint-swapped when m_ab is odd, the
/// same graph when even. The map fixes the other part and conjugates the
/// side by Delta_ab.
inline TwistResult edge_twist(const PresentationGraph& g, const TwistData& t) {
  detail::validate_twist(g, t);
  const int m = g.label(t.a, t.b);
  std::set<std::string> side(t.side.begin(), t.side.end());
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (const auto& e : g.edges()) {
    std::string u = g.name(e.u), v = g.name(e.v);
    const bool on_side = side.count(u) && side.count(v) && !(std::set<std::string>{u, v} == std::set<std::string>{t.a, t.b});
    if (m % 2 == 1 && on_side) {
      auto swap = [&](std::string& x) {
        if (x == t.a) x = t.b;
        else if (x == t.b) x = t.a;
      };
      swap(u);
      swap(v);
    }
    edges.emplace_back(u, v, e.label);
  }
  TwistResult r{PresentationGraph(g.names(), edges), {}, {}};
  const Word delta = detail::edge_delta(g, t.a, t.b);
  r.map = GeneratorMap{g, r.graph, {}, "twist", t.str(), {}};
  r.inverse = GeneratorMap{r.graph, g, {}, "twist", "inverse " + t.str(), {}};
  for (const auto& v : g.names()) {
    const Word x = Word::letter(v);
    const bool moved = side.count(v) && v != t.a && v != t.b;
    r.map.assignment[v] = moved ? conjugate(delta, x) : x;
    r.inverse.assignment[v] = moved ? conjugate(delta.inverse(), x) : x;
  }
  return r;
}

struct TwistEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  TwistData data;
  GeneratorMap map;  // A_from -> A_to
};

struct TwistFamily {
  std::vector<PresentationGraph> graphs;
  std::size_t base_index = 0;
  std::vector<GeneratorMap> canonical_iso;          // A_member -> A_base
  std::vector<GeneratorMap> canonical_iso_inverse;  // A_base -> A_member
  std::vector<TwistEdge> twist_edges;
  VertexSet root_chunk;

  std::string serialize() const {
    std::ostringstream os;
    os << "members: " << graphs.size() << '\n';
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      os << "member: " << i << '\n' << graphs[i].serialize();
    }
    for (const auto& e : twist_edges) os << "twist: " << e.from << " -> " << e.to << ' ' << e.data.str() << '\n';
    return os.str();
  }
};

/// Sides allowed for a twist along {a,b} in g: nonempty unions of the
/// components of g - {a,b} that avoid the root chunk, plus {a,b}.
inline std::vector<std::vector<std::string>> twist_sides(const PresentationGraph& g, const LabelledEdge& e,
                                                         const VertexSet& root) {
  std::vector<VertexSet> free_comps;
  for (auto& c : components(g, all_vertices(g), {e.u, e.v})) {
    bool touches_root = std::any_of(c.begin(), c.end(), [&](std::size_t v) {
      return std::binary_search(root.begin(), root.end(), v);
    });
    if (!touches_root) free_comps.push_back(std::move(c));
  }
  std::vector<std::vector<std::string>> sides;
  const std::size_t k = free_comps.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::string> side{g.name(e.u), g.name(e.v)};
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        for (auto v : free_comps[i]) side.push_back(g.name(v));
    std::sort(side.begin(), side.end());
    sides.push_back(std::move(side));
  }
  std::sort(sides.begin(), sides.end());
  return sides;
}

/// Closure of {g} under edge-twists that keep the first chunk of g fixed,
/// explored breadth-first with twists in (edge, side) order.
inline TwistFamily twist_family(const PresentationGraph& g) {
  require_connected_no_cut_vertex(g, "twist_family");
  TwistFamily fam;
  fam.graphs.push_back(g);
  fam.canonical_iso.push_back(identity_map(g));
  fam.canonical_iso_inverse.push_back(identity_map(g));
  if (separating_edges_within(g, all_vertices(g)).empty()) return fam;
  fam.root_chunk = chunks(g).front();
  std::map<PresentationGraph, std::size_t> index{{g, 0}};
  for (std::size_t i = 0; i < fam.graphs.size(); ++i) {
    const auto current = fam.graphs[i];
    for (const auto& e : separating_edges_within(current, all_vertices(current))) {
      for (const auto& side : twist_sides(current, e, fam.root_chunk)) {
        TwistData data{current.name(e.u), current.name(e.v), side};
        auto tw = edge_twist(current, data);
        auto it = index.find(tw.graph);
        std::size_t to;
        if (it == index.end()) {
          to = fam.graphs.size();
          index[tw.graph] = to;
          fam.graphs.push_back(tw.graph);
          fam.canonical_iso.push_back(compose(fam.canonical_iso[i], tw.inverse));
          fam.canonical_iso_inverse.push_back(compose(tw.map, fam.canonical_iso_inverse[i]));
        } else {
          to = it->second;
        }
        fam.twist_edges.push_back({i, to, data, tw.map});
      }
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Verification of generator maps

enum class VerifyOutcome { accept, reject, unverifiable };

inline const char* to_string(VerifyOutcome v) {
  switch (v) {
    case VerifyOutcome::accept: return "ACCEPT";
    case VerifyOutcome::reject: return "REJECT";
    case VerifyOutcome::unverifiable: return "UNVERIFIABLE";
  }
  return "?";
}

struct Verification {
  VerifyOutcome outcome = VerifyOutcome::unverifiable;
  std::string basis;
  std::vector<std::string> notes;  // per-relation details
};

namespace detail {

inline void check_map_shape(const GeneratorMap& f) {
  for (const auto& v : f.source.names())
    if (!f.assignment.count(v)) throw Error(ErrorKind::invalid, "map has no image for '" + v + "'");
  for (const auto& [v, w] : f.assignment) {
    if (!f.source.find(v)) throw Error(ErrorKind::invalid, "map assigns unknown source generator '" + v + "'");
    for (const auto& gen : w.generators())
      if (!f.target.find(gen)) {
        throw Error(ErrorKind::invalid, "image of '" + v + "' uses '" + gen + "', not a target generator");
      }
  }
}

// g x^e g^-1 = w for a single generator x, or nullopt.
inline std::optional<Letter> conjugated_letter(const Word& g, const Word& w) {
  Word core = g.inverse() * w * g;
  if (core.size() != 1) return std::nullopt;
  return core[0];
}

inline std::optional<Verification> verify_structural(const GeneratorMap& f) {
  std::vector<Word> candidates{Word()};
  for (const auto& [v, w] : f.assignment)
    if (w.size() % 2 == 1) candidates.push_back(w.prefix(w.size() / 2));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& g : candidates) {
    std::map<std::string, std::string> phi;
    std::optional<int> sign;
    bool ok = true;
    for (const auto& [v, w] : f.assignment) {
      auto l = conjugated_letter(g, w);
      if (!l || (sign && *sign != l->exp)) {
        ok = false;
        break;
      }
      sign = l->exp;
      phi[v] = l->gen;
    }
    if (!ok) continue;
    for (const auto& e : f.source.edges()) {
      const auto& x = phi[f.source.name(e.u)];
      const auto& y = phi[f.source.name(e.v)];
      if (x == y) continue;
      const int mt = f.target.label(x, y);
      if (mt == 0 || e.label % mt != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Verification r{VerifyOutcome::accept, "standard form", {}};
    r.notes.push_back("conjugator=" + g.str() + " sign=" + std::to_string(sign.value_or(1)));
    return r;
  }
  return std::nullopt;
}

// Replaces a word lying in a dihedral parabolic by a single letter when
// the word problem there says they are equal.
inline Word simplify_in_dihedral(const PresentationGraph& target, const Word& w) {
  auto gens = w.generators();
  if (gens.size() != 2 || w.size() <= 1) return w;
  const std::string x = *gens.begin(), y = *std::next(gens.begin());
  const int m = target.label(x, y);
  if (m == 0) return w;
  DihedralContext d(m, x, y);
  for (const auto* g : {&x, &y})
    for (int e : {1, -1})
      if (words_equal(d, w, Word::letter(*g, e))) return Word::letter(*g, e);
  return w;
}

enum class RelationCheck { holds, fails, unplaced };

inline RelationCheck check_relation(const PresentationGraph& target, const Word& ws, const Word& wt, int m,
                                    std::string& detail) {
  std::vector<Word> candidates;
  for (const auto* w : {&ws, &wt})
    for (std::size_t k = 0; k <= w->size(); ++k) candidates.push_back(w->prefix(k));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    Word us = simplify_in_dihedral(target, c.inverse() * ws * c);
    Word ut = simplify_in_dihedral(target, c.inverse() * wt * c);
    auto gens = us.generators();
    for (const auto& x : ut.generators()) gens.insert(x);
    if (gens.size() <= 1) {
      detail = "inside a cyclic subgroup";
      return RelationCheck::holds;
    }
    if (gens.size() > 2) continue;
    const std::string x = *gens.begin(), y = *std::next(gens.begin());
    const int mt = target.label(x, y);
    const Word lhs = alt_product(us, ut, m), rhs = alt_product(ut, us, m);
    if (mt == 0) {
      detail = "inside free <" + x + "," + y + ">";
      return lhs == rhs ? RelationCheck::holds : RelationCheck::fails;
    }
    detail = "inside <" + x + "," + y + "> (m=" + std::to_string(mt) + ") after conjugating by " + c.str();
    return words_equal(DihedralContext(mt, x, y), lhs, rhs) ? RelationCheck::holds : RelationCheck::fails;
  }
  detail = "images do not lie in a common dihedral parabolic";
  return RelationCheck::unplaced;
}

inline Verification verify_relations(const GeneratorMap& f) {
  Verification r{VerifyOutcome::accept, "relations verified", {}};
  bool unplaced = false;
  for (const auto& e : f.source.edges()) {
    const auto& s = f.source.name(e.u);
    const auto& t = f.source.name(e.v);
    std::string detail;
    auto res = check_relation(f.target, f.assignment.at(s), f.assignment.at(t), e.label, detail);
    const char* word = res == RelationCheck::holds ? "holds" : res == RelationCheck::fails ? "fails" : "unverifiable";
    r.notes.push_back("relation " + s + "," + t + " m=" + std::to_string(e.label) + " " + word + ": " + detail);
    if (res == RelationCheck::fails) {
      r.outcome = VerifyOutcome::reject;
      r.basis = "relation " + s + "," + t + " fails";
    }
    unplaced = unplaced || res == RelationCheck::unplaced;
  }
  if (r.outcome != VerifyOutcome::reject && unplaced) {
    r.outcome = VerifyOutcome::unverifiable;
    r.basis = "some relation needs the word problem beyond rank 2";
  }
  return r;
}

}  // namespace detail

/// ACCEPT when the map has the form v -> g x_v^e g^-1 with v -> x_v a graph
/// homomorphism whose image labels divide the source labels, or when every
/// defining relation can be moved into a single dihedral parabolic of the
/// target and holds there, or when it is a composite of accepted factors.
/// REJECT when a relation fails in a dihedral parabolic; UNVERIFIABLE
/// otherwise.
inline Verification verify_standard_form(const GeneratorMap& f) {
  detail::check_map_shape(f);
  if (!f.factors.empty()) {
    Verification r{VerifyOutcome::accept, "verified factorization", {}};
    GeneratorMap acc = identity_map(f.source);
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
      auto v = verify_standard_form(*it);
      r.notes.push_back(it->tag + " " + it->note + ": " + to_string(v.outcome));
      if (v.outcome == VerifyOutcome::reject) return {VerifyOutcome::reject, "factor rejected", r.notes};
      if (v.outcome == VerifyOutcome::unverifiable) r.outcome = VerifyOutcome::unverifiable;
      if (!(acc.target == it->source)) return {VerifyOutcome::reject, "factors do not compose", r.notes};
      GeneratorMap next{acc.source, it->target, {}, "composite", "", {}};
      for (const auto& [v2, w] : acc.assignment) next.assignment[v2] = it->image(w);
      acc = std::move(next);
    }
    if (!(acc.target == f.target) || acc.assignment != f.assignment) {
      return {VerifyOutcome::reject, "recorded factorization does not reproduce the map", r.notes};
    }
    if (r.outcome == VerifyOutcome::unverifiable) r.basis = "a factor is unverifiable";
    return r;
  }
  if (auto s = detail::verify_structural(f)) return *s;
  return detail::verify_relations(f);
}

// ---------------------------------------------------------------------------
// Aut generators

inline void require_aut_hypotheses(const PresentationGraph& g, bool assume_cstp) {
  auto flags = classify(g);
  if (!flags.xxxl && !assume_cstp) {
    throw Error(ErrorKind::precondition, "aut_generators: graph is not XXXL (flag xxxl=false)");
  }
  if (!is_connected(g)) throw Error(ErrorKind::precondition, "aut_generators: graph is disconnected");
  if (g.size() == 2 && g.edge_count() == 1) throw Error(ErrorKind::precondition, "aut_generators: graph is an edge");
  if (!cut_vertices(g).empty()) throw Error(ErrorKind::precondition, "aut_generators: graph has a cut-vertex");
}

/// Conjugations by generators, labelled graph automorphisms, the global
/// inversion, and the transported twists and isomorphisms of the twist
/// family. `assume_cstp` accepts non-XXXL graphs on the caller's word.
inline std::vector<GeneratorMap> aut_generators(const PresentationGraph& g, bool assume_cstp = false) {
  require_aut_hypotheses(g, assume_cstp);
  std::vector<GeneratorMap> out;
  for (const auto& v : g.names()) out.push_back(conjugation_map(g, Word::letter(v), "by " + v));
  for (const auto& pi : labelled_isomorphisms(g, g)) out.push_back(vertex_map(g, g, pi));
  out.push_back(inversion_map(g));
  auto fam = twist_family(g);
  for (const auto& e : fam.twist_edges) {
    auto bar = compose(fam.canonical_iso[e.to], compose(e.map, fam.canonical_iso_inverse[e.from]));
    bar.tag = "composite";
    bar.note = "twist " + std::to_string(e.from) + "->" + std::to_string(e.to) + " " + e.data.str();
    out.push_back(std::move(bar));
  }
  for (std::size_t i = 0; i < fam.graphs.size(); ++i)
    for (std::size_t j = 0; j < fam.graphs.size(); ++j) {
      if (i == j) continue;
      for (const auto& pi : labelled_isomorphisms(fam.graphs[i], fam.graphs[j])) {
        auto psi = vertex_map(fam.graphs[i], fam.graphs[j], pi, "graph-iso");
        auto bar = compose(fam.canonical_iso[j], compose(psi, fam.canonical_iso_inverse[i]));
        bar.tag = "composite";
        bar.note = "isomorphism " + std::to_string(i) + "->" + std::to_string(j) + " " + psi.note;
        out.push_back(std::move(bar));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Deciders

struct Verdict {
  bool value = false;
  std::string reason;
  std::string hypotheses;  // theorem class and whether it was checked
};

inline std::string hypothesis_note(const PresentationGraph& g) {
  return std::string("proved for XXXL graphs; xxxl=") + (classify(g).xxxl ? "true" : "false");
}

inline Verdict decide_out_finite(const PresentationGraph& g) {
  Verdict v{false, "", hypothesis_note(g)};
  if (!is_connected(g)) {
    v.reason = "disconnected";
  } else if (classify(g).is_even_edge) {
    v.reason = "even edge";
  } else if (auto cv = cut_vertices(g); !cv.empty()) {
    v.reason = "cut-vertex " + g.name(cv[0]);
  } else if (auto se = separating_edges_within(g, all_vertices(g)); !se.empty()) {
    v.reason = "separating edge " + g.name(se[0].u) + "-" + g.name(se[0].v);
  } else {
    v.value = true;
    v.reason = "connected, not an even edge, no cut-vertex, no separating edge";
  }
  return v;
}

inline Verdict decide_cohopfian(const PresentationGraph& g) {
  Verdict v{false, "", hypothesis_note(g)};
  if (g.size() == 0) {
    v.value = true;
    v.reason = "trivial group";
  } else if (g.size() == 1) {
    v.reason = "rank 1 (infinite cyclic)";
  } else if (!is_connected(g)) {
    v.reason = "disconnected";
  } else if (g.size() == 2) {
    v.reason = "single edge (dihedral)";
  } else if (auto cv = cut_vertices(g); !cv.empty()) {
    v.reason = "cut-vertex " + g.name(cv[0]) + " (see proper self-embedding)";
  } else {
    v.value = true;
    v.reason = "connected, not an edge, no cut-vertex";
  }
  return v;
}

struct SelfEmbedding {
  GeneratorMap map;
  std::vector<std::string> side1, side2;
  std::string a1, a2;
  Word h1, h2;
  std::vector<Check> checks;
};

namespace detail {

inline Word central_word(const PresentationGraph& g, const std::string& c, const std::string& a) {
  const int m = g.label(c, a);
  if (m == 2) return Word::letter(a);
  Word delta = alt_product(Word::letter(c), Word::letter(a), m);
  return m % 2 == 0 ? delta : delta * delta;
}

}  // namespace detail

/// For a cut-vertex c, conjugates the first side by h2 and the second by
/// h1, where h_i is central in <c, a_i> (a_i itself when m = 2).
inline SelfEmbedding proper_self_embedding(const PresentationGraph& g, const std::string& c) {
  if (!is_connected(g)) throw Error(ErrorKind::precondition, "proper_self_embedding: graph is disconnected");
  const auto ci = g.index(c);
  auto comps = components(g, all_vertices(g), {ci});
  if (comps.size() < 2) throw Error(ErrorKind::precondition, "proper_self_embedding: '" + c + "' is not a cut-vertex");
  SelfEmbedding se;
  std::set<std::size_t> s1(comps[0].begin(), comps[0].end()), s2;
  for (std::size_t k = 1; k < comps.size(); ++k) s2.insert(comps[k].begin(), comps[k].end());
  auto least_neighbour = [&](const std::set<std::size_t>& side) {
    for (auto v : side)
      if (g.adjacent(ci, v)) return g.name(v);
    throw Error(ErrorKind::invalid, "cut-vertex side without a neighbour");
  };
  se.a1 = least_neighbour(s1);
  se.a2 = least_neighbour(s2);
  se.h1 = detail::central_word(g, c, se.a1);
  se.h2 = detail::central_word(g, c, se.a2);
  se.map = GeneratorMap{g, g, {}, "self-embedding", "at " + c, {}};
  se.side1.push_back(c);
  se.side2.push_back(c);
  se.map.assignment[c] = Word::letter(c);
  for (auto v : s1) {
    se.side1.push_back(g.name(v));
    se.map.assignment[g.name(v)] = conjugate(se.h2, Word::letter(g.name(v)));
  }
  for (auto v : s2) {
    se.side2.push_back(g.name(v));
    se.map.assignment[g.name(v)] = conjugate(se.h1, Word::letter(g.name(v)));
  }
  std::sort(se.side1.begin(), se.side1.end());
  std::sort(se.side2.begin(), se.side2.end());
  for (const auto& [a, h] : {std::pair{se.a1, se.h1}, std::pair{se.a2, se.h2}}) {
    DihedralContext d(g.label(c, a), c, a);
    const Word cw = Word::letter(c);
    const bool commutes = words_equal(d, h * cw, cw * h);
    const bool power = words_equal(d, h, cw.pow(h.exponent_sum()));
    se.checks.push_back({"commutes_with_" + c + "_in_" + c + a, commutes, "h=" + h.str()});
    se.checks.push_back({"not_a_power_of_" + c + "_in_" + c + a, !power, "h=" + h.str()});
  }
  return se;
}

// ---------------------------------------------------------------------------
// Hom shapes and labelled embeddings

struct HomShape {
  VertexSet domain;             // induced subgraph of g
  std::vector<std::size_t> iota;  // image in h per domain vertex
  bool full_rank = false;       // |domain| >= 3
  std::vector<std::string> table;  // "s,t:m_st/m_image"
};

inline void require_hom_hypotheses(const PresentationGraph& g, const char* which) {
  auto f = classify(g);
  auto fail = [&](const std::string& flag) {
    throw Error(ErrorKind::precondition, std::string("hom_shapes: ") + which + " violates " + flag);
  };
  if (!f.free_of_infinity) fail("free_of_infinity (not complete)");
  if (!f.large) fail("large");
  if (!f.hyperbolic_type) fail("hyperbolic_type (has a (3,3,3) triangle)");
  if (f.rank < 3) fail("rank >= 3");
}

/// Induced subgraphs of g with >= 2 vertices and injections into h such that
/// m_st is a multiple of the label of the image pair.
inline std::vector<HomShape> hom_shapes(const PresentationGraph& g, const PresentationGraph& h) {
  require_hom_hypotheses(g, "source");
  require_hom_hypotheses(h, "target");
  std::vector<HomShape> out;
  const auto n = g.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    VertexSet dom;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) dom.push_back(i);
    if (dom.size() < 2 || dom.size() > h.size()) continue;
    std::vector<std::size_t> img(dom.size());
    std::vector<char> used(h.size(), 0);
    auto extend = [&](auto&& self, std::size_t k) -> void {
      if (k == dom.size()) {
        HomShape s{dom, img, dom.size() >= 3, {}};
        for (std::size_t i = 0; i < dom.size(); ++i)
          for (std::size_t j = i + 1; j < dom.size(); ++j)
            s.table.push_back(g.name(dom[i]) + "," + g.name(dom[j]) + ":" + std::to_string(g.label(dom[i], dom[j])) +
                              "/" + std::to_string(h.label(img[i], img[j])));
        out.push_back(std::move(s));
        return;
      }
      for (std::size_t y = 0; y < h.size(); ++y) {
        if (used[y]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) ok = g.label(dom[i], dom[k]) % h.label(img[i], y) == 0;
        if (!ok) continue;
        used[y] = 1;
        img[k] = y;
        self(self, k + 1);
        used[y] = 0;
      }
    };
    extend(extend, 0);
  }
  std::sort(out.begin(), out.end(), [](const HomShape& a, const HomShape& b) {
    return std::tie(a.domain, a.iota) < std::tie(b.domain, b.iota);
  });
  return out;
}

/// Injective vertex maps sending each edge of g to an edge of h with the
/// same label, in lexicographic order.
inline std::vector<VertexMap> labelled_embeddings(const PresentationGraph& g, const PresentationGraph& h) {
  std::vector<VertexMap> out;
  const auto n = g.size();
  if (n > h.size()) return out;
  VertexMap map(n);
  std::vector<char> used(h.size(), 0);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(map);
      return;
    }
    for (std::size_t y = 0; y < h.size(); ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        if (g.adjacent(i, k)) ok = h.label(y, map[k]) == g.label(i, k);
      if (!ok) continue;
      used[y] = 1;
      map[i] = y;
      self(self, i + 1);
      used[y] = 0;
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace artin
