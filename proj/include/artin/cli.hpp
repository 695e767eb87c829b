#pragma once

// Command-line front end. `run` is the whole tool; the binary in tools/
// only forwards argv.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artin/bestvina_tree.hpp"
#include "artin/curvature_audit.hpp"
#include "artin/dihedral_garside.hpp"
#include "artin/error.hpp"
#include "artin/graph_core.hpp"
#include "artin/graph_topology.hpp"
#include "artin/report.hpp"
#include "artin/rigidity.hpp"

namespace artin::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string join_vertices(const PresentationGraph& g, const VertexSet& vs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + g.name(vs[i]);
  return out;
}

inline std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

inline std::string edge_str(const PresentationGraph& g, const LabelledEdge& e) {
  return g.name(e.u) + "-" + g.name(e.v) + ":" + std::to_string(e.label);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void add_lines(Report& r, const std::string& key, const std::string& block) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) r.add(key, line);
}

inline void add_map(Report& r, const GeneratorMap& f) {
  r.add("generator", f.tag + (f.note.empty() ? "" : " " + f.note));
  for (const auto& [v, w] : f.assignment) r.add("image", v + " -> " + w.str());
  auto ver = verify_standard_form(f);
  r.add("verify", std::string(to_string(ver.outcome)) + " (" + ver.basis + ")");
}

inline Report analyze(const PresentationGraph& g) {
  Report r("analyze");
  auto f = classify(g);
  r.add("rank", static_cast<long long>(f.rank));
  r.add("edges", static_cast<long long>(g.edge_count()));
  r.add("large", yes_no(f.large));
  r.add("xxxl", yes_no(f.xxxl));
  r.add("hyperbolic type", yes_no(f.hyperbolic_type));
  r.add("free of infinity", yes_no(f.free_of_infinity));
  r.add("even edge", yes_no(f.is_even_edge));
  const bool connected = is_connected(g);
  r.add("connected", yes_no(connected));
  if (connected) {
    auto cv = cut_vertices(g);
    r.add("cut-vertices", cv.empty() ? "none" : join_vertices(g, cv));
    if (cv.empty()) {
      auto se = separating_edges(g);
      std::string ses;
      for (const auto& e : se) ses += (ses.empty() ? "" : " ") + edge_str(g, e);
      r.add("separating edges", se.empty() ? "none" : ses);
      if (g.size() >= 3) {
        auto t = chunk_tree(g);
        r.add("chunks", static_cast<long long>(t.chunk_nodes.size()));
        for (const auto& c : t.chunk_nodes) r.add("chunk", join_vertices(g, c));
        r.add("chunk tree nodes", static_cast<long long>(t.node_count()));
        r.add("chunk tree incidences", static_cast<long long>(t.incidence.size()));
        r.add("chunk tree is tree", yes_no(t.is_tree()));
        r.add("twist family", static_cast<long long>(twist_family(g).graphs.size()));
      }
    }
  }
  auto cg = cycle_graph(g);
  r.add("induced cycles", static_cast<long long>(cg.cycles.size()));
  r.add("cycle graph edges", static_cast<long long>(cg.adjacency.size()));
  r.add("cycle graph components", static_cast<long long>(cg.component_count));
  auto of = decide_out_finite(g);
  r.add("out", std::string(of.value ? "finite" : "infinite") + " (" + of.reason + ")");
  auto ch = decide_cohopfian(g);
  r.add("co-hopfian", std::string(ch.value ? "yes" : "no") + " (" + ch.reason + ")");
  r.add("hypotheses", of.hypotheses);
  return r;
}

/// Parses argv and runs one subcommand. Reports go to `out`, errors to
/// `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin group rigidity toolkit"};
  app.name(args.empty() ? "artin" : args[0]);
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  int m = 0, radius = 1;
  std::string a1, a2, a3, a4;
  bool assume_cstp = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "flags, decompositions and verdicts for a graph");
  analyze_cmd->add_option("graph", a1, "graph file")->required();

  auto* nf_cmd = app.add_subcommand("nf", "Garside normal form in a dihedral Artin group");
  nf_cmd->add_option("-m", m, "label")->required();
  nf_cmd->add_option("word", a1, "word over s, t")->required();

  auto* eq_cmd = app.add_subcommand("equal", "dihedral word problem");
  eq_cmd->add_option("-m", m, "label")->required();
  eq_cmd->add_option("w1", a1)->required();
  eq_cmd->add_option("w2", a2)->required();

  auto* alt_cmd = app.add_subcommand("lemma-alt", "Pi(s^p,t^q;k) = Pi(t^q,s^p;k)?");
  alt_cmd->add_option("-m", m, "label")->required();
  alt_cmd->add_option("p", a1)->required();
  alt_cmd->add_option("q", a2)->required();
  alt_cmd->add_option("k", a3)->required();

  auto* tree_cmd = app.add_subcommand("tree", "ball in the dual tree of a dihedral Artin group");
  tree_cmd->add_option("-m", m, "label")->required();
  tree_cmd->add_option("-r", radius, "radius")->required();

  auto* pair_cmd = app.add_subcommand("classify-pair", "subgroup generated by two conjugated generators");
  pair_cmd->add_option("-m", m, "label")->required();
  pair_cmd->add_option("x", a1, "conjugator|u")->required();
  pair_cmd->add_option("y", a2, "conjugator|u")->required();

  auto* curv_cmd = app.add_subcommand("curvature", "Gauss-Bonnet audit of a disc diagram");
  curv_cmd->add_option("diagram", a1)->required();

  auto* twist_cmd = app.add_subcommand("twists", "twist family of a graph");
  twist_cmd->add_option("graph", a1)->required();

  auto* aut_cmd = app.add_subcommand("aut-gens", "generating set of Aut");
  aut_cmd->add_option("graph", a1)->required();
  aut_cmd->add_flag("--assume-cstp", assume_cstp, "accept non-XXXL graphs");

  auto* hom_cmd = app.add_subcommand("hom-shapes", "shapes of injective homomorphisms between complete graphs");
  hom_cmd->add_option("source", a1, "source graph file")->required();
  hom_cmd->add_option("target", a2, "target graph file")->required();

  auto* emb_cmd = app.add_subcommand("embed", "labelled embeddings of g into h");
  emb_cmd->add_option("source", a1, "source graph file")->required();
  emb_cmd->add_option("target", a2, "target graph file")->required();

  auto* self_cmd = app.add_subcommand("self-embed", "proper self-embedding at a cut-vertex");
  self_cmd->add_option("graph", a1)->required();
  self_cmd->add_option("vertex", a2)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("artin");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  auto to_int = [](const std::string& s, const char* what) {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, std::string("bad integer for ") + what + ": '" + s + "'");
    }
  };

  try {
    std::optional<Report> rep;
    if (analyze_cmd->parsed()) {
      rep = analyze(parse_graph(read_file(a1)));
    } else if (nf_cmd->parsed()) {
      rep.emplace("nf");
      DihedralContext d(m);
      rep->add("m", m);
      rep->add("nf", garside_nf(d, Word::parse(a1)).str(d));
    } else if (eq_cmd->parsed()) {
      rep.emplace("equal");
      rep->add("m", m);
      rep->add("result", words_equal(m, Word::parse(a1), Word::parse(a2)) ? "EQUAL" : "NOT_EQUAL");
    } else if (alt_cmd->parsed()) {
      rep.emplace("lemma-alt");
      const long p = to_int(a1, "p"), q = to_int(a2, "q"), k = to_int(a3, "k");
      const bool word = alternating_equality(m, static_cast<int>(p), static_cast<int>(q), k);
      const bool closed = alternating_equality_closed_form(m, static_cast<int>(p), static_cast<int>(q), k);
      rep->add("word problem", word ? "equal" : "not equal");
      rep->add("closed form", closed ? "equal" : "not equal");
      rep->add(Check{"closed_form_agrees", word == closed, "m=" + std::to_string(m) + " p=" + a1 + " q=" + a2 + " k=" + a3});
    } else if (tree_cmd->parsed()) {
      rep.emplace("tree");
      auto ball = tree_ball(m, radius);
      rep->add("m", m);
      rep->add("radius", radius);
      rep->add("vertices", static_cast<long long>(ball.vertices.size()));
      rep->add("edges", static_cast<long long>(ball.edges.size()));
      std::istringstream in(ball.export_adjacency());
      std::string line;
      while (std::getline(in, line)) {
        auto colon = line.find(": ");
        rep->add(line.substr(0, colon), line.substr(colon + 2));
      }
    } else if (pair_cmd->parsed()) {
      rep.emplace("classify-pair");
      auto c = classify_pair(m, AxisDescription::parse(a1), AxisDescription::parse(a2));
      rep->add("classification", to_string(c.kind));
      if (c.kind == PairKind::full_dihedral) rep->add("witness", c.witness.str());
      if (c.kind != PairKind::cyclic) rep->add("window", c.window);
    } else if (curv_cmd->parsed()) {
      rep.emplace("curvature");
      auto d = load_diagram(read_file(a1));
      auto c = curvatures(d);
      std::optional<RedistributedReport> red;
      std::string why;
      if (c.polygonal.polygons.size() <= 1) {
        why = "single polygon";
      } else if (c.corners().empty()) {
        why = "no corner";
      } else {
        red = redistribute(d);
      }
      for (const auto& line : audit_lines(d, c, red)) {
        if (line.rfind("CHECK ", 0) == 0) {
          auto rest = line.substr(6);
          auto sp = rest.find(' ');
          auto sp2 = rest.find(' ', sp + 1);
          rep->add(Check{rest.substr(0, sp), rest.substr(sp + 1, sp2 - sp - 1) == "PASS",
                         sp2 == std::string::npos ? "" : rest.substr(sp2 + 1)});
        } else {
          auto colon = line.find(": ");
          rep->add(line.substr(0, colon), line.substr(colon + 2));
        }
      }
      if (!red) rep->add("redistribution", "not applicable (" + why + ")");
    } else if (twist_cmd->parsed()) {
      rep.emplace("twists");
      auto g = parse_graph(read_file(a1));
      auto fam = twist_family(g);
      rep->add("twist family", static_cast<long long>(fam.graphs.size()));
      for (std::size_t i = 0; i < fam.graphs.size(); ++i) {
        std::string flat;
        for (const auto& e : fam.graphs[i].edges()) flat += (flat.empty() ? "" : " ") + edge_str(fam.graphs[i], e);
        rep->add("member", std::to_string(i) + " " + flat);
      }
      for (const auto& e : fam.twist_edges)
        rep->add("twist", std::to_string(e.from) + " -> " + std::to_string(e.to) + " " + e.data.str());
      for (std::size_t i = 0; i < fam.graphs.size(); ++i)
        for (const auto& [v, w] : fam.canonical_iso[i].assignment)
          rep->add("iso", std::to_string(i) + " " + v + " -> " + w.str());
    } else if (aut_cmd->parsed()) {
      rep.emplace("aut-gens");
      auto g = parse_graph(read_file(a1));
      auto gens = aut_generators(g, assume_cstp);
      rep->add("generators", static_cast<long long>(gens.size()));
      for (const auto& f : gens) add_map(*rep, f);
      rep->add("hypotheses", hypothesis_note(g) + (assume_cstp ? " (assumed by caller)" : ""));
    } else if (hom_cmd->parsed()) {
      rep.emplace("hom-shapes");
      auto g = parse_graph(read_file(a1));
      auto h = parse_graph(read_file(a2));
      auto shapes = hom_shapes(g, h);
      rep->add("shapes", static_cast<long long>(shapes.size()));
      for (const auto& s : shapes) {
        std::string line = "domain=" + join_vertices(g, s.domain) + " iota=";
        for (std::size_t i = 0; i < s.domain.size(); ++i)
          line += (i ? "," : "") + g.name(s.domain[i]) + ">" + h.name(s.iota[i]);
        line += " full_rank=" + yes_no(s.full_rank) + " table=";
        for (std::size_t i = 0; i < s.table.size(); ++i) line += (i ? ";" : "") + s.table[i];
        rep->add("shape", line);
      }
    } else if (emb_cmd->parsed()) {
      rep.emplace("embed");
      auto g = parse_graph(read_file(a1));
      auto h = parse_graph(read_file(a2));
      auto embs = labelled_embeddings(g, h);
      rep->add("embeddings", static_cast<long long>(embs.size()));
      for (const auto& e : embs) {
        std::string line;
        for (std::size_t i = 0; i < e.size(); ++i) line += (i ? "," : "") + g.name(i) + ">" + h.name(e[i]);
        rep->add("embedding", line);
      }
    } else if (self_cmd->parsed()) {
      rep.emplace("self-embed");
      auto g = parse_graph(read_file(a1));
      auto se = proper_self_embedding(g, a2);
      rep->add("side", join_names(se.side1));
      rep->add("side", join_names(se.side2));
      rep->add("h1", se.h1.str());
      rep->add("h2", se.h2.str());
      add_map(*rep, se.map);
      rep->add_checks(se.checks);
    }
    rep->write(out, as_json);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kDomainError;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace artin::cli
