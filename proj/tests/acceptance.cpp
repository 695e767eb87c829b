// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria, not counting a criterion whose failure
// matches its recorded counterexample set exactly.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "artin/artin.hpp"
#include "support/diagram_gen.hpp"
#include "support/graph_gen.hpp"

using namespace artin;

namespace {

// Pinned sizes and tolerances. All comparisons are exact.
constexpr int kAltMinLabel = 3, kAltMaxLabel = 7, kAltMaxPower = 3;
constexpr int kNfMaxLength = 8;
constexpr int kDiagrams = 1000;
constexpr std::size_t kMaxPolygons = 40;
constexpr int kSideConditionDiagrams = 500;
constexpr int kCycleGraphs = 500, kCycleMaxVertices = 9;
constexpr int kAxisMaxLabel = 7, kAxisWindow = 8;
constexpr int kDihedralPairs = 200, kInvariancePairs = 200;
constexpr int kAutMaxVertices = 7, kAutRandomLabellings = 2;
constexpr int kChunkExhaustiveVertices = 7, kChunkRandom = 1000, kChunkRandomVertices = 8;
constexpr int kExpectedTotal = 12;  // units of pi/6

struct Result {
  bool pass;
  std::string detail;
  bool known_red = false;  // fails exactly as recorded; not counted in the exit status
};

PresentationGraph load_fixture(const std::string& name) {
  std::ifstream in(std::string(ARTIN_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  while (w.size() < len) {
    int c = pick(rng);
    w.push_back({c < 2 ? "s" : "t", c % 2 == 0 ? 1 : -1});
  }
  return w;
}

std::string oracle_key(const OracleImage& img) {
  std::string k = std::to_string(img.exponent_sum) + ":";
  for (const auto& s : img.quotient.syllables()) k += std::to_string(s.factor) + "^" + std::to_string(s.exp) + ",";
  return k;
}

// Up-to-isomorphism graph shapes, shared by the last two criteria.
const std::vector<std::vector<std::uint64_t>>& shapes() {
  static const auto by_n = testsupport::graphs_up_to_iso(kAutMaxVertices);
  return by_n;
}

// The closed form also claims Pi(s^p,t^q;k) != Pi(t^q,s^p;k) for |p| != |q|,
// but with m_st = 3 both (s^2 t)^2 and (s^3 t)^3 are central and equal to
// their reversals. These eight cases are the only disagreements; the word
// problem and the oracle agree on them. The criterion stays red, and any
// other disagreement is an unexpected failure.
const std::set<std::string> kKnownClosedFormGaps{
    "3,-3,-1,6", "3,-2,-1,4", "3,-1,-3,6", "3,-1,-2,4", "3,1,2,4", "3,1,3,6", "3,2,1,4", "3,3,1,6"};

Result alternating_lemma() {
  int cases = 0, oracle_mismatches = 0;
  std::set<std::string> gaps;
  for (int mst = kAltMinLabel; mst <= kAltMaxLabel; ++mst)
    for (int p = -kAltMaxPower; p <= kAltMaxPower; ++p)
      for (int q = -kAltMaxPower; q <= kAltMaxPower; ++q) {
        if (p == 0 || q == 0) continue;
        for (long k = 2; k <= 2 * mst + 1; ++k) {
          ++cases;
          const bool word = alternating_equality(mst, p, q, k);
          const bool closed = alternating_equality_closed_form(mst, p, q, k);
          const Word sp = Word::letter("s").pow(p), tq = Word::letter("t").pow(q);
          const bool oracle = oracle_equal(mst, alt_product(sp, tq, k), alt_product(tq, sp, k));
          if (word != oracle) ++oracle_mismatches;
          if (word != closed)
            gaps.insert(std::to_string(mst) + "," + std::to_string(p) + "," + std::to_string(q) + "," +
                        std::to_string(k));
        }
      }
  std::string list;
  for (const auto& g : gaps) list += " (" + g + ")";
  Result r{gaps.empty() && oracle_mismatches == 0,
           std::to_string(cases) + " cases, " + std::to_string(gaps.size()) +
               " closed-form mismatches (m_st,p,q,k):" + list + ", " + std::to_string(oracle_mismatches) +
               " word/oracle mismatches"};
  r.known_red = !r.pass && oracle_mismatches == 0 && gaps == kKnownClosedFormGaps;
  return r;
}

Result normal_form_oracle() {
  long words = 0, mismatches = 0, not_idempotent = 0;
  std::string classes;
  for (int m : {3, 4, 5}) {
    DihedralContext d(m);
    std::map<std::string, std::string> nf_to_oracle, oracle_to_nf;
    // every letter sequence of length <= kNfMaxLength, reduced or not
    std::function<void(const Word&, int)> walk = [&](const Word& w, int depth) {
      ++words;
      auto nf = garside_nf(d, w);
      if (!(garside_nf(d, nf.expand(d)) == nf)) ++not_idempotent;
      const std::string nk = nf.str(d), ok = oracle_key(oracle_image(d, w));
      auto [a, fresh_a] = nf_to_oracle.emplace(nk, ok);
      auto [b, fresh_b] = oracle_to_nf.emplace(ok, nk);
      if (a->second != ok || b->second != nk) ++mismatches;
      if (depth == kNfMaxLength) return;
      for (const char* g : {"s", "t"})
        for (int e : {1, -1}) {
          Word next = w;
          next.push_back({g, e});
          walk(next, depth + 1);
        }
    };
    walk(Word(), 0);
    classes += " m=" + std::to_string(m) + ":" + std::to_string(nf_to_oracle.size()) + " classes";
  }
  return {mismatches == 0 && not_idempotent == 0,
          std::to_string(words) + " words," + classes + ", " + std::to_string(mismatches) + " partition mismatches, " +
              std::to_string(not_idempotent) + " idempotence failures"};
}

Result triforce() {
  auto g = load_fixture("triforce.graph");
  auto t = chunk_tree(g);
  auto se = separating_edges(g);
  bool sep_ok = se.size() == 3;
  for (const auto& e : se) sep_ok = sep_ok && e.label == 7;
  const auto family = twist_family(g).graphs.size();
  const bool out_infinite = !decide_out_finite(g).value;
  const bool cohopf = decide_cohopfian(g).value;
  const bool ok = t.chunk_nodes.size() == 4 && t.node_count() == 7 && t.is_tree() && sep_ok && family == 8 &&
                  out_infinite && cohopf;
  std::ostringstream os;
  os << "chunks=" << t.chunk_nodes.size() << " tree_nodes=" << t.node_count() << " is_tree=" << t.is_tree()
     << " separating=" << se.size() << (sep_ok ? "(all 7)" : "(labels differ)") << " family=" << family
     << " out=" << (out_infinite ? "infinite" : "finite") << " cohopfian=" << (cohopf ? "yes" : "no");
  return {ok, os.str()};
}

Result gauss_bonnet() {
  std::mt19937_64 rng(20240601);
  int invalid = 0, bad_total = 0, bad_prime = 0, redistributed = 0;
  for (int i = 0; i < kDiagrams; ++i) {
    auto d = testsupport::random_diagram(rng, kMaxPolygons);
    try {
      validate_disc(d);
    } catch (const Error&) {
      ++invalid;
      continue;
    }
    auto c = curvatures(d);
    if (c.total != kExpectedTotal) ++bad_total;
    if (c.polygonal.polygons.size() > 1 && !c.corners().empty()) {
      ++redistributed;
      if (redistribute(d).total_prime != kExpectedTotal) ++bad_prime;
    }
  }
  return {invalid == 0 && bad_total == 0 && bad_prime == 0 && redistributed > 0,
          std::to_string(kDiagrams) + " diagrams, " + std::to_string(redistributed) + " redistributed, " +
              std::to_string(invalid) + " invalid, " + std::to_string(bad_total) + " total!=12, " +
              std::to_string(bad_prime) + " total'!=12"};
}

Result contradiction(std::map<std::string, int>& lemma_failures) {
  std::mt19937_64 rng(777);
  int outside = 0, unflagged = 0, flagged = 0, chain_only = 0;
  for (int i = 0; i < kSideConditionDiagrams; ++i) {
    auto d = testsupport::side_condition_diagram(rng, kMaxPolygons);
    validate_disc(d);
    auto c = curvatures(d);
    // side conditions, re-checked on the built diagram
    bool in_family = c.polygonal.polygons.size() > 1 && !c.corners().empty();
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
      const auto n = c.polygonal.polygon_count[v];
      if (d.transitions.count(v) && n != 1 && n < 5) in_family = false;
      if (d.types[v] == 2 && !d.on_boundary(v) && n < 12) in_family = false;
    }
    if (!in_family) {
      ++outside;
      continue;
    }
    auto r = redistribute(d);
    const auto failed = r.failed_lemmas();
    for (const auto& f : failed) ++lemma_failures[f];
    if (r.inconsistent && r.base.total == kExpectedTotal && r.total_prime == kExpectedTotal) {
      ++flagged;
      if (failed.empty()) ++chain_only;
    } else {
      ++unflagged;
    }
  }
  return {outside == 0 && unflagged == 0 && flagged == kSideConditionDiagrams,
          std::to_string(flagged) + "/" + std::to_string(kSideConditionDiagrams) + " flagged inconsistent, " +
              std::to_string(unflagged) + " unflagged, " + std::to_string(outside) + " outside the family, " +
              std::to_string(chain_only) + " with every lemma holding"};
}

Result cycle_graph_connected() {
  std::mt19937_64 rng(99);
  int disconnected = 0;
  std::size_t cycles = 0;
  for (int i = 0; i < kCycleGraphs; ++i) {
    const int n = 3 + i % (kCycleMaxVertices - 2);
    auto g = testsupport::random_biconnected(rng, n, {6, 7, 8});
    auto cg = cycle_graph(g);
    cycles += cg.cycles.size();
    if (!cg.connected()) ++disconnected;
  }
  return {disconnected == 0, std::to_string(kCycleGraphs) + " graphs (n<=" + std::to_string(kCycleMaxVertices) +
                                 "), " + std::to_string(cycles) + " induced cycles, " +
                                 std::to_string(disconnected) + " disconnected cycle graphs"};
}

// Whether w conjugates x into {s^+-1, t^+-1}, decided by the oracle.
bool oracle_standard(const DihedralContext& d, const Word& w, const Word& x) {
  const Word y = conjugate(w, x);
  for (const auto& g : {d.gen_s(), d.gen_t()})
    for (int e : {1, -1})
      if (oracle_equal(d, y, g.pow(e))) return true;
  return false;
}

AxisDescription make_axis(const Word& g, bool s, int sign) {
  AxisDescription a;
  a.conjugator = g;
  a.base_is_s = s;
  a.sign = sign;
  return a;
}

Result bestvina() {
  std::string notes;
  bool ok = true;
  for (int m = 3; m <= kAxisMaxLabel; ++m) {
    auto as = axis_segment(m, make_axis(Word(), true, 1), kAxisWindow);
    auto at = axis_segment(m, make_axis(Word(), false, 1), kAxisWindow);
    std::set<std::string> tk;
    for (const auto& v : at) tk.insert(v.key);
    std::vector<std::size_t> shared;
    for (std::size_t i = 0; i < as.size(); ++i)
      if (tk.count(as[i].key)) shared.push_back(i);
    if (shared.size() != 2 || shared[1] != shared[0] + 1) {
      ok = false;
      notes += " axes m=" + std::to_string(m) + " share " + std::to_string(shared.size());
    }
  }
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> label(3, kAxisMaxLabel), len(0, 5), coin(0, 1);
  int dihedral = 0, invariant = 0, tested = 0;
  auto sign = [&] { return coin(rng) ? 1 : -1; };
  for (int i = 0; i < kDihedralPairs + kInvariancePairs; ++i) {
    const int m = label(rng);
    DihedralContext d(m);
    const bool standard = i < kDihedralPairs;
    AxisDescription x, y;
    if (standard) {
      auto g = random_word(rng, len(rng));
      x = make_axis(g, true, sign());
      y = make_axis(g, false, sign());
    } else {
      x = make_axis(random_word(rng, len(rng) % 3), coin(rng) == 1, sign());
      y = make_axis(random_word(rng, len(rng) % 3), coin(rng) == 1, sign());
    }
    try {
      auto c = classify_pair(m, x, y);
      if (standard && c.kind == PairKind::full_dihedral && oracle_standard(d, c.witness, x.element(d)) &&
          oracle_standard(d, c.witness, y.element(d))) {
        ++dihedral;
      }
      auto h = random_word(rng, 1 + len(rng) % 3);
      auto moved = classify_pair(m, make_axis(h * x.conjugator, x.base_is_s, x.sign),
                                 make_axis(h * y.conjugator, y.base_is_s, y.sign));
      ++tested;
      if (moved.kind == c.kind && classify_pair(m, y, x).kind == c.kind) ++invariant;
    } catch (const Error& e) {
      notes += std::string(" error: ") + e.what();
    }
  }
  ok = ok && dihedral == kDihedralPairs && invariant == kDihedralPairs + kInvariancePairs;
  return {ok, "axes m=3.." + std::to_string(kAxisMaxLabel) + " meet in one edge; " + std::to_string(dihedral) + "/" +
                  std::to_string(kDihedralPairs) + " standard pairs FullDihedral with oracle-verified witness; " +
                  std::to_string(invariant) + "/" + std::to_string(kDihedralPairs + kInvariancePairs) +
                  " conjugation-invariant and symmetric" + notes};
}

std::size_t brute_force_automorphisms(const PresentationGraph& g) {
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.size() && ok; ++u)
      for (std::size_t v = u + 1; v < g.size() && ok; ++v) ok = g.label(u, v) == g.label(perm[u], perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Result aut_generating_set() {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> label(6, 8);
  int graphs = 0, wrong_shape = 0, rejected = 0;
  std::size_t maps = 0;
  for (int n = 1; n <= kAutMaxVertices; ++n)
    for (auto mask : shapes()[n]) {
      auto base = testsupport::graph_from_mask(n, mask, [](int) { return 6; });
      auto b = testsupport::BitGraph::of(base);
      const std::uint32_t all = (1u << n) - 1;
      if (!b.connected(all) || b.has_cut_vertex(all) || b.has_separating_edge(all)) continue;
      if (n == 2) continue;  // a single edge
      for (int lab = 0; lab <= kAutRandomLabellings; ++lab) {
        std::vector<int> labels(testsupport::edge_slots(n).size(), 6);
        if (lab > 0)
          for (auto& l : labels) l = label(rng);
        auto g = testsupport::graph_from_mask(n, mask, [&](int k) { return labels[k]; });
        ++graphs;
        auto gens = aut_generators(g);
        std::size_t conj = 0, autos = 0, inv = 0, other = 0;
        for (const auto& f : gens) {
          if (f.tag == "conjugation") ++conj;
          else if (f.tag == "graph-auto") ++autos;
          else if (f.tag == "inversion") ++inv;
          else ++other;
          if (verify_standard_form(f).outcome != VerifyOutcome::accept) ++rejected;
        }
        maps += gens.size();
        if (conj != g.size() || autos != brute_force_automorphisms(g) || inv != 1 || other != 0) ++wrong_shape;
      }
    }
  return {wrong_shape == 0 && rejected == 0 && graphs > 0,
          std::to_string(graphs) + " labelled graphs (n<=" + std::to_string(kAutMaxVertices) + "), " +
              std::to_string(maps) + " maps, " + std::to_string(wrong_shape) + " wrong generating sets, " +
              std::to_string(rejected) + " maps not accepted"};
}

Result chunk_oracle() {
  int exhaustive = 0, mismatches = 0;
  for (int n = 3; n <= kChunkExhaustiveVertices; ++n)
    for (auto mask : shapes()[n]) {
      auto g = testsupport::graph_from_mask(n, mask, [](int) { return 6; });
      if (!testsupport::connected_no_cut_vertex(g)) continue;
      ++exhaustive;
      if (chunks(g) != testsupport::brute_force_chunks(g)) ++mismatches;
    }
  std::mt19937_64 rng(8);
  for (int i = 0; i < kChunkRandom; ++i) {
    auto g = testsupport::random_biconnected(rng, kChunkRandomVertices, {6});
    if (chunks(g) != testsupport::brute_force_chunks(g)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(exhaustive) + " graphs up to isomorphism (n<=" +
                               std::to_string(kChunkExhaustiveVertices) + ") and " + std::to_string(kChunkRandom) +
                               " random on " + std::to_string(kChunkRandomVertices) + " vertices, " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  std::map<std::string, int> lemma_failures;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"alternating-product lemma sweep", alternating_lemma},
      {"normal form / oracle equivalence", normal_form_oracle},
      {"triforce fixture", triforce},
      {"Gauss-Bonnet exactness", gauss_bonnet},
      {"contradiction on side-condition diagrams", [&] { return contradiction(lemma_failures); }},
      {"induced-cycle graph connectivity", cycle_graph_connected},
      {"dual tree axes and pair classification", bestvina},
      {"Aut generating set", aut_generating_set},
      {"chunk oracle equivalence", chunk_oracle},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r{false, ""};
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    if (i == 4)
      for (const auto& [name, count] : lemma_failures) std::printf("  lemma %s failed on %d diagrams\n", name.c_str(), count);
    std::fflush(stdout);
    if (r.known_red) std::printf("  known deviation: failure matches the recorded counterexample set\n");
    failures += !r.pass && !r.known_red;
  }
  return failures;
}
