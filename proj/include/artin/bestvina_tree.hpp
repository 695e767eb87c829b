#pragma once

// The tree of simplices X_n of a dihedral Artin group and its dual tree
// T_n, axes of conjugates of standard generators, and the classification
// of the subgroup generated by two such conjugates.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "artin/dihedral_garside.hpp"
#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

/// A maximal simplex h.sigma_s or h.sigma_t of X_n, i.e. a vertex of T_n.
/// sigma_s holds the cosets Pi(s,t;i)<Delta> for i < n.
struct TreeVertex {
  std::string key;  // sorted coset keys joined by ';'
  Word representative;
  bool s_type = true;
};

class DihedralTree {
 public:
  explicit DihedralTree(int m) : d_(m) {
    if (m < 3) throw Error(ErrorKind::precondition, "dihedral tree needs m >= 3");
  }

  const DihedralContext& context() const { return d_; }
  int n() const { return d_.m; }

  std::string coset_key(const Word& g) const { return garside_nf(d_, g).simples_key(d_); }

  /// Coset keys of h.sigma, in the order i = 0..n-1, with representatives.
  std::vector<std::pair<std::string, Word>> cosets(const Word& h, bool s_type) const {
    std::vector<std::pair<std::string, Word>> out;
    const Word a = s_type ? d_.gen_s() : d_.gen_t();
    const Word b = s_type ? d_.gen_t() : d_.gen_s();
    for (int i = 0; i < d_.m; ++i) {
      Word g = h * alt_product(a, b, i);
      auto nf = garside_nf(d_, g);
      out.emplace_back(nf.simples_key(d_), nf.positive_part(d_));
    }
    return out;
  }

  TreeVertex vertex(const Word& h, bool s_type) const {
    auto cs = cosets(h, s_type);
    std::vector<std::string> keys;
    for (auto& c : cs) keys.push_back(c.first);
    std::sort(keys.begin(), keys.end());
    std::string key;
    for (std::size_t i = 0; i < keys.size(); ++i) key += (i ? ";" : "") + keys[i];
    return {key, h, s_type};
  }

  TreeVertex base() const { return vertex(Word(), true); }

  /// The n neighbours of v: for each of its cosets x<Delta>, the other
  /// maximal simplex among x.sigma_s and x.sigma_t.
  std::vector<TreeVertex> neighbours(const TreeVertex& v) const {
    std::vector<TreeVertex> out;
    for (const auto& [ck, rep] : cosets(v.representative, v.s_type)) {
      auto a = vertex(rep, true);
      auto b = vertex(rep, false);
      if (a.key == v.key) {
        out.push_back(b);
      } else if (b.key == v.key) {
        out.push_back(a);
      } else {
        throw Error(ErrorKind::invalid, "coset " + ck + " of a simplex is not in that simplex");
      }
    }
    return out;
  }

  /// Coset keys shared by two simplices.
  std::vector<std::pair<std::string, Word>> shared_cosets(const TreeVertex& a, const TreeVertex& b) const {
    auto ca = cosets(a.representative, a.s_type);
    auto cb = cosets(b.representative, b.s_type);
    std::vector<std::pair<std::string, Word>> out;
    for (const auto& x : ca)
      for (const auto& y : cb)
        if (x.first == y.first) out.push_back(x);
    return out;
  }

 private:
  DihedralContext d_;
};

struct TreeBall {
  int m = 3;
  int radius = 0;
  std::vector<TreeVertex> vertices;  // BFS order, vertices[0] = sigma_s
  std::vector<int> depth;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Plain adjacency listing for external viewers.
  std::string export_adjacency() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      os << "node: " << i << " depth=" << depth[i] << " rep=" << vertices[i].representative.str()
         << " type=" << (vertices[i].s_type ? "s" : "t") << " key=" << vertices[i].key << '\n';
    for (auto [a, b] : edges) os << "link: " << a << ' ' << b << '\n';
    return os.str();
  }
};

inline TreeBall tree_ball(int m, int r, std::size_t cap = 200000) {
  if (r < 0) throw Error(ErrorKind::precondition, "tree_ball: negative radius");
  DihedralTree tree(m);
  TreeBall ball;
  ball.m = m;
  ball.radius = r;
  std::map<std::string, std::size_t> index;
  ball.vertices.push_back(tree.base());
  ball.depth.push_back(0);
  index[ball.vertices[0].key] = 0;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.depth[i] == r) continue;
    const auto current = ball.vertices[i];
    for (auto& nb : tree.neighbours(current)) {
      auto it = index.find(nb.key);
      if (it != index.end()) {
        if (it->second > i) ball.edges.emplace_back(i, it->second);
        continue;
      }
      if (ball.vertices.size() >= cap) {
        throw Error(ErrorKind::resource, "tree_ball: more than " + std::to_string(cap) + " vertices");
      }
      index[nb.key] = ball.vertices.size();
      ball.edges.emplace_back(i, ball.vertices.size());
      ball.vertices.push_back(std::move(nb));
      ball.depth.push_back(ball.depth[i] + 1);
    }
  }
  return ball;
}

/// The element g u^sign g^-1 for a standard generator u.
struct AxisDescription {
  Word conjugator;
  bool base_is_s = true;
  int sign = 1;

  Word element(const DihedralContext& d) const {
    Word u = base_is_s ? d.gen_s() : d.gen_t();
    return conjugate(conjugator, sign > 0 ? u : u.inverse());
  }

  /// `conjugator word|u` with u in {s, t, s^-1, t^-1}.
  static AxisDescription parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw Error(ErrorKind::parse, "axis description needs 'word|u': " + text);
    AxisDescription a;
    a.conjugator = Word::parse(text.substr(0, bar));
    auto u = Word::parse(text.substr(bar + 1));
    if (u.size() != 1 || (u[0].gen != "s" && u[0].gen != "t")) {
      throw Error(ErrorKind::parse, "axis base must be one of s, t, s^-1, t^-1: " + text);
    }
    a.base_is_s = u[0].gen == "s";
    a.sign = u[0].exp;
    return a;
  }

  std::string str() const { return conjugator.str() + "|" + (base_is_s ? "s" : "t") + (sign < 0 ? "^-1" : ""); }
};

/// Axis vertices g u^k sigma_s for k = -window..window.
inline std::vector<TreeVertex> axis_segment(int m, const AxisDescription& a, int window) {
  if (window < 1) throw Error(ErrorKind::precondition, "axis_segment: window must be >= 1");
  DihedralTree tree(m);
  const Word u = a.base_is_s ? tree.context().gen_s() : tree.context().gen_t();
  std::vector<TreeVertex> out;
  for (int k = -window; k <= window; ++k) out.push_back(tree.vertex(a.conjugator * u.pow(k), true));
  return out;
}

enum class PairKind { cyclic, free, full_dihedral };

inline const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::cyclic: return "Cyclic";
    case PairKind::free: return "Free";
    case PairKind::full_dihedral: return "FullDihedral";
  }
  return "?";
}

struct PairClassification {
  PairKind kind = PairKind::free;
  Word witness;  // set for full_dihedral
  std::size_t shared_vertices = 0;
  int window = 0;
};

namespace detail {

inline PairClassification classify_in_window(const DihedralTree& tree, const AxisDescription& x,
                                             const AxisDescription& y, int window) {
  const int m = tree.n();
  auto ax = axis_segment(m, x, window);
  auto ay = axis_segment(m, y, window);
  std::set<std::string> ykeys;
  for (const auto& v : ay) ykeys.insert(v.key);
  PairClassification out;
  out.window = window;
  // consecutive shared vertices on x's axis give a shared edge
  std::size_t first_edge = ax.size();
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (!ykeys.count(ax[i].key)) continue;
    ++out.shared_vertices;
    if (i + 1 < ax.size() && ykeys.count(ax[i + 1].key) && first_edge == ax.size()) first_edge = i;
  }
  if (first_edge == ax.size()) {
    out.kind = PairKind::free;
    return out;
  }
  auto shared = tree.shared_cosets(ax[first_edge], ax[first_edge + 1]);
  if (shared.size() != 1) throw Error(ErrorKind::invalid, "adjacent simplices share more than one coset");
  out.kind = PairKind::full_dihedral;
  out.witness = shared[0].second.inverse();
  return out;
}

}  // namespace detail

/// Cyclic when x = y^{+-1}; FullDihedral when the axes share an edge
/// (with a conjugator taking both into {s^+-1, t^+-1}); Free otherwise.
/// The axis windows have radius |g_x| + |g_y| + 2 and the answer is
/// re-derived at radius + 2; disagreement is reported as an error.
inline PairClassification classify_pair(int m, const AxisDescription& x, const AxisDescription& y) {
  DihedralTree tree(m);
  const auto& d = tree.context();
  const Word ex = x.element(d), ey = y.element(d);
  if (words_equal(d, ex, ey) || words_equal(d, ex, ey.inverse())) {
    PairClassification c;
    c.kind = PairKind::cyclic;
    return c;
  }
  const int window = static_cast<int>(x.conjugator.size() + y.conjugator.size()) + 2;
  auto c = detail::classify_in_window(tree, x, y, window);
  auto check = detail::classify_in_window(tree, x, y, window + 2);
  if (c.kind != check.kind) {
    throw Error(ErrorKind::resource, "classify_pair: axis intersection not stable at window " +
                                         std::to_string(window));
  }
  if (c.kind == PairKind::full_dihedral) {
    auto in_standard = [&](const Word& e) {
      const Word w = conjugate(c.witness, e);
      for (const auto* g : {&d.s, &d.t})
        for (int sgn : {1, -1})
          if (words_equal(d, w, Word::letter(*g, sgn))) return true;
      return false;
    };
    if (!in_standard(ex) || !in_standard(ey)) {
      throw Error(ErrorKind::invalid, "classify_pair: witness " + c.witness.str() + " does not verify");
    }
  }
  return c;
}

}  // namespace artin
