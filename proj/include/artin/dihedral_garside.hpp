#pragma once

// Dihedral Artin groups A(m) = <s, t | stst... = tsts... (m letters)>:
// alternating products, the Garside element, normal forms, word problem.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

/// Pi(x, y; k) = x y x y ... with k factors.
inline Word alt_product(const Word& x, const Word& y, long k) {
  if (k < 0) throw Error(ErrorKind::precondition, "alt_product: negative length");
  Word r;
  for (long i = 0; i < k; ++i) r *= (i % 2 == 0) ? x : y;
  return r;
}

/// The two generator names of a dihedral parabolic, plus its label.
struct DihedralContext {
  int m = 3;
  std::string s = "s";
  std::string t = "t";

  DihedralContext() = default;
  DihedralContext(int m_, std::string s_ = "s", std::string t_ = "t")
      : m(m_), s(std::move(s_)), t(std::move(t_)) {
    if (m < 2) throw Error(ErrorKind::precondition, "dihedral label must be >= 2");
    if (s == t) throw Error(ErrorKind::precondition, "dihedral generators must differ");
  }

  Word gen_s() const { return Word::letter(s); }
  Word gen_t() const { return Word::letter(t); }
};

struct Distinguished {
  Word delta;
  Word center;
  Word complement_s;  // s * complement_s = delta
  Word complement_t;
};

inline Distinguished distinguished(const DihedralContext& d) {
  Distinguished out;
  out.delta = alt_product(d.gen_s(), d.gen_t(), d.m);
  out.center = d.m % 2 == 0 ? out.delta : out.delta * out.delta;
  out.complement_s = alt_product(d.gen_t(), d.gen_s(), d.m - 1);
  out.complement_t = alt_product(d.gen_s(), d.gen_t(), d.m - 1);
  return out;
}

inline Distinguished distinguished(int m) { return distinguished(DihedralContext(m)); }

/// Strict alternating positive word: first letter and length in [1, m-1].
struct SimpleElement {
  bool starts_with_s = true;
  int length = 1;

  bool ends_with_s() const { return starts_with_s == (length % 2 == 1); }

  Word word(const DihedralContext& d) const {
    return starts_with_s ? alt_product(d.gen_s(), d.gen_t(), length)
                         : alt_product(d.gen_t(), d.gen_s(), length);
  }

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
  friend auto operator<=>(const SimpleElement&, const SimpleElement&) = default;
};

/// u_1 ... u_k . Delta^N, with the last letter of u_i equal to the first
/// letter of u_{i+1}. Delta sits on the right; N may be negative.
struct GarsideNormalForm {
  std::vector<SimpleElement> simples;
  long delta_power = 0;

  /// Positive part only; identifies the coset g<Delta>.
  std::string simples_key(const DihedralContext& d) const {
    std::string out;
    const bool short_names = d.s.size() == 1 && d.t.size() == 1;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (i) out += '|';
      const auto w = simples[i].word(d);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j && !short_names) out += '.';
        out += w[j].gen;
      }
    }
    return out;
  }

  /// Printed as `[u1|u2|...] Δ^N`.
  std::string str(const DihedralContext& d) const {
    return "[" + simples_key(d) + "] Δ^" + std::to_string(delta_power);
  }

  Word positive_part(const DihedralContext& d) const {
    Word w;
    for (const auto& u : simples) w *= u.word(d);
    return w;
  }

  Word expand(const DihedralContext& d) const {
    return positive_part(d) * distinguished(d).delta.pow(delta_power);
  }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

namespace detail {

// Right-multiplies the normal form by a positive generator (true = s).
inline void nf_push_positive(GarsideNormalForm& nf, int m, bool is_s) {
  // U Delta^N y = U phi^N(y) Delta^N, phi swapping s and t iff m is odd.
  bool y = (m % 2 == 1 && (std::labs(nf.delta_power) % 2 == 1)) ? !is_s : is_s;
  auto& u = nf.simples;
  if (u.empty() || u.back().ends_with_s() == y) {
    u.push_back({y, 1});
  } else if (u.back().length + 1 < m) {
    ++u.back().length;
  } else {
    u.pop_back();
    ++nf.delta_power;
  }
}

inline void nf_push(GarsideNormalForm& nf, int m, bool is_s, int exp) {
  if (exp > 0) {
    nf_push_positive(nf, m, is_s);
    return;
  }
  // y^-1 = Delta^-1 yhat, where yhat is alternating of length m-1 and
  // yhat y = Delta.
  --nf.delta_power;
  bool letter = (m % 2 == 1) ? is_s : !is_s;
  for (int i = 0; i < m - 1; ++i) {
    nf_push_positive(nf, m, letter);
    letter = !letter;
  }
}

}  // namespace detail

inline GarsideNormalForm garside_nf(const DihedralContext& d, const Word& w) {
  GarsideNormalForm nf;
  for (const auto& l : w) {
    if (l.gen != d.s && l.gen != d.t) {
      throw Error(ErrorKind::invalid, "generator '" + l.gen + "' is not in <" + d.s + "," + d.t + ">");
    }
    detail::nf_push(nf, d.m, l.gen == d.s, l.exp);
  }
  return nf;
}

inline GarsideNormalForm garside_nf(int m, const Word& w) { return garside_nf(DihedralContext(m), w); }

inline bool words_equal(const DihedralContext& d, const Word& w1, const Word& w2) {
  return garside_nf(d, w1) == garside_nf(d, w2);
}

inline bool words_equal(int m, const Word& w1, const Word& w2) {
  return words_equal(DihedralContext(m), w1, w2);
}

/// Whether Pi(s^p, t^q; k) = Pi(t^q, s^p; k) in A(m_st), decided by the
/// word problem.
inline bool alternating_equality(int m_st, int p, int q, long k) {
  if (p == 0 || q == 0 || k <= 1) {
    throw Error(ErrorKind::precondition, "alternating_equality needs nonzero powers and k > 1");
  }
  const Word sp = Word::letter("s").pow(p);
  const Word tq = Word::letter("t").pow(q);
  return words_equal(m_st, alt_product(sp, tq, k), alt_product(tq, sp, k));
}

/// Closed-form answer for the same question.
inline bool alternating_equality_closed_form(int m_st, int p, int q, long k) {
  return p == q && std::abs(p) == 1 && k % m_st == 0;
}

}  // namespace artin
