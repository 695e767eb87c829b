#pragma once

// Independent word-problem decision for A(m) through two homomorphisms:
// the exponent sum, and the quotient by the center, which is a free
// product of two cyclic groups.

#include <string>
#include <vector>

#include "artin/dihedral_garside.hpp"
#include "artin/word.hpp"

namespace artin {

/// Element of C_p * C_q (order 0 = infinite cyclic) as alternating
/// syllables (factor index, exponent reduced into [1, order-1]).
class FreeProductElement {
 public:
  struct Syllable {
    int factor = 0;
    long exp = 0;
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  FreeProductElement(long order_x, long order_y) : order_{order_x, order_y} {}

  void push(int factor, long exp) {
    exp = reduce(factor, exp);
    if (exp == 0) return;
    if (!syl_.empty() && syl_.back().factor == factor) {
      long e = reduce(factor, syl_.back().exp + exp);
      if (e == 0) {
        syl_.pop_back();
      } else {
        syl_.back().exp = e;
      }
      return;
    }
    syl_.push_back({factor, exp});
  }

  void push(const FreeProductElement& other) {
    for (const auto& s : other.syl_) push(s.factor, s.exp);
  }

  FreeProductElement inverse() const {
    FreeProductElement r(order_[0], order_[1]);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->factor, -it->exp);
    return r;
  }

  bool is_identity() const { return syl_.empty(); }
  const std::vector<Syllable>& syllables() const { return syl_; }

  friend bool operator==(const FreeProductElement& a, const FreeProductElement& b) {
    return a.syl_ == b.syl_;
  }

 private:
  long reduce(int factor, long e) const {
    long n = order_[factor];
    if (n == 0) return e;
    e %= n;
    if (e < 0) e += n;
    return e;
  }

  long order_[2];
  std::vector<Syllable> syl_;
};

struct OracleImage {
  long exponent_sum = 0;
  FreeProductElement quotient{0, 0};
  friend bool operator==(const OracleImage&, const OracleImage&) = default;
};

/// Images of s and t in the central quotient.
///   m odd:   C_2 * C_m,  s -> y^-(m-1)/2 x,  t -> x^-1 y^(m+1)/2
///   m = 2n:  Z * C_n,    s -> x,            t -> x^-1 y
inline std::pair<FreeProductElement, FreeProductElement> oracle_generator_images(int m) {
  if (m < 3) throw Error(ErrorKind::precondition, "oracle needs m >= 3");
  constexpr int X = 0, Y = 1;
  if (m % 2 == 1) {
    FreeProductElement s(2, m), t(2, m);
    s.push(Y, -(m - 1) / 2);
    s.push(X, 1);
    t.push(X, -1);
    t.push(Y, (m + 1) / 2);
    return {s, t};
  }
  FreeProductElement s(0, m / 2), t(0, m / 2);
  s.push(X, 1);
  t.push(X, -1);
  t.push(Y, 1);
  return {s, t};
}

inline OracleImage oracle_image(const DihedralContext& d, const Word& w) {
  auto [is, it] = oracle_generator_images(d.m);
  const FreeProductElement is_inv = is.inverse(), it_inv = it.inverse();
  OracleImage img;
  img.quotient = FreeProductElement(d.m % 2 == 1 ? 2 : 0, d.m % 2 == 1 ? d.m : d.m / 2);
  for (const auto& l : w) {
    if (l.gen != d.s && l.gen != d.t) {
      throw Error(ErrorKind::invalid, "generator '" + l.gen + "' is not in <" + d.s + "," + d.t + ">");
    }
    const bool s = l.gen == d.s;
    img.exponent_sum += l.exp;
    img.quotient.push(s ? (l.exp > 0 ? is : is_inv) : (l.exp > 0 ? it : it_inv));
  }
  return img;
}

inline bool oracle_equal(const DihedralContext& d, const Word& w1, const Word& w2) {
  return oracle_image(d, w1) == oracle_image(d, w2);
}

inline bool oracle_equal(int m, const Word& w1, const Word& w2) {
  return oracle_equal(DihedralContext(m), w1, w2);
}

}  // namespace artin
