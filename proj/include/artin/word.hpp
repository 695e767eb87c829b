#pragma once

// Words over named generators: the free group F(V) in which every
// Artin-group element in this library is written.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "artin/error.hpp"

namespace artin {

inline bool is_generator_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  bool cancels(const Letter& other) const { return gen == other.gen && exp == -other.exp; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every constructor and operation keeps the
/// invariant that no letter is adjacent to its inverse.
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (auto& l : letters) push_back(std::move(l));
  }

  static Word letter(std::string gen, int exp = 1) { return Word({Letter{std::move(gen), exp}}); }

  /// Tokens are whitespace separated: `g`, `g^-1` or `g^k` for a nonzero
  /// integer k. `()` denotes the identity. The result is freely reduced.
  static Word parse(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) break;
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      std::string_view tok = text.substr(pos, end - pos);
      pos = end;
      if (tok == "()") continue;
      auto caret = tok.find('^');
      std::string_view name = tok.substr(0, caret);
      if (!is_generator_name(name)) {
        throw Error(ErrorKind::parse, "bad generator in word token '" + std::string(tok) + "'");
      }
      long power = 1;
      if (caret != std::string_view::npos) {
        std::string_view num = tok.substr(caret + 1);
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), power);
        if (ec != std::errc() || p != num.data() + num.size() || power == 0) {
          throw Error(ErrorKind::parse, "bad exponent in word token '" + std::string(tok) + "'");
        }
      }
      int sign = power > 0 ? 1 : -1;
      for (long i = 0; i < std::labs(power); ++i) w.push_back(Letter{std::string(name), sign});
    }
    return w;
  }

  /// Appends one letter, cancelling against the last letter if possible.
  void push_back(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(std::move(l));
    }
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const {
    Word r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
    return r;
  }

  Word pow(long k) const {
    Word base = k >= 0 ? *this : inverse();
    Word r;
    for (long i = 0; i < std::labs(k); ++i) r *= base;
    return r;
  }

  Word& operator*=(const Word& rhs) {
    for (const auto& l : rhs.letters_) push_back(l);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Prefix of the first n letters (already reduced, being a subword).
  Word prefix(std::size_t n) const {
    Word r;
    r.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, size())));
    return r;
  }

  long exponent_sum() const {
    long s = 0;
    for (const auto& l : letters_) s += l.exp;
    return s;
  }

  std::set<std::string> generators() const {
    std::set<std::string> g;
    for (const auto& l : letters_) g.insert(l.gen);
    return g;
  }

  Word renamed(const std::map<std::string, std::string>& names) const {
    Word r;
    for (const auto& l : letters_) {
      auto it = names.find(l.gen);
      r.push_back(Letter{it == names.end() ? l.gen : it->second, l.exp});
    }
    return r;
  }

  /// Replaces every generator v by images.at(v) (inverted for v^-1).
  Word substitute(const std::map<std::string, Word>& images) const {
    Word r;
    for (const auto& l : letters_) {
      auto it = images.find(l.gen);
      if (it == images.end()) {
        throw Error(ErrorKind::invalid, "no image for generator '" + l.gen + "'");
      }
      r *= l.exp > 0 ? it->second : it->second.inverse();
    }
    return r;
  }

  std::string str() const {
    if (letters_.empty()) return "()";
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.gen;
      if (l.exp < 0) out += "^-1";
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// g w g^-1, freely reduced.
inline Word conjugate(const Word& g, const Word& w) { return g * w * g.inverse(); }

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace artin
