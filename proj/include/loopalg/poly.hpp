#pragma once

// Sparse polynomials over Q keyed by words of packed generators.
//
// A generator packs a "major" index (loop depth m for x[-m], or a site index
// for tensor factors) above an 8-bit basis label, so comparing packed values
// is the canonical generator order: major ascending, then label. All
// polynomial flavours store sorted words; they differ only in which product
// the surrounding algebra applies.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

using Gen = std::uint32_t;

constexpr Gen make_gen(unsigned major, unsigned label) { return (static_cast<Gen>(major) << 8) | (label & 0xFFu); }
constexpr unsigned gen_major(Gen g) { return g >> 8; }
constexpr unsigned gen_label(Gen g) { return g & 0xFFu; }

using Word = std::vector<Gen>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    // FNV-1a over the packed generators.
    std::uint64_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Canonical term order: degree, then lexicographic on packed generators.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline unsigned word_weight(const Word& w) {
  unsigned s = 0;
  for (Gen g : w) s += gen_major(g);
  return s;
}

using TermMap = std::unordered_map<Word, Rational, WordHash>;

inline void add_to(TermMap& map, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = map.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) map.erase(it);
  }
}

inline void add_to(TermMap& map, Word&& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = map.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) map.erase(it);
  }
}

inline void merge_into(TermMap& target, const TermMap& source) {
  for (const auto& [w, c] : source) add_to(target, w, c);
}

template <class Tag>
class Poly {
 public:
  using Term = std::pair<Word, Rational>;

  Poly() = default;
  explicit Poly(TermMap terms) : terms_(std::move(terms)) {}

  static Poly constant(const Rational& c) {
    Poly p;
    p.add_term(Word{}, c);
    return p;
  }
  static Poly monomial(Word w, const Rational& c = 1) {
    Poly p;
    p.add_term(std::move(w), c);
    return p;
  }

  void add_term(const Word& w, const Rational& c) { add_to(terms_, w, c); }
  void add_term(Word&& w, const Rational& c) { add_to(terms_, std::move(w), c); }

  const TermMap& terms() const { return terms_; }
  TermMap& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::vector<Term> sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return word_less(a.first, b.first); });
    return out;
  }

  // Largest word length; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  // Common weight of all terms, if homogeneous (zero polynomial: nullopt).
  std::optional<unsigned> homogeneous_weight() const {
    std::optional<unsigned> w;
    for (const auto& [word, c] : terms_) {
      unsigned x = word_weight(word);
      if (w && *w != x) return std::nullopt;
      w = x;
    }
    return w;
  }

  std::optional<unsigned> homogeneous_degree() const {
    std::optional<unsigned> d;
    for (const auto& [word, c] : terms_) {
      auto x = static_cast<unsigned>(word.size());
      if (d && *d != x) return std::nullopt;
      d = x;
    }
    return d;
  }

  Poly& operator+=(const Poly& o) {
    merge_into(terms_, o.terms_);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_to(terms_, w, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

struct SymTag {};
struct PBWTag {};
struct TensorTag {};

// Element of S(g-): commutative, Poisson bracket from the loop algebra.
using SymPoly = Poly<SymTag>;
// Element of U(g-) in PBW normal form.
using PBWPoly = Poly<PBWTag>;
// Element of U(g)^{(x)n}; generators carry their site as the major index.
using TensorPoly = Poly<TensorTag>;

}  // namespace loopalg
