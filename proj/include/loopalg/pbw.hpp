#pragma once

// Normal-ordered noncommutative polynomials: U(g-) in the PBW basis for the
// order (depth, label), and the same rewriting engine for U(g)^{(x)n}.

#include <cstddef>
#include <utility>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/loop_sym.hpp"
#include "loopalg/poly.hpp"

namespace loopalg {

// How the major index of a bracket of two generators is formed.
enum class MajorRule {
  loop_depth,   // [x[-m], y[-l]] = [x,y][-(m+l)]
  tensor_site,  // [x^(i), y^(j)] = delta_ij [x,y]^(i)
};

// Rewrites words into normal order via y x = x y - [x, y] for y > x.
//
// Right multiplication by a generator inserts it at its sorted position in one
// pass; each generator it moves past leaves a spill term with one fewer factor,
// which is normalized recursively. Word degree therefore strictly decreases
// along every spill chain.
class NormalOrdering {
 public:
  NormalOrdering(const LieAlgebraSpec& spec, MajorRule rule) : spec_(&spec), rule_(rule) {}

  const LieAlgebraSpec& spec() const { return *spec_; }

  // [x, y] of two generators as (generator, coefficient) terms.
  void bracket_gens(Gen x, Gen y, std::vector<std::pair<Gen, Rational>>& out) const;

  // out += c * (w * g) in normal form; w must be normal-ordered. `steps`, if
  // given, counts spill terms produced.
  void right_multiply(const Word& w, Gen g, const Rational& c, TermMap& out, std::size_t* steps = nullptr) const;

  // out += c * (u * v) for normal-ordered u, v.
  void multiply_words(const Word& u, const Word& v, const Rational& c, TermMap& out,
                      std::size_t* steps = nullptr) const;

  // out += c * (normal form of an arbitrary word).
  void normalize_word(const Word& w, const Rational& c, TermMap& out, std::size_t* steps = nullptr) const;

  template <class P>
  P multiply(const P& u, const P& v, Exec exec = Exec::parallel) const {
    auto left = term_pointers(u);
    return P(accumulate(left.size(), exec, [&](std::size_t i, TermMap& out) {
      const auto& [wu, cu] = *left[i];
      for (const auto& [wv, cv] : v.terms()) multiply_words(wu, wv, cu * cv, out);
    }));
  }

  template <class P>
  P commutator(const P& u, const P& v, Exec exec = Exec::parallel) const {
    auto left = term_pointers(u);
    return P(accumulate(left.size(), exec, [&](std::size_t i, TermMap& out) {
      const auto& [wu, cu] = *left[i];
      for (const auto& [wv, cv] : v.terms()) {
        if (wu == wv) continue;
        multiply_words(wu, wv, cu * cv, out);
        multiply_words(wv, wu, -(cu * cv), out);
      }
    }));
  }

 private:
  void right_multiply_map(const TermMap& in, Gen g, TermMap& out, std::size_t* steps) const;

  const LieAlgebraSpec* spec_;
  MajorRule rule_;
};

// Upper bound on spill steps for normalizing a word of the given degree when
// every bracket has at most `bracket_terms` terms: each of the at most
// d(d-1)/2 transpositions spawns that many words of degree d-1.
std::size_t rewrite_step_bound(std::size_t degree, std::size_t bracket_terms);

PBWPoly pbw_generator(const LieAlgebraSpec& spec, int label, int depth);
PBWPoly pbw_element(const LieAlgebraSpec& spec, const LieElement& x, int depth);

PBWPoly normal_product(const LieAlgebraSpec& spec, const PBWPoly& u, const PBWPoly& v, Exec exec = Exec::parallel);
PBWPoly commutator(const LieAlgebraSpec& spec, const PBWPoly& u, const PBWPoly& v, Exec exec = Exec::parallel);
PBWPoly normal_form(const LieAlgebraSpec& spec, const Word& arbitrary_word, const Rational& c = 1);

// Top filtration part read as a commutative polynomial; throws
// std::invalid_argument on zero input.
SymPoly gr_top(const PBWPoly& u);
// Reads every normal-ordered term as a commutative monomial.
SymPoly as_symbol_terms(const PBWPoly& u);
// A normal-ordered monomial from a sorted commutative one.
PBWPoly pbw_from_sorted(const SymPoly& p);

// x_1...x_d -> (1/d!) sum over orderings, normalized.
PBWPoly symmetrize(const LieAlgebraSpec& spec, const SymPoly& p);

// d_t extended to U(g-) as a derivation.
PBWPoly d_t_env(const LieAlgebraSpec& spec, const PBWPoly& u);
PBWPoly d_t_env_power(const LieAlgebraSpec& spec, const PBWPoly& u, int n);

// g acting by derivations, x.(y[-m]) = [x, y][-m].
PBWPoly adjoint_action(const LieAlgebraSpec& spec, const LieElement& x, const PBWPoly& u);

// Sorted PBW words with degree in [min_degree, max_degree] and depth sum
// `weight`, ordered by degree then lexicographically.
std::vector<Word> filtered_basis(const LieAlgebraSpec& spec, int min_degree, int max_degree, int weight);

}  // namespace loopalg
