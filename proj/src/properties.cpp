#include "loopalg/properties.hpp"

#include <algorithm>
#include <random>

#include "loopalg/linalg.hpp"
#include "loopalg/loop_sym.hpp"
#include "loopalg/pbw.hpp"

namespace loopalg {

namespace {

class Sampler {
 public:
  Sampler(const LieAlgebraSpec& spec, std::uint64_t seed) : spec_(spec), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coeff() {
    Rational c(uniform(-4, 4), uniform(1, 3));
    c.canonicalize();
    return c == 0 ? Rational(1) : c;
  }

  Word word(int max_degree, int max_depth) {
    Word w;
    const int d = uniform(1, max_degree);
    for (int i = 0; i < d; ++i) w.push_back(loop_gen(spec_, uniform(0, spec_.dim() - 1), uniform(1, max_depth)));
    return w;
  }

  PBWPoly pbw(int terms, int max_degree, int max_depth) {
    TermMap out;
    for (int t = 0; t < terms; ++t) normal_form_into(word(max_degree, max_depth), coeff(), out);
    return PBWPoly(std::move(out));
  }

  SymPoly sym(int terms, int max_degree, int max_depth) {
    SymPoly p;
    for (int t = 0; t < terms; ++t) {
      Word w = word(max_degree, max_depth);
      std::sort(w.begin(), w.end());
      p.add_term(w, coeff());
    }
    return p;
  }

 private:
  void normal_form_into(const Word& w, const Rational& c, TermMap& out) {
    NormalOrdering(spec_, MajorRule::loop_depth).normalize_word(w, c, out);
  }

  const LieAlgebraSpec& spec_;
  std::mt19937_64 rng_;
};

std::size_t max_bracket_terms(const LieAlgebraSpec& spec) {
  std::size_t b = 0;
  for (int x = 0; x < spec.dim(); ++x)
    for (int y = 0; y < spec.dim(); ++y) b = std::max(b, spec.bracket_basis(x, y).size());
  return b;
}

}  // namespace

std::vector<PropertyResult> run_properties(const LieAlgebraSpec& spec, std::uint64_t seed, int trials, Exec exec) {
  Sampler s(spec, seed);
  PropertyResult assoc{"associativity"}, jacobi{"jacobi"}, gr{"gr_multiplicative"}, bound{"rewrite_bound"},
      rn{"rank_nullity"};
  const NormalOrdering ordering(spec, MajorRule::loop_depth);
  const std::size_t b = max_bracket_terms(spec);

  for (int t = 0; t < trials; ++t) {
    const PBWPoly a = s.pbw(2, 2, 3), c = s.pbw(2, 2, 3), d = s.pbw(2, 2, 3);
    ++assoc.trials;
    if (!(normal_product(spec, normal_product(spec, a, c, exec), d, exec) ==
          normal_product(spec, a, normal_product(spec, c, d, exec), exec)))
      ++assoc.failures;

    // Poisson Jacobi, and Jacobi for commutators in U.
    const SymPoly p = s.sym(2, 2, 3), q = s.sym(2, 2, 3), r = s.sym(2, 2, 3);
    auto pb = [&](const SymPoly& x, const SymPoly& y) { return poisson_bracket(spec, x, y, exec); };
    ++jacobi.trials;
    if (!(pb(p, pb(q, r)) + pb(q, pb(r, p)) + pb(r, pb(p, q))).is_zero()) ++jacobi.failures;
    auto cm = [&](const PBWPoly& x, const PBWPoly& y) { return commutator(spec, x, y, exec); };
    ++jacobi.trials;
    if (!(cm(a, cm(c, d)) + cm(c, cm(d, a)) + cm(d, cm(a, c))).is_zero()) ++jacobi.failures;

    if (!a.is_zero() && !c.is_zero()) {
      ++gr.trials;
      const PBWPoly ac = normal_product(spec, a, c, exec);
      if (ac.is_zero() || !(gr_top(ac) == sym_multiply(gr_top(a), gr_top(c), exec))) ++gr.failures;
    }

    const Word w = s.word(5, 3);
    TermMap out;
    std::size_t steps = 0;
    ordering.normalize_word(w, 1, out, &steps);
    ++bound.trials;
    if (steps > rewrite_step_bound(w.size(), b)) ++bound.failures;

    const int rows = s.uniform(1, 7), cols = s.uniform(1, 7);
    SparseRationalMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (s.uniform(0, 2) == 0) m.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j), s.coeff());
    // A duplicated row combination keeps the rank deficient now and then.
    if (rows > 1 && s.uniform(0, 1) == 0)
      for (const auto& [j, v] : m.row(0)) m.add(static_cast<std::size_t>(rows - 1), j, Rational(2) * v);
    const auto res = eliminate(m);
    ++rn.trials;
    bool ok = res.rank + res.kernel.size() == static_cast<std::size_t>(cols);
    for (const auto& v : res.kernel)
      for (int i = 0; i < rows && ok; ++i) {
        Rational acc = 0;
        for (const auto& [j, x] : m.row(static_cast<std::size_t>(i))) acc += x * v[j];
        ok = acc == 0;
      }
    if (!ok) ++rn.failures;
  }
  return {assoc, jacobi, gr, bound, rn};
}

}  // namespace loopalg
