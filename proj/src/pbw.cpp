#include "loopalg/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopalg {

void NormalOrdering::bracket_gens(Gen x, Gen y, std::vector<std::pair<Gen, Rational>>& out) const {
  unsigned major = 0;
  if (rule_ == MajorRule::loop_depth) {
    major = gen_major(x) + gen_major(y);
  } else {
    if (gen_major(x) != gen_major(y)) return;
    major = gen_major(x);
  }
  for (const auto& t : spec_->bracket_basis(static_cast<int>(gen_label(x)), static_cast<int>(gen_label(y))))
    out.emplace_back(make_gen(major, static_cast<unsigned>(t.label)), t.coeff);
}

void NormalOrdering::right_multiply_map(const TermMap& in, Gen g, TermMap& out, std::size_t* steps) const {
  for (const auto& [w, c] : in) right_multiply(w, g, c, out, steps);
}

void NormalOrdering::right_multiply(const Word& w, Gen g, const Rational& c, TermMap& out, std::size_t* steps) const {
  if (c == 0) return;
  const auto pos = static_cast<std::size_t>(std::upper_bound(w.begin(), w.end(), g) - w.begin());
  Word main;
  main.reserve(w.size() + 1);
  main.insert(main.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  main.push_back(g);
  main.insert(main.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
  add_to(out, std::move(main), c);

  // Moving g left past w[j] leaves w[0..j) [w[j], g] w(j..k).
  std::vector<std::pair<Gen, Rational>> spill;
  for (std::size_t j = pos; j < w.size(); ++j) {
    if (w[j] == g) continue;
    spill.clear();
    bracket_gens(w[j], g, spill);
    if (spill.empty()) continue;
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    for (const auto& [y, cy] : spill) {
      if (steps) ++*steps;
      TermMap acc;
      right_multiply(prefix, y, c * cy, acc, steps);
      for (std::size_t s = j + 1; s < w.size(); ++s) {
        TermMap next;
        right_multiply_map(acc, w[s], next, steps);
        acc = std::move(next);
      }
      merge_into(out, acc);
    }
  }
}

void NormalOrdering::multiply_words(const Word& u, const Word& v, const Rational& c, TermMap& out,
                                   std::size_t* steps) const {
  if (c == 0) return;
  if (v.empty() || u.empty() || u.back() <= v.front()) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    add_to(out, std::move(w), c);
    return;
  }
  TermMap acc;
  acc.emplace(u, c);
  for (std::size_t i = 0; i < v.size(); ++i) {
    TermMap next;
    right_multiply_map(acc, v[i], next, steps);
    acc = std::move(next);
  }
  merge_into(out, acc);
}

void NormalOrdering::normalize_word(const Word& w, const Rational& c, TermMap& out, std::size_t* steps) const {
  if (c == 0) return;
  TermMap acc;
  acc.emplace(Word{}, c);
  for (Gen g : w) {
    TermMap next;
    right_multiply_map(acc, g, next, steps);
    acc = std::move(next);
  }
  merge_into(out, acc);
}

std::size_t rewrite_step_bound(std::size_t degree, std::size_t bracket_terms) {
  std::size_t bound = 0;
  for (std::size_t k = 2; k <= degree; ++k) bound = (k * (k - 1) / 2) * bracket_terms * (1 + bound);
  return bound;
}

PBWPoly pbw_generator(const LieAlgebraSpec& spec, int label, int depth) {
  return PBWPoly::monomial(Word{loop_gen(spec, label, depth)});
}

PBWPoly pbw_element(const LieAlgebraSpec& spec, const LieElement& x, int depth) {
  PBWPoly p;
  for (const auto& [a, c] : x.coeffs()) p.add_term(Word{loop_gen(spec, a, depth)}, c);
  return p;
}

PBWPoly normal_product(const LieAlgebraSpec& spec, const PBWPoly& u, const PBWPoly& v, Exec exec) {
  return NormalOrdering(spec, MajorRule::loop_depth).multiply(u, v, exec);
}

PBWPoly commutator(const LieAlgebraSpec& spec, const PBWPoly& u, const PBWPoly& v, Exec exec) {
  return NormalOrdering(spec, MajorRule::loop_depth).commutator(u, v, exec);
}

PBWPoly normal_form(const LieAlgebraSpec& spec, const Word& arbitrary_word, const Rational& c) {
  TermMap out;
  NormalOrdering(spec, MajorRule::loop_depth).normalize_word(arbitrary_word, c, out);
  return PBWPoly(std::move(out));
}

SymPoly gr_top(const PBWPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("gr_top of the zero element");
  const int d = u.degree();
  SymPoly out;
  for (const auto& [w, c] : u.terms())
    if (static_cast<int>(w.size()) == d) out.add_term(w, c);
  return out;
}

SymPoly as_symbol_terms(const PBWPoly& u) { return SymPoly(u.terms()); }

PBWPoly pbw_from_sorted(const SymPoly& p) { return PBWPoly(p.terms()); }

PBWPoly symmetrize(const LieAlgebraSpec& spec, const SymPoly& p) {
  NormalOrdering ordering(spec, MajorRule::loop_depth);
  TermMap out;
  for (const auto& [w, c] : p.terms()) {
    Word perm = w;
    std::sort(perm.begin(), perm.end());
    // Distinct orderings of the multiset, each weighted by its multiplicity
    // among the d! permutations.
    std::vector<Word> orderings;
    do {
      orderings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational weight = c / static_cast<long>(orderings.size());
    for (const auto& o : orderings) ordering.normalize_word(o, weight, out);
  }
  return PBWPoly(std::move(out));
}

PBWPoly d_t_env(const LieAlgebraSpec& spec, const PBWPoly& u) {
  NormalOrdering ordering(spec, MajorRule::loop_depth);
  TermMap out;
  for (const auto& [w, c] : u.terms())
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word moved = w;
      const unsigned m = gen_major(w[i]);
      moved[i] = make_gen(m + 1, gen_label(w[i]));
      ordering.normalize_word(moved, c * Rational(-static_cast<long>(m)), out);
    }
  return PBWPoly(std::move(out));
}

PBWPoly d_t_env_power(const LieAlgebraSpec& spec, const PBWPoly& u, int n) {
  PBWPoly out = u;
  for (int i = 0; i < n; ++i) out = d_t_env(spec, out);
  return out;
}

PBWPoly adjoint_action(const LieAlgebraSpec& spec, const LieElement& x, const PBWPoly& u) {
  spec.check_element(x);
  NormalOrdering ordering(spec, MajorRule::loop_depth);
  TermMap out;
  for (const auto& [w, c] : u.terms())
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int b = static_cast<int>(gen_label(w[i]));
      const unsigned m = gen_major(w[i]);
      for (const auto& [a, ca] : x.coeffs())
        for (const auto& t : spec.bracket_basis(a, b)) {
          Word moved = w;
          moved[i] = make_gen(m, static_cast<unsigned>(t.label));
          ordering.normalize_word(moved, c * ca * t.coeff, out);
        }
    }
  return PBWPoly(std::move(out));
}

std::vector<Word> filtered_basis(const LieAlgebraSpec& spec, int min_degree, int max_degree, int weight) {
  std::vector<Word> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d) {
    auto part = graded_basis(spec, d, weight);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace loopalg
