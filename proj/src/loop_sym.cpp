#include "loopalg/loop_sym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace loopalg {

namespace {

Word sorted_insert(Word w, Gen g) {
  w.insert(std::upper_bound(w.begin(), w.end(), g), g);
  return w;
}

Word merge_words(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Permutations of 0..n-1 with their signs.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    out.emplace_back(p, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Gen loop_gen(const LieAlgebraSpec& spec, int label, int depth) {
  spec.check_label(label);
  if (depth < 1) throw std::invalid_argument("loop generator depth must be >= 1");
  return make_gen(static_cast<unsigned>(depth), static_cast<unsigned>(label));
}

SymPoly sym_generator(const LieAlgebraSpec& spec, int label, int depth) {
  return SymPoly::monomial(Word{loop_gen(spec, label, depth)});
}

SymPoly sym_element(const LieAlgebraSpec& spec, const LieElement& x, int depth) {
  SymPoly p;
  for (const auto& [a, c] : x.coeffs()) p.add_term(Word{loop_gen(spec, a, depth)}, c);
  return p;
}

SymPoly g_coordinate(int label) { return SymPoly::monomial(Word{make_gen(0, static_cast<unsigned>(label))}); }

SymPoly sym_multiply(const SymPoly& p, const SymPoly& q, Exec exec) {
  auto left = term_pointers(p);
  return SymPoly(accumulate(left.size(), exec, [&](std::size_t i, TermMap& out) {
    const auto& [wp, cp] = *left[i];
    for (const auto& [wq, cq] : q.terms()) add_to(out, merge_words(wp, wq), cp * cq);
  }));
}

SymPoly sym_power(const SymPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  SymPoly acc = SymPoly::constant(1);
  for (int i = 0; i < k; ++i) acc = sym_multiply(acc, p, Exec::serial);
  return acc;
}

SymPoly poisson_bracket(const LieAlgebraSpec& spec, const SymPoly& p, const SymPoly& q, Exec exec) {
  auto left = term_pointers(p);
  return SymPoly(accumulate(left.size(), exec, [&](std::size_t i, TermMap& out) {
    const auto& [wp, cp] = *left[i];
    for (const auto& [wq, cq] : q.terms()) {
      const Rational c = cp * cq;
      for (std::size_t a = 0; a < wp.size(); ++a) {
        if (a > 0 && wp[a] == wp[a - 1]) continue;  // repeated factor handled by multiplicity
        const long mult_a = std::count(wp.begin(), wp.end(), wp[a]);
        Word rest_p = wp;
        rest_p.erase(rest_p.begin() + static_cast<std::ptrdiff_t>(a));
        for (std::size_t b = 0; b < wq.size(); ++b) {
          if (b > 0 && wq[b] == wq[b - 1]) continue;
          const long mult_b = std::count(wq.begin(), wq.end(), wq[b]);
          const auto& terms = spec.bracket_basis(static_cast<int>(gen_label(wp[a])),
                                                 static_cast<int>(gen_label(wq[b])));
          if (terms.empty()) continue;
          Word rest_q = wq;
          rest_q.erase(rest_q.begin() + static_cast<std::ptrdiff_t>(b));
          Word rest = merge_words(rest_p, rest_q);
          const unsigned depth = gen_major(wp[a]) + gen_major(wq[b]);
          for (const auto& t : terms)
            add_to(out, sorted_insert(rest, make_gen(depth, static_cast<unsigned>(t.label))),
                   c * t.coeff * mult_a * mult_b);
        }
      }
    }
  }));
}

SymPoly d_t(const SymPoly& p) {
  SymPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && w[i] == w[i - 1]) continue;
      const long mult = std::count(w.begin(), w.end(), w[i]);
      const unsigned m = gen_major(w[i]);
      if (m == 0) throw std::invalid_argument("d_t is defined on loop generators only");
      Word rest = w;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out.add_term(sorted_insert(std::move(rest), make_gen(m + 1, gen_label(w[i]))),
                   c * Rational(-static_cast<long>(m) * mult));
    }
  }
  return out;
}

SymPoly d_t_power(const SymPoly& p, int n) {
  SymPoly out = p;
  for (int i = 0; i < n; ++i) out = d_t(out);
  return out;
}

SymPoly casimir_invariant(const LieAlgebraSpec& spec) {
  SymPoly out;
  for (const auto& [x, dual] : dual_basis(spec))
    for (const auto& [a, ca] : x.coeffs())
      for (const auto& [b, cb] : dual.coeffs()) {
        Word w{make_gen(0, static_cast<unsigned>(a)), make_gen(0, static_cast<unsigned>(b))};
        std::sort(w.begin(), w.end());
        out.add_term(std::move(w), ca * cb);
      }
  return out;
}

namespace {

// Entry (i, j) of X = sum_a x_a M(x^a) as a linear polynomial on g.
std::vector<std::vector<LieElement>> generic_matrix(const LieAlgebraSpec& spec) {
  const int r = spec.rank();
  std::vector<std::vector<LieElement>> x(r, std::vector<LieElement>(r));
  for (const auto& [basis, dual] : dual_basis(spec)) {
    const int a = basis.coeffs().begin()->first;
    RatMatrix m = spec.to_matrix(dual);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (m(i, j) != 0) x[i][j].add(a, m(i, j));
  }
  return x;
}

}  // namespace

std::vector<SymPoly> charpoly_invariants(const LieAlgebraSpec& spec) {
  const int r = spec.rank();
  auto x = generic_matrix(spec);
  // Coefficients in u of det(u - X): coeffs[p] multiplies u^p.
  std::vector<SymPoly> coeffs(r + 1);
  for (const auto& [perm, sign] : signed_permutations(r)) {
    std::vector<SymPoly> prod(r + 1);
    prod[0] = SymPoly::constant(sign);
    for (int i = 0; i < r; ++i) {
      // Entry (i, perm[i]) of u - X.
      std::vector<SymPoly> next(r + 1);
      SymPoly minus_x;
      for (const auto& [a, c] : x[i][perm[i]].coeffs()) minus_x.add_term(Word{make_gen(0, a)}, -c);
      for (int p = 0; p <= r; ++p) {
        if (prod[p].is_zero()) continue;
        next[p] += sym_multiply(prod[p], minus_x, Exec::serial);
        if (perm[i] == i && p + 1 <= r) next[p + 1] += prod[p];
      }
      prod = std::move(next);
    }
    for (int p = 0; p <= r; ++p) coeffs[p] += prod[p];
  }
  std::vector<SymPoly> out;
  for (int k = 1; k <= r; ++k) out.push_back(coeffs[r - k]);
  return out;
}

std::vector<SymPoly> embed_iz(const SymPoly& phi, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("z cutoff must be >= 1");
  std::vector<SymPoly> out(cutoff);
  for (const auto& [w, c] : phi.terms()) {
    for (Gen g : w)
      if (gen_major(g) != 0) throw std::invalid_argument("embed_iz expects a polynomial on g");
    const std::size_t d = w.size();
    // Distribute the z-exponent N over the d factors: factor i gets depth k_i,
    // sum (k_i - 1) = N.
    std::vector<int> depth(d, 1);
    auto emit = [&](int total, auto&& self, std::size_t pos, int remaining) -> void {
      if (pos == d) {
        if (remaining != 0) return;
        Word mon;
        mon.reserve(d);
        for (std::size_t i = 0; i < d; ++i) mon.push_back(make_gen(depth[i], gen_label(w[i])));
        std::sort(mon.begin(), mon.end());
        out[total].add_term(std::move(mon), c);
        return;
      }
      for (int extra = 0; extra <= remaining; ++extra) {
        depth[pos] = 1 + extra;
        self(total, self, pos + 1, remaining - extra);
      }
    };
    for (int n = 0; n < cutoff; ++n) {
      if (d == 0) {
        if (n == 0) out[0].add_term(Word{}, c);
        continue;
      }
      emit(n, emit, 0, n);
    }
  }
  return out;
}

SymPoly embed_minus_one(const SymPoly& phi) { return embed_iz(phi, 1).front(); }

std::map<std::pair<int, int>, SymPoly> classical_generators(const LieAlgebraSpec& spec, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("z cutoff must be >= 1");
  const int r = spec.rank();
  auto x = generic_matrix(spec);
  // Series coefficients of -Lambda(z)_{ij}: z^(n-1) carries -x_{ij}[-n].
  auto series_entry = [&](int i, int j) {
    std::vector<SymPoly> s(cutoff);
    for (int n = 1; n <= cutoff; ++n)
      for (const auto& [a, c] : x[i][j].coeffs()) s[n - 1].add_term(Word{make_gen(n, a)}, -c);
    return s;
  };
  // det(u - Lambda(z)) as (u-power, z-power) -> coefficient.
  std::map<std::pair<int, int>, SymPoly> det;
  for (const auto& [perm, sign] : signed_permutations(r)) {
    std::map<std::pair<int, int>, SymPoly> prod;
    prod[{0, 0}] = SymPoly::constant(sign);
    for (int i = 0; i < r; ++i) {
      auto entry = series_entry(i, perm[i]);
      std::map<std::pair<int, int>, SymPoly> next;
      for (const auto& [key, coeff] : prod) {
        const auto [up, zp] = key;
        for (int n = 0; zp + n < cutoff; ++n)
          if (!entry[n].is_zero()) next[{up, zp + n}] += sym_multiply(coeff, entry[n], Exec::serial);
        if (perm[i] == i) next[{up + 1, zp}] += coeff;
      }
      prod = std::move(next);
    }
    for (auto& [key, coeff] : prod) det[key] += coeff;
  }
  std::map<std::pair<int, int>, SymPoly> out;
  for (int k = 1; k <= r; ++k)
    for (int n = 1; n <= cutoff; ++n) {
      auto it = det.find({r - k, n - 1});
      if (it != det.end() && !it->second.is_zero()) out[{k, n}] = it->second;
    }
  return out;
}

std::vector<SymPoly> apply_phi_s(const LieAlgebraSpec& spec, const SymPoly& p, const PrincipalTriple& triple) {
  std::vector<SymPoly> out;
  for (const auto& [w, c] : p.terms()) {
    // Coefficients in s of the product of shifted factors.
    std::vector<TermMap> acc(1);
    acc[0][Word{}] = c;
    for (Gen g : w) {
      const int a = static_cast<int>(gen_label(g));
      spec.check_label(a);
      const Rational shift = gen_major(g) == 1 ? triple.pairing_h[a] : Rational(0);
      std::vector<TermMap> next(acc.size() + (shift != 0 ? 1 : 0));
      for (std::size_t j = 0; j < acc.size(); ++j)
        for (const auto& [mw, mc] : acc[j]) {
          Word grown = mw;
          grown.push_back(g);
          add_to(next[j], std::move(grown), mc);
          if (shift != 0) add_to(next[j + 1], mw, mc * shift);
        }
      acc = std::move(next);
    }
    if (out.size() < acc.size()) out.resize(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j)
      for (auto& [mw, mc] : acc[j]) out[j].add_term(mw, mc);  // words stay sorted: factors appended in order
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

SymPoly project_pi_generator(const LieAlgebraSpec& spec, int label, int depth, const PrincipalTriple& triple) {
  spec.check_label(label);
  const std::size_t nz = triple.zf_basis.size();
  const RationalVector& coords = triple.coords.at(label);
  SymPoly out;
  for (std::size_t j = 0; j < nz; ++j)
    if (coords[j] != 0) out.add_term(Word{make_gen(depth, static_cast<unsigned>(j))}, coords[j]);
  if (depth == 1) {
    Rational constant = 0;
    for (std::size_t v = 0; v < triple.v_basis.size(); ++v)
      if (coords[nz + v] != 0) constant += coords[nz + v] * form(spec, triple.v_basis[v], triple.f);
    out.add_term(Word{}, constant);
  }
  return out;
}

SymPoly project_pi(const LieAlgebraSpec& spec, const SymPoly& p, const PrincipalTriple& triple) {
  SymPoly out;
  for (const auto& [w, c] : p.terms()) {
    SymPoly term = SymPoly::constant(c);
    for (Gen g : w) {
      term = sym_multiply(term, project_pi_generator(spec, static_cast<int>(gen_label(g)),
                                                     static_cast<int>(gen_major(g)), triple),
                          Exec::serial);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SymPoly project_psi(const LieAlgebraSpec& spec, const SymPoly& p) {
  SymPoly out;
  for (const auto& [w, c] : p.terms()) {
    bool keep = std::all_of(w.begin(), w.end(), [&](Gen g) { return spec.is_cartan(static_cast<int>(gen_label(g))); });
    if (keep) out.add_term(w, c);
  }
  return out;
}

std::vector<Word> graded_basis(const std::vector<int>& labels, int degree, int weight) {
  std::vector<Word> out;
  if (degree < 0 || weight < degree) return out;
  std::vector<Gen> gens;  // all generators that can appear, sorted
  for (int m = 1; m <= weight - degree + 1; ++m)
    for (int a : labels) gens.push_back(make_gen(m, a));
  std::sort(gens.begin(), gens.end());
  Word current;
  auto rec = [&](auto&& self, std::size_t start, int left, int wleft) -> void {
    if (left == 0) {
      if (wleft == 0) out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      const int m = static_cast<int>(gen_major(gens[i]));
      // Remaining factors have depth >= m.
      if (m * left > wleft) break;
      current.push_back(gens[i]);
      self(self, i, left - 1, wleft - m);
      current.pop_back();
    }
  };
  rec(rec, 0, degree, weight);
  return out;
}

std::vector<int> all_labels(const LieAlgebraSpec& spec) {
  std::vector<int> v(spec.dim());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> cartan_labels(const LieAlgebraSpec& spec) {
  std::vector<int> v;
  for (int a = 0; a < spec.dim(); ++a)
    if (spec.is_cartan(a)) v.push_back(a);
  return v;
}

std::vector<Word> graded_basis(const LieAlgebraSpec& spec, int degree, int weight) {
  return graded_basis(all_labels(spec), degree, weight);
}

std::vector<int> word_cartan_weight(const LieAlgebraSpec& spec, const Word& w) {
  std::vector<int> total(spec.rank(), 0);
  for (Gen g : w) {
    const auto& wt = spec.cartan_weight(static_cast<int>(gen_label(g)));
    for (int i = 0; i < spec.rank(); ++i) total[i] += wt[i];
  }
  return total;
}

}  // namespace loopalg
