#include "loopalg/centralizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "loopalg/linalg.hpp"

namespace loopalg {

namespace {

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

using RowIndex = std::map<Word, std::size_t, WordOrder>;

template <class P>
void index_rows(const P& p, RowIndex& rows) {
  for (const auto& [w, c] : p.terms()) rows.emplace(w, 0);
}

void number_rows(RowIndex& rows) {
  std::size_t i = 0;
  for (auto& [w, idx] : rows) idx = i++;
}

template <class P>
P combine(const std::vector<Word>& cols, const RationalVector& v) {
  P p;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (v[j] != 0) p.add_term(cols[j], v[j]);
  return p;
}

// Kernel of the linear map cols[j] -> images[j] (all images in one block).
template <class P>
std::vector<P> block_kernel(const std::vector<Word>& cols, const std::vector<P>& images) {
  RowIndex rows;
  for (const auto& im : images) index_rows(im, rows);
  number_rows(rows);
  SparseRationalMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [w, c] : images[j].terms()) m.add(rows.at(w), j, c);
  std::vector<P> out;
  for (const auto& v : rational_kernel(m)) out.push_back(combine<P>(cols, v));
  return out;
}

bool weight_zero(const LieAlgebraSpec& spec, const TermMap& terms) {
  for (const auto& [w, c] : terms)
    for (int x : word_cartan_weight(spec, w))
      if (x != 0) return false;
  return true;
}

// Splits column indices by the Cartan weight of the word.
std::vector<std::vector<std::size_t>> cartan_blocks(const LieAlgebraSpec& spec, const std::vector<Word>& cols,
                                                    bool split) {
  if (!split) {
    std::vector<std::size_t> all(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) all[i] = i;
    return {all};
  }
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cols.size(); ++i) groups[word_cartan_weight(spec, cols[i])].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  return out;
}

template <class P, class Image>
std::vector<P> blocked_kernel(const LieAlgebraSpec& spec, const std::vector<Word>& cols, bool split, Exec exec,
                              Image&& image) {
  std::vector<P> images(cols.size());
  for_each_index(cols.size(), exec, [&](std::size_t i) { images[i] = image(cols[i]); });
  const auto blocks = cartan_blocks(spec, cols, split);
  std::vector<std::vector<P>> kernels(blocks.size());
  for_each_index(blocks.size(), exec, [&](std::size_t b) {
    std::vector<Word> bc;
    std::vector<P> bi;
    for (std::size_t i : blocks[b]) {
      bc.push_back(cols[i]);
      bi.push_back(images[i]);
    }
    kernels[b] = block_kernel(bc, bi);
  });
  std::vector<P> out;
  for (auto& k : kernels)
    for (auto& p : k) out.push_back(std::move(p));
  return out;
}

struct Graded {
  SymPoly poly;
  int degree;
  int weight;
};

Graded graded(const SymPoly& g) {
  auto d = g.homogeneous_degree();
  auto w = g.homogeneous_weight();
  if (!d || !w) throw std::invalid_argument("generator must be homogeneous in degree and weight");
  return {g, static_cast<int>(*d), static_cast<int>(*w)};
}

// Calls visit(multiset) for every multiset of generator indices with total
// weight `weight` and, unless degree < 0, total degree `degree`.
template <class Visit>
void for_each_product(const std::vector<Graded>& gens, int degree, int weight, Visit&& visit) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from, int d_left, int w_left) -> void {
    if (w_left == 0 && (degree < 0 || d_left == 0)) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (gens[i].weight > w_left) continue;
      if (degree >= 0 && gens[i].degree > d_left) continue;
      if (gens[i].weight == 0) throw std::invalid_argument("generators must have positive weight");
      chosen.push_back(i);
      self(self, i, d_left - gens[i].degree, w_left - gens[i].weight);
      chosen.pop_back();
    }
  };
  rec(rec, 0, degree, weight);
}

SymPoly product_of(const std::vector<Graded>& gens, const std::vector<std::size_t>& chosen) {
  SymPoly p = SymPoly::constant(1);
  for (std::size_t i : chosen) p = sym_multiply(p, gens[i].poly, Exec::serial);
  return p;
}

// Independent subset of polys (greedy by rank over their joint monomials).
template <class P>
std::vector<P> independent_subset(const std::vector<P>& polys, std::size_t* rank_out) {
  RowIndex rows;
  for (const auto& p : polys) index_rows(p, rows);
  number_rows(rows);
  // Columns are the polynomials; pivot columns give an independent subset.
  SparseRationalMatrix m(rows.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [w, c] : polys[j].terms()) m.add(rows.at(w), j, c);
  const auto res = eliminate(m);
  if (rank_out) *rank_out = res.rank;
  std::vector<P> out;
  for (std::size_t j : res.pivot_columns) out.push_back(polys[j]);
  return out;
}

template <class P>
std::size_t span_rank(const std::vector<P>& polys) {
  std::size_t r = 0;
  independent_subset(polys, &r);
  return r;
}

void require_sl(const LieAlgebraSpec& spec, const char* what) {
  if (spec.kind() != AlgebraKind::sl) throw std::invalid_argument(std::string(what) + " needs an sl_r algebra");
}

}  // namespace

SymPoly s1_bar(const LieAlgebraSpec& spec) { return embed_minus_one(casimir_invariant(spec)); }

PBWPoly s1_quantum(const LieAlgebraSpec& spec) {
  PBWPoly s;
  for (const auto& [x, dual] : dual_basis(spec))
    s += normal_product(spec, pbw_element(spec, x, 1), pbw_element(spec, dual, 1), Exec::serial);
  return s;
}

std::vector<SymPoly> subalgebra_generators(const LieAlgebraSpec& spec, int max_weight) {
  std::vector<SymPoly> out;
  if (max_weight < 1) return out;
  for (const auto& [kn, p] : classical_generators(spec, max_weight))
    if (kn.first + kn.second - 1 <= max_weight) out.push_back(p);
  return out;
}

SpanReport subalgebra_dim(const std::vector<SymPoly>& generators, ComponentIndex idx) {
  SpanReport report;
  if (idx.degree == 0 && idx.weight == 0) {
    report.dimension = 1;
    report.basis.push_back(SymPoly::constant(1));
    return report;
  }
  if (idx.degree <= 0 || idx.weight <= 0) return report;
  std::vector<Graded> gens;
  for (const auto& g : generators) gens.push_back(graded(g));
  std::vector<SymPoly> products;
  for_each_product(gens, idx.degree, idx.weight,
                   [&](const std::vector<std::size_t>& chosen) { products.push_back(product_of(gens, chosen)); });
  report.basis = independent_subset(products, &report.dimension);
  return report;
}

ComponentReport ad_kernel_classical(const LieAlgebraSpec& spec, const SymPoly& b, ComponentIndex idx,
                                    std::size_t expected_dim, Exec exec) {
  ComponentReport report;
  report.index = idx;
  report.expected_dim = expected_dim;
  const auto cols = graded_basis(spec, idx.degree, idx.weight);
  report.columns = cols.size();
  report.classical_kernel = blocked_kernel<SymPoly>(spec, cols, weight_zero(spec, b.terms()), exec, [&](const Word& w) {
    return poisson_bracket(spec, b, SymPoly::monomial(w), Exec::serial);
  });
  report.kernel_dim = report.classical_kernel.size();
  report.verdict = report.kernel_dim == expected_dim;
  return report;
}

ComponentReport ad_kernel_quantum(const LieAlgebraSpec& spec, const PBWPoly& b, ComponentIndex idx,
                                  std::size_t expected_dim, Exec exec) {
  ComponentReport report;
  report.index = idx;
  report.expected_dim = expected_dim;
  const auto cols = filtered_basis(spec, 1, idx.degree, idx.weight);
  report.columns = cols.size();
  report.quantum_kernel = blocked_kernel<PBWPoly>(spec, cols, weight_zero(spec, b.terms()), exec, [&](const Word& w) {
    return commutator(spec, b, PBWPoly::monomial(w), Exec::serial);
  });
  report.kernel_dim = report.quantum_kernel.size();
  report.verdict = report.kernel_dim == expected_dim;
  return report;
}

SymPoly sym_adjoint_action(const LieAlgebraSpec& spec, const LieElement& x, const SymPoly& p) {
  SymPoly out;
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 0; i < w.size(); ++i) {
      const unsigned m = gen_major(w[i]);
      const int b = static_cast<int>(gen_label(w[i]));
      for (const auto& [a, xc] : x.coeffs())
        for (const auto& t : spec.bracket_basis(a, b)) {
          Word v = w;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          const Gen g = make_gen(m, static_cast<unsigned>(t.label));
          v.insert(std::upper_bound(v.begin(), v.end(), g), g);
          out.add_term(v, c * xc * t.coeff);
        }
    }
  return out;
}

namespace {

// Joint kernel of u -> x_a . u over all basis elements a.
template <class P, class Act>
std::vector<P> joint_kernel(const LieAlgebraSpec& spec, const std::vector<Word>& cols, Exec exec, Act&& act) {
  const int dim = spec.dim();
  std::vector<std::vector<P>> images(cols.size());
  for_each_index(cols.size(), exec, [&](std::size_t j) {
    for (int a = 0; a < dim; ++a) images[j].push_back(act(LieElement::basis(a), P::monomial(cols[j])));
  });
  SparseRationalMatrix m(0, cols.size());
  for (int a = 0; a < dim; ++a) {
    RowIndex rows;
    for (const auto& im : images) index_rows(im[a], rows);
    number_rows(rows);
    SparseRationalMatrix block(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [w, c] : images[j][a].terms()) block.add(rows.at(w), j, c);
    m.append_rows(block);
  }
  std::vector<P> out;
  for (const auto& v : rational_kernel(m)) out.push_back(combine<P>(cols, v));
  return out;
}

}  // namespace

std::size_t classical_invariant_dim(const LieAlgebraSpec& spec, ComponentIndex idx, Exec exec) {
  const auto cols = graded_basis(spec, idx.degree, idx.weight);
  if (cols.empty()) return 0;
  return joint_kernel<SymPoly>(spec, cols, exec, [&](const LieElement& x, const SymPoly& p) {
           return sym_adjoint_action(spec, x, p);
         }).size();
}

InvariantReport invariant_subspace(const LieAlgebraSpec& spec, ComponentIndex idx, Exec exec) {
  InvariantReport report;
  report.index = idx;
  const auto cols = filtered_basis(spec, 1, idx.degree, idx.weight);
  if (!cols.empty())
    report.basis = joint_kernel<PBWPoly>(spec, cols, exec, [&](const LieElement& x, const PBWPoly& u) {
      return adjoint_action(spec, x, u);
    });
  report.dimension = report.basis.size();
  for (int d = 1; d <= idx.degree; ++d) report.expected_dim += classical_invariant_dim(spec, {d, idx.weight}, exec);
  report.verdict = report.dimension == report.expected_dim;
  return report;
}

std::string to_string(CentralizerTarget t) {
  switch (t) {
    case CentralizerTarget::s1bar: return "s1bar";
    case CentralizerTarget::h1: return "h1";
    case CentralizerTarget::s1_quantum: return "S1quantum";
    case CentralizerTarget::invariants: return "invariants";
  }
  return "?";
}

CentralizerTarget parse_target(const std::string& name) {
  for (auto t : {CentralizerTarget::s1bar, CentralizerTarget::h1, CentralizerTarget::s1_quantum,
                 CentralizerTarget::invariants})
    if (to_string(t) == name) return t;
  throw std::invalid_argument("unknown centralizer target: " + name);
}

CentralizerRun run_centralizer(const LieAlgebraSpec& spec, CentralizerTarget target, int max_degree, int max_weight,
                               Exec exec) {
  if (max_degree < 1 || max_weight < 1) throw std::invalid_argument("component ranges must be positive");
  CentralizerRun run;
  run.target = target;
  if (target == CentralizerTarget::invariants) {
    for (int d = 1; d <= max_degree; ++d)
      for (int w = 1; w <= max_weight; ++w) {
        run.invariant_rows.push_back(invariant_subspace(spec, {d, w}, exec));
        run.pass = run.pass && run.invariant_rows.back().verdict;
      }
    return run;
  }
  require_sl(spec, "centralizer target");
  const auto gens = subalgebra_generators(spec, max_weight);
  auto a_dim = [&](int d, int w) { return subalgebra_dim(gens, {d, w}); };

  if (target == CentralizerTarget::s1_quantum) {
    const PBWPoly s1 = s1_quantum(spec);
    for (int d = 1; d <= max_degree; ++d)
      for (int w = 1; w <= max_weight; ++w) {
        std::size_t expected = 0;
        for (int dd = 1; dd <= d; ++dd) expected += a_dim(dd, w).dimension;
        run.rows.push_back(ad_kernel_quantum(spec, s1, {d, w}, expected, exec));
        run.pass = run.pass && run.rows.back().pass();
      }
    return run;
  }

  const auto triple = principal_triple(spec);
  const SymPoly b = target == CentralizerTarget::s1bar ? s1_bar(spec) : sym_element(spec, triple.h, 1);
  const auto cartan = cartan_labels(spec);
  for (int d = 1; d <= max_degree; ++d)
    for (int w = d; w <= max_weight; ++w) {
      if (target == CentralizerTarget::h1) {
        run.rows.push_back(ad_kernel_classical(spec, b, {d, w}, graded_basis(cartan, d, w).size(), exec));
      } else {
        const auto span = a_dim(d, w);
        auto row = ad_kernel_classical(spec, b, {d, w}, span.dimension, exec);
        const auto& k = row.classical_kernel;
        bool commutes = true;
        for (std::size_t i = 0; i < k.size() && commutes; ++i)
          for (std::size_t j = i + 1; j < k.size() && commutes; ++j)
            commutes = poisson_bracket(spec, k[i], k[j], exec).is_zero();
        row.kernel_commutes = commutes;
        std::vector<SymPoly> joint = span.basis;
        joint.insert(joint.end(), k.begin(), k.end());
        row.kernel_in_subalgebra = span_rank(joint) == span.dimension;
        run.rows.push_back(std::move(row));
      }
      run.pass = run.pass && run.rows.back().pass();
    }
  return run;
}

int twisted_grade(const Word& zf_word) {
  int g = 0;
  for (Gen x : zf_word) g += static_cast<int>(gen_major(x) + gen_label(x) + 1);
  return g;
}

Rational evaluate_on_pairing(const SymPoly& phi, const std::vector<Rational>& pairing) {
  Rational total = 0;
  for (const auto& [w, c] : phi.terms()) {
    Rational t = c;
    for (Gen g : w) t *= pairing.at(gen_label(g));
    total += t;
  }
  return total;
}

namespace {

// Monomials of S(z_g(f)-) with the given twisted grade, any degree >= 1.
std::vector<Word> zf_grade_basis(int zf_count, int grade) {
  std::vector<int> labels(static_cast<std::size_t>(zf_count));
  for (int i = 0; i < zf_count; ++i) labels[static_cast<std::size_t>(i)] = i;
  std::vector<Word> out;
  for (int d = 1; d <= grade; ++d)
    for (int w = d; w <= grade; ++w)
      for (auto& word : graded_basis(labels, d, w))
        if (twisted_grade(word) == grade) out.push_back(std::move(word));
  return out;
}

}  // namespace

Section3Report verify_section3(const LieAlgebraSpec& spec, int max_degree, int max_weight, int dt_depth, int z_order,
                               Exec exec) {
  require_sl(spec, "verify_section3");
  Section3Report rep;
  const auto triple = principal_triple(spec);
  const SymPoly s1 = s1_bar(spec);
  rep.h_norm = form(spec, triple.h, triple.h);

  // (a)
  const auto phi = apply_phi_s(spec, s1, triple);
  const std::vector<SymPoly> expected{s1, Rational(2) * sym_element(spec, triple.h, 1), SymPoly::constant(rep.h_norm)};
  rep.phi_s_identity = phi == expected;
  const Rational phi1_h = evaluate_on_pairing(casimir_invariant(spec), triple.pairing_h);
  rep.phi1_at_h = phi.size() == 3 && phi[2] == SymPoly::constant(phi1_h) && phi1_h == rep.h_norm;

  // (b)
  const SymPoly f1 = SymPoly::monomial(Word{make_gen(1, 0)});
  rep.pi_s1bar = project_pi(spec, s1, triple) == Rational(2) * f1;
  rep.pi_dt_commute = true;
  for (int a = 0; a < spec.dim(); ++a)
    for (int m = 1; m <= dt_depth; ++m) {
      const SymPoly x = sym_generator(spec, a, m);
      const bool ok = project_pi(spec, d_t(x), triple) == d_t(project_pi_generator(spec, a, m, triple));
      rep.pi_dt_commute = rep.pi_dt_commute && ok;
      ++rep.pi_dt_checked;
    }

  // (c) pi is graded for the twisted grade; compare pi(A) with S(z_g(f)-)
  // grade by grade, then restrict to each (degree, depth) component.
  const int zf = static_cast<int>(triple.zf_basis.size());
  const int max_grade = max_weight + max_degree * zf;
  std::vector<Graded> gens;
  for (const auto& g : subalgebra_generators(spec, max_grade)) {
    Graded gr = graded(g);
    gr.poly = project_pi(spec, g, triple);
    gens.push_back(std::move(gr));
  }
  std::vector<std::vector<SymPoly>> images(static_cast<std::size_t>(max_grade) + 1);
  std::vector<std::size_t> ranks(images.size());
  rep.pi_grades.resize(static_cast<std::size_t>(max_grade));
  for_each_index(static_cast<std::size_t>(max_grade), exec, [&](std::size_t i) {
    const int grade = static_cast<int>(i) + 1;
    auto& row = rep.pi_grades[i];
    row.grade = grade;
    std::vector<SymPoly> products;
    for_each_product(gens, -1, grade,
                     [&](const std::vector<std::size_t>& chosen) { products.push_back(product_of(gens, chosen)); });
    row.products = products.size();
    images[static_cast<std::size_t>(grade)] = independent_subset(products, &row.image_rank);
    row.target_dim = zf_grade_basis(zf, grade).size();
    row.verdict = row.image_rank == row.target_dim && row.products == row.image_rank;
  });
  std::vector<int> zf_labels(static_cast<std::size_t>(zf));
  for (int i = 0; i < zf; ++i) zf_labels[static_cast<std::size_t>(i)] = i;
  for (int d = 1; d <= max_degree; ++d)
    for (int w = d; w <= max_weight; ++w) {
      PiSpanRow row;
      row.index = {d, w};
      const auto target = graded_basis(zf_labels, d, w);
      row.target_dim = target.size();
      std::map<int, std::size_t> per_grade;
      for (const auto& t : target) ++per_grade[twisted_grade(t)];
      for (const auto& [grade, count] : per_grade) {
        // dim(U meet C) = dim U - rank of U with the C-coordinates removed.
        const auto& basis = images[static_cast<std::size_t>(grade)];
        std::vector<SymPoly> outside;
        for (const auto& p : basis) {
          SymPoly q;
          for (const auto& [word, c] : p.terms())
            if (!(static_cast<int>(word.size()) == d && static_cast<int>(word_weight(word)) == w)) q.add_term(word, c);
          outside.push_back(std::move(q));
        }
        row.span_dim += basis.size() - span_rank(outside);
      }
      row.verdict = row.span_dim == row.target_dim;
      rep.pi_span.push_back(row);
    }

  // (d)
  const auto invariants = charpoly_invariants(spec);
  for (std::size_t k = 0; k < invariants.size(); ++k) {
    if (invariants[k].is_zero()) continue;
    const auto lhs = embed_iz(invariants[k], z_order + 1);
    const auto rhs = embed_iz(project_psi(spec, invariants[k]), z_order + 1);
    for (int n = 0; n <= z_order; ++n) {
      const auto i = static_cast<std::size_t>(n);
      rep.psi.push_back({static_cast<int>(k) + 1, n, project_psi(spec, lhs[i]) == rhs[i]});
    }
  }

  rep.pass = rep.phi_s_identity && rep.phi1_at_h && rep.pi_s1bar && rep.pi_dt_commute;
  for (const auto& r : rep.pi_grades) rep.pass = rep.pass && r.verdict;
  for (const auto& r : rep.pi_span) rep.pass = rep.pass && r.verdict;
  for (const auto& r : rep.psi) rep.pass = rep.pass && r.verdict;
  return rep;
}

}  // namespace loopalg
