#include <doctest.h>

#include <map>

#include "loopalg/centralizer.hpp"
#include "support.hpp"

using namespace loopalg;
using testing::q;
using testing::sgen;

namespace {

// Dense Gaussian rank over Q, independent of the sparse elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim of the kernel of {b, .} on S_{d,w}, by building the full matrix.
std::size_t brute_kernel(const LieAlgebraSpec& spec, const SymPoly& b, int d, int w) {
  const auto cols = graded_basis(spec, d, w);
  std::map<Word, std::size_t> rows;
  std::vector<SymPoly> images;
  for (const auto& c : cols) {
    images.push_back(poisson_bracket(spec, b, SymPoly::monomial(c), Exec::serial));
    for (const auto& [word, x] : images.back().terms()) rows.emplace(word, rows.size());
  }
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [word, x] : images[j].terms()) m[rows.at(word)][j] = x;
  return cols.size() - dense_rank(m);
}

bool proportional(const SymPoly& a, const SymPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [w, c] = *a.terms().begin();
  return b == (b.coeff(w) / c) * a;
}

bool proportional(const PBWPoly& a, const PBWPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [w, c] = *a.terms().begin();
  return b == (b.coeff(w) / c) * a;
}

}  // namespace

TEST_CASE("classical ad kernels") {
  auto sl2 = parse_algebra("sl2");
  const SymPoly s1 = s1_bar(sl2);
  const auto r13 = ad_kernel_classical(sl2, s1, {1, 3}, 0);
  CHECK(r13.columns == 3);
  CHECK(r13.kernel_dim == 0);
  CHECK(r13.verdict);
  const auto r22 = ad_kernel_classical(sl2, s1, {2, 2}, 1);
  CHECK(r22.columns == 6);
  REQUIRE(r22.kernel_dim == 1);
  CHECK(proportional(r22.classical_kernel[0], s1));

  const auto t = principal_triple(sl2);
  const SymPoly h1 = sym_element(sl2, t.h, 1);
  const auto rh = ad_kernel_classical(sl2, h1, {1, 2}, 1);
  REQUIRE(rh.kernel_dim == 1);
  CHECK(proportional(rh.classical_kernel[0], sgen(sl2, "H[1]", 2)));

  for (auto [d, w] : {std::pair{2, 4}, {3, 5}, {4, 6}}) {
    CHECK(ad_kernel_classical(sl2, s1, {d, w}, 0).kernel_dim == brute_kernel(sl2, s1, d, w));
    CHECK(ad_kernel_classical(sl2, h1, {d, w}, 0).kernel_dim == brute_kernel(sl2, h1, d, w));
  }
  auto sl3 = parse_algebra("sl3");
  CHECK(ad_kernel_classical(sl3, s1_bar(sl3), {2, 3}, 0).kernel_dim == brute_kernel(sl3, s1_bar(sl3), 2, 3));
}

TEST_CASE("subalgebra dimensions") {
  auto sl2 = parse_algebra("sl2");
  const auto gens = subalgebra_generators(sl2, 10);
  CHECK(subalgebra_dim(gens, {2, 3}).dimension == 1);
  for (int w = 3; w <= 9; ++w) CHECK(subalgebra_dim(gens, {3, w}).dimension == 0);
  const auto s44 = subalgebra_dim(gens, {4, 4});
  REQUIRE(s44.dimension == 1);
  const SymPoly s1 = s1_bar(sl2);
  CHECK(proportional(s44.basis[0], sym_multiply(s1, s1, Exec::serial)));
  CHECK(subalgebra_dim(gens, {0, 0}).dimension == 1);
  CHECK_THROWS_AS(subalgebra_dim({s1 + sgen(sl2, "H[1]", 1)}, {2, 2}), std::invalid_argument);
  // (2, 3) is the z^1 coefficient of S-bar_1(z)
  const auto s23 = subalgebra_dim(gens, {2, 3});
  CHECK(proportional(s23.basis[0], embed_iz(casimir_invariant(sl2), 2)[1]));
}

TEST_CASE("quantum ad kernels") {
  auto sl2 = parse_algebra("sl2");
  const PBWPoly s1 = s1_quantum(sl2);
  const auto r = ad_kernel_quantum(sl2, s1, {2, 2}, 1);
  CHECK(r.columns == 9);
  REQUIRE(r.kernel_dim == 1);
  CHECK(proportional(r.quantum_kernel[0], s1));
  // d_t S_1 lies in the (<= 2, 3) kernel
  const auto r23 = ad_kernel_quantum(sl2, s1, {2, 3}, 1);
  REQUIRE(r23.kernel_dim == 1);
  CHECK(proportional(r23.quantum_kernel[0], d_t_env(sl2, s1)));
}

TEST_CASE("invariant subspaces") {
  auto sl2 = parse_algebra("sl2");
  const auto inv = invariant_subspace(sl2, {2, 2});
  REQUIRE(inv.dimension == 1);
  CHECK(proportional(inv.basis[0], s1_quantum(sl2)));
  CHECK(inv.verdict);
  CHECK(invariant_subspace(sl2, {1, 1}).dimension == 0);

  auto gl2 = parse_algebra("gl2");
  const auto g = invariant_subspace(gl2, {1, 1});
  REQUIRE(g.dimension == 1);
  CHECK(proportional(g.basis[0], testing::ugen(gl2, "E[1,1]", 1) + testing::ugen(gl2, "E[2,2]", 1)));
}

TEST_CASE("centralizer runs") {
  auto sl2 = parse_algebra("sl2");
  const auto run = run_centralizer(sl2, CentralizerTarget::s1bar, 4, 8);
  CHECK(run.pass);
  for (const auto& row : run.rows) {
    CHECK(row.kernel_commutes.value_or(false));
    CHECK(row.kernel_in_subalgebra.value_or(false));
  }
  CHECK(run_centralizer(sl2, CentralizerTarget::h1, 3, 6).pass);
  CHECK_THROWS_AS(run_centralizer(parse_algebra("gl2"), CentralizerTarget::s1bar, 2, 2), std::invalid_argument);
  CHECK(parse_target("S1quantum") == CentralizerTarget::s1_quantum);
  CHECK_THROWS_AS(parse_target("nope"), std::invalid_argument);
}

TEST_CASE("gl2 analogue with the central family") {
  // Exploratory: the centralizer of S-bar_1 in gl2 also contains the trace
  // family; compare against the full determinant algebra (k = 1, 2).
  auto gl2 = parse_algebra("gl2");
  const SymPoly s1 = embed_minus_one(casimir_invariant(gl2));
  const auto gens = subalgebra_generators(gl2, 6);
  for (int d = 1; d <= 3; ++d)
    for (int w = d; w <= 5; ++w) {
      const auto span = subalgebra_dim(gens, {d, w});
      const auto r = ad_kernel_classical(gl2, s1, {d, w}, span.dimension);
      MESSAGE("gl2 (", d, ",", w, "): kernel ", r.kernel_dim, " vs algebra ", span.dimension);
      CHECK(r.kernel_dim >= span.dimension);
    }
}

TEST_CASE("section 3 identities") {
  for (const char* name : {"sl2", "sl3"}) {
    const auto rep = verify_section3(parse_algebra(name));
    CHECK(rep.phi_s_identity);
    CHECK(rep.phi1_at_h);
    CHECK(rep.pi_s1bar);
    CHECK(rep.pi_dt_commute);
    CHECK(rep.pass);
  }
  const auto rep = verify_section3(parse_algebra("sl2"));
  CHECK(rep.h_norm == 2);
  for (const auto& row : rep.pi_span)
    if (row.index.degree == 1 && row.index.weight <= 5) CHECK(row.span_dim == 1);
  CHECK_THROWS_AS(verify_section3(parse_algebra("gl2")), std::invalid_argument);
  // pi(d_t^n S-bar_1) = 2 (-1)^n n! f[-1-n]
  auto sl2 = parse_algebra("sl2");
  const auto t = principal_triple(sl2);
  Rational fact = 1;
  for (int n = 0; n <= 4; ++n) {
    if (n) fact *= n;
    const SymPoly expect = Rational(2) * Rational(n % 2 ? -1 : 1) * fact *
                           SymPoly::monomial(Word{make_gen(static_cast<unsigned>(1 + n), 0)});
    CHECK(project_pi(sl2, d_t_power(s1_bar(sl2), n), t) == expect);
  }
}

TEST_CASE("evaluation on the pairing") {
  auto sl2 = parse_algebra("sl2");
  const auto t = principal_triple(sl2);
  CHECK(evaluate_on_pairing(casimir_invariant(sl2), t.pairing_h) == 2);
  CHECK(twisted_grade(Word{make_gen(1, 0)}) == 2);
  CHECK(twisted_grade(Word{make_gen(3, 1)}) == 5);
}
