#include <doctest.h>

#include <random>

#include "loopalg/gaudin.hpp"
#include "loopalg/talalaev.hpp"
#include "support.hpp"

using namespace loopalg;
using testing::q;
using testing::ugen;

namespace {

TensorPoly site(const LieAlgebraSpec& s, const char* tok, int i) { return site_generator(s, testing::label(s, tok), i); }

// Swap operator on C^r (x) C^r.
RatMatrix swap_matrix(std::size_t r) {
  RatMatrix p(r * r, r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) p(b * r + a, a * r + b) = 1;
  return p;
}

}  // namespace

TEST_CASE("site configuration") {
  CHECK_THROWS_AS(SiteConfig({q(1), q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(SiteConfig({q(0), q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(SiteConfig({}), std::invalid_argument);
  auto gl2 = parse_algebra("gl2");
  CHECK_THROWS_AS(quadratic_hamiltonian(gl2, SiteConfig({q(1)}), 1), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_hamiltonian(gl2, SiteConfig({q(1), q(2)}), 3), std::invalid_argument);
}

TEST_CASE("evaluation") {
  auto gl2 = parse_algebra("gl2");
  const SiteConfig cfg({q(1), q(2)});
  CHECK(evaluate(gl2, ugen(gl2, "E[1,2]", 1), cfg) == site(gl2, "E[1,2]", 1) + q(1, 2) * site(gl2, "E[1,2]", 2));
  // homomorphism on random pairs
  std::mt19937_64 rng(testing::seed());
  for (int t = 0; t < 10; ++t) {
    PBWPoly u, v;
    for (int k = 0; k < 2; ++k) {
      u += normal_form(gl2, Word{loop_gen(gl2, static_cast<int>(rng() % 4), static_cast<int>(rng() % 2) + 1),
                                 loop_gen(gl2, static_cast<int>(rng() % 4), 1)});
      v += pbw_generator(gl2, static_cast<int>(rng() % 4), static_cast<int>(rng() % 3) + 1);
    }
    CHECK(evaluate(gl2, commutator(gl2, u, v), cfg) == tensor_commutator(gl2, evaluate(gl2, u, cfg), evaluate(gl2, v, cfg)));
    CHECK(evaluate(gl2, normal_product(gl2, u, v), cfg) == tensor_product(gl2, evaluate(gl2, u, cfg), evaluate(gl2, v, cfg)));
  }
  const auto qf = compute_Q(gl2, 2, Exec::serial);
  CHECK(tensor_commutator(gl2, evaluate(gl2, qf.at(2, 2), cfg), evaluate(gl2, qf.at(1, 2), cfg)).is_zero());
}

TEST_CASE("quadratic Hamiltonians") {
  auto gl2 = parse_algebra("gl2");
  const SiteConfig two({q(1), q(2)});
  TensorPoly expect;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const int a = gl2.find_label(BasisLabel{i, j, false}), b = gl2.find_label(BasisLabel{j, i, false});
      expect -= tensor_product(gl2, site_generator(gl2, a, 1), site_generator(gl2, b, 2));
    }
  const TensorPoly h1 = quadratic_hamiltonian(gl2, two, 1);
  CHECK(h1 == expect);
  CHECK(quadratic_hamiltonian(gl2, two, 2) == q(-1) * h1);

  for (const char* name : {"gl2", "sl2", "gl3"}) {
    auto spec = parse_algebra(name);
    const SiteConfig three({q(1), q(2), q(4)});
    std::vector<TensorPoly> h;
    TensorPoly sum;
    for (int i = 1; i <= 3; ++i) {
      h.push_back(quadratic_hamiltonian(spec, three, i));
      sum += h.back();
    }
    CHECK(sum.is_zero());
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) CHECK(tensor_commutator(spec, h[i], h[j]).is_zero());
      for (int a = 0; a < spec.dim(); ++a)
        CHECK(tensor_commutator(spec, h[i], diagonal_element(spec, LieElement::basis(a), 3)).is_zero());
    }
  }
}

TEST_CASE("representation matrices") {
  auto gl2 = parse_algebra("gl2");
  const RatMatrix e12 = rep_matrix(gl2, site(gl2, "E[1,2]", 1), 1);
  RatMatrix unit(2, 2);
  unit(0, 1) = 1;
  CHECK(e12 == unit);
  TensorPoly cas;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const int a = gl2.find_label(BasisLabel{i, j, false}), b = gl2.find_label(BasisLabel{j, i, false});
      cas += tensor_product(gl2, site_generator(gl2, a, 1), site_generator(gl2, b, 1));
    }
  CHECK(rep_matrix(gl2, cas, 1) == RatMatrix::identity(2) * Rational(2));
  CHECK_THROWS_AS(rep_matrix(gl2, cas, 13), std::length_error);

  std::mt19937_64 rng(testing::seed() + 2);
  for (int t = 0; t < 10; ++t) {
    TensorPoly a, b;
    for (int k = 0; k < 3; ++k) {
      a += q(static_cast<long>(rng() % 5) - 2) * site_generator(gl2, static_cast<int>(rng() % 4), static_cast<int>(rng() % 2) + 1);
      b += tensor_product(gl2, site_generator(gl2, static_cast<int>(rng() % 4), 1),
                          site_generator(gl2, static_cast<int>(rng() % 4), static_cast<int>(rng() % 2) + 1));
    }
    CHECK(rep_matrix(gl2, tensor_product(gl2, a, b), 2) == rep_matrix(gl2, a, 2) * rep_matrix(gl2, b, 2));
  }
}

TEST_CASE("spectra") {
  const auto s = spectrum(RatMatrix::identity(4) * Rational(2));
  REQUIRE(s.rational.size() == 1);
  CHECK(s.rational[0].value == 2);
  CHECK(s.rational[0].multiplicity == 4);
  CHECK(s.diagonalizable);

  RatMatrix jordan(2, 2);
  jordan(0, 0) = jordan(1, 1) = jordan(0, 1) = 1;
  CHECK_FALSE(spectrum(jordan).diagonalizable);

  // gl2, two sites: H_1 = -P; sl2: H_1 = -(P - Id/2)
  const SiteConfig two({q(1), q(2)});
  auto gl2 = parse_algebra("gl2");
  const RatMatrix hg = rep_matrix(gl2, quadratic_hamiltonian(gl2, two, 1), 2);
  CHECK(hg == swap_matrix(2) * Rational(-1));
  const auto sg = spectrum(hg);
  REQUIRE(sg.rational.size() == 2);
  CHECK(sg.rational[0].value == -1);
  CHECK(sg.rational[0].multiplicity == 3);
  CHECK(sg.rational[1].value == 1);
  CHECK(sg.rational[1].multiplicity == 1);

  auto sl2 = parse_algebra("sl2");
  const RatMatrix hs = rep_matrix(sl2, quadratic_hamiltonian(sl2, two, 1), 2);
  CHECK(hs == (swap_matrix(2) - RatMatrix::identity(4) * q(1, 2)) * Rational(-1));
  const auto ss = spectrum(hs);
  REQUIRE(ss.rational.size() == 2);
  CHECK(ss.rational[0].value == q(-1, 2));
  CHECK(ss.rational[0].multiplicity == 3);
  CHECK(ss.rational[1].value == q(3, 2));
  CHECK(ss.rational[1].multiplicity == 1);

  // Irrational roots are reported approximately.
  RatMatrix m(2, 2);
  m(0, 1) = 2;
  m(1, 0) = 1;
  const auto sr = spectrum(m);
  CHECK(sr.rational.empty());
  REQUIRE(sr.approximate.size() == 2);
  CHECK(sr.approximate[1].real == doctest::Approx(1.41421356237));
}

TEST_CASE("joint diagonalization") {
  auto gl2 = parse_algebra("gl2");
  const SiteConfig three({q(1), q(2), q(4)});
  std::vector<RatMatrix> mats;
  for (int i = 1; i <= 3; ++i) mats.push_back(rep_matrix(gl2, quadratic_hamiltonian(gl2, three, i), 3));
  const auto j = joint_diagonalization(mats);
  CHECK(j.commuting);
  CHECK(j.each_diagonalizable);
  CHECK(j.jointly_diagonalizable);

  // Rational case with exact joint eigenspaces.
  const SiteConfig two({q(1), q(2)});
  std::vector<RatMatrix> pair{rep_matrix(gl2, quadratic_hamiltonian(gl2, two, 1), 2),
                              rep_matrix(gl2, quadratic_hamiltonian(gl2, two, 2), 2)};
  const auto jp = joint_diagonalization(pair);
  REQUIRE(jp.eigenspaces);
  std::size_t total = 0;
  for (const auto& e : *jp.eigenspaces) total += e.dimension;
  CHECK(total == 4);
  CHECK(jp.eigenspaces->size() == 2);

  RatMatrix a(2, 2), b(2, 2);
  a(0, 1) = 1;
  b(1, 0) = 1;
  CHECK_FALSE(joint_diagonalization({a, b}).commuting);
}
