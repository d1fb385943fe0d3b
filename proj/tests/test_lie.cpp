#include <doctest.h>

#include "loopalg/lie.hpp"
#include "support.hpp"

using namespace loopalg;
using testing::label;
using testing::q;

namespace {

LieElement el(const LieAlgebraSpec& spec, const char* tok, const Rational& c = 1) {
  return LieElement::basis(label(spec, tok), c);
}

}  // namespace

TEST_CASE("basis and form of gl2 and sl2") {
  auto gl2 = parse_algebra("gl2");
  CHECK(gl2.dim() == 4);
  CHECK(bracket(gl2, el(gl2, "E[1,2]"), el(gl2, "E[2,1]")) == el(gl2, "E[1,1]") - el(gl2, "E[2,2]"));
  CHECK(form(gl2, el(gl2, "E[1,2]"), el(gl2, "E[2,1]")) == 1);
  CHECK(form(gl2, el(gl2, "E[1,1]"), el(gl2, "E[2,2]")) == 0);

  auto sl2 = parse_algebra("sl2");
  CHECK(sl2.dim() == 3);
  CHECK(label(sl2, "H[1]") >= 0);
  CHECK(form(sl2, el(sl2, "H[1]"), el(sl2, "H[1]")) == 2);
  CHECK(bracket(sl2, el(sl2, "H[1]"), el(sl2, "E[1,2]")) == el(sl2, "E[1,2]", 2));
}

TEST_CASE("invalid algebras") {
  CHECK_THROWS_AS(parse_algebra("sl1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("gl0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("so3"), std::invalid_argument);
  CHECK_THROWS_AS(principal_triple(parse_algebra("gl2")), std::invalid_argument);
  CHECK(parse_algebra("gl_3").rank() == 3);
}

TEST_CASE("gl3 matrix-unit rule") {
  auto gl3 = parse_algebra("gl3");
  CHECK(bracket(gl3, el(gl3, "E[1,2]"), el(gl3, "E[2,3]")) == el(gl3, "E[1,3]"));
}

TEST_CASE("structure constants agree with matrix commutators") {
  for (const char* name : {"gl1", "gl2", "gl3", "gl4", "sl2", "sl3", "sl4"}) {
    auto spec = parse_algebra(name);
    for (int a = 0; a < spec.dim(); ++a)
      for (int b = 0; b < spec.dim(); ++b) {
        const RatMatrix comm = spec.matrix(a) * spec.matrix(b) - spec.matrix(b) * spec.matrix(a);
        CHECK(spec.to_matrix(bracket(spec, LieElement::basis(a), LieElement::basis(b))) == comm);
        CHECK(spec.form(a, b) == (spec.matrix(a) * spec.matrix(b)).trace());
      }
  }
}

TEST_CASE("Jacobi, antisymmetry and invariance, exhaustive") {
  for (const char* name : {"gl2", "gl3", "gl4", "sl2", "sl3", "sl4"}) {
    auto spec = parse_algebra(name);
    const int n = spec.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto x = LieElement::basis(a), y = LieElement::basis(b);
        CHECK((bracket(spec, x, y) + bracket(spec, y, x)).is_zero());
        for (int c = 0; c < n; ++c) {
          const auto z = LieElement::basis(c);
          const auto jac = bracket(spec, x, bracket(spec, y, z)) + bracket(spec, y, bracket(spec, z, x)) +
                           bracket(spec, z, bracket(spec, x, y));
          CHECK(jac.is_zero());
          CHECK(form(spec, bracket(spec, x, y), z) + form(spec, y, bracket(spec, x, z)) == 0);
        }
      }
  }
}

TEST_CASE("dual basis") {
  auto gl2 = parse_algebra("gl2");
  for (const auto& [x, d] : dual_basis(gl2)) {
    const auto& l = gl2.label(x.coeffs().begin()->first);
    CHECK(d == LieElement::basis(gl2.find_label(BasisLabel{l.col, l.row, false})));
  }
  auto sl2 = parse_algebra("sl2");
  for (const auto& [x, d] : dual_basis(sl2))
    if (x == el(sl2, "H[1]")) CHECK(d == el(sl2, "H[1]", q(1, 2)));
  for (const char* name : {"sl3", "gl3"}) {
    auto spec = parse_algebra(name);
    const auto pairs = dual_basis(spec);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j)
        CHECK(form(spec, pairs[i].first, pairs[j].second) == (i == j ? 1 : 0));
    // sum_a <y, x_a> x^a = y
    LieElement y = LieElement::basis(0, 3) + LieElement::basis(spec.dim() - 1, q(-1, 2)) + LieElement::basis(2, 5);
    LieElement back;
    for (const auto& [x, d] : pairs) back += form(spec, y, x) * d;
    CHECK(back == y);
  }
}

TEST_CASE("principal triple") {
  auto sl2 = parse_algebra("sl2");
  auto t2 = principal_triple(sl2);
  CHECK(t2.e == el(sl2, "E[1,2]"));
  CHECK(t2.h == el(sl2, "H[1]"));
  CHECK(t2.f == el(sl2, "E[2,1]"));
  REQUIRE(t2.zf_basis.size() == 1);
  CHECK(t2.zf_basis[0] == t2.f);

  for (int r = 2; r <= 4; ++r) {
    auto spec = build_algebra(AlgebraKind::sl, r);
    auto t = principal_triple(spec);
    CHECK(bracket(spec, t.e, t.f) == t.h);
    CHECK(bracket(spec, t.h, t.e) == Rational(2) * t.e);
    CHECK(bracket(spec, t.h, t.f) == Rational(-2) * t.f);
    CHECK(t.zf_basis.size() == static_cast<std::size_t>(r - 1));
    for (const auto& z : t.zf_basis) CHECK(bracket(spec, t.f, z).is_zero());
    CHECK(t.zf_basis.size() + t.v_basis.size() == static_cast<std::size_t>(spec.dim()));
    for (const auto& v : t.v_basis) {
      // ad_h-eigenvector: [h, v] is a multiple of v
      const auto hv = bracket(spec, t.h, v);
      const auto& [a, c] = *v.coeffs().begin();
      CHECK(hv == (hv.coeff(a) / c) * v);
    }
    // h = diag(r-1, r-3, ..., 1-r)
    const RatMatrix hm = spec.to_matrix(t.h);
    for (int i = 0; i < r; ++i) CHECK(hm(i, i) == r - 1 - 2 * i);
  }
  auto sl3 = parse_algebra("sl3");
  auto t3 = principal_triple(sl3);
  CHECK(t3.f == el(sl3, "E[2,1]", 2) + el(sl3, "E[3,2]", 2));
}
