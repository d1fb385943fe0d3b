#include <doctest.h>

#include "loopalg/talalaev.hpp"
#include "support.hpp"

using namespace loopalg;
using testing::q;
using testing::ugen;

namespace {

PBWPoly pz(const Rational& c) { return PBWPoly::constant(c); }

DiffPoly monomial(int d, int z, const Rational& c = 1) {
  DiffPoly p;
  p.add(d, z, pz(c));
  return p;
}

// Q_{n,k} for gl2 from Tr A_2 X^(1) X^(2) = (Tr X Tr X - Tr(X X)) / 2 with
// X = L - d_z, built without the tensor machinery.
std::map<std::pair<int, int>, PBWPoly> gl2_by_hand(const LieAlgebraSpec& gl2, int M) {
  const NormalOrdering ord(gl2, MajorRule::loop_depth);
  const int cutoff = M + 2, z_max = cutoff - 1;
  DiffPoly x[2][2];
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int n = 1; n <= cutoff; ++n)
        x[j - 1][i - 1].add(0, n - 1, pbw_generator(gl2, gl2.find_label(BasisLabel{i, j, false}), n));
  for (int i = 0; i < 2; ++i) x[i][i] += monomial(1, 0, -1);
  DiffPoly tr = x[0][0];
  tr += x[1][1];
  DiffPoly d = diff_multiply(ord, tr, tr, z_max);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      DiffPoly prod = diff_multiply(ord, x[b][a], x[a][b], z_max);
      for (const auto& [key, c] : prod.terms()) d.add(key.first, key.second, q(-1) * c);
    }
  std::map<std::pair<int, int>, PBWPoly> out;
  for (int n = 1; n <= M; ++n)
    for (int k = 1; k <= 2; ++k) out[{n, k}] = q(1, 2) * d.coeff(2 - k, n - 1);
  return out;
}

}  // namespace

TEST_CASE("Leibniz exchange") {
  auto gl1 = parse_algebra("gl1");
  const NormalOrdering ord(gl1, MajorRule::loop_depth);
  DiffPoly expect1 = monomial(1, 1);
  expect1 += monomial(0, 0);
  CHECK(diff_multiply(ord, DiffPoly::d_z(), monomial(0, 1), 10) == expect1);
  DiffPoly expect2 = monomial(2, 2);
  expect2 += monomial(1, 1, 4);
  expect2 += monomial(0, 0, 2);
  CHECK(diff_multiply(ord, DiffPoly::d_z(2), monomial(0, 2), 10) == expect2);
  bool truncated = false;
  diff_multiply(ord, monomial(0, 3), monomial(0, 3), 4, &truncated);
  CHECK(truncated);
}

TEST_CASE("L and the antisymmetrizer") {
  auto gl2 = parse_algebra("gl2");
  const auto L = build_L(gl2, 3);
  CHECK(L.at(1, 0).coeff(0, 0) == ugen(gl2, "E[1,2]", 1));
  CHECK(L.at(1, 0).coeff(0, 2) == ugen(gl2, "E[1,2]", 3));
  CHECK_THROWS_AS(build_L(parse_algebra("sl2"), 3), std::invalid_argument);
  auto gl1 = parse_algebra("gl1");
  const auto X = minus_d_z(build_L(gl1, 2));
  CHECK(X.at(0, 0).coeff(1, 0) == pz(-1));

  const auto a1 = antisymmetrizer(1);
  CHECK(a1.size() == 1);
  CHECK(a1.at(0, 0) == DiffPoly::scalar(1));
  const auto a2 = antisymmetrizer(2);
  CHECK(a2.at(a2.index_of({0, 1}), a2.index_of({1, 0})) == DiffPoly::scalar(q(-1, 2)));
  for (int r = 1; r <= 3; ++r) {
    auto spec = build_algebra(AlgebraKind::gl, r);
    const auto a = antisymmetrizer(r);
    const auto a_sq = op_multiply(spec, a, a, 0, Exec::serial);
    CHECK(a_sq.entries() == a.entries());
    CHECK(op_trace(a) == DiffPoly::scalar(1));
  }
}

TEST_CASE("small Q families") {
  auto gl1 = parse_algebra("gl1");
  const auto q1 = compute_Q(gl1, 4, Exec::serial);
  for (int n = 1; n <= 4; ++n) CHECK(q1.at(n, 1) == q(-1) * ugen(gl1, "E[1,1]", n));

  auto gl2 = parse_algebra("gl2");
  const auto q2 = compute_Q(gl2, 3, Exec::serial);
  CHECK(q2.at(1, 1) == q(-1) * (ugen(gl2, "E[1,1]", 1) + ugen(gl2, "E[2,2]", 1)));
  CHECK(q2.q == gl2_by_hand(gl2, 3));

  for (int r = 2; r <= 3; ++r) {
    auto spec = build_algebra(AlgebraKind::gl, r);
    const auto qr = compute_Q(spec, 2, Exec::serial);
    for (int n = 1; n <= 2; ++n) {
      PBWPoly trace;
      for (int i = 1; i <= r; ++i) trace += pbw_generator(spec, spec.find_label(BasisLabel{i, i, false}), n);
      CHECK(qr.at(n, 1) == q(-1) * trace);
    }
  }
  CHECK_THROWS_AS(compute_Q(parse_algebra("sl2"), 2), std::invalid_argument);
  CHECK_THROWS_AS(compute_Q(gl2, 0), std::invalid_argument);
}

TEST_CASE("Q is invariant, graded, and stable under a larger cutoff") {
  auto gl2 = parse_algebra("gl2");
  const auto q2 = compute_Q(gl2, 4, Exec::serial);
  CHECK(compute_Q(gl2, 4, Exec::serial, 2).q == q2.q);
  for (const auto& [nk, p] : q2.q) {
    CHECK(p.homogeneous_weight() == static_cast<unsigned>(nk.first + nk.second - 1));
    CHECK(p.degree() <= nk.second);
    for (int a = 0; a < gl2.dim(); ++a) CHECK(adjoint_action(gl2, LieElement::basis(a), p).is_zero());
  }
  auto gl3 = parse_algebra("gl3");
  const auto q3 = compute_Q(gl3, 2, Exec::serial);
  CHECK(compute_Q(gl3, 2, Exec::serial, 2).q == q3.q);
  for (const auto& [nk, p] : q3.q)
    for (int a : {0, 1, 5}) CHECK(adjoint_action(gl3, LieElement::basis(a), p).is_zero());
}

TEST_CASE("commutativity and symbols at small size") {
  auto gl2 = parse_algebra("gl2");
  const auto q2 = compute_Q(gl2, 4, Exec::serial);
  const auto report = check_pairwise_commute(gl2, q2, Exec::serial);
  CHECK(report.all_zero);
  CHECK(report.entries.size() == 36);
  const auto sym = identify_symbols(gl2, q2);
  CHECK(sym.matches);
  for (const auto& [k, s] : sym.sign_by_k) CHECK((s == 1 || s == -1));
}
