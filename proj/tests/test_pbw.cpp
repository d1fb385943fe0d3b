#include <doctest.h>

#include <random>

#include "loopalg/centralizer.hpp"
#include "loopalg/pbw.hpp"
#include "support.hpp"

using namespace loopalg;
using testing::q;
using testing::sgen;
using testing::ugen;

namespace {

PBWPoly mul(const LieAlgebraSpec& s, const PBWPoly& a, const PBWPoly& b) { return normal_product(s, a, b, Exec::serial); }

// Naive rewriting: repeatedly swap the first adjacent out-of-order pair.
TermMap bubble_normalize(const LieAlgebraSpec& spec, const Word& start, const Rational& c0) {
  TermMap done;
  std::vector<std::pair<Word, Rational>> work{{start, c0}};
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      add_to(done, w, c);
      continue;
    }
    const Gen y = w[i], x = w[i + 1];  // y > x: y x = x y - [x, y]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.push_back({swapped, c});
    const unsigned depth = gen_major(x) + gen_major(y);
    for (const auto& t : spec.bracket_basis(static_cast<int>(gen_label(x)), static_cast<int>(gen_label(y)))) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(make_gen(depth, static_cast<unsigned>(t.label)));
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      work.push_back({shorter, -c * t.coeff});
    }
  }
  return done;
}

Word random_word(const LieAlgebraSpec& spec, std::mt19937_64& rng, int max_degree) {
  Word w;
  const int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree)) + 1;
  for (int i = 0; i < d; ++i)
    w.push_back(loop_gen(spec, static_cast<int>(rng() % spec.dim()), static_cast<int>(rng() % 3) + 1));
  return w;
}

PBWPoly random_pbw(const LieAlgebraSpec& spec, std::mt19937_64& rng, int terms, int max_degree) {
  PBWPoly p;
  for (int t = 0; t < terms; ++t) p += normal_form(spec, random_word(spec, rng, max_degree), q(static_cast<long>(rng() % 5) + 1));
  return p;
}

}  // namespace

TEST_CASE("one rewriting step") {
  auto gl2 = parse_algebra("gl2");
  const PBWPoly e = ugen(gl2, "E[1,2]", 1), f = ugen(gl2, "E[2,1]", 1);
  const PBWPoly ef = mul(gl2, e, f);
  CHECK(mul(gl2, f, e) == ef + ugen(gl2, "E[2,2]", 2) - ugen(gl2, "E[1,1]", 2));
  CHECK(commutator(gl2, e, f) == ugen(gl2, "E[1,1]", 2) - ugen(gl2, "E[2,2]", 2));
  CHECK(mul(gl2, e, PBWPoly::constant(1)) == e);
  CHECK(commutator(gl2, ef, ef).is_zero());
}

TEST_CASE("normal form agrees with naive rewriting") {
  std::mt19937_64 rng(testing::seed());
  for (const char* name : {"gl2", "sl2", "sl3", "gl3"}) {
    auto spec = parse_algebra(name);
    for (int t = 0; t < 30; ++t) {
      const Word w = random_word(spec, rng, 5);
      CHECK(normal_form(spec, w) == PBWPoly(bubble_normalize(spec, w, 1)));
    }
  }
}

TEST_CASE("associativity, unit and weight additivity") {
  std::mt19937_64 rng(testing::seed() + 3);
  auto sl2 = parse_algebra("sl2");
  for (int t = 0; t < 50; ++t) {
    const PBWPoly a = random_pbw(sl2, rng, 2, 3), b = random_pbw(sl2, rng, 2, 3), c = random_pbw(sl2, rng, 2, 3);
    CHECK(mul(sl2, mul(sl2, a, b), c) == mul(sl2, a, mul(sl2, b, c)));
  }
  const PBWPoly a = ugen(sl2, "E[1,2]", 2), b = mul(sl2, ugen(sl2, "E[2,1]", 1), ugen(sl2, "H[1]", 3));
  CHECK(mul(sl2, b, a).homogeneous_weight() == 6u);
}

TEST_CASE("gr_top") {
  auto gl2 = parse_algebra("gl2");
  const PBWPoly ef = mul(gl2, ugen(gl2, "E[1,2]", 1), ugen(gl2, "E[2,1]", 1));
  CHECK(gr_top(ef + ugen(gl2, "E[1,1]", 2)) ==
        sym_multiply(sgen(gl2, "E[1,2]", 1), sgen(gl2, "E[2,1]", 1), Exec::serial));
  CHECK_THROWS(gr_top(PBWPoly()));
  auto sl2 = parse_algebra("sl2");
  CHECK(gr_top(s1_quantum(sl2)) == s1_bar(sl2));
}

TEST_CASE("symmetrize") {
  auto gl2 = parse_algebra("gl2");
  const SymPoly x = sgen(gl2, "E[1,1]", 1);
  CHECK(symmetrize(gl2, sym_multiply(x, x, Exec::serial)) == mul(gl2, ugen(gl2, "E[1,1]", 1), ugen(gl2, "E[1,1]", 1)));
  const SymPoly ef = sym_multiply(sgen(gl2, "E[1,2]", 1), sgen(gl2, "E[2,1]", 1), Exec::serial);
  CHECK(symmetrize(gl2, ef) == mul(gl2, ugen(gl2, "E[1,2]", 1), ugen(gl2, "E[2,1]", 1)) -
                                   q(1, 2) * ugen(gl2, "E[1,1]", 2) + q(1, 2) * ugen(gl2, "E[2,2]", 2));
  auto sl2 = parse_algebra("sl2");
  CHECK(symmetrize(sl2, s1_bar(sl2)) == s1_quantum(sl2));
  std::mt19937_64 rng(testing::seed() + 5);
  for (int t = 0; t < 20; ++t) {
    // homogeneous of degree d
    const int d = static_cast<int>(rng() % 4) + 1;
    SymPoly p;
    for (int k = 0; k < 2; ++k) {
      Word w = random_word(sl2, rng, 1);
      while (static_cast<int>(w.size()) < d) w.push_back(random_word(sl2, rng, 1)[0]);
      std::sort(w.begin(), w.end());
      p.add_term(w, q(k + 1));
    }
    CHECK(gr_top(symmetrize(sl2, p)) == p);
  }
}

TEST_CASE("d_t on U") {
  auto gl2 = parse_algebra("gl2");
  const PBWPoly ef = mul(gl2, ugen(gl2, "E[1,2]", 1), ugen(gl2, "E[2,1]", 1));
  CHECK(d_t_env(gl2, ef) == q(-1) * mul(gl2, ugen(gl2, "E[1,2]", 2), ugen(gl2, "E[2,1]", 1)) -
                                mul(gl2, ugen(gl2, "E[1,2]", 1), ugen(gl2, "E[2,1]", 2)));
  auto sl2 = parse_algebra("sl2");
  const PBWPoly s1 = s1_quantum(sl2);
  CHECK(commutator(sl2, s1, d_t_env(sl2, s1)).is_zero());
  CHECK(gr_top(d_t_env(sl2, s1)) == d_t(s1_bar(sl2)));
  // derivation of the product
  std::mt19937_64 rng(testing::seed() + 11);
  for (int t = 0; t < 10; ++t) {
    const PBWPoly a = random_pbw(sl2, rng, 2, 2), b = random_pbw(sl2, rng, 2, 2);
    CHECK(d_t_env(sl2, mul(sl2, a, b)) == mul(sl2, d_t_env(sl2, a), b) + mul(sl2, a, d_t_env(sl2, b)));
  }
}

TEST_CASE("adjoint action") {
  auto sl2 = parse_algebra("sl2");
  const auto h = LieElement::basis(testing::label(sl2, "H[1]"));
  CHECK(adjoint_action(sl2, h, ugen(sl2, "E[1,2]", 3)) == q(2) * ugen(sl2, "E[1,2]", 3));
  for (int a = 0; a < sl2.dim(); ++a) CHECK(adjoint_action(sl2, LieElement::basis(a), s1_quantum(sl2)).is_zero());
}

TEST_CASE("rewriting step bound and idempotence") {
  std::mt19937_64 rng(testing::seed() + 13);
  for (const char* name : {"gl2", "sl3"}) {
    auto spec = parse_algebra(name);
    std::size_t b = 0;
    for (int x = 0; x < spec.dim(); ++x)
      for (int y = 0; y < spec.dim(); ++y) b = std::max(b, spec.bracket_basis(x, y).size());
    const NormalOrdering ord(spec, MajorRule::loop_depth);
    for (int t = 0; t < 30; ++t) {
      const Word w = random_word(spec, rng, 6);
      TermMap out;
      std::size_t steps = 0;
      ord.normalize_word(w, 1, out, &steps);
      CHECK(steps <= rewrite_step_bound(w.size(), b));
      TermMap again;
      for (const auto& [nw, c] : out) ord.normalize_word(nw, c, again);
      CHECK(PBWPoly(again) == PBWPoly(out));
    }
  }
}

TEST_CASE("filtered basis") {
  auto sl2 = parse_algebra("sl2");
  CHECK(filtered_basis(sl2, 1, 2, 2).size() == 9);
}
