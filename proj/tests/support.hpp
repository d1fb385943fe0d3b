#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "loopalg/loop_sym.hpp"
#include "loopalg/pbw.hpp"
#include "loopalg/properties.hpp"

namespace testing {

// LOOPALG_SEED overrides the fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("LOOPALG_SEED"); s && *s) return std::stoull(s);
  return loopalg::default_seed;
}

inline loopalg::Rational q(long p, long d = 1) {
  loopalg::Rational r(p, d);
  r.canonicalize();
  return r;
}

inline loopalg::Word word(const loopalg::LieAlgebraSpec& spec, std::initializer_list<std::pair<const char*, int>> gens) {
  loopalg::Word w;
  for (const auto& [tok, m] : gens) {
    for (int a = 0; a < spec.dim(); ++a)
      if (spec.label(a).token() == tok) w.push_back(loopalg::loop_gen(spec, a, m));
  }
  return w;
}

// Generator x[-m] named by its token, e.g. gen(spec, "E[1,2]", 1).
inline loopalg::SymPoly sgen(const loopalg::LieAlgebraSpec& spec, const char* tok, int m) {
  return loopalg::SymPoly::monomial(word(spec, {{tok, m}}));
}
inline loopalg::PBWPoly ugen(const loopalg::LieAlgebraSpec& spec, const char* tok, int m) {
  return loopalg::PBWPoly::monomial(word(spec, {{tok, m}}));
}

inline int label(const loopalg::LieAlgebraSpec& spec, const char* tok) {
  for (int a = 0; a < spec.dim(); ++a)
    if (spec.label(a).token() == tok) return a;
  return -1;
}

}  // namespace testing
