#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopalg {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace loopalg
