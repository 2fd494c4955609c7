#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parmod::exact {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; parse_scalar canonicalizes user input.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& q);

inline int sign(const Scalar& q) { return sgn(q); }

// Total order used for canonical choices: numerator first, then denominator.
bool numden_less(const Scalar& a, const Scalar& b);

}  // namespace parmod::exact
