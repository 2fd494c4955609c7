#pragma once

#include "parmod/exact/poly.hpp"

#include <vector>

namespace parmod::exact {

// Univariate polynomials over Poly coefficients are coefficient vectors
// c_0..c_d (low to high) whose top entry is nonzero.

// Sylvester resultant via fraction-free elimination; throws DegreeTooSmall.
Poly resultant(const std::vector<Poly>& p, const std::vector<Poly>& q);
Poly resultant(const Poly& p, const Poly& q, Var v);

// (-1)^(d(d-1)/2) * res(p, p') / lead(p).
Poly discriminant(const std::vector<Poly>& p);
Poly discriminant(const Poly& p, Var v);

// Binary forms in (v0, v1) of formal degree d: the coefficient of
// v0^i v1^(d-i) is entry i. Zero top coefficients are allowed.
std::vector<Poly> binary_coefficients(const Poly& form, Var v0, Var v1, int d);
Poly binary_discriminant(const Poly& form, Var v0, Var v1, int d);

}  // namespace parmod::exact
