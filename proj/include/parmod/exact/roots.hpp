#pragma once

#include "parmod/exact/poly.hpp"

#include <vector>

namespace parmod::exact {

// A rational point (a:b) of P1; affine value a/b, infinity is (1:0).
struct RationalP1 {
    Scalar a = 0;
    Scalar b = 1;
    static RationalP1 finite(const Scalar& z) { return {z, Scalar(1)}; }
    static RationalP1 infinity() { return {Scalar(1), Scalar(0)}; }
    bool is_infinity() const { return b == 0; }
    RationalP1 normalized() const;
    bool operator==(const RationalP1& o) const { return a * o.b == b * o.a; }
    bool operator!=(const RationalP1& o) const { return !(*this == o); }
    std::string str() const;
};

// Coefficients c_0..c_d of sum c_i z^i. In projective mode the vector length
// fixes the formal degree and missing top degrees count as roots at infinity.
// Throws IrrationalRoot unless every root is rational.
std::vector<RationalP1> rational_roots(const std::vector<Scalar>& coeffs, bool projective);

// Binary form in (v0, v1) with v0/v1 as affine coordinate.
std::vector<RationalP1> binary_form_roots(const Poly& form, Var v0, Var v1);

}  // namespace parmod::exact
