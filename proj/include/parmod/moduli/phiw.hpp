#pragma once

#include "parmod/moduli/catalog.hpp"

namespace parmod::moduli {

class UnderdeterminedFit : public Error {
public:
    explicit UnderdeterminedFit(std::size_t dim)
        : Error("tangency system has a " + std::to_string(dim) + "-dimensional solution space") {}
};

// phi_W restricted to U_C as rational functions of (c, l).
struct PhiW {
    RatFunc first, second;
};
// Shipped components; the second one is the one the tangency fit produces.
PhiW phiW_UC(const ModuliParams& p);
// Both components exactly as printed.
PhiW phiW_printed(const ModuliParams& p);

struct DerivedPhiW {
    ProjPoint first;   // z-intercept of the (2,2) fit on w = infinity
    ProjPoint second;  // residual z-root of the (3,2) fit on w = l
    // Resulting bidegree-(2,2) and (3,2) forms, primitive.
    Poly fit22, fit32;
};
// Fits a (2,2) form with vertical tangencies at (0,0), (1,1), (lambda,c),
// (inf,inf) and a (3,2) form with the same tangencies plus a node at (t,l).
// c and l are polynomials, usually the variables c and l.
DerivedPhiW derive_phiW(const ModuliParams& p, const Poly& c, const Poly& l);

// Projective equality of a P1 point with a rational function value.
bool same_value(const ProjPoint& pt, const RatFunc& f);

}  // namespace parmod::moduli
