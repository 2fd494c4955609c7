#pragma once

#include "parmod/moduli/catalog.hpp"

#include <utility>

namespace parmod::moduli {

class IrrationalBranch : public Error {
public:
    IrrationalBranch() : Error("tangent abscissas are not all rational") {}
};
class NotGammaType : public Error {
public:
    explicit NotGammaType(const std::string& why) : Error("curve is not of Gamma type: " + why) {}
};

// Total order on rationals by (numerator, denominator).
bool numden_less(const Scalar& a, const Scalar& b);
bool numden_less(const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b);

struct TorelliResult {
    Scalar lambda, t;                // canonical representative
    proj::MoebiusMap mz, mw;         // normalizing pair: the curve pulled back by (mz^-1, mw^-1) is gamma_curve(lambda, t)
    std::vector<std::pair<Scalar, Scalar>> members;  // every valid (lambda', t'), sorted and unique
};

// The vertical-tangent abscissas (roots of the discriminant in w) and the
// horizontal-tangent ordinates, each with multiplicity.
std::vector<exact::RationalP1> vertical_tangent_abscissas(const BiCurve& curve);
std::vector<exact::RationalP1> horizontal_tangent_ordinates(const BiCurve& curve);

// Throws IrrationalBranch or NotGammaType.
TorelliResult torelli_reconstruct(const BiCurve& curve);

// Curve pulled back along (mz^-1, mw^-1), i.e. its image under (mz, mw).
BiCurve transform(const BiCurve& curve, const proj::MoebiusMap& mz, const proj::MoebiusMap& mw);

exact::Json to_json(const TorelliResult& r);

}  // namespace parmod::moduli
