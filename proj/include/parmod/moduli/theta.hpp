#pragma once

#include "parmod/elliptic/curve.hpp"
#include "parmod/moduli/catalog.hpp"

namespace parmod::moduli {

class InvalidRoot : public Error {
public:
    InvalidRoot() : Error("2r - t1 - w_inf is not principal") {}
};
class InconsistentTheta : public Error {
public:
    explicit InconsistentTheta(const std::string& what) : Error("fourth point check failed: " + what) {}
};

struct ThetaChange {
    proj::MoebiusMap theta1, theta2;
    std::array<exact::RationalP1, 4> p_images;  // pi(p_k) for k = 0, 1, lambda, inf
    std::array<exact::RationalP1, 4> q_images;  // pi(q_k)
};

// p_k = i_{w_k}(r), q_k = i_{w_inf}(p_k). theta1 sends pi(p_k) to k for
// k in {0, 1, lambda}; the fourth point pi(p_inf) must land on t = x(t1).
// theta2 is fitted the same way on the q_k.
ThetaChange theta_change(const elliptic::CurveParams& c, const elliptic::EllipticPoint& t1,
                         const elliptic::EllipticPoint& r);
ThetaChange theta_change(const ModuliParams& p, const elliptic::EllipticPoint& r);  // needs s

// The normalization on {0, 1, inf} followed by the image of pi(p_lambda).
exact::RationalP1 theta_literal_image(const elliptic::CurveParams& c, const elliptic::EllipticPoint& r);

}  // namespace parmod::moduli
