#pragma once

#include "parmod/exact.hpp"
#include "parmod/proj/geometry.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace parmod::elliptic {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using exact::Var;

class SingularCurve : public Error {
public:
    SingularCurve() : Error("lambda must avoid 0 and 1") {}
};
class PointNotOnCurve : public Error {
public:
    PointNotOnCurve() : Error("point does not satisfy the curve equation") {}
};
class NonzeroDegree : public Error {
public:
    NonzeroDegree() : Error("divisor has nonzero degree") {}
};
class InvalidPuncture : public Error {
public:
    InvalidPuncture() : Error("puncture (t, s) is not a valid point of the curve") {}
};

// y^2 = x (x - 1) (x - lambda)
struct CurveParams {
    Scalar lambda;
    explicit CurveParams(const Scalar& lam);
    Scalar rhs(const Scalar& x) const { return x * (x - 1) * (x - lambda); }
};

// Either the base point w_inf or an affine point.
class EllipticPoint {
public:
    static EllipticPoint infinity() { return EllipticPoint(); }
    // Throws PointNotOnCurve.
    static EllipticPoint affine(const CurveParams& c, const Scalar& x, const Scalar& y);

    bool is_infinity() const { return !xy_.has_value(); }
    const Scalar& x() const { return xy_->first; }
    const Scalar& y() const { return xy_->second; }
    // (x, -y), which lies on the curve whenever (x, y) does.
    EllipticPoint negated() const;
    bool operator==(const EllipticPoint& o) const { return xy_ == o.xy_; }
    bool operator!=(const EllipticPoint& o) const { return !(*this == o); }
    std::string str() const;

private:
    EllipticPoint() = default;
    std::optional<std::pair<Scalar, Scalar>> xy_;
};

// The branch points of the x-line: w_0, w_1, w_lambda, w_inf.
enum class Branch { zero, one, lambda, infinity };
inline constexpr Branch kBranches[4] = {Branch::zero, Branch::one, Branch::lambda, Branch::infinity};
std::string branch_name(Branch k);
EllipticPoint weierstrass(const CurveParams& c, Branch k);

// Third intersection of the line pq with the cubic (tangent when p = q).
EllipticPoint third_collinear(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q);
inline EllipticPoint involution(const CurveParams& c, const EllipticPoint& q, const EllipticPoint& p) {
    return third_collinear(c, p, q);
}
EllipticPoint group_neg(const EllipticPoint& p);
EllipticPoint group_add(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q);
EllipticPoint group_mul(const CurveParams& c, const EllipticPoint& p, long n);

// Hyperelliptic projection to the x-line.
exact::RationalP1 project(const EllipticPoint& p);

using Divisor = std::vector<std::pair<EllipticPoint, long>>;

// Class of O(D) as (degree, point p with D ~ p + (deg - 1) w_inf).
struct DivisorClass {
    long degree = 0;
    EllipticPoint reduction = EllipticPoint::infinity();
    bool operator==(const DivisorClass& o) const { return degree == o.degree && reduction == o.reduction; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
};
DivisorClass divisor_class(const CurveParams& c, const Divisor& d);
// Tensor product and dual of line bundles.
DivisorClass class_add(const CurveParams& c, const DivisorClass& a, const DivisorClass& b);
DivisorClass class_neg(const DivisorClass& a);
// O(p - w_inf) for a point p.
inline DivisorClass jacobian_class(const EllipticPoint& p) { return {0, p}; }
// L^2 = O for a degree zero class.
bool is_two_torsion(const CurveParams& c, const DivisorClass& a);
// Abel: a degree zero divisor is principal iff its group sum is w_inf.
bool divisor_class_trivial(const CurveParams& c, const Divisor& d);  // throws NonzeroDegree

// i_{w_k} o i_{w_inf}, i.e. translation by the 2-torsion point w_k.
EllipticPoint torsion_translate(const CurveParams& c, const EllipticPoint& p, Branch k);
// The induced Moebius map on the x-line, with lambda as a polynomial so the
// same formula serves symbolic and specialized runs.
proj::MoebiusMap beta(Branch k, const Poly& lambda);
inline proj::MoebiusMap beta(Branch k, const Scalar& lambda) { return beta(k, Poly(lambda)); }

// eps_1 = (t y - s x)/(y - s) and eps_2 with s -> -s, as functions of (x, y).
struct EpsilonMaps {
    RatFunc eps1, eps2;
};
EpsilonMaps epsilon_maps(const Poly& t, const Poly& s);
EpsilonMaps epsilon_maps(const CurveParams& c, const Scalar& t, const Scalar& s);  // throws InvalidPuncture
// Value of eps_j at a point: abscissa where the line through p and t_j meets y = 0.
exact::RationalP1 epsilon_value(const CurveParams& c, const Scalar& t, const Scalar& s, int j,
                                const EllipticPoint& p);

// A point with coordinates in a function field, e.g. the generic point (x, y).
struct SymbolicPoint {
    RatFunc x, y;
};
// Chord construction for two distinct symbolic points.
SymbolicPoint symbolic_third_collinear(const SymbolicPoint& p, const SymbolicPoint& q, const Poly& lambda);
// Numerator of eps_j(i_{t_j}(p)) - eps_j(p) at the generic point p = (x, y),
// reduced modulo the curve relation for (x, y) and for (t, s). Zero exactly
// when eps_j is constant on the fibers {p, i_{t_j}(p)}.
Poly epsilon_invariance_residual(int j, const Poly& lambda, const Poly& t, const Poly& s);
// Same with an explicit candidate for eps_j.
Poly epsilon_invariance_residual(const RatFunc& eps, int j, const Poly& lambda, const Poly& t, const Poly& s);

// Whether i_p(q) = q.
bool prop2sec_check(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q);

// Normal form modulo y^2 - x (x - 1) (x - lambda): degree at most one in y.
Poly reduce_mod_curve(const Poly& p, Var y, Var x, const Poly& lambda);

// Exact square root of a rational square, if any.
std::optional<Scalar> rational_sqrt(const Scalar& q);

// Rational points of small height plus group combinations of them.
std::vector<EllipticPoint> sample_points(const CurveParams& c, std::mt19937_64& rng, std::size_t count);
// A curve with a chosen rational point of x outside {0, 1}: lambda is solved
// from the point, so every sample has a non-torsion generator available.
std::pair<CurveParams, EllipticPoint> random_curve_with_point(std::mt19937_64& rng);

exact::Json to_json(const EllipticPoint& p);
EllipticPoint point_from_json(const CurveParams& c, const exact::Json& j);
exact::Json to_json(const CurveParams& c);
exact::Json to_json(const DivisorClass& d);
DivisorClass class_from_json(const CurveParams& c, const exact::Json& j);
CurveParams params_from_json(const exact::Json& j);

}  // namespace parmod::elliptic
