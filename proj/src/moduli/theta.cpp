#include "parmod/moduli/theta.hpp"

namespace parmod::moduli {

namespace {

using elliptic::Branch;
using elliptic::EllipticPoint;
using exact::RationalP1;

ProjPoint as_point(const RationalP1& p) { return ProjPoint::p1(Poly(p.a), Poly(p.b)); }

RationalP1 as_rational(const ProjPoint& p) {
    return RationalP1{p.coords()[0].constant_value(), p.coords()[1].constant_value()}.normalized();
}

std::array<RationalP1, 4> projections(const elliptic::CurveParams& c, const EllipticPoint& r, bool negate) {
    std::array<RationalP1, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        EllipticPoint pk = elliptic::involution(c, elliptic::weierstrass(c, elliptic::kBranches[i]), r);
        if (negate) pk = pk.negated();
        out[i] = elliptic::project(pk);
    }
    return out;
}

proj::MoebiusMap fit(const std::array<RationalP1, 4>& src, const std::array<Scalar, 4>& dst, std::size_t skip) {
    std::array<std::pair<ProjPoint, ProjPoint>, 3> pairs{{{ProjPoint::p1_infinity(), ProjPoint::p1_infinity()},
                                                          {ProjPoint::p1_infinity(), ProjPoint::p1_infinity()},
                                                          {ProjPoint::p1_infinity(), ProjPoint::p1_infinity()}}};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == skip) continue;
        ProjPoint target = i == 3 ? ProjPoint::p1_infinity() : ProjPoint::p1(Poly(dst[i]), Poly(1));
        pairs[n++] = {as_point(src[i]), target};
    }
    return proj::moebius_through(pairs);
}

}  // namespace

ThetaChange theta_change(const elliptic::CurveParams& c, const EllipticPoint& t1, const EllipticPoint& r) {
    if (t1.is_infinity()) throw elliptic::InvalidPuncture();
    if (!elliptic::divisor_class_trivial(c, {{r, 2}, {t1, -1}, {EllipticPoint::infinity(), -1}})) throw InvalidRoot();
    ThetaChange out{proj::MoebiusMap::identity(), proj::MoebiusMap::identity(), projections(c, r, false),
                    projections(c, r, true)};
    // Targets 0, 1, lambda; the fourth point goes to t, not to infinity.
    std::array<std::pair<ProjPoint, ProjPoint>, 3> pairs{{
        {as_point(out.p_images[0]), ProjPoint::p1(Poly(0), Poly(1))},
        {as_point(out.p_images[1]), ProjPoint::p1(Poly(1), Poly(1))},
        {as_point(out.p_images[2]), ProjPoint::p1(Poly(c.lambda), Poly(1))},
    }};
    out.theta1 = proj::moebius_through(pairs);
    for (std::size_t i = 0; i < 3; ++i) pairs[i].first = as_point(out.q_images[i]);
    out.theta2 = proj::moebius_through(pairs);
    RationalP1 t = RationalP1::finite(t1.x());
    RationalP1 f1 = as_rational(out.theta1.apply(as_point(out.p_images[3])));
    RationalP1 f2 = as_rational(out.theta2.apply(as_point(out.q_images[3])));
    if (f1 != t) throw InconsistentTheta("theta1(pi(p_inf)) = " + f1.str() + ", expected " + t.str());
    if (f2 != t) throw InconsistentTheta("theta2(pi(q_inf)) = " + f2.str() + ", expected " + t.str());
    return out;
}

ThetaChange theta_change(const ModuliParams& p, const EllipticPoint& r) {
    if (p.symbolic || !p.s) throw Error("theta_change needs specialized lambda, t and s");
    elliptic::CurveParams c(p.lambda_value());
    return theta_change(c, EllipticPoint::affine(c, p.t_value(), p.s->constant_value()), r);
}

RationalP1 theta_literal_image(const elliptic::CurveParams& c, const EllipticPoint& r) {
    auto src = projections(c, r, false);
    auto m = fit(src, {Scalar(0), Scalar(1), c.lambda, Scalar(0)}, 2);
    return as_rational(m.apply(as_point(src[2])));
}

}  // namespace parmod::moduli
