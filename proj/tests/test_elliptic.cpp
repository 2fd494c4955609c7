#include "parmod/elliptic/curve.hpp"

#include <doctest.h>

using namespace parmod;
using namespace parmod::elliptic;
using exact::RationalP1;

namespace {

Scalar q(long n, long d = 1) {
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

// y^2 = x (x - 1) (x - lambda) through (x0, y0) for a chosen lambda
struct Rich {
    CurveParams c{q(-6)};
    // rank one at lambda = -6: (2, 4), (-3, 6) and (8, 28) are on the curve
    EllipticPoint p = EllipticPoint::affine(c, 2, 4);
    EllipticPoint r = EllipticPoint::affine(c, -3, 6);
};

}  // namespace

TEST_CASE("points and params") {
    CHECK_THROWS_AS(CurveParams(0), SingularCurve);
    CHECK_THROWS_AS(CurveParams(1), SingularCurve);
    CurveParams c(2);
    CHECK_THROWS_AS(EllipticPoint::affine(c, 4, 5), PointNotOnCurve);
    CHECK_NOTHROW(EllipticPoint::affine(c, 0, 0));
    CHECK(EllipticPoint::infinity().is_infinity());
}

TEST_CASE("third collinear point and the involutions") {
    CurveParams c(2);
    auto w0 = weierstrass(c, Branch::zero), w1 = weierstrass(c, Branch::one), wl = weierstrass(c, Branch::lambda);
    CHECK(third_collinear(c, w0, w1) == wl);
    CHECK(group_add(c, w0, w1) == wl);
    for (auto k : kBranches) CHECK(group_add(c, weierstrass(c, k), weierstrass(c, k)).is_infinity());
    Rich r;
    auto inf = EllipticPoint::infinity();
    CHECK(involution(r.c, inf, r.p) == r.p.negated());
    CHECK(involution(r.c, r.r, involution(r.c, r.r, r.p)) == r.p);
    CHECK(group_add(r.c, r.p, inf) == r.p);
    CHECK(group_add(r.c, r.p, group_neg(r.p)).is_infinity());
}

TEST_CASE("group axioms on a rank one curve") {
    Rich r;
    std::mt19937_64 rng(7);
    auto pts = sample_points(r.c, rng, 12);
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        const auto &a = pts[i], &b = pts[i + 1], &d = pts[i + 2];
        CHECK(group_add(r.c, a, b) == group_add(r.c, b, a));
        CHECK(group_add(r.c, group_add(r.c, a, b), d) == group_add(r.c, a, group_add(r.c, b, d)));
    }
    CHECK(group_mul(r.c, r.p, 3) == group_add(r.c, r.p, group_add(r.c, r.p, r.p)));
    CHECK(group_mul(r.c, r.p, -2) == group_neg(group_mul(r.c, r.p, 2)));
}

TEST_CASE("divisor classes") {
    CurveParams c(2);
    auto w0 = weierstrass(c, Branch::zero), w1 = weierstrass(c, Branch::one);
    CHECK(divisor_class_trivial(c, {{w0, 1}, {w0, -1}}));
    CHECK_FALSE(divisor_class_trivial(c, {{w0, 1}, {w1, -1}}));
    CHECK_THROWS_AS(divisor_class_trivial(c, {{w0, 1}}), NonzeroDegree);
    Rich r;
    auto inf = EllipticPoint::infinity();
    auto third = involution(r.c, r.r, r.p);
    CHECK(divisor_class_trivial(r.c, {{r.p, 1}, {r.r, 1}, {third, 1}, {inf, -3}}));
    auto cls = divisor_class(r.c, {{r.p, 2}, {inf, -1}});
    CHECK(cls.degree == 1);
    CHECK(cls.reduction == group_mul(r.c, r.p, 2));
}

TEST_CASE("torsion translation covers the beta maps") {
    Rich r;
    std::mt19937_64 rng(3);
    auto pts = sample_points(r.c, rng, 10);
    for (auto k : kBranches) {
        auto b = beta(k, r.c.lambda);
        for (const auto& p : pts) {
            auto img = project(torsion_translate(r.c, p, k));
            auto expect = b.apply(proj::ProjPoint::p1(Poly(project(p).a), Poly(project(p).b)));
            CHECK(proj::ProjPoint::p1(Poly(img.a), Poly(img.b)) == expect);
        }
    }
    CurveParams c2(2);
    auto x = torsion_translate(c2, weierstrass(c2, Branch::lambda), Branch::zero);
    CHECK(x == weierstrass(c2, Branch::one));
    CHECK(beta(Branch::infinity, r.c.lambda) == proj::MoebiusMap::identity());
}

TEST_CASE("beta relations are exact Moebius identities") {
    Poly lam = Poly::var(Var::lambda);
    auto b0 = beta(Branch::zero, lam), b1 = beta(Branch::one, lam), bl = beta(Branch::lambda, lam);
    CHECK(b0 * b1 == bl);
    for (auto k : kBranches) CHECK(beta(k, lam) * beta(k, lam) == proj::MoebiusMap::identity());
    // beta_0 swaps 1 and lambda and sends 0 to infinity
    auto one = proj::ProjPoint::p1(Poly(1), Poly(1)), l = proj::ProjPoint::p1(lam, Poly(1));
    CHECK(b0.apply(one) == l);
    CHECK(b0.apply(l) == one);
    CHECK(b0.apply(proj::ProjPoint::p1(Poly(0), Poly(1))).is_infinity());
}

TEST_CASE("epsilon maps") {
    // lambda = -6, t1 = (8, 28)
    Rich r;
    auto eps = epsilon_maps(r.c, 8, 28);
    exact::Assignment at0{{Var::x, 0}, {Var::y, 0}}, at1{{Var::x, 1}, {Var::y, 0}};
    CHECK(eps.eps1.eval(at0) == 0);
    CHECK(eps.eps1.eval(at1) == 1);
    CHECK(eps.eps2.eval({{Var::x, r.c.lambda}, {Var::y, 0}}) == r.c.lambda);
    CHECK_THROWS_AS(epsilon_maps(r.c, 8, 5), InvalidPuncture);
    auto t1 = EllipticPoint::affine(r.c, 8, 28);
    for (const auto& p : {r.p, EllipticPoint::infinity(), t1, t1.negated(), weierstrass(r.c, Branch::one)}) {
        auto a = epsilon_value(r.c, 8, 28, 1, p);
        auto b = epsilon_value(r.c, 8, 28, 1, involution(r.c, t1, p));
        CHECK(a == b);
    }
    CHECK(epsilon_value(r.c, 8, 28, 1, EllipticPoint::infinity()) == RationalP1::finite(8));
}

TEST_CASE("epsilon invariance modulo the curve ideal") {
    Poly lam = Poly::var(Var::lambda), t = Poly::var(Var::t), s = Poly::var(Var::s);
    CHECK(epsilon_invariance_residual(1, lam, t, s).is_zero());
    CHECK(epsilon_invariance_residual(2, lam, t, s).is_zero());
    // a perturbed map is not invariant
    Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
    CHECK_FALSE(epsilon_invariance_residual(RatFunc(t * y - s * x, y + s), 1, lam, t, s).is_zero());
}

TEST_CASE("fixed points of i_p match the divisor criterion") {
    Rich r;
    auto inf = EllipticPoint::infinity();
    CHECK(prop2sec_check(r.c, inf, inf));
    CHECK(divisor_class_trivial(r.c, {{inf, 3}, {inf, -3}}));
    std::mt19937_64 rng(11);
    auto pts = sample_points(r.c, rng, 20);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& qp = pts[i];
        auto p = group_neg(group_mul(r.c, qp, 2));
        CHECK(prop2sec_check(r.c, p, qp));
        for (const auto& pp : {p, pts[i + 1]})
            CHECK(prop2sec_check(r.c, pp, qp) == divisor_class_trivial(r.c, {{pp, 1}, {qp, 2}, {inf, -3}}));
    }
}

TEST_CASE("reduction and square roots") {
    Poly x = Poly::var(Var::x), y = Poly::var(Var::y), lam = Poly::var(Var::lambda);
    Poly f = x * (x - Poly(1)) * (x - lam);
    CHECK(reduce_mod_curve(y * y - f, Var::y, Var::x, lam).is_zero());
    CHECK(reduce_mod_curve(y.pow(3), Var::y, Var::x, lam) == f * y);
    CHECK(rational_sqrt(q(9, 4)) == q(3, 2));
    CHECK_FALSE(rational_sqrt(q(2)).has_value());
    CHECK_FALSE(rational_sqrt(q(-4)).has_value());
}

TEST_CASE("curves through a chosen point and json") {
    std::mt19937_64 rng(5);
    auto [c, p] = random_curve_with_point(rng);
    CHECK(p.y() * p.y() == c.rhs(p.x()));
    CHECK(point_from_json(c, to_json(p)) == p);
    CHECK(point_from_json(c, to_json(EllipticPoint::infinity())).is_infinity());
    CHECK(params_from_json(to_json(c)).lambda == c.lambda);
}
