#include "parmod/proj/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace parmod;
using namespace parmod::proj;
using exact::Assignment;

namespace {

Poly V(Var v) { return Poly::var(v); }
const Poly b0 = V(Var::b0), b1 = V(Var::b1), b2 = V(Var::b2);
const Poly z0 = V(Var::z0), z1 = V(Var::z1), w0 = V(Var::w0), w1 = V(Var::w1);
const Poly lam = V(Var::lambda), t = V(Var::t);

RationalMap phi_tilde() {
    return RationalMap(Space::P2, Space::P1xP1,
                       {b1 * t - b2, b0 * t - b1, -b1 * (b0 * lam - b1 * lam - b1 + b2), b1 * b1 - b0 * b2});
}

Poly gamma_hom() {
    Poly z = z0, w = w0, zz = z1, ww = w1;
    return t * t * z * z * ww * ww - 2 * t * z * z * w * ww + t * t * w * w * zz * zz - 2 * t * z * zz * w * w +
           z * z * w * w - 2 * lam * t * z * zz * ww * ww - 2 * lam * t * w * ww * zz * zz +
           2 * (2 * (lam + 1) * t - t * t - lam) * z * zz * w * ww + lam * lam * zz * zz * ww * ww;
}

Poly sigma_cubic() {
    return -b0 * b0 * b1 * lam * t * t + b0 * b0 * b2 * lam * t + (lam * t * t + lam * t + t * t) * b0 * b1 * b1 -
           (t * t + lam) * b1.pow(3) - 2 * (lam * t + t) * b0 * b1 * b2 + (lam + t + 1) * b1 * b1 * b2 +
           t * b0 * b2 * b2 - b1 * b2 * b2;
}

ProjPoint pt(long a, long b) { return ProjPoint::p1(Poly(a), Poly(b)); }

}  // namespace

TEST_CASE("projective points compare up to scalars") {
    CHECK(ProjPoint::p2(Poly(1), Poly(2), Poly(3)) == ProjPoint::p2(Poly(-2), Poly(-4), Poly(-6)));
    CHECK(ProjPoint::p2(Poly(1), lam, lam * lam) == ProjPoint::p2(t, t * lam, t * lam * lam));
    CHECK(ProjPoint::p2(Poly(1), Poly(2), Poly(3)) != ProjPoint::p2(Poly(1), Poly(2), Poly(4)));
    CHECK_THROWS(ProjPoint::p2(Poly(0), Poly(0), Poly(0)));
    auto q = ProjPoint::from_ratfuncs(Space::P1, {RatFunc(Poly(1), lam), RatFunc(Poly(1), t)});
    CHECK(q == ProjPoint::p1(t, lam));
}

TEST_CASE("moebius through three points") {
    auto inf = ProjPoint::p1_infinity();
    CHECK(moebius_through({{{pt(0, 1), pt(0, 1)}, {pt(1, 1), pt(1, 1)}, {inf, inf}}}) == MoebiusMap::identity());
    auto beta1 = moebius_through({{{pt(1, 1), inf}, {inf, pt(1, 1)}, {pt(0, 1), ProjPoint::p1(lam, Poly(1))}}});
    CHECK(beta1 == MoebiusMap(Poly(1), -lam, Poly(1), Poly(-1)));
    CHECK_THROWS_AS(moebius_through({{{pt(1, 1), inf}, {pt(2, 2), pt(1, 1)}, {pt(0, 1), pt(3, 1)}}}), DegeneratePoints);
    // property: reproduces every target exactly, symbolic and random
    std::mt19937_64 rng(42);
    for (int it = 0; it < 20; ++it) {
        std::array<std::pair<ProjPoint, ProjPoint>, 3> pairs{{{pt(it, 1), ProjPoint::p1(t, Poly(1))},
                                                               {pt(it + 1, 1), ProjPoint::p1(lam, Poly(1))},
                                                               {pt(it + 2, 3), inf}}};
        if (it % 2) pairs[2].first = ProjPoint::p1(Poly(random_scalar(rng)), Poly(1));
        std::optional<MoebiusMap> m;
        try {
            m = moebius_through(pairs);
        } catch (const DegeneratePoints&) {
            continue;
        }
        for (auto& [s, d] : pairs) CHECK(m->apply(s) == d);
    }
}

TEST_CASE("map application") {
    Assignment values{{Var::lambda, Scalar(2)}, {Var::t, Scalar(3)}};
    RationalMap phi = phi_tilde().specialize(values);
    auto img = phi.apply(ProjPoint::p2(Poly(1), Poly(0), Poly(1)));
    CHECK(img.factor(0) == pt(-1, 3));
    CHECK(img.factor(1) == pt(0, 1));
    CHECK_THROWS_AS(phi_tilde().apply(ProjPoint::p2(Poly(1), Poly(0), Poly(0))), Undefined);
    auto p = ProjPoint::p2(Poly(3), Poly(-1), Poly(7));
    CHECK(RationalMap::identity(Space::P2).apply(p) == p);
}

TEST_CASE("composition") {
    MoebiusMap beta0(Poly(0), lam, Poly(1), Poly(0));
    MoebiusMap beta1(Poly(1), -lam, Poly(1), Poly(-1));
    MoebiusMap betal(lam, -lam, Poly(1), -lam);
    CHECK(beta0 * beta1 == betal);
    CHECK(beta0 * beta0 == MoebiusMap::identity());
    RationalMap swap(Space::P1xP1, Space::P1xP1, {w0, w1, z0, z1});
    CHECK(map_equal(compose(swap, swap), RationalMap::identity(Space::P1xP1)));
    // standard quadratic involution composed with itself
    RationalMap q(Space::P2, Space::P2, {b1 * b2, b0 * b2, b0 * b1});
    RationalMap qq = compose(q, q);
    CHECK(qq.degree() == 1);
    CHECK(map_equal(qq, RationalMap::identity(Space::P2)));
}

TEST_CASE("composition is associative on random quadratic maps") {
    std::mt19937_64 rng(9);
    auto rnd = [&]() {
        std::vector<Poly> c;
        for (int i = 0; i < 3; ++i) {
            Poly p;
            for (auto m : {b0 * b0, b0 * b1, b1 * b2, b2 * b2}) p += m * Poly(random_int(rng, -3, 3));
            if (p.is_zero()) p = b0 * b1;
            c.push_back(p);
        }
        return RationalMap(Space::P2, Space::P2, c);
    };
    for (int it = 0; it < 4; ++it) {
        auto f = rnd(), g = rnd(), h = rnd();
        CHECK(map_equal(compose(f, compose(g, h)), compose(compose(f, g), h)));
    }
}

TEST_CASE("map equality") {
    RationalMap phi = phi_tilde();
    CHECK(map_equal(phi, phi));
    std::vector<Poly> scaled;
    for (const auto& c : phi.comps()) scaled.push_back(c * (lam + 3));
    CHECK(map_equal(phi, RationalMap(Space::P2, Space::P1xP1, scaled)));
    std::vector<Poly> off = phi.comps();
    off[0] += Poly(1) * b0;
    CHECK_FALSE(map_equal(phi, RationalMap(Space::P2, Space::P1xP1, off)));
    CHECK(find_inequality_witness(phi, RationalMap(Space::P2, Space::P1xP1, off), 3, 5).has_value());
}

TEST_CASE("lines through points") {
    auto e0 = ProjPoint::p2(Poly(1), Poly(0), Poly(0)), e2 = ProjPoint::p2(Poly(0), Poly(0), Poly(1));
    CHECK(line_through(e0, e2).poly == b1);
    auto dt = ProjPoint::p2(Poly(1), t, t * t);
    auto l0t = line_through(e0, dt);
    CHECK((l0t.poly == t * b1 - b2 || l0t.poly == b2 - t * b1));
    auto d1 = ProjPoint::p2(Poly(1), Poly(1), Poly(1)), dl = ProjPoint::p2(Poly(1), lam, lam * lam);
    CHECK(line_through(d1, dl).poly == lam * b0 - (lam + 1) * b1 + b2);
    CHECK_THROWS_AS(line_through(d1, ProjPoint::p2(Poly(2), Poly(2), Poly(2))), CoincidentPoints);
}

TEST_CASE("intersection multiplicities along rulings") {
    BiCurve g(gamma_hom());
    CHECK(g.dz == 2);
    CHECK(g.dw == 2);
    Ruling at1{Ruling::Kind::vertical, pt(1, 1)};
    CHECK(intersection_multiplicity_line(g, at1, ProjPoint::p1(t - lam, t - 1)) == 2);
    Ruling atinf{Ruling::Kind::vertical, ProjPoint::p1_infinity()};
    CHECK(intersection_multiplicity_line(g, atinf, ProjPoint::p1(t, Poly(1))) == 2);
    CHECK_THROWS_AS(intersection_multiplicity_line(g, at1, pt(5, 1)), PointNotOnCurve);
    // generic vertical line at lambda=2, t=5, z=3: w-roots are simple and sum to 2
    BiCurve g25(gamma_hom().eval_partial({{Var::lambda, Scalar(2)}, {Var::t, Scalar(5)}}));
    int checked = 0;
    for (long q = 1; q <= 40 && checked < 3; ++q)
    for (long p = -80; p <= 80 && checked < 3; ++p) {
        if (std::gcd(p, q) != 1 || (q == 1 && (p == 0 || p == 1 || p == 2))) continue;
        Ruling r{Ruling::Kind::vertical, pt(p, q)};
        Poly f = restrict_to_ruling(g25, r);
        std::vector<exact::RationalP1> roots;
        try {
            roots = exact::binary_form_roots(f, Var::w0, Var::w1);
        } catch (const exact::IrrationalRoot&) {
            continue;
        }
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        int total = 0;
        for (auto& w : roots) {
            int k = intersection_multiplicity_line(g25, r, ProjPoint::p1(Poly(w.a), Poly(w.b)));
            CHECK(k == 1);
            total += k;
        }
        CHECK(total == 2);
        ++checked;
    }
    CHECK(checked == 3);
}

TEST_CASE("critical locus") {
    PlaneCurve crit = critical_locus(phi_tilde());
    CHECK(crit.degree == 3);
    Poly s = sigma_cubic();
    CHECK(crit.poly * s.leading_coeff() == s * crit.poly.leading_coeff());
    CHECK(crit.contains(ProjPoint::p2(Poly(1), Poly(1), Poly(1))));
    // an unramified map: product of two linear projections, critical only
    // along the line it contracts
    RationalMap flat(Space::P2, Space::P1xP1, {b0, b1, b0, b2});
    PlaneCurve c = critical_locus(flat);
    CHECK(c.degree == 1);
    CHECK(strip_factors(c.poly, {b0}).is_constant());
}

TEST_CASE("contraction detection") {
    RationalMap phi = phi_tilde();
    auto e0 = ProjPoint::p2(Poly(1), Poly(0), Poly(0)), dt = ProjPoint::p2(Poly(1), t, t * t);
    PlaneCurve l0t = line_through(e0, dt);
    CHECK_FALSE(contracts_to(phi, l0t).has_value());
    auto img = image_on_curve(phi, parametrize(l0t));
    auto z = constant_image(img[0], Space::P1);
    REQUIRE(z.has_value());
    CHECK(*z == pt(0, 1));  // inside the vertical line z = 0
    CHECK_FALSE(contracts_to(RationalMap::identity(Space::P2), l0t).has_value());
    RationalMap q(Space::P2, Space::P2, {b1 * b2, b0 * b2, b0 * b1});
    auto p = contracts_to(q, PlaneCurve(b0));
    REQUIRE(p.has_value());
    CHECK(*p == e0);
    // conic through (1:0:0), parametrized from there
    PlaneCurve conic(b1 * b1 - b0 * b2);
    auto par = parametrize(conic);
    CHECK(image_inside(par, Space::P2, conic.poly));
    CHECK_THROWS_AS(parametrize(PlaneCurve(sigma_cubic())), NoRationalParametrization);
}

TEST_CASE("exceptional curve images") {
    // blowing up (1:0:0) under the standard quadratic involution gives the line b0 = 0
    RationalMap q(Space::P2, Space::P2, {b1 * b2, b0 * b2, b0 * b1});
    auto img = exceptional_image(q, ProjPoint::p2(Poly(1), Poly(0), Poly(0)));
    CHECK(image_inside(img[0], Space::P2, b0));
    // for the ruled map, the base point D_1 goes to the vertical line z = 1
    auto ex = exceptional_image(phi_tilde(), ProjPoint::p2(Poly(1), Poly(1), Poly(1)));
    auto z = constant_image(ex[0], Space::P1);
    REQUIRE(z.has_value());
    CHECK(*z == pt(1, 1));
    CHECK_FALSE(constant_image(ex[1], Space::P1).has_value());
}

TEST_CASE("curve and map json round trip") {
    BiCurve g(gamma_hom());
    auto j = to_json(g);
    CHECK(j["kind"] == "bicurve");
    CHECK(bicurve_from_json(j).poly == g.poly);
    auto m = phi_tilde();
    CHECK(map_equal(map_from_json(to_json(m)), m));
    PlaneCurve c(sigma_cubic());
    CHECK(planecurve_from_json(to_json(c)).poly == c.poly);
}
