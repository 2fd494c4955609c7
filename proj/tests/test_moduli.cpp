#include "parmod/moduli/action.hpp"
#include "parmod/moduli/phiw.hpp"
#include "parmod/moduli/theta.hpp"
#include "parmod/moduli/torelli.hpp"

#include <doctest.h>

using namespace parmod;
using namespace parmod::moduli;
using exact::RationalP1;

namespace {

Scalar q(long n, long d = 1) {
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

Poly V(Var v) { return Poly::var(v); }

ModuliParams sym() { return ModuliParams::make_symbolic(); }
ModuliParams at(const Scalar& l, const Scalar& t) { return ModuliParams::specialized(l, t); }

ProjPoint zw(const Scalar& z, const Scalar& w) {
    return ProjPoint::pair(ProjPoint::p1(Poly(z), Poly(1)), ProjPoint::p1(Poly(w), Poly(1)));
}

bool proportional(const Poly& a, const Poly& b) { return a.scaled(b.leading_coeff()) == b.scaled(a.leading_coeff()); }

}  // namespace

TEST_CASE("parameters and special points") {
    CHECK_THROWS_AS(at(0, 5), DegenerateParams);
    CHECK_THROWS_AS(at(1, 5), DegenerateParams);
    CHECK_THROWS_AS(at(2, 2), DegenerateParams);
    CHECK_THROWS_AS(at(2, 1), DegenerateParams);
    CHECK_THROWS_AS(at(2, 0), DegenerateParams);
    CHECK_THROWS_AS(ModuliParams::specialized(2, 5, q(3)), DegenerateParams);
    CHECK_NOTHROW(ModuliParams::specialized(-6, 8, q(28)));

    auto pts = special_points(at(2, 5));
    CHECK(pts[2] == ProjPoint::p2(Poly(1), Poly(2), Poly(4)));
    CHECK(pts[4] == ProjPoint::p2(Poly(1), Poly(5), Poly(25)));

    Poly conic = V(Var::b1) * V(Var::b1) - V(Var::b0) * V(Var::b2);
    CHECK(proportional(standard_conic(sym()).poly, conic));
    CHECK(proportional(standard_conic(at(2, 5)).poly, conic));
    CHECK(proportional(standard_line(Label::zero, Label::infinity, sym()).poly, V(Var::b1)));
    CHECK(standard_lines(sym()).size() == 10);
    CHECK(omega().size() == 16);
    CHECK(omega_index(ConfigObject::line(Label::t, Label::zero)) == omega_index(ConfigObject::line(Label::zero, Label::t)));
}

TEST_CASE("gamma and sigma") {
    auto g = gamma_curve(sym());
    CHECK(g.dz == 2);
    CHECK(g.dw == 2);
    // (inf, t) with vertical multiplicity 2
    auto p = sym();
    CHECK(proj::intersection_multiplicity_line(g, {proj::Ruling::Kind::vertical, ProjPoint::p1_infinity()},
                                               ProjPoint::p1(p.t, Poly(1))) == 2);
    Poly swapped = g.poly.subs({{Var::z0, V(Var::w0)}, {Var::z1, V(Var::w1)}, {Var::w0, V(Var::z0)}, {Var::w1, V(Var::z1)}});
    CHECK(swapped == g.poly);
    auto s = sigma_cubic(sym());
    CHECK(s.degree == 3);
    for (const auto& d : special_points(sym())) CHECK(s.contains(d));
    // printed tau differs from the shipped one only in tau2
    CHECK(Formulas::printed().tau[2] != Formulas::shipped().tau[2]);
    CHECK(Formulas::printed().tau[0] == Formulas::shipped().tau[0]);
}

TEST_CASE("named maps") {
    auto p = sym();
    auto sw = named_map(MapTag::swap, p);
    CHECK(is_identity(proj::compose(sw, sw), 1));
    auto s0 = named_map(MapTag::sigma0, p);
    CHECK(is_identity(proj::compose(s0, s0, strip_options(p)), 2));
    auto phi = named_map(MapTag::phi_tilde, p);
    auto tau = named_map(MapTag::tau, p);
    CHECK(proj::map_equal(proj::compose(phi, tau), phi, 3));
    auto bad = named_map(MapTag::tau, p, Formulas::printed());
    CHECK_FALSE(proj::map_equal(compose_raw(phi, bad), phi, 3));
    for (Label k : kBranchLabels)
        CHECK(proj::map_equal(proj::compose(phi, named_map(sigma_tag(k), p)),
                              proj::compose(named_map(twist_tag(k), p), phi), 4));
    CHECK(proj::map_equal(proj::compose(phi, named_map(MapTag::psiT, p)), proj::compose(sw, phi), 5));
    CHECK(map_from_name("sigmaLambda") == MapTag::sigma_lambda);
    CHECK_THROWS(map_from_name("nope"));
    // Phi-tilde(1:0:1) at lambda=2, t=3
    auto phi23 = named_map(MapTag::phi_tilde, at(2, 3));
    auto img = phi23.apply(ProjPoint::p2(Poly(1), Poly(0), Poly(1)));
    CHECK(img == zw(q(-1, 3), 0));
    CHECK_THROWS_AS(phi23.apply(ProjPoint::p2(Poly(1), Poly(0), Poly(0))), proj::Undefined);
}

TEST_CASE("phi_W formulas and derivation") {
    auto p = sym();
    auto f = phiW_UC(p);
    CHECK(f.first.subs({{Var::c, RatFunc(Poly(1))}}).is_zero());
    CHECK(f.first.subs({{Var::c, RatFunc(Poly(0))}}) == RatFunc(Poly(1)));
    CHECK(f.second.subs({{Var::l, RatFunc(Poly(0))}}).is_zero());
    CHECK(phiW_printed(p).second.subs({{Var::l, RatFunc(Poly(0))}}).is_zero());

    auto d = derive_phiW(p, V(Var::c), V(Var::l));
    CHECK(same_value(d.first, f.first));
    CHECK(same_value(d.second, f.second));
    CHECK_FALSE(same_value(d.second, phiW_printed(p).second));
    // c = lambda sends the intercept to infinity
    auto dl = derive_phiW(p, p.lambda, V(Var::l));
    CHECK(dl.first.is_infinity());

    auto ds = derive_phiW(at(2, 5), Poly(3), Poly(7));
    CHECK(same_value(ds.first, RatFunc(Poly(4))));  // 2(3-1)/(3-2)
}

TEST_CASE("theta change") {
    elliptic::CurveParams c(-6);
    auto r = elliptic::EllipticPoint::affine(c, 2, 4);
    auto t1 = elliptic::group_add(c, r, r);
    auto th = theta_change(c, t1, r);
    CHECK(th.theta1.apply(ProjPoint::p1(Poly(th.p_images[2].a), Poly(th.p_images[2].b))) ==
          ProjPoint::p1(Poly(-6), Poly(1)));
    CHECK(theta_literal_image(c, r) == RationalP1::finite(q(-54, 121)));
    CHECK_THROWS_AS(theta_change(c, t1, elliptic::EllipticPoint::infinity()), InvalidRoot);
    CHECK_THROWS_AS(theta_change(c, t1, t1), InvalidRoot);

    auto p = ModuliParams::specialized(-6, t1.x(), t1.y());
    CHECK_NOTHROW(theta_change(p, r));
}

TEST_CASE("torelli reconstruction") {
    auto g = gamma_curve(at(2, 5));
    auto res = torelli_reconstruct(g);
    bool has = false;
    for (const auto& m : res.members) has = has || (m.first == 2 && m.second == 5);
    CHECK(has);

    proj::MoebiusMap mz(Poly(2), Poly(1), Poly(1), Poly(3)), mw(Poly(-1), Poly(4), Poly(5), Poly(2));
    auto moved = torelli_reconstruct(transform(g, mz, mw));
    CHECK(moved.lambda == res.lambda);
    CHECK(moved.t == res.t);
    CHECK(moved.members == res.members);
    // the normalizing pair carries the moved curve back to a standard one
    auto back = transform(transform(g, mz, mw), moved.mz, moved.mw);
    CHECK(proportional(back.poly, gamma_curve(at(moved.lambda, moved.t)).poly));

    Poly degenerate = V(Var::z0).pow(2) * V(Var::w0).pow(2) + V(Var::z1).pow(2) * V(Var::w1).pow(2);
    CHECK_THROWS_AS(torelli_reconstruct(BiCurve(degenerate)), NotGammaType);
    // discriminant -4 (z^2 - 2)(z^2 - 3)
    Poly irr = (V(Var::z0).pow(2) - 2 * V(Var::z1).pow(2)) * V(Var::w0).pow(2) +
               (V(Var::z0).pow(2) - 3 * V(Var::z1).pow(2)) * V(Var::w1).pow(2);
    CHECK_THROWS_AS(torelli_reconstruct(BiCurve(irr)), IrrationalBranch);
    CHECK(numden_less(q(-1), q(1, 2)));
    CHECK(numden_less(q(1, 2), q(1, 3)));
}

TEST_CASE("action on the sixteen curves") {
    auto p = sym();
    for (MapTag m : {MapTag::tau, MapTag::sigma0, MapTag::sigma1, MapTag::sigma_lambda, MapTag::psiT}) {
        auto chk = check_pairing(named_map(m, p), shipped_action(m), p);
        INFO(map_name(m));
        for (const auto& s : chk.mismatches) INFO(s);
        CHECK(chk.ok);
    }
    CHECK(check_pairing(named_map(MapTag::tau, p), printed_action(MapTag::tau), p).ok);
    CHECK(check_pairing(named_map(MapTag::psiT, p), printed_action(MapTag::psiT), p).ok);
    auto s0 = check_pairing(named_map(MapTag::sigma0, p), printed_action(MapTag::sigma0), p);
    CHECK_FALSE(s0.ok);
    CHECK(s0.mismatches.size() == 8);

    auto phi = named_map(MapTag::phi_tilde, p);
    for (const auto& [o, line] : expected_phi_images()) {
        auto img = phi_image(phi, o, p);
        INFO(o.name());
        REQUIRE(img);
        CHECK(*img == line);
    }
}

TEST_CASE("group closure") {
    auto p = sym();
    auto opts = strip_options(p);
    std::vector<std::pair<std::string, RationalMap>> gens;
    for (MapTag m : {MapTag::sigma0, MapTag::sigma1, MapTag::psiT, MapTag::tau}) gens.push_back({map_name(m), named_map(m, p)});
    auto g = closure(gens, opts, 40, 7);
    CHECK_FALSE(g.truncated);
    CHECK(g.elements.size() == 16);

    std::vector<std::pair<std::string, RationalMap>> tw;
    for (MapTag m : {MapTag::twist0, MapTag::twist1, MapTag::swap}) tw.push_back({map_name(m), named_map(m, p)});
    auto h = closure(tw, {}, 40, 7);
    CHECK(h.elements.size() == 8);
}

TEST_CASE("double cover and Segre model") {
    auto p = sym();
    Poly disc = exact::binary_discriminant(fiber_quadratic(p), Var::u, Var::v, 2);
    Poly gam = gamma_curve(p).poly;
    CHECK(proportional(disc, gam));

    auto s = at(2, 5);
    auto on = rational_points_on_gamma(s, Formulas::shipped(), 12);
    CHECK(on.size() >= 6);
    for (const auto& pt : on)
        if (!pt.coords()[3].is_zero()) CHECK(fiber_size(s, pt) == 1);
    CHECK(fiber_size(s, zw(3, 7)) == 2);

    auto m = segre_model(s);
    auto gs = gamma_curve(s).poly;
    Poly pulled = m.g.subs({{Var::u0, V(Var::z0) * V(Var::w0)},
                            {Var::u1, V(Var::z0) * V(Var::w1)},
                            {Var::u2, V(Var::z1) * V(Var::w0)},
                            {Var::u3, V(Var::z1) * V(Var::w1)}});
    CHECK(pulled == gs);
    for (const auto& pt : on) CHECK(segre_rank_two(m, segre_point(pt), 0));
}
