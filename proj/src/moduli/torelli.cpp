#include "parmod/moduli/torelli.hpp"

#include <algorithm>

namespace parmod::moduli {

namespace {

using exact::RationalP1;

Poly V(Var v) { return Poly::var(v); }

ProjPoint as_point(const RationalP1& p) { return ProjPoint::p1(Poly(p.a), Poly(p.b)); }

RationalP1 as_rational(const ProjPoint& p) {
    return RationalP1{p.coords()[0].constant_value(), p.coords()[1].constant_value()}.normalized();
}

std::vector<RationalP1> four_distinct(const Poly& disc, Var v0, Var v1) {
    if (disc.is_zero()) throw NotGammaType("discriminant vanishes identically");
    std::vector<RationalP1> roots;
    try {
        roots = exact::binary_form_roots(disc, v0, v1);
    } catch (const exact::IrrationalRoot&) {
        throw IrrationalBranch();
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw NotGammaType("repeated branch point " + roots[i].str());
    if (roots.size() != 4) throw NotGammaType("discriminant is not a quartic");
    return roots;
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.scaled(b.leading_coeff()) == b.scaled(a.leading_coeff());
}

proj::MoebiusMap normalizer(const RationalP1& a0, const RationalP1& a1, const RationalP1& ainf) {
    return proj::moebius_through({{{as_point(a0), ProjPoint::p1(Poly(0), Poly(1))},
                                   {as_point(a1), ProjPoint::p1(Poly(1), Poly(1))},
                                   {as_point(ainf), ProjPoint::p1_infinity()}}});
}

}  // namespace

bool numden_less(const Scalar& a, const Scalar& b) {
    if (a.get_num() != b.get_num()) return a.get_num() < b.get_num();
    return a.get_den() < b.get_den();
}

bool numden_less(const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b) {
    if (a.first != b.first) return numden_less(a.first, b.first);
    return numden_less(a.second, b.second);
}

std::vector<RationalP1> vertical_tangent_abscissas(const BiCurve& curve) {
    return exact::binary_form_roots(exact::binary_discriminant(curve.poly, Var::w0, Var::w1, 2), Var::z0, Var::z1);
}

std::vector<RationalP1> horizontal_tangent_ordinates(const BiCurve& curve) {
    return exact::binary_form_roots(exact::binary_discriminant(curve.poly, Var::z0, Var::z1, 2), Var::w0, Var::w1);
}

BiCurve transform(const BiCurve& curve, const proj::MoebiusMap& mz, const proj::MoebiusMap& mw) {
    const auto iz = mz.inverse(), iw = mw.inverse();
    const auto& a = iz.entries();
    const auto& b = iw.entries();
    Poly p = curve.poly.subs({{Var::z0, a[0] * V(Var::z0) + a[1] * V(Var::z1)},
                              {Var::z1, a[2] * V(Var::z0) + a[3] * V(Var::z1)},
                              {Var::w0, b[0] * V(Var::w0) + b[1] * V(Var::w1)},
                              {Var::w1, b[2] * V(Var::w0) + b[3] * V(Var::w1)}});
    return BiCurve(p.primitive());
}

TorelliResult torelli_reconstruct(const BiCurve& curve) {
    if (curve.dz != 2 || curve.dw != 2) throw NotGammaType("bidegree is not (2,2)");
    for (Var v : curve.poly.variables())
        if (v != Var::z0 && v != Var::z1 && v != Var::w0 && v != Var::w1)
            throw Error("torelli_reconstruct needs rational coefficients");
    auto zr = four_distinct(exact::binary_discriminant(curve.poly, Var::w0, Var::w1, 2), Var::z0, Var::z1);
    auto wr = four_distinct(exact::binary_discriminant(curve.poly, Var::z0, Var::z1, 2), Var::w0, Var::w1);

    std::vector<TorelliResult> found;
    std::array<std::size_t, 4> pz{0, 1, 2, 3};
    do {
        auto mz = normalizer(zr[pz[0]], zr[pz[1]], zr[pz[3]]);
        RationalP1 lam = as_rational(mz.apply(as_point(zr[pz[2]])));
        if (lam.is_infinity()) continue;
        std::array<std::size_t, 4> pw{0, 1, 2, 3};
        do {
            auto mw = normalizer(wr[pw[0]], wr[pw[1]], wr[pw[3]]);
            if (as_rational(mw.apply(as_point(wr[pw[2]]))) != lam) continue;
            BiCurve moved = transform(curve, mz, mw);
            // The tangency ordinate over z = infinity is a double root.
            Poly over_inf = moved.poly.subs({{Var::z0, Poly(1)}, {Var::z1, Poly(0)}});
            if (over_inf.is_zero()) continue;
            auto roots = exact::binary_form_roots(over_inf, Var::w0, Var::w1);
            if (roots.size() != 2 || roots[0] != roots[1] || roots[0].is_infinity()) continue;
            Scalar t = roots[0].a / roots[0].b;
            ModuliParams p;
            try {
                p = ModuliParams::specialized(lam.a, t);
            } catch (const DegenerateParams&) {
                continue;
            }
            if (!proportional(moved.poly, gamma_curve(p).poly)) continue;
            found.push_back({lam.a, t, mz, mw, {}});
        } while (std::next_permutation(pw.begin(), pw.end()));
    } while (std::next_permutation(pz.begin(), pz.end()));

    if (found.empty()) throw NotGammaType("no ordering reproduces the standard curve");
    auto key = [](const TorelliResult& r) { return std::make_pair(r.lambda, r.t); };
    TorelliResult best = *std::min_element(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        return numden_less(key(a), key(b));
    });
    for (const auto& r : found) best.members.push_back(key(r));
    std::sort(best.members.begin(), best.members.end(), [](const auto& a, const auto& b) { return numden_less(a, b); });
    best.members.erase(std::unique(best.members.begin(), best.members.end()), best.members.end());
    return best;
}

exact::Json to_json(const TorelliResult& r) {
    auto moeb = [](const proj::MoebiusMap& m) {
        exact::Json a = exact::Json::array();
        for (const auto& e : m.entries()) a.push_back(exact::scalar_json(e.constant_value()));
        return a;
    };
    exact::Json members = exact::Json::array();
    for (const auto& [l, t] : r.members) members.push_back({exact::scalar_json(l), exact::scalar_json(t)});
    return {{"lambda", exact::scalar_json(r.lambda)},
            {"t", exact::scalar_json(r.t)},
            {"moebius_z", moeb(r.mz)},
            {"moebius_w", moeb(r.mw)},
            {"class", members}};
}

}  // namespace parmod::moduli
