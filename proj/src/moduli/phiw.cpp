#include "parmod/moduli/phiw.hpp"

namespace parmod::moduli {

namespace {

Poly V(Var v) { return Poly::var(v); }

struct BiMonomial {
    int i, j;  // z0^i z1^(dz-i) w0^j w1^(dw-j)
};

Poly monomial(const BiMonomial& m, int dz, int dw) {
    return V(Var::z0).pow(unsigned(m.i)) * V(Var::z1).pow(unsigned(dz - m.i)) * V(Var::w0).pow(unsigned(m.j)) *
           V(Var::w1).pow(unsigned(dw - m.j));
}

// One row of the linear system: the functional q -> q(point) applied to each
// basis monomial after an optional differentiation.
std::vector<Poly> row(const std::vector<Poly>& basis, const std::optional<Var>& d, const ProjPoint& z,
                      const ProjPoint& w) {
    std::vector<std::pair<Var, Poly>> sub{{Var::z0, z.coords()[0]}, {Var::z1, z.coords()[1]},
                                          {Var::w0, w.coords()[0]}, {Var::w1, w.coords()[1]}};
    std::vector<Poly> out;
    for (const auto& m : basis) out.push_back((d ? m.derivative(*d) : m).subs(sub));
    return out;
}

void vertical_tangency(exact::PolyMatrix& rows, const std::vector<Poly>& basis, const ProjPoint& z,
                       const ProjPoint& w) {
    rows.push_back(row(basis, std::nullopt, z, w));
    rows.push_back(row(basis, Var::w0, z, w));
    rows.push_back(row(basis, Var::w1, z, w));
}

void node(exact::PolyMatrix& rows, const std::vector<Poly>& basis, const ProjPoint& z, const ProjPoint& w) {
    rows.push_back(row(basis, std::nullopt, z, w));
    for (Var v : {Var::z0, Var::z1, Var::w0, Var::w1}) rows.push_back(row(basis, v, z, w));
}

Poly fit(const exact::PolyMatrix& rows, const std::vector<Poly>& basis) {
    auto k = exact::kernel(rows);
    if (k.size() != 1) throw UnderdeterminedFit(k.size());
    Poly f;
    for (std::size_t i = 0; i < basis.size(); ++i) f += k[0][i] * basis[i];
    return f.primitive();
}

// Root of the linear binary form a z0 + b z1 as (-b : a).
ProjPoint linear_root(const Poly& form) {
    auto cs = exact::binary_coefficients(form, Var::z0, Var::z1, 1);
    return ProjPoint::p1(-cs[0], cs[1]);
}

ProjPoint reduced(const ProjPoint& p) {
    Poly g = exact::gcd(p.coords()[0], p.coords()[1]);
    if (g.is_zero() || g.is_constant()) return p;
    return ProjPoint::p1(exact::exact_divide(p.coords()[0], g), exact::exact_divide(p.coords()[1], g));
}

}  // namespace

PhiW phiW_UC(const ModuliParams& p) {
    const Poly L = p.lambda, t = p.t, c = V(Var::c), l = V(Var::l);
    RatFunc first(L * (c - 1), c - L);
    RatFunc second(L * l * ((L - 1) * (l - 1) + (t - 1) * (1 - c)), L * (t * (l - c) + l * (c - 1)) + c * t * (1 - l));
    return {first, second};
}

PhiW phiW_printed(const ModuliParams& p) {
    const Poly L = p.lambda, t = p.t, c = V(Var::c), l = V(Var::l);
    RatFunc first(L * (c - 1), c - L);
    RatFunc second(L * l * (L * (l - 1) + t * (1 - c)), L * (t * (l - c) + l * (c - 1)) + c * t * (1 - l));
    return {first, second};
}

DerivedPhiW derive_phiW(const ModuliParams& p, const Poly& c, const Poly& l) {
    const std::array<std::pair<ProjPoint, ProjPoint>, 4> tangencies{{
        {ProjPoint::p1(Poly(0), Poly(1)), ProjPoint::p1(Poly(0), Poly(1))},
        {ProjPoint::p1(Poly(1), Poly(1)), ProjPoint::p1(Poly(1), Poly(1))},
        {ProjPoint::p1(p.lambda, Poly(1)), ProjPoint::p1(c, Poly(1))},
        {ProjPoint::p1_infinity(), ProjPoint::p1_infinity()},
    }};

    std::vector<Poly> b22, b32;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) b22.push_back(monomial({i, j}, 2, 2));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 2; ++j) b32.push_back(monomial({i, j}, 3, 2));

    exact::PolyMatrix r22, r32;
    for (const auto& [z, w] : tangencies) {
        vertical_tangency(r22, b22, z, w);
        vertical_tangency(r32, b32, z, w);
    }
    node(r32, b32, ProjPoint::p1(p.t, Poly(1)), ProjPoint::p1(l, Poly(1)));

    DerivedPhiW out{ProjPoint::p1_infinity(), ProjPoint::p1_infinity(), fit(r22, b22), fit(r32, b32)};

    // w = infinity meets the (2,2) curve at z = infinity and at z1.
    Poly on_inf = out.fit22.subs({{Var::w0, Poly(1)}, {Var::w1, Poly(0)}});
    out.first = reduced(linear_root(exact::exact_divide(on_inf, V(Var::z1))));

    // w = l meets the (3,2) curve doubly at z = t and once more.
    Poly on_l = out.fit32.subs({{Var::w0, l}, {Var::w1, Poly(1)}});
    Poly nodal = (V(Var::z0) - p.t * V(Var::z1)).pow(2);
    out.second = reduced(linear_root(exact::exact_divide(on_l, nodal)));
    return out;
}

bool same_value(const ProjPoint& pt, const RatFunc& f) {
    return pt.coords()[0] * f.den() == pt.coords()[1] * f.num();
}

}  // namespace parmod::moduli
