#include "parmod/moduli/action.hpp"

#include "parmod/elliptic/curve.hpp"

namespace parmod::moduli {

namespace {

Poly V(Var v) { return Poly::var(v); }

using K = ConfigObject;

K E(Label i) { return K::exceptional(i); }
K Ln(Label i, Label j) { return K::line(i, j); }

constexpr Label L0 = Label::zero, L1 = Label::one, LL = Label::lambda, LI = Label::infinity, LT = Label::t;

// The other two branch labels, in label order.
std::pair<Label, Label> others(Label k) {
    std::vector<Label> o;
    for (Label x : kBranchLabels)
        if (x != k) o.push_back(x);
    return {o[0], o[1]};
}

Label sigma_label(MapTag tag) {
    switch (tag) {
        case MapTag::sigma0: return L0;
        case MapTag::sigma1: return L1;
        case MapTag::sigma_lambda: return LL;
        default: break;
    }
    throw Error("not a sigma map");
}

bool is_all_zero(const std::vector<Poly>& g) {
    for (const auto& p : g)
        if (!p.is_zero()) return false;
    return true;
}

Poly object_equation(const K& o, const ModuliParams& p) {
    if (o.kind == K::Kind::line) return standard_line(o.i, o.j, p).poly;
    return standard_conic(p).poly;
}

std::vector<std::vector<Poly>> object_image(const RationalMap& m, const K& o, const ModuliParams& p) {
    switch (o.kind) {
        case K::Kind::exceptional: return proj::exceptional_image(m, special_point(o.i, p));
        case K::Kind::line: return proj::image_on_curve(m, proj::parametrize(standard_line(o.i, o.j, p)));
        case K::Kind::conic:
            return proj::image_on_curve(m, proj::parametrize(standard_conic(p), special_point(L0, p)));
        case K::Kind::point: break;
    }
    throw Error("points have no curve image");
}

}  // namespace

std::optional<ConfigObject> image_of(const RationalMap& m, const ConfigObject& o, const ModuliParams& p) {
    if (m.source() != Space::P2 || m.target() != Space::P2) throw Error("image_of needs a self-map of P2");
    auto img = object_image(m, o, p).at(0);
    if (is_all_zero(img)) return std::nullopt;
    if (auto q = proj::constant_image(img, Space::P2)) {
        for (Label k : kLabels)
            if (*q == special_point(k, p)) return K::exceptional(k);
        return std::nullopt;
    }
    for (const auto& cand : omega()) {
        if (cand.kind == K::Kind::exceptional) continue;
        if (proj::image_inside(img, Space::P2, object_equation(cand, p))) return cand;
    }
    return std::nullopt;
}

Pairing shipped_action(MapTag tag) {
    switch (tag) {
        case MapTag::tau:
            return {{E(LT), K::conic()},   {E(L0), Ln(L0, LT)},     {E(L1), Ln(L1, LT)},
                    {E(LL), Ln(LL, LT)},   {E(LI), Ln(LI, LT)},     {Ln(L0, LI), Ln(L1, LL)},
                    {Ln(L1, LI), Ln(L0, LL)}, {Ln(LL, LI), Ln(L0, L1)}};
        case MapTag::psiT:
            return {{Ln(LT, LI), K::conic()}, {E(LT), E(LI)},           {Ln(L0, L1), E(LL)},
                    {Ln(L0, LL), E(L1)},      {Ln(L1, LL), E(L0)},      {Ln(L0, LT), Ln(L0, LI)},
                    {Ln(L1, LT), Ln(L1, LI)}, {Ln(LL, LT), Ln(LL, LI)}};
        case MapTag::sigma0:
        case MapTag::sigma1:
        case MapTag::sigma_lambda: {
            Label k = sigma_label(tag);
            auto [i, j] = others(k);
            return {{E(k), Ln(LT, LI)},         {Ln(k, LT), E(LI)},     {Ln(k, LI), E(LT)},
                    {E(i), E(j)},               {Ln(i, LT), Ln(j, LT)}, {Ln(i, LI), Ln(j, LI)},
                    {Ln(k, i), Ln(k, j)},       {K::conic(), Ln(i, j)}};
        }
        default: break;
    }
    throw Error("no action table for " + map_name(tag));
}

Pairing printed_action(MapTag tag) {
    switch (tag) {
        case MapTag::tau: return shipped_action(tag);
        case MapTag::psiT:
            return {{Ln(LT, LI), K::conic()}, {E(LT), E(LI)}, {Ln(L0, L1), E(LL)}, {Ln(L0, LL), E(L1)}, {Ln(L1, LL), E(L0)}};
        case MapTag::sigma0:
        case MapTag::sigma1:
        case MapTag::sigma_lambda: {
            Label k = sigma_label(tag);
            auto [i, j] = others(k);
            return {{E(k), Ln(LT, LI)},   {Ln(k, LT), E(LI)},   {Ln(i, LI), Ln(j, LT)}, {Ln(j, LI), Ln(i, LT)},
                    {Ln(i, k), E(i)},     {Ln(j, k), E(j)},     {K::conic(), Ln(i, j)}};
        }
        default: break;
    }
    throw Error("no action table for " + map_name(tag));
}

PairingCheck check_pairing(const RationalMap& m, const Pairing& rows, const ModuliParams& p) {
    PairingCheck out;
    auto one = [&](const K& a, const K& b) {
        auto img = image_of(m, a, p);
        if (img && *img == b) return;
        out.ok = false;
        out.mismatches.push_back(a.name() + " -> " + (img ? img->name() : std::string("?")) + ", expected " + b.name());
    };
    for (const auto& [a, b] : rows) {
        one(a, b);
        one(b, a);
    }
    return out;
}

// ----------------------------------------------------------- phi images

std::string RulingLine::name() const { return std::string(vertical ? "V_" : "H_") + label_name(k); }

std::optional<RulingLine> phi_image(const RationalMap& phi, const ConfigObject& o, const ModuliParams& p) {
    if (phi.source() != Space::P2 || phi.target() != Space::P1xP1) throw Error("phi_image needs a map to P1xP1");
    auto img = object_image(phi, o, p);
    for (std::size_t f = 0; f < 2; ++f) {
        if (is_all_zero(img[f])) continue;
        auto q = proj::constant_image(img[f], Space::P1);
        if (!q) continue;
        for (Label k : {L0, L1, LL, LI})
            if (*q == label_value(k, p)) return RulingLine{f == 0, k};
    }
    return std::nullopt;
}

std::vector<std::pair<ConfigObject, RulingLine>> expected_phi_images() {
    std::vector<std::pair<ConfigObject, RulingLine>> out;
    for (Label i : {L0, L1, LL, LI}) {
        out.push_back({E(i), {true, i}});
        out.push_back({Ln(i, LT), {true, i}});
    }
    out.push_back({E(LT), {false, LI}});
    out.push_back({K::conic(), {false, LI}});
    for (Label i : kBranchLabels) {
        auto [j, k] = others(i);
        out.push_back({Ln(i, LI), {false, i}});
        out.push_back({Ln(j, k), {false, i}});
    }
    return out;
}

// ---------------------------------------------------------- group closure

bool is_identity(const RationalMap& m, std::uint64_t seed) {
    return proj::map_equal(m, RationalMap::identity(m.source()), seed);
}

std::optional<std::size_t> find_element(const std::vector<RationalMap>& elements, const RationalMap& m,
                                        std::uint64_t seed) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (proj::find_inequality_witness(elements[i], m, seed + i, 2)) continue;
        if (proj::map_equal(elements[i], m, seed + i)) return i;
    }
    return std::nullopt;
}

GroupClosure closure(const std::vector<std::pair<std::string, RationalMap>>& gens, const proj::StripOptions& opts,
                     std::size_t limit, std::uint64_t seed) {
    if (gens.empty()) throw Error("closure needs generators");
    GroupClosure g;
    g.elements.push_back(RationalMap::identity(gens[0].second.source()));
    g.words.push_back("");
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (const auto& [name, gen] : gens) {
            RationalMap c = proj::compose(gen, g.elements[i], opts);
            if (find_element(g.elements, c, seed)) continue;
            if (g.elements.size() >= limit) {
                g.truncated = true;
                return g;
            }
            g.elements.push_back(c);
            g.words.push_back(g.words[i].empty() ? name : name + "*" + g.words[i]);
        }
    }
    return g;
}

// ----------------------------------------------------------- double cover

Poly fiber_quadratic(const ModuliParams& p, const Formulas& f) {
    auto phi = named_map(MapTag::phi_tilde, p, f);
    const Poly u = V(Var::u), v = V(Var::v), z0 = V(Var::z0), z1 = V(Var::z1);
    std::vector<std::pair<Var, Poly>> line{{Var::b0, u},
                                           {Var::b1, p.t * u + z1 * v},
                                           {Var::b2, p.t * p.t * u + (p.t * z1 + z0) * v}};
    const auto& c = phi.comps();
    return V(Var::w1) * c[2].subs(line) - V(Var::w0) * c[3].subs(line);
}

int fiber_size(const ModuliParams& p, const ProjPoint& zw, const Formulas& f) {
    Poly q = fiber_quadratic(p, f).subs({{Var::z0, zw.coords()[0]},
                                         {Var::z1, zw.coords()[1]},
                                         {Var::w0, zw.coords()[2]},
                                         {Var::w1, zw.coords()[3]}});
    if (q.is_zero()) return -1;
    auto cs = exact::binary_coefficients(q, Var::u, Var::v, 2);
    int n = exact::binary_discriminant(q, Var::u, Var::v, 2).is_zero() ? 1 : 2;
    if (cs[2].is_zero()) --n;  // D_t itself, the vertex of the pencil
    return n;
}

std::vector<ProjPoint> rational_points_on_gamma(const ModuliParams& p, const Formulas& f, std::size_t want) {
    if (p.symbolic) throw Error("rational points need specialized parameters");
    BiCurve gamma = gamma_curve(p, f);
    std::vector<ProjPoint> out;
    auto add = [&](const ProjPoint& z, const ProjPoint& w) {
        ProjPoint pt = ProjPoint::pair(z, w);
        if (!gamma.contains(pt)) return;
        for (const auto& q : out)
            if (q == pt) return;
        out.push_back(pt);
    };
    ProjPoint tval = label_value(LT, p);
    for (Label k : {L0, L1, LL, LI}) {
        ProjPoint bt = beta_map(k, p).apply(tval);
        add(label_value(k, p), bt);
        add(bt, label_value(k, p));
    }
    for (long d = 1; d <= 12 && out.size() < want; ++d)
        for (long n = -30; n <= 30 && out.size() < want; ++n) {
            Scalar z(n, d);
            z.canonicalize();
            if (z.get_den() != d) continue;
            Poly q = gamma.poly.subs({{Var::z0, Poly(z)}, {Var::z1, Poly(1)}});
            auto cs = exact::binary_coefficients(q, Var::w0, Var::w1, 2);
            Scalar a = cs[2].constant_value(), b = cs[1].constant_value(), c = cs[0].constant_value();
            if (a == 0) continue;
            auto r = elliptic::rational_sqrt(b * b - 4 * a * c);
            if (!r) continue;
            for (int sgn : {1, -1})
                add(ProjPoint::p1(Poly(z), Poly(1)), ProjPoint::p1(Poly((-b + sgn * *r) / (2 * a)), Poly(1)));
        }
    return out;
}

// -------------------------------------------------------------- Segre model

SegreModel segre_model(const ModuliParams& p, const Formulas& f) {
    const Var u[4] = {Var::u0, Var::u1, Var::u2, Var::u3};
    SegreModel m;
    m.f = V(Var::u0) * V(Var::u3) - V(Var::u1) * V(Var::u2);
    // z0^a z1^(2-a) w0^b w1^(2-b) = u(z_first, w_first) * u(z_second, w_second)
    const Poly gamma = gamma_curve(p, f).poly;
    for (const auto& term : gamma.terms()) {
        int a = term.m[Var::z0], b = term.m[Var::w0];
        int zs[2] = {a >= 1 ? 0 : 1, a >= 2 ? 0 : 1};
        int ws[2] = {b >= 1 ? 0 : 1, b >= 2 ? 0 : 1};
        exact::Monomial rest = term.m;
        for (Var v : {Var::z0, Var::z1, Var::w0, Var::w1}) rest.e[exact::slot(v)] = 0;
        unsigned deg = 0;
        for (auto e : rest.e) deg += e;
        rest.deg = static_cast<std::uint16_t>(deg);
        m.g += Poly::monomial(rest, term.c) * V(u[2 * zs[0] + ws[0]]) * V(u[2 * zs[1] + ws[1]]);
    }
    return m;
}

std::vector<Scalar> segre_point(const ProjPoint& zw) {
    const auto& c = zw.coords();
    auto s = [&](std::size_t i) { return c[i].constant_value(); };
    return {s(0) * s(2), s(0) * s(3), s(1) * s(2), s(1) * s(3)};
}

bool segre_rank_two(const SegreModel& m, const std::vector<Scalar>& u, const Scalar& v) {
    const Var uv[4] = {Var::u0, Var::u1, Var::u2, Var::u3};
    exact::Assignment a;
    for (std::size_t i = 0; i < 4; ++i) a.emplace_back(uv[i], u[i]);
    std::vector<Scalar> r1, r2;
    for (Var x : uv) {
        r1.push_back(m.f.derivative(x).eval(a));
        r2.push_back(-m.g.derivative(x).eval(a));
    }
    r1.push_back(0);
    r2.push_back(2 * v);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (r1[i] * r2[j] != r1[j] * r2[i]) return true;
    return false;
}

}  // namespace parmod::moduli
