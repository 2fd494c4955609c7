#include "parmod/moduli/catalog.hpp"

#include "parmod/elliptic/curve.hpp"

#include <sstream>

namespace parmod::moduli {

namespace {

Poly V(Var v) { return Poly::var(v); }

int label_rank(Label k) { return static_cast<int>(k); }

elliptic::Branch branch_of(Label k) {
    switch (k) {
        case Label::zero: return elliptic::Branch::zero;
        case Label::one: return elliptic::Branch::one;
        case Label::lambda: return elliptic::Branch::lambda;
        case Label::infinity: return elliptic::Branch::infinity;
        case Label::t: break;
    }
    throw Error("t is not a branch point");
}

Formulas build_shipped() {
    const Poly b0 = V(Var::b0), b1 = V(Var::b1), b2 = V(Var::b2);
    const Poly z0 = V(Var::z0), z1 = V(Var::z1), w0 = V(Var::w0), w1 = V(Var::w1);
    const Poly L = V(Var::lambda), t = V(Var::t);
    Formulas f;

    Poly lt = b0 * t - b1, mt = b1 * t - b2;
    f.tau[0] = (L * t * b0 * b1 + (t * t - L * t - t) * b0 * b2 - (t * t + L) * b1 * b1 + (L + t + 1) * b1 * b2 - b2 * b2) * lt;
    f.tau[1] = t * (b0 * L - b1 * L - b1 + b2) * lt * mt;
    f.tau[2] = t * mt *
               (L * t * t * b0 * b0 + (-L * t * t - L * t - t * t) * b0 * b1 + (L * t - L + t) * b0 * b2 +
                (L + t * t) * b1 * b1 - t * b1 * b2);

    f.sigma0[0] = (L * b0 + (t - 1 - L) * b1) * (t * b1 - b2);
    f.sigma0[1] = L * (t * b0 - b1) * (t * b1 - b2);
    f.sigma0[2] = L * (t * b0 - b1) * ((t - L + L * t) * b1 - t * b2);

    Poly q1 = t * b0 - (1 + t) * b1 + b2;
    f.sigma1[0] = q1 * ((L - t - 1) * b1 + t * b0);
    f.sigma1[1] = t * (L * b0 - b1) * q1;
    f.sigma1[2] = t * (L * L * t * b0 * b0 + (L * L + t) * b1 * b1 - (L * L + L * t + L * L * t) * b0 * b1 +
                       (L - t + L * t) * b0 * b2 - L * b1 * b2);

    Poly ql = L * t * b0 - (L + t) * b1 + b2;
    f.sigma_lambda[0] = (L * t * b0 + (1 - L - t) * b1) * ql;
    f.sigma_lambda[1] = L * t * (b0 - b1) * ql;
    f.sigma_lambda[2] = L * t * (L * t * b0 * b0 + (1 + L * t) * b1 * b1 - (L + t + L * t) * b0 * b1 +
                                 (L + t - L * t) * b0 * b2 - b1 * b2);

    Poly qp = L * b0 - (1 + L) * b1 + b2;
    f.psiT[0] = (-L - t * t) * b1 * b1 - b2 * b2 + L * t * b0 * b1 + (t * t - t - L * t) * b0 * b2 + (L + t + 1) * b1 * b2;
    f.psiT[1] = t * qp * (t * b1 - b2);
    f.psiT[2] = t * ((t - L + L * t) * b1 - t * b2) * qp;

    f.gamma = t * t * z0 * z0 * w1 * w1 - 2 * t * z0 * z0 * w0 * w1 + t * t * z1 * z1 * w0 * w0 -
              2 * t * z0 * z1 * w0 * w0 + z0 * z0 * w0 * w0 - 2 * L * t * z0 * z1 * w1 * w1 -
              2 * L * t * z1 * z1 * w0 * w1 + 2 * (2 * (L + 1) * t - t * t - L) * z0 * z1 * w0 * w1 +
              L * L * z1 * z1 * w1 * w1;

    f.sigma = -b0 * b0 * b1 * L * t * t + b0 * b0 * b2 * L * t + (L * t * t + L * t + t * t) * b0 * b1 * b1 -
              (t * t + L) * b1 * b1 * b1 - 2 * (L * t + t) * b0 * b1 * b2 + (L + t + 1) * b1 * b1 * b2 +
              t * b0 * b2 * b2 - b1 * b2 * b2;

    f.phi_tilde = {mt, lt, -b1 * (b0 * L - b1 * L - b1 + b2), b1 * b1 - b0 * b2};
    return f;
}

std::vector<Poly> specialize_all(const std::vector<Poly>& ps, const ModuliParams& p) {
    auto a = p.assignment();
    std::vector<Poly> out;
    for (const auto& q : ps) out.push_back(a.empty() ? q : q.eval_partial(a));
    return out;
}

RationalMap plane_map(const std::array<Poly, 3>& c, const ModuliParams& p) {
    return RationalMap(Space::P2, Space::P2, specialize_all({c[0], c[1], c[2]}, p));
}

}  // namespace

// ------------------------------------------------------------- parameters

ModuliParams ModuliParams::make_symbolic() { return ModuliParams{}; }

ModuliParams ModuliParams::specialized(const Scalar& lambda, const Scalar& t, const std::optional<Scalar>& s) {
    if (lambda == 0 || lambda == 1) throw DegenerateParams("lambda must avoid 0 and 1");
    if (t == 0 || t == 1 || t == lambda) throw DegenerateParams("t must avoid 0, 1 and lambda");
    ModuliParams p;
    p.lambda = Poly(lambda);
    p.t = Poly(t);
    p.symbolic = false;
    if (s) {
        if (*s * *s != t * (t - 1) * (t - lambda)) throw DegenerateParams("s^2 differs from t(t-1)(t-lambda)");
        p.s = Poly(*s);
    }
    return p;
}

exact::Assignment ModuliParams::assignment() const {
    if (symbolic) return {};
    exact::Assignment a{{Var::lambda, lambda.constant_value()}, {Var::t, t.constant_value()}};
    if (s) a.emplace_back(Var::s, s->constant_value());
    return a;
}

Scalar ModuliParams::lambda_value() const {
    if (symbolic) throw Error("symbolic parameters have no value");
    return lambda.constant_value();
}

Scalar ModuliParams::t_value() const {
    if (symbolic) throw Error("symbolic parameters have no value");
    return t.constant_value();
}

std::string ModuliParams::str() const {
    if (symbolic) return "symbolic";
    return "lambda=" + lambda.str() + ", t=" + t.str();
}

// ----------------------------------------------------------------- labels

std::string label_name(Label k) {
    switch (k) {
        case Label::zero: return "0";
        case Label::one: return "1";
        case Label::lambda: return "lambda";
        case Label::infinity: return "inf";
        case Label::t: return "t";
    }
    return "?";
}

Label label_from_name(const std::string& s) {
    for (Label k : kLabels)
        if (label_name(k) == s) return k;
    throw Error("unknown label: " + s);
}

ProjPoint label_value(Label k, const ModuliParams& p) {
    switch (k) {
        case Label::zero: return ProjPoint::p1(Poly(0), Poly(1));
        case Label::one: return ProjPoint::p1(Poly(1), Poly(1));
        case Label::lambda: return ProjPoint::p1(p.lambda, Poly(1));
        case Label::infinity: return ProjPoint::p1_infinity();
        case Label::t: return ProjPoint::p1(p.t, Poly(1));
    }
    throw Error("bad label");
}

ConfigObject ConfigObject::line(Label i, Label j) {
    if (i == j) throw Error("a line needs two distinct labels");
    if (label_rank(i) > label_rank(j)) std::swap(i, j);
    return {Kind::line, i, j};
}

bool ConfigObject::operator==(const ConfigObject& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::conic) return true;
    if (kind == Kind::line) return i == o.i && j == o.j;
    return i == o.i;
}

std::string ConfigObject::name() const {
    switch (kind) {
        case Kind::point: return "D_{" + label_name(i) + "}";
        case Kind::exceptional: return "Pi_{" + label_name(i) + "}";
        case Kind::line: return "Pi_{" + label_name(i) + "," + label_name(j) + "}";
        case Kind::conic: return "Pi";
    }
    return "?";
}

const std::vector<ConfigObject>& omega() {
    static const std::vector<ConfigObject> objs = [] {
        std::vector<ConfigObject> v;
        for (Label k : kLabels) v.push_back(ConfigObject::exceptional(k));
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) v.push_back(ConfigObject::line(kLabels[a], kLabels[b]));
        v.push_back(ConfigObject::conic());
        return v;
    }();
    return objs;
}

std::size_t omega_index(const ConfigObject& o) {
    const auto& all = omega();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == o) return i;
    throw Error("not one of the 16 curves: " + o.name());
}

// ------------------------------------------------------ points and curves

ProjPoint special_point(Label k, const ModuliParams& p) {
    switch (k) {
        case Label::zero: return ProjPoint::p2(Poly(1), Poly(0), Poly(0));
        case Label::one: return ProjPoint::p2(Poly(1), Poly(1), Poly(1));
        case Label::lambda: return ProjPoint::p2(Poly(1), p.lambda, p.lambda * p.lambda);
        case Label::infinity: return ProjPoint::p2(Poly(0), Poly(0), Poly(1));
        case Label::t: return ProjPoint::p2(Poly(1), p.t, p.t * p.t);
    }
    throw Error("bad label");
}

std::array<ProjPoint, 5> special_points(const ModuliParams& p) {
    if (!p.symbolic) (void)ModuliParams::specialized(p.lambda_value(), p.t_value());
    return {special_point(Label::zero, p), special_point(Label::one, p), special_point(Label::lambda, p),
            special_point(Label::infinity, p), special_point(Label::t, p)};
}

PlaneCurve standard_line(Label i, Label j, const ModuliParams& p) {
    return proj::line_through(special_point(i, p), special_point(j, p));
}

std::vector<PlaneCurve> standard_lines(const ModuliParams& p) {
    std::vector<PlaneCurve> out;
    for (const auto& o : omega())
        if (o.kind == ConfigObject::Kind::line) out.push_back(standard_line(o.i, o.j, p));
    return out;
}

PlaneCurve standard_conic(const ModuliParams& p) {
    const std::vector<Poly> mons{V(Var::b0) * V(Var::b0), V(Var::b0) * V(Var::b1), V(Var::b0) * V(Var::b2),
                                V(Var::b1) * V(Var::b1), V(Var::b1) * V(Var::b2), V(Var::b2) * V(Var::b2)};
    exact::PolyMatrix rows;
    for (const auto& pt : special_points(p)) {
        std::vector<std::pair<Var, Poly>> sub{{Var::b0, pt.coords()[0]}, {Var::b1, pt.coords()[1]}, {Var::b2, pt.coords()[2]}};
        std::vector<Poly> row;
        for (const auto& m : mons) row.push_back(m.subs(sub));
        rows.push_back(row);
    }
    auto k = exact::kernel(rows);
    if (k.size() != 1) throw DegenerateParams("five points do not determine a unique conic");
    Poly c;
    for (std::size_t i = 0; i < mons.size(); ++i) c += k[0][i] * mons[i];
    return PlaneCurve(c);
}

std::vector<Poly> configuration_equations(const ModuliParams& p) {
    std::vector<Poly> out;
    for (const auto& l : standard_lines(p)) out.push_back(l.poly);
    out.push_back(standard_conic(p).poly);
    return out;
}

proj::StripOptions strip_options(const ModuliParams& p) {
    proj::StripOptions o;
    o.candidates = configuration_equations(p);
    o.general_gcd = false;
    return o;
}

RationalMap compose_raw(const RationalMap& outer, const RationalMap& inner) {
    proj::StripOptions o;
    o.general_gcd = false;
    return proj::compose(outer, inner, o);
}

// --------------------------------------------------------------- formulas

const Formulas& Formulas::shipped() {
    static const Formulas f = build_shipped();
    return f;
}

Formulas Formulas::printed() {
    Formulas f = shipped();
    const Poly b0 = V(Var::b0), b1 = V(Var::b1), b2 = V(Var::b2);
    const Poly L = V(Var::lambda), t = V(Var::t);
    f.tau[2] = t * (b1 * t - b2) *
               (b0 * b0 + (-L * t * t - L * t - t * t) * b0 * b1 + (L * t - L + t) * b0 * b2 + (L + t * t) * b1 * b1 -
                t * b1 * b2);
    return f;
}

std::string map_name(MapTag m) {
    switch (m) {
        case MapTag::tau: return "tau";
        case MapTag::sigma0: return "sigma0";
        case MapTag::sigma1: return "sigma1";
        case MapTag::sigma_lambda: return "sigmaLambda";
        case MapTag::psiT: return "psiT";
        case MapTag::twist0: return "twist0";
        case MapTag::twist1: return "twist1";
        case MapTag::twist_lambda: return "twistLambda";
        case MapTag::twist_inf: return "twistInf";
        case MapTag::swap: return "swap";
        case MapTag::phi_tilde: return "phiTilde";
    }
    return "?";
}

MapTag map_from_name(const std::string& s) {
    for (MapTag m : kMapTags)
        if (map_name(m) == s) return m;
    if (s == "phi") return MapTag::phi_tilde;
    throw Error("unknown map: " + s);
}

MapTag twist_tag(Label k) {
    switch (k) {
        case Label::zero: return MapTag::twist0;
        case Label::one: return MapTag::twist1;
        case Label::lambda: return MapTag::twist_lambda;
        case Label::infinity: return MapTag::twist_inf;
        case Label::t: break;
    }
    throw Error("no twist for t");
}

MapTag sigma_tag(Label k) {
    switch (k) {
        case Label::zero: return MapTag::sigma0;
        case Label::one: return MapTag::sigma1;
        case Label::lambda: return MapTag::sigma_lambda;
        case Label::infinity: return MapTag::tau;
        case Label::t: break;
    }
    throw Error("no sigma for t");
}

proj::MoebiusMap beta_map(Label k, const ModuliParams& p) { return elliptic::beta(branch_of(k), p.lambda); }

RationalMap named_map(MapTag tag, const ModuliParams& p, const Formulas& f) {
    const Poly z0 = V(Var::z0), z1 = V(Var::z1), w0 = V(Var::w0), w1 = V(Var::w1);
    auto twist = [&](Label k) {
        const auto b = beta_map(k, p);
        const auto& m = b.entries();
        return RationalMap(Space::P1xP1, Space::P1xP1,
                           {m[0] * z0 + m[1] * z1, m[2] * z0 + m[3] * z1, m[0] * w0 + m[1] * w1, m[2] * w0 + m[3] * w1});
    };
    switch (tag) {
        case MapTag::tau: return plane_map(f.tau, p);
        case MapTag::sigma0: return plane_map(f.sigma0, p);
        case MapTag::sigma1: return plane_map(f.sigma1, p);
        case MapTag::sigma_lambda: return plane_map(f.sigma_lambda, p);
        case MapTag::psiT: return plane_map(f.psiT, p);
        case MapTag::twist0: return twist(Label::zero);
        case MapTag::twist1: return twist(Label::one);
        case MapTag::twist_lambda: return twist(Label::lambda);
        case MapTag::twist_inf: return twist(Label::infinity);
        case MapTag::swap: return RationalMap(Space::P1xP1, Space::P1xP1, {w0, w1, z0, z1});
        case MapTag::phi_tilde:
            return RationalMap(Space::P2, Space::P1xP1,
                               specialize_all({f.phi_tilde[0], f.phi_tilde[1], f.phi_tilde[2], f.phi_tilde[3]}, p));
    }
    throw Error("bad map tag");
}

BiCurve gamma_curve(const ModuliParams& p, const Formulas& f) { return BiCurve(specialize_all({f.gamma}, p)[0]); }

PlaneCurve sigma_cubic(const ModuliParams& p, const Formulas& f) { return PlaneCurve(specialize_all({f.sigma}, p)[0]); }

}  // namespace parmod::moduli
