#include "parmod/elliptic/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace parmod::elliptic {

using exact::RationalP1;

CurveParams::CurveParams(const Scalar& lam) : lambda(lam) {
    if (lambda == 0 || lambda == 1) throw SingularCurve();
}

EllipticPoint EllipticPoint::affine(const CurveParams& c, const Scalar& x, const Scalar& y) {
    if (y * y != c.rhs(x)) throw PointNotOnCurve();
    EllipticPoint p;
    p.xy_ = std::make_pair(x, y);
    return p;
}

EllipticPoint EllipticPoint::negated() const {
    EllipticPoint p = *this;
    if (p.xy_) p.xy_->second = -p.xy_->second;
    return p;
}

std::string EllipticPoint::str() const {
    if (is_infinity()) return "w_inf";
    return "(" + exact::to_string(x()) + ", " + exact::to_string(y()) + ")";
}

std::string branch_name(Branch k) {
    switch (k) {
        case Branch::zero: return "0";
        case Branch::one: return "1";
        case Branch::lambda: return "lambda";
        case Branch::infinity: return "inf";
    }
    return "";
}

EllipticPoint weierstrass(const CurveParams& c, Branch k) {
    switch (k) {
        case Branch::zero: return EllipticPoint::affine(c, 0, 0);
        case Branch::one: return EllipticPoint::affine(c, 1, 0);
        case Branch::lambda: return EllipticPoint::affine(c, c.lambda, 0);
        case Branch::infinity: break;
    }
    return EllipticPoint::infinity();
}

EllipticPoint group_neg(const EllipticPoint& p) { return p.negated(); }

EllipticPoint third_collinear(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q) {
    // a line through w_inf is vertical
    if (p.is_infinity()) return q.negated();
    if (q.is_infinity()) return p.negated();
    Scalar m;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y() == 0) return EllipticPoint::infinity();
        const Scalar& x = p.x();
        m = (3 * x * x - 2 * (1 + c.lambda) * x + c.lambda) / (2 * p.y());
    } else {
        m = (q.y() - p.y()) / (q.x() - p.x());
    }
    Scalar x3 = m * m + 1 + c.lambda - p.x() - q.x();
    Scalar y3 = p.y() + m * (x3 - p.x());
    return EllipticPoint::affine(c, x3, y3);
}

EllipticPoint group_add(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q) {
    return third_collinear(c, p, q).negated();
}

EllipticPoint group_mul(const CurveParams& c, const EllipticPoint& p, long n) {
    EllipticPoint base = n < 0 ? p.negated() : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    EllipticPoint acc = EllipticPoint::infinity();
    while (k) {
        if (k & 1) acc = group_add(c, acc, base);
        base = group_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

RationalP1 project(const EllipticPoint& p) {
    return p.is_infinity() ? RationalP1::infinity() : RationalP1::finite(p.x());
}

DivisorClass divisor_class(const CurveParams& c, const Divisor& d) {
    DivisorClass r;
    for (const auto& [p, m] : d) {
        r.degree += m;
        r.reduction = group_add(c, r.reduction, group_mul(c, p, m));
    }
    return r;
}

DivisorClass class_add(const CurveParams& c, const DivisorClass& a, const DivisorClass& b) {
    return {a.degree + b.degree, group_add(c, a.reduction, b.reduction)};
}

DivisorClass class_neg(const DivisorClass& a) { return {-a.degree, a.reduction.negated()}; }

bool is_two_torsion(const CurveParams& c, const DivisorClass& a) {
    return a.degree == 0 && group_add(c, a.reduction, a.reduction).is_infinity();
}

bool divisor_class_trivial(const CurveParams& c, const Divisor& d) {
    DivisorClass k = divisor_class(c, d);
    if (k.degree != 0) throw NonzeroDegree();
    return k.reduction.is_infinity();
}

EllipticPoint torsion_translate(const CurveParams& c, const EllipticPoint& p, Branch k) {
    return third_collinear(c, p.negated(), weierstrass(c, k));
}

proj::MoebiusMap beta(Branch k, const Poly& lam) {
    switch (k) {
        case Branch::zero: return proj::MoebiusMap(Poly(0), lam, Poly(1), Poly(0));
        case Branch::one: return proj::MoebiusMap(Poly(1), -lam, Poly(1), Poly(-1));
        case Branch::lambda: return proj::MoebiusMap(lam, -lam, Poly(1), -lam);
        case Branch::infinity: break;
    }
    return proj::MoebiusMap::identity();
}

EpsilonMaps epsilon_maps(const Poly& t, const Poly& s) {
    Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
    return {RatFunc(t * y - s * x, y - s), RatFunc(t * y + s * x, y + s)};
}

namespace {

void check_puncture(const CurveParams& c, const Scalar& t, const Scalar& s) {
    if (s * s != c.rhs(t) || s == 0) throw InvalidPuncture();
}

}  // namespace

EpsilonMaps epsilon_maps(const CurveParams& c, const Scalar& t, const Scalar& s) {
    check_puncture(c, t, s);
    return epsilon_maps(Poly(t), Poly(s));
}

RationalP1 epsilon_value(const CurveParams& c, const Scalar& t, const Scalar& s, int j, const EllipticPoint& p) {
    check_puncture(c, t, s);
    Scalar sj = j == 1 ? s : Scalar(-s);
    if (p.is_infinity()) return RationalP1::finite(t);
    Scalar num = t * p.y() - sj * p.x(), den = p.y() - sj;
    if (num != 0 || den != 0) return RationalP1{num, den}.normalized();
    // p = t_j: the tangent line at t_j
    Scalar m = (3 * t * t - 2 * (1 + c.lambda) * t + c.lambda) / (2 * sj);
    return RationalP1{t * m - sj, m}.normalized();
}

SymbolicPoint symbolic_third_collinear(const SymbolicPoint& p, const SymbolicPoint& q, const Poly& lam) {
    RatFunc m = (q.y - p.y) / (q.x - p.x);
    RatFunc x3 = m * m + RatFunc(Poly(1) + lam) - p.x - q.x;
    return {x3, p.y + m * (x3 - p.x)};
}

Poly epsilon_invariance_residual(int j, const Poly& lam, const Poly& t, const Poly& s) {
    auto eps = epsilon_maps(t, s);
    return epsilon_invariance_residual(j == 1 ? eps.eps1 : eps.eps2, j, lam, t, s);
}

Poly epsilon_invariance_residual(const RatFunc& e, int j, const Poly& lam, const Poly& t, const Poly& s) {
    Poly sj = j == 1 ? s : -s;
    SymbolicPoint p{RatFunc(Poly::var(Var::x)), RatFunc(Poly::var(Var::y))};
    SymbolicPoint q = symbolic_third_collinear(p, {RatFunc(t), RatFunc(sj)}, lam);
    RatFunc diff = e.subs({{Var::x, q.x}, {Var::y, q.y}}) - e;
    Poly r = reduce_mod_curve(diff.num(), Var::y, Var::x, lam);
    return reduce_mod_curve(r, Var::s, Var::t, lam);
}

bool prop2sec_check(const CurveParams& c, const EllipticPoint& p, const EllipticPoint& q) {
    return third_collinear(c, p, q) == q;
}

Poly reduce_mod_curve(const Poly& p, Var y, Var x, const Poly& lam) {
    Poly xv = Poly::var(x);
    Poly f = xv * (xv - Poly(1)) * (xv - lam);
    auto coeffs = exact::univariate_view(p, y);
    Poly out, fk(1), yv = Poly::var(y);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k >= 2 && k % 2 == 0) fk *= f;
        if (!coeffs[k].is_zero()) out += k % 2 ? coeffs[k] * fk * yv : coeffs[k] * fk;
    }
    return out;
}

std::optional<Scalar> rational_sqrt(const Scalar& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Scalar(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

std::vector<EllipticPoint> sample_points(const CurveParams& c, std::mt19937_64& rng, std::size_t count) {
    std::vector<EllipticPoint> found{EllipticPoint::infinity()};
    auto seen = [&](const EllipticPoint& p) { return std::find(found.begin(), found.end(), p) != found.end(); };
    for (long den = 1; den <= 8; ++den)
        for (long num = -40; num <= 40; ++num) {
            if (std::gcd(num, den) != 1) continue;
            Scalar x(num, den);
            x.canonicalize();
            if (auto y = rational_sqrt(c.rhs(x))) {
                auto p = EllipticPoint::affine(c, x, *y);
                if (!seen(p)) found.push_back(p);
                if (!seen(p.negated())) found.push_back(p.negated());
            }
        }
    std::vector<EllipticPoint> out;
    while (out.size() < count) {
        EllipticPoint p = found[std::size_t(proj::random_int(rng, 0, long(found.size()) - 1))];
        EllipticPoint q = found[std::size_t(proj::random_int(rng, 0, long(found.size()) - 1))];
        p = group_add(c, group_mul(c, p, proj::random_int(rng, -2, 2)), q);
        out.push_back(p);
    }
    return out;
}

std::pair<CurveParams, EllipticPoint> random_curve_with_point(std::mt19937_64& rng) {
    for (;;) {
        Scalar x0 = proj::random_scalar(rng, 12), y0 = proj::random_scalar(rng, 12);
        if (x0 == 0 || x0 == 1 || y0 == 0) continue;
        Scalar lam = x0 - y0 * y0 / (x0 * (x0 - 1));
        if (lam == 0 || lam == 1) continue;
        CurveParams c(lam);
        return {c, EllipticPoint::affine(c, x0, y0)};
    }
}

exact::Json to_json(const EllipticPoint& p) {
    if (p.is_infinity()) return {{"inf", true}};
    return {{"x", exact::scalar_json(p.x())}, {"y", exact::scalar_json(p.y())}};
}

EllipticPoint point_from_json(const CurveParams& c, const exact::Json& j) {
    if (j.contains("inf") && j.at("inf").get<bool>()) return EllipticPoint::infinity();
    return EllipticPoint::affine(c, exact::scalar_from_json(j.at("x")), exact::scalar_from_json(j.at("y")));
}

exact::Json to_json(const CurveParams& c) { return {{"lambda", exact::scalar_json(c.lambda)}}; }

exact::Json to_json(const DivisorClass& d) { return {{"degree", d.degree}, {"point", to_json(d.reduction)}}; }

DivisorClass class_from_json(const CurveParams& c, const exact::Json& j) {
    return {j.at("degree").get<long>(), point_from_json(c, j.at("point"))};
}

CurveParams params_from_json(const exact::Json& j) { return CurveParams(exact::scalar_from_json(j.at("lambda"))); }

}  // namespace parmod::elliptic
