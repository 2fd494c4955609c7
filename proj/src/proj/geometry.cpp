#include "parmod/proj/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace parmod::proj {

using exact::Assignment;
using exact::Json;
using exact::Monomial;
using exact::Term;

namespace {

Poly P(Var v) { return Poly::var(v); }

bool all_zero(const std::vector<Poly>& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

bool proportional(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

std::vector<std::vector<Poly>> split(const std::vector<Poly>& coords, Space s) {
    std::vector<std::vector<Poly>> out;
    std::size_t k = 0;
    for (std::size_t n : factor_sizes(s)) {
        out.emplace_back(coords.begin() + long(k), coords.begin() + long(k + n));
        k += n;
    }
    return out;
}

Space factor_space(std::size_t n) { return n == 2 ? Space::P1 : Space::P2; }

std::vector<std::pair<Var, Poly>> substitution(Space s, const std::vector<Poly>& values) {
    const auto& vars = coordinates(s);
    std::vector<std::pair<Var, Poly>> out;
    for (std::size_t i = 0; i < vars.size(); ++i) out.emplace_back(vars[i], values[i]);
    return out;
}

bool is_source_var(Space s, Var v) {
    const auto& vs = coordinates(s);
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Coefficients of p viewed as a polynomial in the given coordinates.
std::vector<Poly> coefficient_polys(const Poly& p, Space s) {
    std::map<std::vector<std::uint8_t>, std::vector<Term>> buckets;
    const auto& vs = coordinates(s);
    for (const auto& t : p.terms()) {
        std::vector<std::uint8_t> key;
        Monomial rest = t.m;
        for (Var v : vs) {
            key.push_back(t.m[v]);
            rest.e[exact::slot(v)] = 0;
            rest.deg = static_cast<std::uint16_t>(rest.deg - t.m[v]);
        }
        buckets[key].push_back(Term{rest, t.c});
    }
    std::vector<Poly> out;
    for (auto& [k, ts] : buckets) out.push_back(Poly::from_terms(std::move(ts)));
    return out;
}

Scalar rational_gcd(const std::vector<Poly>& ps) {
    exact::Integer g = 0, l = 1;
    for (const auto& p : ps)
        for (const auto& t : p.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
        }
    if (g == 0) return Scalar(1);
    Scalar c(g, l);
    c.canonicalize();
    return c;
}

// Scale a tuple to integer coefficients with gcd 1 and a positive leading
// coefficient on the first nonzero entry.
std::vector<Poly> normalize_tuple(std::vector<Poly> v) {
    Scalar c = rational_gcd(v);
    for (const auto& p : v)
        if (!p.is_zero()) {
            if (p.leading_coeff() < 0) c = -c;
            break;
        }
    if (c != 1) {
        Scalar inv = Scalar(1) / c;
        for (auto& p : v) p = p.scaled(inv);
    }
    return v;
}

std::vector<Poly> divide_all(const std::vector<Poly>& v, const Poly& f) {
    std::vector<Poly> out;
    for (const auto& p : v) out.push_back(exact::exact_divide(p, f));
    return out;
}

bool all_divisible(const std::vector<Poly>& v, const Poly& f) {
    for (const auto& p : v)
        if (!exact::try_divide(p, f)) return false;
    return true;
}

std::set<Var> variables_of(const std::vector<Poly>& ps) {
    std::set<Var> out;
    for (const auto& p : ps)
        for (Var v : p.variables()) out.insert(v);
    return out;
}

// Restrict the group to a random line of the source and random parameter
// values; a common factor of positive degree survives such a restriction.
bool probe_common_factor(const std::vector<Poly>& group, Space source, std::mt19937_64& rng) {
    std::vector<std::pair<Var, Poly>> subs;
    Poly u = P(Var::u);
    for (Var v : coordinates(source))
        subs.emplace_back(v, Poly(random_int(rng, -9, 9)) + u * Poly(random_int(rng, -9, 9)));
    for (Var v : variables_of(group))
        if (!is_source_var(source, v)) subs.emplace_back(v, Poly(random_scalar(rng, 40)));
    std::vector<Poly> r;
    for (const auto& p : group) r.push_back(p.subs(subs));
    Poly g = exact::gcd(r);
    return g.total_degree() > 0;
}

std::vector<Poly> strip_group(std::vector<Poly> g, Space source, const StripOptions& opts, std::mt19937_64& rng) {
    if (all_zero(g)) return g;
    // monomial content
    Monomial mc;
    bool first = true;
    for (const auto& p : g) {
        if (p.is_zero()) continue;
        Monomial m = p.monomial_content();
        if (first) {
            mc = m;
            first = false;
        } else {
            unsigned d = 0;
            for (std::size_t i = 0; i < exact::kNumVars; ++i) {
                mc.e[i] = std::min(mc.e[i], m.e[i]);
                d += mc.e[i];
            }
            mc.deg = static_cast<std::uint16_t>(d);
        }
    }
    if (mc.deg > 0) g = divide_all(g, Poly::monomial(mc, Scalar(1)));
    for (const auto& f : opts.candidates) {
        if (f.is_constant()) continue;
        while (all_divisible(g, f)) g = divide_all(g, f);
    }
    // content in the non-coordinate variables
    std::vector<Poly> coeffs;
    for (const auto& p : g) {
        auto cs = coefficient_polys(p, source);
        coeffs.insert(coeffs.end(), cs.begin(), cs.end());
    }
    Poly pc = exact::gcd(coeffs);
    if (!pc.is_constant()) g = divide_all(g, pc);
    if (opts.general_gcd && probe_common_factor(g, source, rng)) {
        Poly h = exact::gcd(g);
        if (!h.is_constant()) g = divide_all(g, h);
    }
    return normalize_tuple(std::move(g));
}

}  // namespace

const std::vector<Var>& coordinates(Space s) {
    static const std::vector<Var> p1{Var::z0, Var::z1};
    static const std::vector<Var> p2{Var::b0, Var::b1, Var::b2};
    static const std::vector<Var> p1p1{Var::z0, Var::z1, Var::w0, Var::w1};
    switch (s) {
        case Space::P1: return p1;
        case Space::P2: return p2;
        default: return p1p1;
    }
}

const std::vector<std::size_t>& factor_sizes(Space s) {
    static const std::vector<std::size_t> p1{2}, p2{3}, p1p1{2, 2};
    switch (s) {
        case Space::P1: return p1;
        case Space::P2: return p2;
        default: return p1p1;
    }
}

std::string space_name(Space s) {
    switch (s) {
        case Space::P1: return "P1";
        case Space::P2: return "P2";
        default: return "P1xP1";
    }
}

long random_int(std::mt19937_64& rng, long lo, long hi) {
    // plain modular reduction keeps seeded streams identical across standard libraries
    return lo + long(rng() % std::uint64_t(hi - lo + 1));
}

Scalar random_scalar(std::mt19937_64& rng, int range) {
    long n = random_int(rng, -range, range), d = random_int(rng, 1, 9);
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- points

ProjPoint::ProjPoint(Space space, std::vector<Poly> coords) : space_(space), coords_(std::move(coords)) {
    std::size_t n = 0;
    for (auto k : factor_sizes(space_)) n += k;
    if (coords_.size() != n) throw Error("wrong number of homogeneous coordinates");
    for (const auto& f : split(coords_, space_))
        if (all_zero(f)) throw Error("all homogeneous coordinates vanish");
}

ProjPoint ProjPoint::from_ratfuncs(Space space, const std::vector<RatFunc>& coords) {
    std::vector<Poly> out;
    std::size_t k = 0;
    for (std::size_t n : factor_sizes(space)) {
        Poly l(1);
        for (std::size_t i = k; i < k + n; ++i) {
            const Poly& d = coords.at(i).den();
            if (!d.is_constant()) l = exact::exact_divide(l * d, exact::gcd(l, d));
        }
        for (std::size_t i = k; i < k + n; ++i) out.push_back(exact::exact_divide(coords[i].num() * l, coords[i].den()));
        k += n;
    }
    return ProjPoint(space, std::move(out));
}

ProjPoint ProjPoint::p1_affine(const RatFunc& z) { return p1(z.num(), z.den()); }

ProjPoint ProjPoint::pair(const ProjPoint& z, const ProjPoint& w) {
    if (z.space() != Space::P1 || w.space() != Space::P1) throw Error("pair needs two P1 points");
    return ProjPoint(Space::P1xP1, {z.coords_[0], z.coords_[1], w.coords_[0], w.coords_[1]});
}

ProjPoint ProjPoint::factor(std::size_t i) const {
    auto parts = split(coords_, space_);
    return ProjPoint(factor_space(parts.at(i).size()), parts[i]);
}

RatFunc ProjPoint::affine() const {
    if (space_ != Space::P1) throw Error("affine value needs a P1 point");
    if (coords_[1].is_zero()) throw Error("affine value of the point at infinity");
    return RatFunc(coords_[0], coords_[1]);
}

bool ProjPoint::is_infinity() const { return space_ == Space::P1 && coords_[1].is_zero(); }

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (space_ != o.space_) return false;
    auto a = split(coords_, space_), b = split(o.coords_, o.space_);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!proportional(a[i], b[i])) return false;
    return true;
}

ProjPoint ProjPoint::specialize(const Assignment& values) const {
    std::vector<Poly> c;
    for (const auto& p : coords_) c.push_back(p.eval_partial(values));
    return ProjPoint(space_, c);
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    auto parts = split(coords_, space_);
    for (std::size_t f = 0; f < parts.size(); ++f) {
        if (f) os << ",";
        os << "(";
        for (std::size_t i = 0; i < parts[f].size(); ++i) os << (i ? ":" : "") << parts[f][i].str();
        os << ")";
    }
    return os.str();
}

// --------------------------------------------------------------- Moebius

MoebiusMap::MoebiusMap(Poly a, Poly b, Poly c, Poly d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (det().is_zero()) throw Error("singular Moebius matrix");
}

ProjPoint MoebiusMap::apply(const ProjPoint& p) const {
    if (p.space() != Space::P1) throw Error("Moebius map acts on P1");
    const auto& c = p.coords();
    Poly x = m_[0] * c[0] + m_[1] * c[1];
    Poly y = m_[2] * c[0] + m_[3] * c[1];
    if (x.is_zero() && y.is_zero()) throw Undefined();
    return ProjPoint::p1(x, y);
}

RatFunc MoebiusMap::apply(const RatFunc& z) const {
    return (RatFunc(m_[0]) * z + RatFunc(m_[1])) / (RatFunc(m_[2]) * z + RatFunc(m_[3]));
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

MoebiusMap MoebiusMap::operator*(const MoebiusMap& n) const {
    const auto& o = n.m_;
    return MoebiusMap(m_[0] * o[0] + m_[1] * o[2], m_[0] * o[1] + m_[1] * o[3], m_[2] * o[0] + m_[3] * o[2],
                      m_[2] * o[1] + m_[3] * o[3]);
}

bool MoebiusMap::operator==(const MoebiusMap& o) const {
    return proportional(std::vector<Poly>(m_.begin(), m_.end()), std::vector<Poly>(o.m_.begin(), o.m_.end()));
}

std::string MoebiusMap::str() const {
    return "[[" + m_[0].str() + ", " + m_[1].str() + "], [" + m_[2].str() + ", " + m_[3].str() + "]]";
}

namespace {

// Linear form (z0, z1) -> p1*z0 - p0*z1 vanishing at p.
std::pair<Poly, Poly> vanishing_form(const ProjPoint& p) { return {p.coords()[1], -p.coords()[0]}; }

Poly eval_form(const std::pair<Poly, Poly>& f, const ProjPoint& q) {
    return f.first * q.coords()[0] + f.second * q.coords()[1];
}

// The map sending p, q, r to 0, 1, infinity.
MoebiusMap to_standard(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    auto lp = vanishing_form(p), lr = vanishing_form(r);
    Poly lrq = eval_form(lr, q), lpq = eval_form(lp, q), lpr = eval_form(lp, r);
    if (lrq.is_zero() || lpq.is_zero() || lpr.is_zero()) throw DegeneratePoints();
    return MoebiusMap(lrq * lp.first, lrq * lp.second, lpq * lr.first, lpq * lr.second);
}

}  // namespace

MoebiusMap moebius_through(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs) {
    MoebiusMap src = to_standard(pairs[0].first, pairs[1].first, pairs[2].first);
    MoebiusMap dst = to_standard(pairs[0].second, pairs[1].second, pairs[2].second);
    return dst.inverse() * src;
}

// ----------------------------------------------------------------- curves

namespace {

Poly remove_parameter_content(const Poly& p, Space s) {
    if (p.is_zero()) return p;
    Poly c = exact::gcd(coefficient_polys(p, s));
    Poly q = c.is_constant() ? p : exact::exact_divide(p, c);
    return q.primitive();
}

}  // namespace

PlaneCurve::PlaneCurve(const Poly& p) {
    int d = 0;
    if (!p.is_homogeneous_in(coordinates(Space::P2), &d)) throw Error("plane curve must be homogeneous in b");
    poly = remove_parameter_content(p, Space::P2);
    degree = d;
}

bool PlaneCurve::contains(const ProjPoint& p) const {
    if (p.space() != Space::P2) throw Error("plane curve point must lie in P2");
    return poly.subs(substitution(Space::P2, p.coords())).is_zero();
}

BiCurve::BiCurve(const Poly& p) {
    if (!p.is_homogeneous_in({Var::z0, Var::z1}, &dz) || !p.is_homogeneous_in({Var::w0, Var::w1}, &dw))
        throw Error("curve must be bihomogeneous in (z0,z1),(w0,w1)");
    poly = remove_parameter_content(p, Space::P1xP1);
}

bool BiCurve::contains(const ProjPoint& p) const {
    if (p.space() != Space::P1xP1) throw Error("biprojective curve point must lie in P1xP1");
    return poly.subs(substitution(Space::P1xP1, p.coords())).is_zero();
}

BiCurve vertical_line(const ProjPoint& z) { return BiCurve(z.coords()[1] * P(Var::z0) - z.coords()[0] * P(Var::z1)); }

BiCurve horizontal_line(const ProjPoint& w) {
    return BiCurve(w.coords()[1] * P(Var::w0) - w.coords()[0] * P(Var::w1));
}

// ------------------------------------------------------------------- maps

RationalMap::RationalMap(Space source, Space target, std::vector<Poly> comps)
    : source_(source), target_(target), comps_(std::move(comps)) {
    std::size_t n = 0;
    for (auto k : factor_sizes(target_)) n += k;
    if (comps_.size() != n) throw Error("wrong number of map components");
    for (const auto& g : split(comps_, target_))
        if (all_zero(g)) throw Error("map component group vanishes identically");
}

RationalMap RationalMap::identity(Space s) {
    std::vector<Poly> c;
    for (Var v : coordinates(s)) c.push_back(P(v));
    return RationalMap(s, s, c);
}

std::vector<Poly> RationalMap::group(std::size_t i) const { return split(comps_, target_).at(i); }

int RationalMap::degree() const {
    for (const auto& c : comps_) {
        if (c.is_zero()) continue;
        int d = 0;
        c.is_homogeneous_in(coordinates(source_), &d);
        return d;
    }
    return 0;
}

ProjPoint RationalMap::apply(const ProjPoint& p) const {
    if (p.space() != source_) throw Error("point is not in the map's source space");
    auto subs = substitution(source_, p.coords());
    std::vector<Poly> out;
    for (const auto& c : comps_) out.push_back(c.subs(subs));
    for (const auto& g : split(out, target_))
        if (all_zero(g)) throw Undefined();
    return ProjPoint(target_, out);
}

RationalMap RationalMap::specialize(const Assignment& values) const {
    std::vector<Poly> c;
    for (const auto& p : comps_) c.push_back(p.eval_partial(values));
    return RationalMap(source_, target_, c);
}

std::string RationalMap::str() const {
    std::ostringstream os;
    auto parts = split(comps_, target_);
    for (std::size_t f = 0; f < parts.size(); ++f) {
        if (f) os << ", ";
        os << "(";
        for (std::size_t i = 0; i < parts[f].size(); ++i) os << (i ? " : " : "") << parts[f][i].str();
        os << ")";
    }
    return os.str();
}

RationalMap strip(const RationalMap& m, const StripOptions& opts) {
    std::mt19937_64 rng(0x5eed);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < m.groups(); ++i) {
        auto g = strip_group(m.group(i), m.source(), opts, rng);
        out.insert(out.end(), g.begin(), g.end());
    }
    return RationalMap(m.source(), m.target(), out);
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner, const StripOptions& opts) {
    if (outer.source() != inner.target()) throw Error("compose: space mismatch");
    auto subs = substitution(outer.source(), inner.comps());
    std::vector<Poly> c;
    for (const auto& p : outer.comps()) c.push_back(p.subs(subs));
    return strip(RationalMap(inner.source(), outer.target(), c), opts);
}

std::optional<Assignment> find_inequality_witness(const RationalMap& f, const RationalMap& g, std::uint64_t seed,
                                                  int trials) {
    if (f.source() != g.source() || f.target() != g.target()) throw Error("map_equal: space mismatch");
    std::set<Var> vars = variables_of(f.comps());
    for (Var v : variables_of(g.comps())) vars.insert(v);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        Assignment a;
        for (Var v : vars) a.emplace_back(v, random_scalar(rng));
        std::vector<Scalar> fv, gv;
        for (const auto& p : f.comps()) fv.push_back(p.eval(a));
        for (const auto& p : g.comps()) gv.push_back(p.eval(a));
        std::size_t off = 0;
        for (std::size_t n : factor_sizes(f.target())) {
            for (std::size_t i = off; i < off + n; ++i)
                for (std::size_t j = i + 1; j < off + n; ++j)
                    if (fv[i] * gv[j] != fv[j] * gv[i]) return a;
            off += n;
        }
    }
    return std::nullopt;
}

bool map_equal(const RationalMap& f, const RationalMap& g, std::uint64_t seed) {
    if (find_inequality_witness(f, g, seed, 5)) return false;
    auto a = split(f.comps(), f.target()), b = split(g.comps(), g.target());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!proportional(a[i], b[i])) return false;
    return true;
}

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p.space() != Space::P2 || q.space() != Space::P2) throw Error("line_through needs P2 points");
    const auto& a = p.coords();
    const auto& b = q.coords();
    Poly c0 = a[1] * b[2] - a[2] * b[1];
    Poly c1 = a[2] * b[0] - a[0] * b[2];
    Poly c2 = a[0] * b[1] - a[1] * b[0];
    if (c0.is_zero() && c1.is_zero() && c2.is_zero()) throw CoincidentPoints();
    return PlaneCurve(c0 * P(Var::b0) + c1 * P(Var::b1) + c2 * P(Var::b2));
}

Poly restrict_to_ruling(const BiCurve& curve, const Ruling& ruling) {
    const auto& c = ruling.value.coords();
    if (ruling.kind == Ruling::Kind::vertical) return curve.poly.subs({{Var::z0, c[0]}, {Var::z1, c[1]}});
    return curve.poly.subs({{Var::w0, c[0]}, {Var::w1, c[1]}});
}

int root_multiplicity(const Poly& form, Var v0, Var v1, const ProjPoint& root) {
    if (form.is_zero()) throw Error("restricted form vanishes identically");
    Poly a = root.coords()[0], b = root.coords()[1];
    Poly g = exact::gcd(a, b);
    if (!g.is_constant()) {
        a = exact::exact_divide(a, g);
        b = exact::exact_divide(b, g);
    }
    Poly lin = b * P(v0) - a * P(v1);
    int k = 0;
    Poly f = form;
    while (auto q = exact::try_divide(f, lin)) {
        f = *q;
        ++k;
    }
    return k;
}

int intersection_multiplicity_line(const BiCurve& curve, const Ruling& ruling, const ProjPoint& other) {
    Poly f = restrict_to_ruling(curve, ruling);
    int k = ruling.kind == Ruling::Kind::vertical ? root_multiplicity(f, Var::w0, Var::w1, other)
                                                  : root_multiplicity(f, Var::z0, Var::z1, other);
    if (k == 0) throw PointNotOnCurve();
    return k;
}

PlaneCurve critical_locus(const RationalMap& map) {
    if (map.source() != Space::P2 || map.target() != Space::P1xP1)
        throw Error("critical_locus needs a map from P2 to P1xP1");
    const auto& c = map.comps();
    const auto& bs = coordinates(Space::P2);
    std::vector<Poly> gz, gw;
    for (Var v : bs) {
        gz.push_back(c[0] * c[1].derivative(v) - c[1] * c[0].derivative(v));
        gw.push_back(c[2] * c[3].derivative(v) - c[3] * c[2].derivative(v));
    }
    exact::PolyMatrix m{gz, gw, {P(Var::b0), P(Var::b1), P(Var::b2)}};
    Poly det = exact::determinant(m);
    if (det.is_zero()) return PlaneCurve(Poly());
    Poly euler = P(Var::b0).pow(2) + P(Var::b1).pow(2) + P(Var::b2).pow(2);
    return PlaneCurve(exact::exact_divide(det, euler));
}

Poly strip_factors(Poly p, const std::vector<Poly>& candidates) {
    for (const auto& f : candidates) {
        if (f.is_constant()) continue;
        while (!p.is_zero()) {
            auto q = exact::try_divide(p, f);
            if (!q) break;
            p = *q;
        }
    }
    return p;
}

// --------------------------------------------------- parametrized curves

namespace {

Poly eval_quadric(const Poly& c, const std::vector<Poly>& pt) { return c.subs(substitution(Space::P2, pt)); }

std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
std::vector<Poly> scale(const std::vector<Poly>& a, const Poly& s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Poly det3(const std::vector<Poly>& a, const std::vector<Poly>& b, const std::vector<Poly>& c) {
    return exact::determinant({a, b, c});
}

// Two standard basis vectors completing p to a basis.
std::pair<std::vector<Poly>, std::vector<Poly>> complete_basis(const std::vector<Poly>& p) {
    std::vector<std::vector<Poly>> e{{Poly(1), Poly(0), Poly(0)}, {Poly(0), Poly(1), Poly(0)}, {Poly(0), Poly(0), Poly(1)}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (!det3(p, e[i], e[j]).is_zero()) return {e[i], e[j]};
    throw Error("zero point");
}

}  // namespace

std::vector<Poly> parametrize(const PlaneCurve& curve, const std::optional<ProjPoint>& known_point) {
    Poly u = P(Var::u);
    if (curve.degree == 1) {
        exact::PolyMatrix row{{curve.poly.derivative(Var::b0), curve.poly.derivative(Var::b1),
                               curve.poly.derivative(Var::b2)}};
        auto k = exact::kernel(row);
        if (k.size() != 2) throw NoRationalParametrization();
        return add(k[0], scale(k[1], u));
    }
    if (curve.degree != 2) throw NoRationalParametrization();
    std::vector<std::vector<Poly>> candidates;
    if (known_point) candidates.push_back(known_point->coords());
    for (auto t : std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 1}, {1, 1, 0},
                                                  {1, 0, 1}, {0, 1, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}})
        candidates.push_back({Poly(t[0]), Poly(t[1]), Poly(t[2])});
    for (const auto& p0 : candidates) {
        if (!eval_quadric(curve.poly, p0).is_zero()) continue;
        auto [a, b] = complete_basis(p0);
        std::vector<Poly> v = add(a, scale(b, u));
        Poly cv = eval_quadric(curve.poly, v);
        Poly bil = eval_quadric(curve.poly, add(p0, v)) - cv;
        if (bil.is_zero()) continue;  // singular at p0
        return add(scale(p0, -cv), scale(v, bil));
    }
    throw NoRationalParametrization();
}

std::vector<std::vector<Poly>> image_on_curve(const RationalMap& map, const std::vector<Poly>& param) {
    if (map.source() != Space::P2) throw Error("curve images need a map from P2");
    auto subs = substitution(Space::P2, param);
    std::vector<Poly> out;
    for (const auto& c : map.comps()) out.push_back(c.subs(subs));
    return split(out, map.target());
}

std::optional<ProjPoint> constant_image(const std::vector<Poly>& group, Space fs) {
    if (all_zero(group)) return std::nullopt;
    std::vector<Poly> d;
    for (const auto& p : group) d.push_back(p.derivative(Var::u));
    if (!proportional(group, d)) return std::nullopt;
    for (long k = 0;; ++k) {
        std::vector<Poly> val;
        for (const auto& p : group) val.push_back(p.subs(Var::u, Poly(k)));
        if (all_zero(val)) continue;
        Poly g = exact::gcd(val);
        if (!g.is_constant())
            for (auto& p : val) p = exact::exact_divide(p, g);
        return ProjPoint(fs, normalize_tuple(val));
    }
}

std::optional<ProjPoint> contracts_to(const RationalMap& map, const PlaneCurve& curve) {
    auto img = image_on_curve(map, parametrize(curve));
    std::vector<Poly> coords;
    for (const auto& g : img) {
        auto pt = constant_image(g, factor_space(g.size()));
        if (!pt) return std::nullopt;
        coords.insert(coords.end(), pt->coords().begin(), pt->coords().end());
    }
    return ProjPoint(map.target(), coords);
}

std::vector<std::vector<Poly>> exceptional_image(const RationalMap& map, const ProjPoint& p) {
    if (map.source() != Space::P2 || p.space() != Space::P2) throw Error("exceptional image needs P2");
    auto [a, c] = complete_basis(p.coords());
    std::vector<Poly> dir = add(a, scale(c, P(Var::u)));
    std::vector<Poly> b = add(p.coords(), scale(dir, P(Var::v)));
    auto subs = substitution(Space::P2, b);
    std::vector<Poly> vals;
    for (const auto& q : map.comps()) vals.push_back(q.subs(subs));
    std::vector<std::vector<Poly>> out;
    for (auto g : split(vals, map.target())) {
        int m = 1 << 20;
        for (const auto& q : g)
            if (!q.is_zero()) m = std::min(m, q.min_degree(Var::v));
        std::vector<Poly> lead;
        for (const auto& q : g) {
            auto cs = exact::univariate_view(q, Var::v);
            lead.push_back(std::size_t(m) < cs.size() ? cs[std::size_t(m)] : Poly());
        }
        out.push_back(lead);
    }
    return out;
}

bool image_inside(const std::vector<Poly>& image_coords, Space target, const Poly& target_poly) {
    return target_poly.subs(substitution(target, image_coords)).is_zero();
}

// ------------------------------------------------------------------- json

Json to_json(const PlaneCurve& c) {
    return {{"kind", "planecurve"}, {"payload", {{"degree", c.degree}, {"poly", exact::to_json(c.poly, coordinates(Space::P2))}}}};
}

Json to_json(const BiCurve& c) {
    return {{"kind", "bicurve"},
            {"payload", {{"bidegree", {c.dz, c.dw}}, {"poly", exact::to_json(c.poly, coordinates(Space::P1xP1))}}}};
}

Json to_json(const RationalMap& m) {
    Json comps = Json::array();
    for (const auto& c : m.comps()) comps.push_back(exact::to_json(c, coordinates(m.source())));
    std::string kind = m.target() == Space::P2 ? "map_p2" : "map_ruled";
    return {{"kind", kind},
            {"payload", {{"source", space_name(m.source())}, {"target", space_name(m.target())}, {"components", comps}}}};
}

Json to_json(const ProjPoint& p) {
    Json c = Json::array();
    for (const auto& q : p.coords()) c.push_back(exact::to_json(q));
    return {{"space", space_name(p.space())}, {"coords", c}};
}

namespace {

const Json& payload(const Json& j, const std::string& kind) {
    if (!j.is_object() || j.value("kind", "") != kind) throw exact::ParseError("expected kind '" + kind + "'");
    return j.at("payload");
}

Space space_from_name(const std::string& s) {
    if (s == "P1") return Space::P1;
    if (s == "P2") return Space::P2;
    if (s == "P1xP1") return Space::P1xP1;
    throw exact::ParseError("unknown space '" + s + "'");
}

}  // namespace

PlaneCurve planecurve_from_json(const Json& j) { return PlaneCurve(exact::poly_from_json(payload(j, "planecurve").at("poly"))); }

BiCurve bicurve_from_json(const Json& j) { return BiCurve(exact::poly_from_json(payload(j, "bicurve").at("poly"))); }

RationalMap map_from_json(const Json& j) {
    std::string kind = j.value("kind", "");
    if (kind != "map_p2" && kind != "map_ruled") throw exact::ParseError("expected a map");
    const Json& p = j.at("payload");
    std::vector<Poly> comps;
    for (const auto& c : p.at("components")) comps.push_back(exact::poly_from_json(c));
    return RationalMap(space_from_name(p.at("source")), space_from_name(p.at("target")), comps);
}

ProjPoint point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("coords")) throw exact::ParseError("point needs 'space' and 'coords'");
    std::vector<Poly> coords;
    for (const auto& c : j.at("coords")) coords.push_back(exact::poly_from_json(c));
    return ProjPoint(space_from_name(j.at("space")), coords);
}

}  // namespace parmod::proj
