#include "parmod/exact/errors.hpp"
#include "parmod/exact/poly.hpp"

#include <algorithm>

// Recursive primitive polynomial remainder sequence gcd over Q. Degrees in
// this library stay small, so the classical algorithm is fast enough.

namespace parmod::exact {

namespace {

Poly normalize(const Poly& p) { return p.primitive(); }

Poly monomial_poly(const Monomial& m) { return Poly::monomial(m, Scalar(1)); }

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned d = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        m.e[i] = std::min(a.e[i], b.e[i]);
        d += m.e[i];
    }
    m.deg = static_cast<std::uint16_t>(d);
    return m;
}

std::optional<Var> main_var(const Poly& a, const Poly& b) {
    std::array<bool, kNumVars> seen{};
    for (const auto* p : {&a, &b})
        for (const auto& t : p->terms())
            for (std::size_t i = 0; i < kNumVars; ++i)
                if (t.m.e[i]) seen[i] = true;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (seen[i]) return static_cast<Var>(i);
    return std::nullopt;
}

Poly content_in(const Poly& p, Var v) {
    auto cs = univariate_view(p, v);
    Poly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

Poly primpart_in(const Poly& p, Var v) {
    Poly c = content_in(p, v);
    return normalize(exact_divide(p, c));
}

}  // namespace

Poly prem(const Poly& a, const Poly& b, Var v) {
    int db = b.degree(v);
    if (db < 0) throw Error("prem by zero");
    auto bc = univariate_view(b, v);
    const Poly& lb = bc.back();
    Poly r = a;
    int dr = r.degree(v);
    while (!r.is_zero() && dr >= db) {
        auto rc = univariate_view(r, v);
        Poly lr = rc.back();
        Poly shift = lr * Poly::var(v, unsigned(dr - db));
        r = lb * r - shift * b;
        dr = r.degree(v);
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a.is_monomial() || b.is_monomial())
        return monomial_poly(monomial_gcd(a.monomial_content(), b.monomial_content()));
    // Pull out the monomial gcd first; it is cheap and common.
    Monomial mg = monomial_gcd(a.monomial_content(), b.monomial_content());
    if (mg.deg > 0) {
        Poly mp = monomial_poly(mg);
        return normalize(mp * gcd(exact_divide(a, mp), exact_divide(b, mp)));
    }
    if (auto q = try_divide(a, b)) return normalize(b);
    if (auto q = try_divide(b, a)) return normalize(a);

    Var v = *main_var(a, b);
    if (a.degree(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return gcd(content_in(a, v), b);

    Poly ca = content_in(a, v);
    Poly cb = content_in(b, v);
    Poly pa = normalize(exact_divide(a, ca));
    Poly pb = normalize(exact_divide(b, cb));
    Poly c = gcd(ca, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            pb = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = primpart_in(r, v);
    }
    return normalize(c * pb);
}

Poly gcd(const std::vector<Poly>& ps) {
    Poly g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = gcd(g, p);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

}  // namespace parmod::exact
