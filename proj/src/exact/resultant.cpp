#include "parmod/exact/resultant.hpp"

#include "parmod/exact/errors.hpp"
#include "parmod/exact/linalg.hpp"

namespace parmod::exact {

namespace {

std::vector<Poly> trimmed(std::vector<Poly> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

std::vector<Poly> derivative(const std::vector<Poly>& p) {
    std::vector<Poly> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i].scaled(Scalar(long(i))));
    return d;
}

}  // namespace

Poly resultant(const std::vector<Poly>& p_in, const std::vector<Poly>& q_in) {
    auto p = trimmed(p_in);
    auto q = trimmed(q_in);
    if (p.size() < 2 || q.size() < 2) throw DegreeTooSmall();
    std::size_t m = p.size() - 1, n = q.size() - 1, N = m + n;
    PolyMatrix s(N, std::vector<Poly>(N));
    // Rows hold coefficients from the leading one down.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = p[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = q[n - k];
    return determinant(std::move(s));
}

Poly resultant(const Poly& p, const Poly& q, Var v) {
    return resultant(univariate_view(p, v), univariate_view(q, v));
}

Poly discriminant(const std::vector<Poly>& p_in) {
    auto p = trimmed(p_in);
    if (p.size() < 2) throw DegreeTooSmall();
    std::size_t d = p.size() - 1;
    if (d == 1) return Poly(1);
    Poly r = exact_divide(resultant(p, derivative(p)), p.back());
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

Poly discriminant(const Poly& p, Var v) { return discriminant(univariate_view(p, v)); }

std::vector<Poly> binary_coefficients(const Poly& form, Var v0, Var v1, int d) {
    std::vector<std::vector<Term>> buckets(std::size_t(d) + 1);
    for (const auto& t : form.terms()) {
        int a = t.m[v0], b = t.m[v1];
        if (a + b != d) throw Error("binary form is not homogeneous of the stated degree");
        Monomial m = t.m;
        m.e[slot(v0)] = 0;
        m.e[slot(v1)] = 0;
        m.deg = static_cast<std::uint16_t>(m.deg - d);
        buckets[std::size_t(a)].push_back(Term{m, t.c});
    }
    std::vector<Poly> out;
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly binary_discriminant(const Poly& form, Var v0, Var v1, int d) {
    // The discriminant of a binary form is SL2-invariant, so when the
    // v0^d coefficient vanishes shear v1 -> v1 + k*v0 until it does not.
    Poly f = form;
    for (long k = 1; binary_coefficients(f, v0, v1, d).back().is_zero(); ++k) {
        if (k > d + 1) return Poly();  // the form is identically zero
        f = form.subs(v1, Poly::var(v1) + Poly::var(v0).scaled(Scalar(k)));
    }
    return discriminant(binary_coefficients(f, v0, v1, d));
}

}  // namespace parmod::exact
