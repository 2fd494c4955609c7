#include "parmod/exact/ratfunc.hpp"

#include "parmod/exact/errors.hpp"

namespace parmod::exact {

RatFunc::RatFunc(const Poly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    Scalar c = den_.content();
    if (c != 1) {
        Scalar inv = Scalar(1) / c;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial())
        return RatFunc(RatFunc::Raw{}, a.num_ * b.num_, Poly(1));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned k) const { return RatFunc(Raw{}, num_.pow(k), den_.pow(k)); }

RatFunc RatFunc::inverse() const { return RatFunc(den_, num_); }

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFunc RatFunc::subs(const std::vector<std::pair<Var, RatFunc>>& values) const {
    return exact::subs(num_, values) / exact::subs(den_, values);
}

Scalar RatFunc::eval(const Assignment& values) const {
    Scalar d = den_.eval(values);
    if (d == 0) throw Error("rational function evaluated at a pole");
    return num_.eval(values) / d;
}

std::string RatFunc::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc subs(const Poly& p, const std::vector<std::pair<Var, RatFunc>>& values) {
    // Bring everything over a common denominator per variable:
    // x_i = n_i/d_i, a term of x-degree profile k contributes n^k d^(D-k).
    std::vector<int> maxdeg(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) maxdeg[i] = std::max(0, p.degree(values[i].first));
    Poly den(1);
    std::vector<std::vector<Poly>> npow(values.size()), dpow(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        npow[i].push_back(Poly(1));
        dpow[i].push_back(Poly(1));
        for (int k = 1; k <= maxdeg[i]; ++k) {
            npow[i].push_back(npow[i].back() * values[i].second.num());
            dpow[i].push_back(dpow[i].back() * values[i].second.den());
        }
        den *= dpow[i][std::size_t(maxdeg[i])];
    }
    std::vector<Poly> parts;
    for (const auto& t : p.terms()) {
        Monomial rest = t.m;
        Poly term = Poly(1);
        for (std::size_t i = 0; i < values.size(); ++i) {
            unsigned k = t.m[values[i].first];
            rest.e[slot(values[i].first)] = 0;
            rest.deg = static_cast<std::uint16_t>(rest.deg - k);
            term = term * npow[i][k] * dpow[i][std::size_t(maxdeg[i]) - k];
        }
        parts.push_back(term.times_monomial(rest, t.c));
    }
    while (parts.size() > 1) {
        std::vector<Poly> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return RatFunc(parts.empty() ? Poly() : parts.front(), den);
}

}  // namespace parmod::exact
