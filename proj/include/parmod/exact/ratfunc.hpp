#pragma once

#include "parmod/exact/poly.hpp"

namespace parmod::exact {

// Quotient of polynomials kept in lowest terms with a primitive denominator
// whose leading coefficient is positive.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Poly& num);  // NOLINT(google-explicit-constructor)
    RatFunc(const Scalar& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Poly(c)) {}           // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Poly(c)) {}            // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc pow(unsigned k) const;
    RatFunc inverse() const;

    // Equality by cross-multiplication; does not rely on normal forms.
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc subs(const std::vector<std::pair<Var, RatFunc>>& values) const;
    Scalar eval(const Assignment& values) const;  // throws on zero denominator

    std::string str() const;

private:
    struct Raw {};
    RatFunc(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    Poly num_;
    Poly den_;
};

// Substitute rational functions into a polynomial.
RatFunc subs(const Poly& p, const std::vector<std::pair<Var, RatFunc>>& values);

}  // namespace parmod::exact
