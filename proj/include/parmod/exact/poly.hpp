#pragma once

#include "parmod/exact/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parmod::exact {

// Global variable order. Polynomials print and compare in this order; the
// enum value is the slot in the exponent vector.
enum class Var : std::uint8_t {
    b0, b1, b2, z0, z1, w0, w1, lambda, t, c, l, x, y, s,
    u, v, u0, u1, u2, u3,
};
inline constexpr std::size_t kNumVars = 20;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
inline std::size_t slot(Var v) { return static_cast<std::size_t>(v); }

struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};
    std::uint16_t deg = 0;

    std::uint8_t operator[](Var v) const { return e[slot(v)]; }
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    static Monomial of(Var v, unsigned power = 1);
};

// Graded-lex comparison: total degree first, then exponents in global order.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    Scalar c;
};

using Assignment = std::vector<std::pair<Var, Scalar>>;

class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)
    static Poly var(Var v, unsigned power = 1);
    static Poly monomial(const Monomial& m, const Scalar& c);
    // Terms may be unsorted and contain duplicates or zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    Scalar constant_value() const;  // requires is_constant
    Scalar constant_term() const;
    const Term& leading() const { return terms_.front(); }
    Scalar leading_coeff() const { return terms_.empty() ? Scalar(0) : terms_.front().c; }

    int total_degree() const;
    int degree(Var v) const;
    int min_degree(Var v) const;
    bool contains(Var v) const { return degree(v) > 0; }
    std::vector<Var> variables() const;
    bool is_homogeneous_in(std::initializer_list<Var> vs, int* deg_out = nullptr) const;
    bool is_homogeneous_in(const std::vector<Var>& vs, int* deg_out = nullptr) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Scalar& c) const;
    Poly times_monomial(const Monomial& m, const Scalar& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(Var v) const;
    Poly subs(Var v, const Poly& value) const;
    // Simultaneous substitution.
    Poly subs(const std::vector<std::pair<Var, Poly>>& values) const;
    Poly eval_partial(const Assignment& values) const;
    // Requires every variable of the polynomial to be assigned.
    Scalar eval(const Assignment& values) const;

    // Rational content (positive unless leading coefficient is negative) and
    // the primitive integer part with positive leading coefficient.
    Scalar content() const;
    Poly primitive() const;
    Monomial monomial_content() const;

    std::string str() const;

private:
    std::vector<Term> terms_;  // descending grlex, nonzero coefficients
    friend class PolyBuilder;
};

// Coefficients c_0..c_d with p = sum c_i v^i.
std::vector<Poly> univariate_view(const Poly& p, Var v);
Poly from_univariate(const std::vector<Poly>& coeffs, Var v);

std::optional<Poly> try_divide(const Poly& a, const Poly& b);
Poly exact_divide(const Poly& a, const Poly& b);  // throws NotDivisible

// Multivariate gcd over Q, normalized primitive with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& ps);
// Pseudo-remainder of a by b viewed in v.
Poly prem(const Poly& a, const Poly& b, Var v);

// Expansion helpers for building fixed formulas.
inline Poly operator*(const Poly& a, long k) { return a.scaled(Scalar(k)); }
inline Poly operator*(long k, const Poly& a) { return a.scaled(Scalar(k)); }

}  // namespace parmod::exact

template <>
struct std::hash<parmod::exact::Monomial> {
    std::size_t operator()(const parmod::exact::Monomial& m) const noexcept;
};
