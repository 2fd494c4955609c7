#include "parmod/exact.hpp"

#include <doctest.h>

#include <random>

using namespace parmod::exact;

namespace {

Poly V(Var v) { return Poly::var(v); }

Poly random_poly(std::mt19937_64& rng, std::vector<Var> vars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, maxdeg);
    std::vector<Term> ts;
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        unsigned d = 0;
        for (Var v : vars) {
            int k = ex(rng);
            m.e[slot(v)] = static_cast<std::uint8_t>(k);
            d += unsigned(k);
        }
        m.deg = static_cast<std::uint16_t>(d);
        Scalar c(coef(rng), 1 + std::abs(coef(rng)));
        c.canonicalize();
        ts.push_back(Term{m, c});
    }
    return Poly::from_terms(ts);
}

}  // namespace

TEST_CASE("scalars are canonical") {
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(to_string(parse_scalar("-10/-4")) == "5/2");
    CHECK(to_string(parse_scalar("0/7")) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
    CHECK(numden_less(Scalar(-3), Scalar(1, 2)));
    CHECK(numden_less(Scalar(1, 3), Scalar(1, 2)) == false);
}

TEST_CASE("basic arithmetic") {
    Poly z = V(Var::z0), w = V(Var::w0);
    CHECK((z + 1) + (z - 1) == z * 2);
    CHECK((z - w) * (z + w) == z * z - w * w);
    CHECK((z * w + 3) * Poly() == Poly());
    CHECK((z + w).pow(3) == z.pow(3) + 3 * z * z * w + 3 * z * w * w + w.pow(3));
    CHECK((z * z * w + z).str() == "z0^2*w0 + z0");
}

TEST_CASE("ring axioms and canonical form on random polynomials") {
    std::mt19937_64 rng(7);
    std::vector<Var> vars{Var::x, Var::y, Var::lambda};
    for (int it = 0; it < 40; ++it) {
        Poly a = random_poly(rng, vars, 3, 5), b = random_poly(rng, vars, 3, 5), c = random_poly(rng, vars, 2, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Poly());
        CHECK(Poly::from_terms(a.terms()) == a);
    }
}

TEST_CASE("exact division") {
    Poly z = V(Var::z0), w = V(Var::w0);
    CHECK(exact_divide(z * z - w * w, z - w) == z + w);
    CHECK_THROWS_AS(exact_divide(z * z + 1, z - 1), NotDivisible);
    std::mt19937_64 rng(11);
    std::vector<Var> vars{Var::b0, Var::b1, Var::t};
    for (int it = 0; it < 40; ++it) {
        Poly q = random_poly(rng, vars, 3, 6), b = random_poly(rng, vars, 2, 4);
        if (b.is_zero()) continue;
        CHECK(exact_divide(q * b, b) == q);
    }
}

TEST_CASE("univariate view") {
    Poly z = V(Var::z0), w = V(Var::w0);
    auto cs = univariate_view(z * z * w + z, Var::z0);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == Poly());
    CHECK(cs[1] == Poly(1));
    CHECK(cs[2] == w);
    CHECK(univariate_view(Poly(5), Var::z0) == std::vector<Poly>{Poly(5)});
    std::mt19937_64 rng(3);
    Poly p = random_poly(rng, {Var::x, Var::y}, 4, 8);
    CHECK(from_univariate(univariate_view(p, Var::y), Var::y) == p);
}

TEST_CASE("gcd") {
    Poly x = V(Var::x), y = V(Var::y);
    Poly a = (x + y).pow(2) * (x - y) * (3 * x * y + 2);
    Poly b = (x + y) * (x * x + 1) * (3 * x * y + 2).pow(2);
    CHECK(gcd(a, b) == 3 * x * x * y + 3 * x * y * y + 2 * x + 2 * y);
    CHECK(gcd(x * x - 1, x + 2) == Poly(1));
    CHECK(gcd(x * x * y, x * y * y) == x * y);
    // gcd of random products recovers the planted factor up to content
    std::mt19937_64 rng(5);
    std::vector<Var> vars{Var::b0, Var::lambda, Var::t};
    for (int it = 0; it < 15; ++it) {
        Poly g = random_poly(rng, vars, 2, 3), p = random_poly(rng, vars, 2, 3), q = random_poly(rng, vars, 2, 3);
        if (g.is_zero() || p.is_zero() || q.is_zero()) continue;
        Poly h = gcd(g * p, g * q);
        CHECK(try_divide(h, g.primitive()).has_value());
        CHECK(try_divide(g * p, h).has_value());
        CHECK(try_divide(g * q, h).has_value());
    }
}

TEST_CASE("rational functions normalize") {
    Poly x = V(Var::x), y = V(Var::y);
    RatFunc r(2 * (x * x - y * y), 4 * (x - y));
    CHECK(r.den() == Poly(1));
    CHECK(r.num() == (x + y).scaled(Scalar(1, 2)));
    RatFunc s(x, 2 * y - 4 * x);
    CHECK(s.den().leading_coeff() > 0);
    CHECK(s + RatFunc(1) == RatFunc(2 * y - 3 * x, 2 * y - 4 * x));
    CHECK((s * s.inverse()) == RatFunc(1));
}

TEST_CASE("resultant and discriminant") {
    Poly a = V(Var::lambda), b = V(Var::t), z = V(Var::z0);
    CHECK(resultant(z - a, z - b, Var::z0) == a - b);
    CHECK(discriminant(z * z - 1, Var::z0) == Poly(4));
    Poly x = V(Var::x), y = V(Var::y);
    CHECK(resultant(x.pow(3) - 2 * x + y, x * x + y * x + 1, Var::x) == -y.pow(4) + 4 * y * y + 9);
    CHECK(discriminant(x.pow(3) + y * x + 1, Var::x) == -4 * y.pow(3) - 27);
    CHECK_THROWS_AS(resultant(Poly(3), z, Var::z0), DegreeTooSmall);
    // binary quadratic: b^2 - 4ac, including vanishing top coefficient
    Poly z0 = V(Var::z0), z1 = V(Var::z1);
    CHECK(binary_discriminant(z0 * z1, Var::z0, Var::z1, 2) == Poly(1));
    CHECK(binary_discriminant(3 * z0 * z0 + 5 * z0 * z1 + 2 * z1 * z1, Var::z0, Var::z1, 2) == Poly(1));
}

TEST_CASE("resultant vanishes exactly at specializations with a common root") {
    std::mt19937_64 rng(17);
    Poly x = V(Var::x), u = V(Var::u);
    Poly p = x * x - u * x + 2, q = x - u + 1;  // common root iff (u-1)^2 - u(u-1) + 2 = 0 iff u = 3
    Poly r = resultant(p, q, Var::x);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 20; ++i) {
        Scalar uv(d(rng), 1 + std::abs(d(rng)));
        uv.canonicalize();
        Scalar root = uv - 1;
        bool shared = (root * root - uv * root + 2) == 0;
        CHECK((r.eval({{Var::u, uv}}) == 0) == shared);
    }
    CHECK(r.eval({{Var::u, Scalar(3)}}) == 0);
}

TEST_CASE("disc_w of the (2,2) tangency curve at lambda=2, t=5") {
    Poly z0 = V(Var::z0), z1 = V(Var::z1), w0 = V(Var::w0), w1 = V(Var::w1);
    Poly g = w0 * w0 * z0 * z0 - 10 * w0 * w0 * z0 * z1 + 25 * w0 * w0 * z1 * z1 - 10 * w0 * w1 * z0 * z0 +
             6 * w0 * w1 * z0 * z1 - 20 * w0 * w1 * z1 * z1 + 25 * w1 * w1 * z0 * z0 - 20 * w1 * w1 * z0 * z1 +
             4 * w1 * w1 * z1 * z1;
    auto cs = univariate_view(g, Var::w1);
    CHECK(cs.size() == 3);
    Poly d = binary_discriminant(g, Var::w0, Var::w1, 2);
    CHECK(d == 960 * z0 * z1 * (z0 - 2 * z1) * (z0 - z1));
    auto roots = binary_form_roots(d, Var::z0, Var::z1);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == RationalP1::finite(0));
    CHECK(roots[1] == RationalP1::finite(1));
    CHECK(roots[2] == RationalP1::finite(2));
    CHECK(roots[3].is_infinity());
}

TEST_CASE("rational roots") {
    auto r = rational_roots({Scalar(2), Scalar(-3), Scalar(1)}, false);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RationalP1::finite(1));
    CHECK(r[1] == RationalP1::finite(2));
    CHECK_THROWS_AS(rational_roots({Scalar(-2), Scalar(0), Scalar(1)}, false), IrrationalRoot);
    CHECK_THROWS_AS(rational_roots({Scalar(1), Scalar(0), Scalar(1)}, true), IrrationalRoot);
    // (7z - 3)^2 (5z + 2) as a cubic form of formal degree 4
    Poly z = V(Var::z0);
    Poly f = (7 * z - 3).pow(2) * (5 * z + 2);
    auto fc = univariate_view(f, Var::z0);
    std::vector<Scalar> c;
    for (auto& p : fc) c.push_back(p.constant_value());
    c.push_back(0);
    auto rr = rational_roots(c, true);
    REQUIRE(rr.size() == 4);
    CHECK(rr[0] == RationalP1::finite(Scalar(-2, 5)));
    CHECK(rr[1] == RationalP1::finite(Scalar(3, 7)));
    CHECK(rr[2] == RationalP1::finite(Scalar(3, 7)));
    CHECK(rr[3].is_infinity());
    // binary form z0 z1 (z0 - z1)(z0 - 2 z1): roots {0, 1, 2, inf} with z = z0/z1
    Poly z0 = V(Var::z0), z1 = V(Var::z1);
    auto b = binary_form_roots(z0 * z1 * (z0 - z1) * (z0 - 2 * z1), Var::z0, Var::z1);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == RationalP1::finite(0));
    CHECK(b[1] == RationalP1::finite(1));
    CHECK(b[2] == RationalP1::finite(2));
    CHECK(b[3].is_infinity());
    // large coefficients
    Poly g = (123457 * z - 98765).pow(2) * (z + 1000003);
    auto gc = univariate_view(g, Var::z0);
    std::vector<Scalar> gs;
    for (auto& p : gc) gs.push_back(p.constant_value());
    auto gr = rational_roots(gs, false);
    REQUIRE(gr.size() == 3);
    CHECK(gr[0] == RationalP1::finite(-1000003));
    CHECK(gr[1] == RationalP1::finite(Scalar(98765, 123457)));
}

TEST_CASE("linear solving") {
    ExactMatrix id = ExactMatrix::identity(3);
    auto s = solve_linear(id, {RatFunc(1), RatFunc(2), RatFunc(3)});
    CHECK(s.kind == LinearSolution::Kind::unique);
    CHECK(s.particular[1] == RatFunc(2));
    ExactMatrix row(1, 2, {RatFunc(1), RatFunc(1)});
    auto u = solve_linear(row, {RatFunc(1)});
    CHECK(u.kind == LinearSolution::Kind::underdetermined);
    CHECK(u.kernel.size() == 1);
    ExactMatrix bad(2, 1, {RatFunc(1), RatFunc(1)});
    CHECK_THROWS_AS(solve_linear(bad, {RatFunc(1), RatFunc(2)}), Inconsistent);
}

TEST_CASE("linear solutions satisfy the system exactly") {
    std::mt19937_64 rng(23);
    Poly l = V(Var::lambda), c = V(Var::c);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int it = 0; it < 10; ++it) {
        std::size_t rows = 3 + std::size_t(it % 3), cols = 4;
        ExactMatrix a(rows, cols);
        std::vector<RatFunc> b;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = RatFunc(d(rng) * l + d(rng) * c + d(rng));
            b.push_back(RatFunc(d(rng) * l * c + d(rng)));
        }
        if (it % 2) {  // make the last row dependent and consistent
            for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * RatFunc(l) + a(1, j);
            b[rows - 1] = b[0] * RatFunc(l) + b[1];
        }
        LinearSolution sol;
        try {
            sol = solve_linear(a, b);
        } catch (const Inconsistent&) {
            continue;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            RatFunc acc(0);
            for (std::size_t j = 0; j < cols; ++j) acc += a(i, j) * sol.particular[j];
            CHECK(acc == b[i]);
            for (const auto& k : sol.kernel) {
                Poly hk;
                for (std::size_t j = 0; j < cols; ++j) hk += a(i, j).num() * k[j];
                CHECK(hk.is_zero());
            }
        }
    }
}

TEST_CASE("determinant and rank") {
    Poly x = V(Var::x);
    PolyMatrix m{{x, Poly(1), Poly(0)}, {Poly(1), x, Poly(1)}, {Poly(0), Poly(1), x}};
    CHECK(determinant(m) == x.pow(3) - 2 * x);
    PolyMatrix sing{{x, 2 * x}, {Poly(3), Poly(6)}};
    CHECK(determinant(sing).is_zero());
    CHECK(rank(sing) == 1);
    PolyMatrix perm{{Poly(0), Poly(1)}, {Poly(1), Poly(0)}};
    CHECK(determinant(perm) == Poly(-1));
}

TEST_CASE("json round trip") {
    Poly z0 = V(Var::z0), w1 = V(Var::w1), t = V(Var::t);
    Poly p = z0 * z0 * w1.scaled(Scalar(3, 4)) - t + 2;
    Json j = to_json(p, {Var::z0, Var::z1, Var::w0, Var::w1});
    CHECK(j["vars"].size() == 5);
    CHECK(j["terms"][0]["n"] == "3");
    CHECK(j["terms"][0]["d"] == "4");
    CHECK(poly_from_json(j) == p);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["q"],"terms":[]})")), ParseError);
}
