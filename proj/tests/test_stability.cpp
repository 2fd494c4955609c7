#include "parmod/stability/catalog.hpp"

#include <doctest.h>

using namespace parmod;
using namespace parmod::stability;
using elliptic::EllipticPoint;

namespace {

Scalar q(long n, long d = 1) {
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

struct Setup {
    CurveParams c{q(-6)};
    // (2, 4) has infinite order on this curve
    DivisorClass L = elliptic::jacobian_class(EllipticPoint::affine(c, 2, 4));
    DivisorClass L0 = elliptic::jacobian_class(elliptic::weierstrass(c, elliptic::Branch::zero));
};

constexpr auto G = Position::generic, OnL = Position::on_L, OnM = Position::on_M;

}  // namespace

TEST_CASE("weights and descriptors validate") {
    Setup s;
    CHECK_THROWS_AS(WeightVector(q(-1, 2), q(1, 2)), InvalidWeight);
    CHECK_THROWS_AS(WeightVector(q(1, 2), q(3, 2)), InvalidWeight);
    CHECK_THROWS_AS(BundleDescriptor::make(s.c, Underlying::L_plus_Linv, s.L0), InvalidDescriptor);
    CHECK_THROWS_AS(BundleDescriptor::make(s.c, Underlying::E0_twist, s.L), InvalidDescriptor);
    CHECK_THROWS_AS(BundleDescriptor::make(s.c, Underlying::E1, s.L, {OnL, G}), InvalidDescriptor);
    CHECK_NOTHROW(BundleDescriptor::make(s.c, Underlying::E0_twist, s.L0, {OnL, G}));
}

TEST_CASE("parabolic index examples") {
    Setup s;
    auto e1 = BundleDescriptor::make(s.c, Underlying::E1, s.L, {G, G}, true);
    SubbundleDescriptor both{0, {true, true}, s.L, "L"}, none{0, {false, false}, std::nullopt, "L"};
    WeightVector mu(q(1, 3), q(1, 5));
    CHECK(parabolic_index(e1, both, mu) == 1 - mu.mu1 - mu.mu2);
    CHECK(parabolic_index(e1, none, WeightVector(q(1, 2), q(1, 2))) == 2);
    auto f = BundleDescriptor::make(s.c, Underlying::L_plus_Linv, s.L, {OnL, G});
    SubbundleDescriptor through1{0, {true, false}, s.L, "L"};
    CHECK(parabolic_index(f, through1, mu) == -mu.mu1 + mu.mu2);
    CHECK_THROWS_AS(parabolic_index(f, both, mu), InadmissibleSubbundle);
}

TEST_CASE("classification examples") {
    Setup s;
    auto e_less = BundleDescriptor::make(s.c, Underlying::E1, s.L, {G, G}, true);
    CHECK(classify(e_less, WeightVector(q(1, 4), q(1, 4))).status == Status::stable);
    auto un = classify(e_less, WeightVector(q(3, 4), q(3, 4)));
    CHECK(un.status == Status::unstable);
    REQUIRE(un.witness.has_value());
    CHECK(un.witness->name == "L");
    auto f_eq = BundleDescriptor::make(s.c, Underlying::L_plus_Linv, s.L, {OnL, OnM});
    for (long k = 1; k < 10; ++k) CHECK(classify(f_eq, WeightVector(q(k, 10), q(k, 10))).status == Status::strictly_semistable);
    // weight zero admits a direction on L^-1(w_inf)
    auto onm = BundleDescriptor::make(s.c, Underlying::L_plus_Linv_winf, s.L, {OnM, G});
    CHECK(classify(onm, WeightVector(q(0), q(1))).status == Status::strictly_semistable);
    CHECK(classify(onm, WeightVector(q(1, 2), q(1, 2))).status == Status::unstable);
}

TEST_CASE("catalog classification matches the chamber tables") {
    Setup s;
    auto cat = catalog(s.c, s.L);
    CHECK(cat.size() > 20);
    for (const auto& e : cat)
        for (const auto& mu : weight_grid()) {
            auto got = classify(e, mu).status;
            auto want = expected_status(role(e), region(e.parity(), mu));
            CHECK_MESSAGE(got == want, e.str());
        }
}

TEST_CASE("wall partners and graded objects") {
    Setup s;
    int partners = 0;
    for (const auto& e : catalog(s.c, s.L)) {
        Role r = role(e);
        if (r == Role::E_less || r == Role::E_greater || r == Role::F_less || r == Role::F_greater) {
            auto p = wall_partner(e);
            CHECK(wall_partner(p) == e);
            WeightVector mu = e.parity() == Parity::odd ? WeightVector(q(1, 3), q(2, 3)) : WeightVector(q(2, 5), q(2, 5));
            CHECK(graded_equal(graded(e, mu), graded(p, mu)));
            ++partners;
        } else {
            CHECK_THROWS_AS(wall_partner(e), NotOnWall);
        }
    }
    CHECK(partners > 0);
    auto f_eq = BundleDescriptor::make(s.c, Underlying::L_plus_Linv, s.L, {OnL, OnM});
    auto g = graded(f_eq, WeightVector(q(1, 2), q(1, 2)));
    Graded expect{GradedPiece{s.L, {true, false}}, GradedPiece{elliptic::class_neg(s.L), {false, true}}};
    CHECK(graded_equal(g, expect));
    auto e_less = BundleDescriptor::make(s.c, Underlying::E1, s.L, {G, G}, true);
    auto ge = graded(e_less, WeightVector(q(1, 2), q(1, 2)));
    DivisorClass m = elliptic::class_add(s.c, elliptic::class_neg(s.L), {1, EllipticPoint::infinity()});
    CHECK(graded_equal(ge, {GradedPiece{s.L, {true, true}}, GradedPiece{m, {false, false}}}));
    CHECK_THROWS_AS(graded(e_less, WeightVector(q(1, 4), q(1, 4))), NotStrictlySemistable);
}

TEST_CASE("index is affine with unit coefficients") {
    Setup s;
    for (const auto& e : catalog(s.c, s.L))
        for (const auto& l : admissible_subbundles(e)) {
            Scalar a = parabolic_index(e, l, WeightVector(0, 0));
            Scalar c1 = parabolic_index(e, l, WeightVector(1, 0)) - a;
            Scalar c2 = parabolic_index(e, l, WeightVector(0, 1)) - a;
            CHECK(abs(c1) == 1);
            CHECK(abs(c2) == 1);
            WeightVector mu(q(2, 7), q(3, 5));
            CHECK(parabolic_index(e, l, mu) == a + c1 * mu.mu1 + c2 * mu.mu2);
        }
}

TEST_CASE("descriptor json round trip") {
    Setup s;
    for (const auto& e : catalog(s.c, s.L)) CHECK(descriptor_from_json(to_json(e)) == e);
}
