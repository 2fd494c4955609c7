#include "parmod/verify/suite.hpp"

#include <doctest.h>

using namespace parmod;
using namespace parmod::verify;

namespace {

VerifyPlan only(std::vector<std::string> patterns) {
    VerifyPlan plan;
    plan.patterns = std::move(patterns);
    return plan;
}

Scalar q(long n, long d = 1) {
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("registry matches the manifest") {
    const auto& reg = registry();
    REQUIRE(reg.size() == manifest().size());
    for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].name == manifest()[i]);
    CHECK(selected_checks(VerifyPlan{}).size() == reg.size());
    CHECK(selected_checks(only({"stability_*"})).size() == 4);
    CHECK_THROWS_AS(selected_checks(only({"no_such_check"})), InvalidPlan);
}

TEST_CASE("plans are validated") {
    VerifyPlan plan;
    plan.symbolic = false;
    CHECK_THROWS_AS(run_suite(plan), InvalidPlan);
    plan.params = {{q(2), q(2)}};
    CHECK_THROWS_AS(run_suite(plan), InvalidPlan);
    VerifyPlan zero;
    zero.jobs = 0;
    CHECK_THROWS_AS(run_suite(zero), InvalidPlan);
}

TEST_CASE("report summary counts") {
    VerifyPlan plan;
    auto empty = report({}, plan);
    CHECK(empty["summary"]["pass"] == 0);
    CHECK(empty["summary"]["fail"] == 0);
    CHECK(empty["summary"]["skipped"] == 0);
    auto one = report({Certificate{"x", Status::pass, Json::object(), "", 0}}, plan);
    CHECK(one["summary"]["pass"] == 1);
    CHECK_FALSE(one["suite"][0].contains("elapsed_ms"));
    CHECK(errata().size() == 6);
}

TEST_CASE("selected symbolic checks pass and are deterministic") {
    auto plan = only({"elliptic_*", "tau_involution", "gamma_invariance", "conic_fit"});
    plan.jobs = 2;
    auto a = run_suite(plan);
    for (const auto& c : a) {
        INFO(c.name << ": " << c.reason);
        CHECK(c.status == Status::pass);
    }
    CHECK(report(a, plan).dump() == report(run_suite(plan), plan).dump());
}

TEST_CASE("a corrupted tau coefficient fails with a witness") {
    moduli::Formulas bad = moduli::Formulas::shipped();
    const auto& t0 = bad.tau[0].terms();
    std::vector<exact::Term> terms(t0.begin(), t0.end());
    terms[1].c = -terms[1].c;
    bad.tau[0] = exact::Poly::from_terms(terms);
    auto plan = only({"tau_involution"});
    plan.formulas = &bad;
    auto certs = run_suite(plan);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].status == Status::fail);
    CHECK_FALSE(certs[0].witness.empty());
}

TEST_CASE("specialized runs skip what needs a rational square root") {
    VerifyPlan plan = only({"elliptic_epsilon_invariance", "theta_consistency"});
    plan.symbolic = false;
    plan.params = {{q(2), q(5)}};  // 5 * 4 * 3 = 60 is not a square
    for (const auto& c : run_suite(plan)) CHECK(c.status == Status::skipped);
    plan.params = {{q(-6), q(25, 16)}};  // t1 = 2 (2, 4), s = 165/64
    for (const auto& c : run_suite(plan)) {
        INFO(c.name << ": " << c.reason);
        CHECK(c.status == Status::pass);
    }
}
