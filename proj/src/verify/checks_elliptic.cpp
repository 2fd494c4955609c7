#include "checks.hpp"

namespace parmod::verify::detail {

namespace {

using namespace elliptic;
using proj::ProjPoint;

Json point_json(const EllipticPoint& p) { return elliptic::to_json(p); }

ProjPoint p1(const exact::RationalP1& r) { return ProjPoint::p1(Poly(r.a), Poly(r.b)); }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::size_t(proj::random_int(rng, 0, long(n) - 1)); }

Outcome group_axioms(const CheckContext& ctx) {
    auto rng = ctx.rng();
    auto tc = test_curve(ctx, rng);
    if (!tc) return Outcome::skip("no non-torsion rational point of small height on the curve");
    const auto& [c, gen] = *tc;
    auto pts = sample_points(c, rng, 30);
    pts.push_back(gen);
    const auto inf = EllipticPoint::infinity();
    for (int trial = 0; trial < 50; ++trial) {
        const auto &a = pts[pick(rng, pts.size())], &b = pts[pick(rng, pts.size())], &d = pts[pick(rng, pts.size())];
        Json w = {{"lambda", exact::scalar_json(c.lambda)}, {"p", point_json(a)}, {"q", point_json(b)}, {"r", point_json(d)}};
        if (group_add(c, a, inf) != a) return Outcome::fail(w, "w_inf is not neutral");
        if (group_add(c, a, group_neg(a)) != inf) return Outcome::fail(w, "p + i(p) != w_inf");
        if (group_add(c, a, b) != group_add(c, b, a)) return Outcome::fail(w, "addition is not commutative");
        if (group_add(c, group_add(c, a, b), d) != group_add(c, a, group_add(c, b, d)))
            return Outcome::fail(w, "addition is not associative");
    }
    return Outcome::ok({{"lambda", exact::scalar_json(c.lambda)}, {"generator", point_json(gen)}, {"triples", 50}});
}

Outcome pi_equivariance(const CheckContext& ctx) {
    auto rng = ctx.rng();
    auto tc = test_curve(ctx, rng);
    if (!tc) return Outcome::skip("no non-torsion rational point of small height on the curve");
    const auto& c = tc->first;
    auto pts = sample_points(c, rng, 20);
    for (Branch k : kBranches) {
        auto b = beta(k, c.lambda);
        for (const auto& p : pts) {
            auto img = project(torsion_translate(c, p, k));
            if (p1(img) != b.apply(p1(project(p))))
                return Outcome::fail({{"lambda", exact::scalar_json(c.lambda)}, {"branch", branch_name(k)}, {"p", point_json(p)}},
                                     "pi(p + w_k) != beta_k(pi(p))");
        }
    }
    return Outcome::ok({{"lambda", exact::scalar_json(c.lambda)}, {"points", pts.size()}});
}

Outcome beta_relations(const CheckContext& ctx) {
    const Poly& lam = ctx.params.lambda;
    auto b = [&](Branch k) { return beta(k, lam); };
    if (!(b(Branch::zero) * b(Branch::one) == b(Branch::lambda)))
        return Outcome::fail({{"product", (b(Branch::zero) * b(Branch::one)).str()}, {"beta_lambda", b(Branch::lambda).str()}},
                             "beta_0 o beta_1 != beta_lambda");
    for (Branch k : kBranches)
        if (!(b(k) * b(k) == proj::MoebiusMap::identity()))
            return Outcome::fail({{"branch", branch_name(k)}, {"square", (b(k) * b(k)).str()}}, "beta_k is not an involution");
    return Outcome::ok();
}

Outcome epsilon_invariance(const CheckContext& ctx) {
    const auto& p = ctx.params;
    Poly s;
    if (p.symbolic) {
        s = Poly::var(Var::s);
    } else {
        if (!p.s) return Outcome::skip("t(t-1)(t-lambda) is not a rational square, so the puncture has no rational s");
        s = *p.s;
    }
    for (int j : {1, 2}) {
        Poly r = epsilon_invariance_residual(j, p.lambda, p.t, s);
        if (!r.is_zero()) return Outcome::fail({{"j", j}, {"residual", poly_witness(r)}}, "eps_j o i_{t_j} != eps_j modulo the curve");
    }
    return Outcome::ok();
}

Outcome prop2sec(const CheckContext& ctx) {
    auto rng = ctx.rng();
    auto tc = test_curve(ctx, rng);
    if (!tc) return Outcome::skip("no non-torsion rational point of small height on the curve");
    const auto& c = tc->first;
    auto pts = sample_points(c, rng, 50);
    const auto inf = EllipticPoint::infinity();
    int fixed = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        const auto& q = pts[i];
        // alternate the fixed-point case p = -2q with an unrelated p
        EllipticPoint p = i % 2 == 0 ? group_neg(group_mul(c, q, 2)) : pts[pick(rng, pts.size())];
        bool a = prop2sec_check(c, p, q);
        bool b = divisor_class_trivial(c, {{p, 1}, {q, 2}, {inf, -3}});
        if (a != b)
            return Outcome::fail({{"lambda", exact::scalar_json(c.lambda)}, {"p", point_json(p)}, {"q", point_json(q)},
                                  {"fixed", a}, {"principal", b}},
                                 "i_p(q) = q disagrees with p + 2q ~ 3 w_inf");
        fixed += a;
    }
    return Outcome::ok({{"lambda", exact::scalar_json(c.lambda)}, {"instances", 50}, {"fixed", fixed}});
}

}  // namespace

std::vector<CheckInfo> elliptic_checks() {
    return {
        {"elliptic_group_axioms", "elliptic", false, group_axioms},
        {"elliptic_pi_equivariance", "elliptic", false, pi_equivariance},
        {"elliptic_beta_relations", "elliptic", false, beta_relations},
        {"elliptic_epsilon_invariance", "elliptic", false, epsilon_invariance},
        {"elliptic_prop2sec", "elliptic", false, prop2sec},
    };
}

}  // namespace parmod::verify::detail
