#include "checks.hpp"
#include "parmod/stability/catalog.hpp"

#include <map>

namespace parmod::verify::detail {

namespace {

using namespace stability;
using stability::Status;
using stability::status_name;

struct Setup {
    CurveParams c;
    std::vector<BundleDescriptor> cat;
};

std::optional<Setup> setup(const CheckContext& ctx) {
    auto rng = ctx.rng();
    auto tc = test_curve(ctx, rng);
    if (!tc) return std::nullopt;
    return Setup{tc->first, catalog(tc->first, elliptic::jacobian_class(tc->second))};
}

Json weight_json(const WeightVector& mu) { return Json::array({exact::scalar_json(mu.mu1), exact::scalar_json(mu.mu2)}); }

Outcome no_curve() { return Outcome::skip("no non-torsion rational point of small height, so no non-torsion L"); }

bool strict_role(Role r) {
    return r == Role::E_less || r == Role::E_greater || r == Role::E_equal || r == Role::F_less || r == Role::F_greater ||
           r == Role::F_equal;
}

Outcome wall_characterization(const CheckContext& ctx) {
    auto s = setup(ctx);
    if (!s) return no_curve();
    std::size_t cells = 0;
    for (const auto& e : s->cat)
        for (const auto& mu : weight_grid()) {
            Status got = classify(e, mu).status;
            Region g = region(e.parity(), mu);
            Status want = expected_status(role(e), g);
            bool ss_ok = (got == Status::strictly_semistable) == (g == Region::wall && strict_role(role(e)));
            if (got != want || !ss_ok)
                return Outcome::fail({{"bundle", e.str()}, {"role", role_name(role(e))}, {"mu", weight_json(mu)},
                                      {"got", status_name(got)}, {"expected", status_name(want)}},
                                     "classification disagrees with the wall tables");
            ++cells;
        }
    return Outcome::ok({{"catalog", s->cat.size()}, {"cells", cells}});
}

Outcome chamber_constancy(const CheckContext& ctx) {
    auto s = setup(ctx);
    if (!s) return no_curve();
    for (const auto& e : s->cat) {
        std::map<Region, std::pair<Status, WeightVector>> seen;
        for (const auto& mu : weight_grid()) {
            Region g = region(e.parity(), mu);
            if (g != Region::chamber_less && g != Region::chamber_greater) continue;
            Status st = classify(e, mu).status;
            auto [it, fresh] = seen.try_emplace(g, st, mu);
            if (!fresh && it->second.first != st)
                return Outcome::fail({{"bundle", e.str()}, {"mu_a", weight_json(it->second.second)}, {"mu_b", weight_json(mu)},
                                      {"a", status_name(it->second.first)}, {"b", status_name(st)}},
                                     "classification changes inside a chamber");
        }
    }
    return Outcome::ok({{"catalog", s->cat.size()}});
}

Outcome graded_partners(const CheckContext& ctx) {
    auto s = setup(ctx);
    if (!s) return no_curve();
    std::size_t pairs = 0;
    for (const auto& e : s->cat)
        for (const auto& mu : weight_grid()) {
            if (classify(e, mu).status != Status::strictly_semistable) continue;
            Role r = role(e);
            if (r != Role::E_less && r != Role::E_greater && r != Role::F_less && r != Role::F_greater) continue;
            auto p = wall_partner(e);
            if (!graded_equal(graded(e, mu), graded(p, mu)))
                return Outcome::fail({{"bundle", e.str()}, {"partner", p.str()}, {"mu", weight_json(mu)}},
                                     "graded objects of wall partners differ");
            ++pairs;
        }
    if (pairs == 0) return Outcome::fail({{"pairs", 0}}, "no strictly semistable wall partners in the catalog");
    return Outcome::ok({{"pairs", pairs}});
}

Outcome index_affine(const CheckContext& ctx) {
    auto s = setup(ctx);
    if (!s) return no_curve();
    auto rng = ctx.rng(1);
    for (const auto& e : s->cat)
        for (const auto& l : admissible_subbundles(e)) {
            Scalar a = parabolic_index(e, l, WeightVector(0, 0));
            Scalar c1 = parabolic_index(e, l, WeightVector(1, 0)) - a;
            Scalar c2 = parabolic_index(e, l, WeightVector(0, 1)) - a;
            auto unit = [](const Scalar& x) { return x == -1 || x == 0 || x == 1; };
            Scalar m1(proj::random_int(rng, 0, 97), 97), m2(proj::random_int(rng, 0, 89), 89);
            m1.canonicalize();
            m2.canonicalize();
            WeightVector mu(m1, m2);
            if (!unit(c1) || !unit(c2) || parabolic_index(e, l, mu) != a + c1 * m1 + c2 * m2)
                return Outcome::fail({{"bundle", e.str()}, {"subbundle", l.name}, {"c1", exact::scalar_json(c1)},
                                      {"c2", exact::scalar_json(c2)}, {"mu", weight_json(mu)}},
                                     "index is not affine with coefficients in {-1, 0, 1}");
        }
    return Outcome::ok({{"catalog", s->cat.size()}});
}

}  // namespace

std::vector<CheckInfo> stability_checks() {
    return {
        {"stability_wall_characterization", "stability", false, wall_characterization},
        {"stability_chamber_constancy", "stability", false, chamber_constancy},
        {"stability_graded_partners", "stability", false, graded_partners},
        {"stability_index_affine", "stability", false, index_affine},
    };
}

}  // namespace parmod::verify::detail
