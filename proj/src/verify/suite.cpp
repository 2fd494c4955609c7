#include "parmod/verify/suite.hpp"

#include "checks.hpp"
#include "parmod/elliptic/curve.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace parmod::verify {

namespace detail {

Json assignment_json(const exact::Assignment& a) {
    Json j = Json::object();
    for (const auto& [v, val] : a) j[std::string(exact::var_name(v))] = exact::scalar_json(val);
    return j;
}

Json poly_witness(const exact::Poly& p) {
    std::string s = p.str();
    if (s.size() > 400) s = s.substr(0, 400) + " ...";
    return s;
}

Outcome maps_agree(const proj::RationalMap& f, const proj::RationalMap& g, std::uint64_t seed, const std::string& what) {
    if (auto a = proj::find_inequality_witness(f, g, seed, 3))
        return Outcome::fail({{"map", what}, {"nonzero_minor_at", assignment_json(*a)}}, what + " differs at a random point");
    if (proj::map_equal(f, g, seed)) return Outcome::ok();
    std::size_t off = 0;
    for (std::size_t n : proj::factor_sizes(f.target())) {
        for (std::size_t i = off; i < off + n; ++i)
            for (std::size_t j = i + 1; j < off + n; ++j) {
                exact::Poly m = f.comps()[i] * g.comps()[j] - f.comps()[j] * g.comps()[i];
                if (!m.is_zero()) return Outcome::fail({{"map", what}, {"residual", poly_witness(m)}}, what + " has a nonzero minor");
            }
        off += n;
    }
    return Outcome::fail({{"map", what}}, what + " differs");
}

bool proportional(const exact::Poly& a, const exact::Poly& b, const std::vector<exact::Var>& coords) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // coefficient of the coordinate monomial of a's leading term, in both
    auto coord_part = [&](const exact::Monomial& m) {
        std::vector<std::uint8_t> e;
        for (auto v : coords) e.push_back(m[v]);
        return e;
    };
    auto key = coord_part(a.leading().m);
    auto coeff = [&](const exact::Poly& p) {
        std::vector<exact::Term> out;
        for (const auto& t : p.terms())
            if (coord_part(t.m) == key) {
                exact::Monomial r = t.m;
                for (auto v : coords) {
                    r.deg = std::uint16_t(r.deg - r.e[exact::slot(v)]);
                    r.e[exact::slot(v)] = 0;
                }
                out.push_back({r, t.c});
            }
        return exact::Poly::from_terms(out);
    };
    exact::Poly ka = coeff(a), kb = coeff(b);
    if (kb.is_zero()) return false;
    return a * kb == b * ka;
}

bool is_torsion(const elliptic::CurveParams& c, const elliptic::EllipticPoint& p) {
    for (long n = 1; n <= 12; ++n)
        if (elliptic::group_mul(c, p, n).is_infinity()) return true;
    return false;
}

std::optional<std::pair<elliptic::CurveParams, elliptic::EllipticPoint>> test_curve(const CheckContext& ctx,
                                                                                  std::mt19937_64& rng) {
    if (ctx.params.symbolic) {
        for (;;) {
            auto [c, p] = elliptic::random_curve_with_point(rng);
            if (!is_torsion(c, p)) return std::make_pair(c, p);
        }
    }
    elliptic::CurveParams c(ctx.params.lambda_value());
    for (const auto& p : elliptic::sample_points(c, rng, 40))
        if (!is_torsion(c, p)) return std::make_pair(c, p);
    return std::nullopt;
}

moduli::ModuliParams sample_params(std::mt19937_64& rng) {
    for (;;) {
        Scalar l = proj::random_scalar(rng, 9), t = proj::random_scalar(rng, 9);
        if (l == 0 || l == 1 || t == 0 || t == 1 || t == l) continue;
        return moduli::ModuliParams::specialized(l, t);
    }
}

std::vector<moduli::ModuliParams> numeric_params(const CheckContext& ctx, std::mt19937_64& rng, std::size_t count) {
    if (!ctx.params.symbolic) return {ctx.params};
    std::vector<moduli::ModuliParams> out;
    while (out.size() < count) out.push_back(sample_params(rng));
    return out;
}

void Collector::add(const Outcome& o, const std::string& label) {
    if (o.status == Status::skipped) {
        skips_.push_back(label + ": " + o.reason);
        return;
    }
    ran_ = true;
    if (o.status == Status::fail && !failed_) {
        failed_ = true;
        first_fail_ = o;
        first_fail_.witness["case"] = label;
    }
}

Outcome Collector::result() const {
    if (failed_) return first_fail_;
    if (!ran_) {
        std::string r;
        for (const auto& s : skips_) r += (r.empty() ? "" : "; ") + s;
        return Outcome::skip(r.empty() ? "nothing to check" : r);
    }
    Json w = info_;
    if (!skips_.empty()) w["skipped_cases"] = skips_;
    return Outcome::ok(w);
}

}  // namespace detail

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

std::mt19937_64 CheckContext::rng(std::uint64_t salt) const {
    std::vector<std::uint32_t> words{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(salt)};
    for (char ch : name) words.push_back(std::uint32_t(static_cast<unsigned char>(ch)));
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> all = [] {
        std::vector<CheckInfo> v;
        for (auto part : {detail::elliptic_checks(), detail::stability_checks(), detail::moduli_checks()})
            v.insert(v.end(), part.begin(), part.end());
        return v;
    }();
    return all;
}

const std::vector<std::string>& manifest() {
    static const std::vector<std::string> names{
        "elliptic_group_axioms",
        "elliptic_pi_equivariance",
        "elliptic_beta_relations",
        "elliptic_epsilon_invariance",
        "elliptic_prop2sec",
        "stability_wall_characterization",
        "stability_chamber_constancy",
        "stability_graded_partners",
        "stability_index_affine",
        "gamma_invariance",
        "phi_tau_invariance",
        "phi_conjugacy",
        "tau_involution",
        "sigma_psi_involutions",
        "pointwise_fixing",
        "ramification",
        "tangent_line_images",
        "gamma_tangency_points",
        "twist_tangent_action",
        "group_closure",
        "action_table",
        "double_cover_degree",
        "segre_smoothness",
        "conic_fit",
        "derive_phiW",
        "theta_consistency",
        "tau_dejonquieres_match",
        "torelli_roundtrip",
    };
    return names;
}

std::vector<std::string> selected_checks(const VerifyPlan& plan) {
    std::vector<std::string> out;
    std::set<std::string> matched;
    for (const auto& c : registry()) {
        bool take = plan.patterns.empty();
        for (const auto& pat : plan.patterns)
            if (fnmatch(pat.c_str(), c.name.c_str(), 0) == 0) {
                take = true;
                matched.insert(pat);
            }
        if (take) out.push_back(c.name);
    }
    for (const auto& pat : plan.patterns)
        if (!matched.count(pat)) throw InvalidPlan("pattern matches no check: " + pat);
    return out;
}

namespace {

moduli::ModuliParams make_params(const ParamSet& ps) {
    auto s = elliptic::rational_sqrt(ps.t * (ps.t - 1) * (ps.t - ps.lambda));
    return moduli::ModuliParams::specialized(ps.lambda, ps.t, s);
}

Certificate run_one(const CheckInfo& info, const VerifyPlan& plan, const std::vector<moduli::ModuliParams>& sets) {
    auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.name = info.name;
    detail::Collector col;
    for (const auto& p : sets) {
        CheckContext ctx{p, plan.formulas ? plan.formulas : &moduli::Formulas::shipped(), plan.seed, info.name};
        Outcome o;
        try {
            o = info.fn(ctx);
        } catch (const std::exception& e) {
            o = Outcome::fail({{"exception", e.what()}}, std::string("raised: ") + e.what());
        }
        if (sets.size() == 1) {
            col = detail::Collector();
            cert.status = o.status;
            cert.witness = o.witness;
            cert.reason = o.reason;
            break;
        }
        col.add(o, p.str());
    }
    if (sets.size() > 1) {
        Outcome o = col.result();
        cert.status = o.status;
        cert.witness = o.witness;
        cert.reason = o.reason;
    }
    if (cert.status == Status::fail && cert.witness.empty()) cert.witness = {{"reason", cert.reason}};
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

}  // namespace

std::vector<Certificate> run_suite(const VerifyPlan& plan) {
    if (plan.jobs == 0) throw InvalidPlan("jobs must be positive");
    std::vector<moduli::ModuliParams> sets;
    if (plan.symbolic) {
        if (!plan.params.empty()) throw InvalidPlan("symbolic mode takes no parameter values");
        sets.push_back(moduli::ModuliParams::make_symbolic());
    } else {
        if (plan.params.empty()) throw InvalidPlan("specialized mode needs at least one (lambda, t)");
        for (const auto& ps : plan.params) {
            try {
                sets.push_back(make_params(ps));
            } catch (const moduli::DegenerateParams& e) {
                throw InvalidPlan(e.what());
            }
        }
    }
    auto names = selected_checks(plan);
    std::vector<const CheckInfo*> todo;
    for (const auto& c : registry())
        for (const auto& n : names)
            if (c.name == n) todo.push_back(&c);

    std::vector<Certificate> out(todo.size());
    if (plan.stop_at_first_failure || plan.jobs == 1) {
        bool stopped = false;
        for (std::size_t i = 0; i < todo.size(); ++i) {
            if (stopped) {
                out[i] = Certificate{todo[i]->name, Status::skipped, Json::object(), "stopped after first failure", 0};
                continue;
            }
            out[i] = run_one(*todo[i], plan, sets);
            if (plan.stop_at_first_failure && out[i].status == Status::fail) stopped = true;
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(plan.jobs, todo.size()); ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < todo.size(); i = next++) out[i] = run_one(*todo[i], plan, sets);
        });
    for (auto& t : workers) t.join();
    return out;
}

Summary summarize(const std::vector<Certificate>& certs) {
    Summary s;
    for (const auto& c : certs) {
        if (c.status == Status::pass) ++s.pass;
        if (c.status == Status::fail) ++s.fail;
        if (c.status == Status::skipped) ++s.skipped;
    }
    return s;
}

Json report(const std::vector<Certificate>& certs, const VerifyPlan& plan) {
    Json suite = Json::array();
    for (const auto& c : certs) {
        Json e = {{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}, {"reason", c.reason}};
        if (plan.timing) e["elapsed_ms"] = c.elapsed_ms;
        suite.push_back(e);
    }
    Summary s = summarize(certs);
    Json params = Json::array();
    for (const auto& p : plan.params) params.push_back({{"lambda", exact::scalar_json(p.lambda)}, {"t", exact::scalar_json(p.t)}});
    return {{"suite", suite},
            {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}},
            {"seed", plan.seed},
            {"mode", plan.symbolic ? "symbolic" : "specialized"},
            {"params", params},
            {"errata", errata()}};
}

Json errata() {
    auto item = [](const char* object, const char* printed, const char* shipped, const char* evidence) {
        return Json{{"object", object}, {"printed", printed}, {"shipped", shipped}, {"evidence", evidence}};
    };
    return Json::array({
        item("tau, third component", "b0^2 coefficient of the quadric factor is 1",
             "b0^2 coefficient is lambda*t^2",
             "with the printed value tau is not an involution and phiTilde o tau != phiTilde; "
             "tau_dejonquieres_match rebuilds tau from the line through D_t and the conic pencil"),
        item("conic Pi", "b1^2 - b0*b1", "b1^2 - b0*b2", "the printed conic misses D_lambda; conic_fit solves the 5x6 system"),
        item("phi_W second component", "numerator lambda*l*(lambda*(l-1) + t*(1-c))",
             "numerator lambda*l*((lambda-1)*(l-1) + (t-1)*(1-c))",
             "derive_phiW obtains the shipped numerator from the tangency and node conditions"),
        item("action of sigma_k on the sixteen curves", "Pi_{i inf} <-> Pi_{jt} and Pi_{ik} <-> Pi_i",
             "Pi_{i inf} <-> Pi_{j inf}, Pi_{it} <-> Pi_{jt}, Pi_{ki} <-> Pi_{kj}, Pi_i <-> Pi_j, Pi_{k inf} <-> Pi_t",
             "phiTilde sends Pi_i to a vertical and Pi_{ik} to a horizontal line, and twist(k) keeps the rulings apart"),
        item("tangency ordinate of Gamma over z = 0", "t", "beta_0(t) = lambda/t",
             "gamma_tangency_points finds the ordinate beta_k(t) over z = k"),
        item("theta normalization", "theta1(pi(p_k)) = k for k in {0, 1, lambda, inf}",
             "theta1(pi(p_k)) = k for k in {0, 1, lambda} and theta1(pi(p_inf)) = t",
             "lambda=-6, r=(2,4): the fit on {0, 1, inf} sends pi(p_lambda) to -54/121"),
    });
}

}  // namespace parmod::verify
