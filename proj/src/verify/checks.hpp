#pragma once

#include "parmod/elliptic/curve.hpp"
#include "parmod/verify/suite.hpp"

namespace parmod::verify::detail {

std::vector<CheckInfo> elliptic_checks();
std::vector<CheckInfo> stability_checks();
std::vector<CheckInfo> moduli_checks();

Json assignment_json(const exact::Assignment& a);
// Polynomial as a string, shortened past a few hundred characters.
Json poly_witness(const exact::Poly& p);
// Projective equality of two maps with a witness on failure: a random point
// with a nonzero minor, or the first nonzero symbolic minor.
Outcome maps_agree(const proj::RationalMap& f, const proj::RationalMap& g, std::uint64_t seed, const std::string& what);
// a = k b for a nonzero k free of the coordinate variables.
bool proportional(const exact::Poly& a, const exact::Poly& b, const std::vector<exact::Var>& coords);

// Torsion by Mazur's bound on rational torsion orders.
bool is_torsion(const elliptic::CurveParams& c, const elliptic::EllipticPoint& p);
// Curve and non-torsion point for the elliptic and stability checks: a
// seeded random curve in symbolic mode, the curve at lambda otherwise.
std::optional<std::pair<elliptic::CurveParams, elliptic::EllipticPoint>> test_curve(const CheckContext& ctx,
                                                                                  std::mt19937_64& rng);
// Valid random rational (lambda, t) for checks that need numbers.
moduli::ModuliParams sample_params(std::mt19937_64& rng);
// The parameter sets a numeric check runs at: the plan's own in
// specialized mode, `count` seeded samples in symbolic mode.
std::vector<moduli::ModuliParams> numeric_params(const CheckContext& ctx, std::mt19937_64& rng, std::size_t count);

// Folds a sequence of sub-results: the first failure wins, skips propagate
// only when nothing ran.
class Collector {
public:
    void add(const Outcome& o, const std::string& label);
    void note(const std::string& key, Json value) { info_[key] = std::move(value); }
    bool failed() const { return failed_; }
    Outcome result() const;

private:
    bool failed_ = false;
    bool ran_ = false;
    Outcome first_fail_;
    std::vector<std::string> skips_;
    Json info_ = Json::object();
};

}  // namespace parmod::verify::detail
