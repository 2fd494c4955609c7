#pragma once

#include "parmod/moduli/catalog.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace parmod::verify {

using exact::Json;
using exact::Scalar;

class InvalidPlan : public Error {
public:
    explicit InvalidPlan(const std::string& why) : Error("invalid plan: " + why) {}
};

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct Certificate {
    std::string name;
    Status status = Status::pass;
    Json witness = Json::object();  // nonempty on failure
    std::string reason;
    double elapsed_ms = 0;
};

// One check at one parameter set.
struct Outcome {
    Status status = Status::pass;
    Json witness = Json::object();
    std::string reason;

    static Outcome ok(Json witness = Json::object()) { return {Status::pass, std::move(witness), ""}; }
    static Outcome fail(Json witness, std::string reason) { return {Status::fail, std::move(witness), std::move(reason)}; }
    static Outcome skip(std::string reason) { return {Status::skipped, Json::object(), std::move(reason)}; }
};

struct CheckContext {
    moduli::ModuliParams params;
    const moduli::Formulas* formulas;
    std::uint64_t seed;
    std::string name;
    // Generator seeded from the plan seed and the check name.
    std::mt19937_64 rng(std::uint64_t salt = 0) const;
    const moduli::Formulas& f() const { return *formulas; }
};

using CheckFn = Outcome (*)(const CheckContext&);

struct CheckInfo {
    std::string name;
    std::string module;     // elliptic, stability or moduli
    bool uses_formulas;     // depends on the tau, sigma or Gamma formulas
    CheckFn fn;
};

// Registered checks in execution order.
const std::vector<CheckInfo>& registry();
// The fixed list of invariant names the registry must match one to one.
const std::vector<std::string>& manifest();

struct ParamSet {
    Scalar lambda, t;
};

struct VerifyPlan {
    bool symbolic = true;
    std::vector<ParamSet> params;       // specialized mode only
    std::vector<std::string> patterns;  // shell globs on check names; empty selects all
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool timing = false;
    const moduli::Formulas* formulas = nullptr;  // shipped when null
    bool stop_at_first_failure = false;          // later checks are reported as skipped
};

// Deterministic for a fixed plan. Throws InvalidPlan.
std::vector<Certificate> run_suite(const VerifyPlan& plan);
std::vector<std::string> selected_checks(const VerifyPlan& plan);

struct Summary {
    std::size_t pass = 0, fail = 0, skipped = 0;
};
Summary summarize(const std::vector<Certificate>& certs);
// {"suite": [...], "summary": {...}, "seed", "mode", "params", "errata"}.
Json report(const std::vector<Certificate>& certs, const VerifyPlan& plan);
// Printed statements that the shipped formulas correct.
Json errata();

}  // namespace parmod::verify
