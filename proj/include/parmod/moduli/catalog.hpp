#pragma once

#include "parmod/proj/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace parmod::moduli {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using exact::Var;
using proj::BiCurve;
using proj::PlaneCurve;
using proj::ProjPoint;
using proj::RationalMap;
using proj::Space;

class DegenerateParams : public Error {
public:
    explicit DegenerateParams(const std::string& why) : Error("degenerate parameters: " + why) {}
};

// lambda and t are either the variables lambda, t or rational constants.
struct ModuliParams {
    Poly lambda = Poly::var(Var::lambda);
    Poly t = Poly::var(Var::t);
    std::optional<Poly> s;
    bool symbolic = true;

    static ModuliParams make_symbolic();
    // Throws DegenerateParams unless lambda not in {0,1} and t not in {0,1,lambda};
    // s, when given, must satisfy s^2 = t(t-1)(t-lambda).
    static ModuliParams specialized(const Scalar& lambda, const Scalar& t, const std::optional<Scalar>& s = std::nullopt);
    exact::Assignment assignment() const;  // empty in symbolic mode
    Scalar lambda_value() const;          // specialized only
    Scalar t_value() const;
    std::string str() const;
};

enum class Label { zero, one, lambda, infinity, t };
inline constexpr Label kLabels[5] = {Label::zero, Label::one, Label::lambda, Label::infinity, Label::t};
inline constexpr Label kBranchLabels[3] = {Label::zero, Label::one, Label::lambda};
std::string label_name(Label k);
Label label_from_name(const std::string& s);
// The label as a point of P1: 0, 1, lambda, infinity, t.
ProjPoint label_value(Label k, const ModuliParams& p);

struct ConfigObject {
    enum class Kind { point, exceptional, line, conic };
    Kind kind;
    Label i = Label::zero, j = Label::zero;  // j only for lines, with i before j in label order

    static ConfigObject point(Label i) { return {Kind::point, i, i}; }
    static ConfigObject exceptional(Label i) { return {Kind::exceptional, i, i}; }
    static ConfigObject line(Label i, Label j);
    static ConfigObject conic() { return {Kind::conic, Label::zero, Label::zero}; }
    bool operator==(const ConfigObject& o) const;
    bool operator!=(const ConfigObject& o) const { return !(*this == o); }
    std::string name() const;
};
// The 16 curves: Pi_i (exceptional), Pi_{ij} (lines), Pi (conic), in a fixed order.
const std::vector<ConfigObject>& omega();
std::size_t omega_index(const ConfigObject& o);

std::array<ProjPoint, 5> special_points(const ModuliParams& p);
ProjPoint special_point(Label k, const ModuliParams& p);
PlaneCurve standard_line(Label i, Label j, const ModuliParams& p);
std::vector<PlaneCurve> standard_lines(const ModuliParams& p);  // omega() line order
// The unique conic through the five special points, by a 5x6 linear solve.
PlaneCurve standard_conic(const ModuliParams& p);
// Equations of the ten lines and the conic, used to strip composed maps.
std::vector<Poly> configuration_equations(const ModuliParams& p);

// The fixed formulas in the symbolic variables lambda, t. Mutation tests
// edit a copy and pass it through the same code paths.
struct Formulas {
    std::array<Poly, 3> tau, sigma0, sigma1, sigma_lambda, psiT;
    Poly gamma;  // bihomogeneous (2,2) in z0, z1, w0, w1
    Poly sigma;  // cubic in b0, b1, b2
    std::array<Poly, 4> phi_tilde;

    static const Formulas& shipped();
    // tau exactly as printed (b0^2 coefficient of the tau2 factor equal to 1).
    static Formulas printed();
};

enum class MapTag { tau, sigma0, sigma1, sigma_lambda, psiT, twist0, twist1, twist_lambda, twist_inf, swap, phi_tilde };
inline constexpr MapTag kMapTags[11] = {MapTag::tau,     MapTag::sigma0,       MapTag::sigma1,    MapTag::sigma_lambda,
                                        MapTag::psiT,    MapTag::twist0,       MapTag::twist1,    MapTag::twist_lambda,
                                        MapTag::twist_inf, MapTag::swap,       MapTag::phi_tilde};
std::string map_name(MapTag m);
MapTag map_from_name(const std::string& s);  // throws Error for unknown names
MapTag twist_tag(Label k);
MapTag sigma_tag(Label k);  // k in {0, 1, lambda}; sigma at infinity is tau

RationalMap named_map(MapTag tag, const ModuliParams& p, const Formulas& f = Formulas::shipped());
BiCurve gamma_curve(const ModuliParams& p, const Formulas& f = Formulas::shipped());
PlaneCurve sigma_cubic(const ModuliParams& p, const Formulas& f = Formulas::shipped());
proj::MoebiusMap beta_map(Label k, const ModuliParams& p);

// Strip options with the configuration curves as candidate factors and no
// general gcd: every base curve of the group elements is one of them.
proj::StripOptions strip_options(const ModuliParams& p);
// Composition without factor stripping; equality of maps does not need it.
RationalMap compose_raw(const RationalMap& outer, const RationalMap& inner);

}  // namespace parmod::moduli
