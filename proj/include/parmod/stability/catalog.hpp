#pragma once

#include "parmod/elliptic/curve.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace parmod::stability {

using elliptic::CurveParams;
using elliptic::DivisorClass;
using exact::Scalar;

class InvalidWeight : public Error {
public:
    InvalidWeight() : Error("weights must lie in [0, 1]") {}
};
class InvalidDescriptor : public Error {
public:
    explicit InvalidDescriptor(const std::string& why) : Error("invalid bundle descriptor: " + why) {}
};
class InadmissibleSubbundle : public Error {
public:
    InadmissibleSubbundle() : Error("subbundle is not admissible for this bundle") {}
};
class NotOnWall : public Error {
public:
    NotOnWall() : Error("bundle has no partner across the wall") {}
};
class NotStrictlySemistable : public Error {
public:
    NotStrictlySemistable() : Error("bundle is not strictly semistable at these weights") {}
};

struct WeightVector {
    Scalar mu1, mu2;
    WeightVector(const Scalar& a, const Scalar& b);
    const Scalar& operator[](int i) const { return i == 0 ? mu1 : mu2; }
};

enum class Parity { even, odd };

// Underlying rank 2 bundle: E1; L + L^-1(w_inf); L + L^-1 with L not
// torsion; E0 (x) L_k; L_k + L_k.
enum class Underlying { E1, L_plus_Linv_winf, L_plus_Linv, E0_twist, Lk_plus_Lk };

// Where a parabolic direction sits: on no named subbundle, on L (or L_k),
// or on the second summand M (L^-1(w_inf) or L^-1).
enum class Position { generic, on_L, on_M };

struct BundleDescriptor {
    CurveParams curve;
    Underlying type;
    DivisorClass L;                  // degree zero; L_k for the torsion types
    std::array<Position, 2> position;
    bool common = false;             // both directions on one degree 0 subbundle of the L family

    // Validates the incidence pattern; throws InvalidDescriptor.
    static BundleDescriptor make(const CurveParams& c, Underlying type, const DivisorClass& L,
                                 std::array<Position, 2> position = {Position::generic, Position::generic},
                                 bool common = false);
    Parity parity() const;
    long degree() const { return parity() == Parity::odd ? 1 : 0; }
    DivisorClass determinant() const;
    bool operator==(const BundleDescriptor& o) const;
    std::string str() const;
};

struct SubbundleDescriptor {
    long degree = 0;
    std::array<bool, 2> passes{false, false};
    std::optional<DivisorClass> cls;  // known isomorphism class, if determined
    std::string name;
};

// The finite list of candidate destabilizers: named subbundles with the
// incidence allowed by the descriptor, plus a degree -1 subbundle through
// both points.
std::vector<SubbundleDescriptor> admissible_subbundles(const BundleDescriptor& e);

// deg E - 2 deg L + sum of mu_i off L - sum of mu_i on L.
Scalar parabolic_index(const BundleDescriptor& e, const SubbundleDescriptor& l, const WeightVector& mu);

enum class Status { stable, strictly_semistable, unstable };
std::string status_name(Status s);

struct Classification {
    Status status;
    Scalar min_index;
    std::optional<SubbundleDescriptor> witness;  // present unless stable
};
Classification classify(const BundleDescriptor& e, const WeightVector& mu);

// The named roles of the chamber analysis.
enum class Role {
    generic_stable,  // stable for every interior weight
    E_less,          // E1 with both directions on L
    E_greater,       // L + L^-1(w_inf), nothing on L^-1(w_inf), no common L
    E_equal,         // L + L^-1(w_inf), both directions on a common L
    F_less,          // only m1 on a named degree 0 subbundle
    F_greater,       // only m2 on a named degree 0 subbundle
    F_equal,         // m1 on L, m2 on L^-1; or L_k + L_k without a common L_k
    never_semistable,
};
std::string role_name(Role r);
Role role(const BundleDescriptor& e);

enum class Region { chamber_less, wall, chamber_greater, boundary };
// Odd degree: compare mu1 + mu2 with 1. Even degree: compare mu1 with mu2.
Region region(Parity p, const WeightVector& mu);
// Expected verdict for interior weights, as listed by the classification
// results for both walls.
Status expected_status(Role r, Region g);

// E_< <-> E_>, F_< <-> F_>; throws NotOnWall otherwise.
BundleDescriptor wall_partner(const BundleDescriptor& e);

struct GradedPiece {
    DivisorClass cls;
    std::array<bool, 2> support;
    bool operator==(const GradedPiece& o) const { return cls == o.cls && support == o.support; }
};
using Graded = std::array<GradedPiece, 2>;
Graded graded(const BundleDescriptor& e, const WeightVector& mu);
bool graded_equal(const Graded& a, const Graded& b);  // as unordered pairs

// All descriptor configurations for a fixed non-torsion L and the four L_k.
std::vector<BundleDescriptor> catalog(const CurveParams& c, const DivisorClass& L);
// {1/6, 1/3, 1/2, 2/3, 5/6}^2
std::vector<WeightVector> weight_grid();

exact::Json to_json(const BundleDescriptor& e);
BundleDescriptor descriptor_from_json(const exact::Json& j);
exact::Json to_json(const SubbundleDescriptor& s);
exact::Json to_json(const Classification& c);

}  // namespace parmod::stability
