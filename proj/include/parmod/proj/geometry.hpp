#pragma once

#include "parmod/exact.hpp"

#include <array>
#include <optional>
#include <random>
#include <vector>

namespace parmod::proj {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;
using exact::Var;

class Undefined : public Error {
public:
    Undefined() : Error("map is undefined at this point") {}
};
class DegeneratePoints : public Error {
public:
    DegeneratePoints() : Error("points are not pairwise distinct") {}
};
class CoincidentPoints : public Error {
public:
    CoincidentPoints() : Error("points coincide") {}
};
class PointNotOnCurve : public Error {
public:
    PointNotOnCurve() : Error("point is not on the curve") {}
};
class NoRationalParametrization : public Error {
public:
    NoRationalParametrization() : Error("curve has no implemented rational parametrization") {}
};

// P1 uses (z0, z1), P2 uses (b0, b1, b2), P1xP1 uses (z0, z1 | w0, w1).
// The affine coordinate of (z0:z1) is z0/z1, so infinity is (1:0).
enum class Space { P1, P2, P1xP1 };

const std::vector<Var>& coordinates(Space s);
// Sizes of the projective factors, e.g. {2, 2} for P1xP1.
const std::vector<std::size_t>& factor_sizes(Space s);
std::string space_name(Space s);

// Entries of a homogeneous tuple after clearing denominators; projective
// equality is vanishing of all 2x2 minors within each factor.
class ProjPoint {
public:
    ProjPoint(Space space, std::vector<Poly> coords);
    static ProjPoint from_ratfuncs(Space space, const std::vector<RatFunc>& coords);
    static ProjPoint p1(const Poly& a, const Poly& b) { return ProjPoint(Space::P1, {a, b}); }
    static ProjPoint p1_affine(const RatFunc& z);
    static ProjPoint p1_infinity() { return p1(Poly(1), Poly(0)); }
    static ProjPoint p2(const Poly& a, const Poly& b, const Poly& c) { return ProjPoint(Space::P2, {a, b, c}); }
    static ProjPoint pair(const ProjPoint& z, const ProjPoint& w);

    Space space() const { return space_; }
    const std::vector<Poly>& coords() const { return coords_; }
    // The i-th factor as a point of P1 or P2.
    ProjPoint factor(std::size_t i) const;
    // Affine value a/b of a P1 point (throws at infinity).
    RatFunc affine() const;
    bool is_infinity() const;  // P1 only

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    ProjPoint specialize(const exact::Assignment& values) const;
    std::string str() const;

private:
    Space space_;
    std::vector<Poly> coords_;
};

class MoebiusMap {
public:
    // z -> (a z + b) / (c z + d) acting on (z0:z1) by the matrix [[a, b], [c, d]].
    MoebiusMap(Poly a, Poly b, Poly c, Poly d);
    static MoebiusMap identity() { return MoebiusMap(Poly(1), Poly(0), Poly(0), Poly(1)); }

    const std::array<Poly, 4>& entries() const { return m_; }
    Poly det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    ProjPoint apply(const ProjPoint& p) const;
    RatFunc apply(const RatFunc& z) const;
    MoebiusMap inverse() const;  // adjugate
    MoebiusMap operator*(const MoebiusMap& inner) const;
    bool operator==(const MoebiusMap& o) const;
    std::string str() const;

private:
    std::array<Poly, 4> m_;
};

MoebiusMap moebius_through(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs);

struct PlaneCurve {
    Poly poly;
    int degree = 0;
    explicit PlaneCurve(const Poly& p);
    bool contains(const ProjPoint& p) const;
};

struct BiCurve {
    Poly poly;
    int dz = 0, dw = 0;
    explicit BiCurve(const Poly& p);
    bool contains(const ProjPoint& p) const;  // P1xP1 point
};

// Vertical line z = const and horizontal line w = const as (1,0) and (0,1) curves.
BiCurve vertical_line(const ProjPoint& z);
BiCurve horizontal_line(const ProjPoint& w);

// A rational map given by homogeneous components grouped per target factor.
class RationalMap {
public:
    RationalMap(Space source, Space target, std::vector<Poly> comps);
    static RationalMap identity(Space s);

    Space source() const { return source_; }
    Space target() const { return target_; }
    const std::vector<Poly>& comps() const { return comps_; }
    std::vector<Poly> group(std::size_t i) const;
    std::size_t groups() const { return factor_sizes(target_).size(); }
    int degree() const;  // degree of the first component in the source coordinates

    ProjPoint apply(const ProjPoint& p) const;  // throws Undefined
    RationalMap specialize(const exact::Assignment& values) const;
    std::string str() const;

private:
    Space source_, target_;
    std::vector<Poly> comps_;
};

using BirMapP2 = RationalMap;
using RuledMap = RationalMap;

struct StripOptions {
    std::vector<Poly> candidates;  // known possible common factors
    bool general_gcd = true;       // fall back to the full gcd when a probe finds a common factor
};

// Removes common factors of each component group.
RationalMap strip(const RationalMap& m, const StripOptions& opts = {});
RationalMap compose(const RationalMap& outer, const RationalMap& inner, const StripOptions& opts = {});

// Projective equality of maps: every 2x2 minor in every factor vanishes.
// A random evaluation screens first; a nonzero value there is a proof of
// inequality, otherwise the symbolic check decides.
bool map_equal(const RationalMap& f, const RationalMap& g, std::uint64_t seed = 1);
// Random evaluation only; returns a nonzero minor witness or nullopt.
std::optional<exact::Assignment> find_inequality_witness(const RationalMap& f, const RationalMap& g,
                                                         std::uint64_t seed, int trials);

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q);

struct Ruling {
    enum class Kind { vertical, horizontal };
    Kind kind;
    ProjPoint value;  // the fixed P1 coordinate
};
int intersection_multiplicity_line(const BiCurve& curve, const Ruling& ruling, const ProjPoint& other);
// Binary form obtained by restricting the curve to the ruling line.
Poly restrict_to_ruling(const BiCurve& curve, const Ruling& ruling);
// Multiplicity of the root (a:b) of a binary form in (v0, v1).
int root_multiplicity(const Poly& form, Var v0, Var v1, const ProjPoint& root);

// det[grad of z cross-form; grad of w cross-form; (b0, b1, b2)] divided by
// b0^2 + b1^2 + b2^2, which the Euler relation always splits off.
PlaneCurve critical_locus(const RationalMap& map);
// Removes every candidate factor (with multiplicity).
Poly strip_factors(Poly p, const std::vector<Poly>& candidates);

// Rational parametrization of a line or of a conic with a rational point,
// as homogeneous coordinates in the variable u.
std::vector<Poly> parametrize(const PlaneCurve& curve, const std::optional<ProjPoint>& known_point = std::nullopt);

// Components of map o parametrization, one vector per target factor.
std::vector<std::vector<Poly>> image_on_curve(const RationalMap& map, const std::vector<Poly>& param);
// Whether the given component group is constant in u; returns the point.
std::optional<ProjPoint> constant_image(const std::vector<Poly>& group, Space factor_space);
std::optional<ProjPoint> contracts_to(const RationalMap& map, const PlaneCurve& curve);
// Image of the exceptional curve over a point of P2: leading terms of the
// map along b = p + v*(a + u*c) as v -> 0, one vector per target factor.
std::vector<std::vector<Poly>> exceptional_image(const RationalMap& map, const ProjPoint& p);
// True if the parametrized image lies on the target curve.
bool image_inside(const std::vector<Poly>& image_coords, Space target, const Poly& target_poly);

exact::Json to_json(const PlaneCurve& c);
exact::Json to_json(const BiCurve& c);
exact::Json to_json(const RationalMap& m);
exact::Json to_json(const ProjPoint& p);
PlaneCurve planecurve_from_json(const exact::Json& j);
BiCurve bicurve_from_json(const exact::Json& j);
RationalMap map_from_json(const exact::Json& j);
ProjPoint point_from_json(const exact::Json& j);

// Random rational in [-range, range] with small denominators.
Scalar random_scalar(std::mt19937_64& rng, int range = 50);
long random_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace parmod::proj
