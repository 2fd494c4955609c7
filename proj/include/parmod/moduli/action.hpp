#pragma once

#include "parmod/moduli/catalog.hpp"

#include <random>

namespace parmod::moduli {

// ------------------------------------------------------------ action on Omega

// Image of one of the 16 curves under a birational self-map of P2:
// contracted curves map to the exceptional curve over the image point,
// the rest are identified by containment. nullopt if neither applies.
std::optional<ConfigObject> image_of(const RationalMap& m, const ConfigObject& o, const ModuliParams& p);

using Pairing = std::vector<std::pair<ConfigObject, ConfigObject>>;
// Rows of the action table as shipped (verified by computation). The sigma
// rows are given for k and follow from relabeling.
Pairing shipped_action(MapTag tag);
// Rows exactly as printed; psiT lists only five of its eight pairs.
Pairing printed_action(MapTag tag);

struct PairingCheck {
    bool ok = true;
    std::vector<std::string> mismatches;  // "X -> Y, expected Z"
};
// Checks both directions of every pair against image_of.
PairingCheck check_pairing(const RationalMap& m, const Pairing& rows, const ModuliParams& p);

// ------------------------------------------------------ images in P1 x P1

// A ruling line: V_k (z = k) or H_k (w = k).
struct RulingLine {
    bool vertical;
    Label k;
    bool operator==(const RulingLine& o) const { return vertical == o.vertical && k == o.k; }
    std::string name() const;
};
std::optional<RulingLine> phi_image(const RationalMap& phi, const ConfigObject& o, const ModuliParams& p);
// The list: Pi_i, Pi_{it} -> V_i; Pi_t, Pi -> H_inf; Pi_{i inf}, Pi_{jk} -> H_i.
std::vector<std::pair<ConfigObject, RulingLine>> expected_phi_images();

// ------------------------------------------------------------ group closure

struct GroupClosure {
    std::vector<RationalMap> elements;
    std::vector<std::string> words;  // generator words, "" for the identity
    bool truncated = false;          // stopped at the size limit
};
// Closure under left multiplication by the generators.
GroupClosure closure(const std::vector<std::pair<std::string, RationalMap>>& gens, const proj::StripOptions& opts,
                     std::size_t limit, std::uint64_t seed);
// Membership by random screening followed by an exact minor check.
std::optional<std::size_t> find_element(const std::vector<RationalMap>& elements, const RationalMap& m,
                                        std::uint64_t seed);
bool is_identity(const RationalMap& m, std::uint64_t seed);

// ------------------------------------------------------------ double cover

// Restriction of the w-condition of phiTilde to the line through D_t and
// the point (0 : z1 : t z1 + z0), as a binary quadratic in (u, v).
Poly fiber_quadratic(const ModuliParams& p, const Formulas& f = Formulas::shipped());
// Number of distinct preimages of a point with finite w; -1 if degenerate.
int fiber_size(const ModuliParams& p, const ProjPoint& zw, const Formulas& f = Formulas::shipped());

// Rational points of Gamma at specialized parameters: the eight tangency
// points and a small-height search.
std::vector<ProjPoint> rational_points_on_gamma(const ModuliParams& p, const Formulas& f, std::size_t want);

// ------------------------------------------------------ Segre smoothness

struct SegreModel {
    Poly f;  // u0 u3 - u1 u2
    Poly g;  // quadric in u0..u3 restricting to Gamma
};
SegreModel segre_model(const ModuliParams& p, const Formulas& f = Formulas::shipped());
// Rank of the Jacobian of {f, v^2 - g} at (u, v) is 2.
bool segre_rank_two(const SegreModel& m, const std::vector<Scalar>& u, const Scalar& v);
std::vector<Scalar> segre_point(const ProjPoint& zw);

}  // namespace parmod::moduli
