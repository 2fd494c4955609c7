#include "parmod/stability/catalog.hpp"

#include <algorithm>

namespace parmod::stability {

using elliptic::EllipticPoint;

WeightVector::WeightVector(const Scalar& a, const Scalar& b) : mu1(a), mu2(b) {
    if (a < 0 || a > 1 || b < 0 || b > 1) throw InvalidWeight();
}

namespace {

const char* type_name(Underlying t) {
    switch (t) {
        case Underlying::E1: return "E1";
        case Underlying::L_plus_Linv_winf: return "L+L^-1(w_inf)";
        case Underlying::L_plus_Linv: return "L+L^-1";
        case Underlying::E0_twist: return "E0(x)L_k";
        case Underlying::Lk_plus_Lk: return "L_k+L_k";
    }
    return "";
}

const char* position_name(Position p) {
    switch (p) {
        case Position::generic: return "generic";
        case Position::on_L: return "on_L";
        case Position::on_M: return "on_M";
    }
    return "";
}

bool on(Position p) { return p != Position::generic; }

}  // namespace

BundleDescriptor BundleDescriptor::make(const CurveParams& c, Underlying type, const DivisorClass& L,
                                        std::array<Position, 2> pos, bool common) {
    if (L.degree != 0) throw InvalidDescriptor("L must have degree 0");
    bool torsion = elliptic::is_two_torsion(c, L);
    auto all_generic = pos[0] == Position::generic && pos[1] == Position::generic;
    switch (type) {
        case Underlying::E1:
            if (!all_generic) throw InvalidDescriptor("E1 directions are described by the common flag only");
            break;
        case Underlying::L_plus_Linv_winf:
            // any degree 0 graph is a complement of L^-1(w_inf), so only M incidence is intrinsic
            for (auto p : pos)
                if (p == Position::on_L) throw InvalidDescriptor("L is not a distinguished subbundle here");
            if (common && !all_generic) throw InvalidDescriptor("a degree 0 subbundle avoids L^-1(w_inf)");
            break;
        case Underlying::L_plus_Linv:
            if (torsion) throw InvalidDescriptor("L + L^-1 requires L non-torsion");
            if (common) throw InvalidDescriptor("L and L^-1 are the only degree 0 subbundles");
            break;
        case Underlying::E0_twist:
            if (!torsion) throw InvalidDescriptor("E0 is twisted by a torsion bundle");
            for (auto p : pos)
                if (p == Position::on_M) throw InvalidDescriptor("E0 (x) L_k has a single degree 0 subbundle");
            if (common) throw InvalidDescriptor("incidence with L_k is given by positions");
            break;
        case Underlying::Lk_plus_Lk:
            if (!torsion) throw InvalidDescriptor("L_k must be torsion");
            if (!all_generic) throw InvalidDescriptor("every direction lies on some L_k");
            break;
    }
    return BundleDescriptor{c, type, L, pos, common};
}

Parity BundleDescriptor::parity() const {
    return type == Underlying::E1 || type == Underlying::L_plus_Linv_winf ? Parity::odd : Parity::even;
}

DivisorClass BundleDescriptor::determinant() const { return {degree(), EllipticPoint::infinity()}; }

bool BundleDescriptor::operator==(const BundleDescriptor& o) const {
    return curve.lambda == o.curve.lambda && type == o.type && L == o.L && position == o.position &&
           common == o.common;
}

std::string BundleDescriptor::str() const {
    std::string s = std::string(type_name(type)) + " L=" + L.reduction.str() + " [" + position_name(position[0]) +
                    ", " + position_name(position[1]) + "]";
    if (common) s += " common";
    return s;
}

std::vector<SubbundleDescriptor> admissible_subbundles(const BundleDescriptor& e) {
    const auto& c = e.curve;
    std::vector<SubbundleDescriptor> out;
    auto add = [&](long deg, bool p1, bool p2, const DivisorClass* cls, std::string name) {
        SubbundleDescriptor d{deg, {p1, p2}, std::nullopt, std::move(name)};
        if (cls) d.cls = *cls;
        out.push_back(std::move(d));
    };
    auto at = [&](Position want, int i) { return e.position[std::size_t(i)] == want; };
    switch (e.type) {
        case Underlying::E1:
            // every degree 0 bundle embeds once; each direction lies on two of them
            if (e.common) add(0, true, true, &e.L, "L");
            add(0, true, false, nullptr, "L through m1");
            add(0, false, true, nullptr, "L through m2");
            add(0, false, false, nullptr, "L");
            break;
        case Underlying::L_plus_Linv_winf: {
            DivisorClass m = elliptic::class_add(c, elliptic::class_neg(e.L), {1, EllipticPoint::infinity()});
            add(1, at(Position::on_M, 0), at(Position::on_M, 1), &m, "L^-1(w_inf)");
            if (e.common) add(0, true, true, &e.L, "L");
            if (!at(Position::on_M, 0)) add(0, true, false, &e.L, "L through m1");
            if (!at(Position::on_M, 1)) add(0, false, true, &e.L, "L through m2");
            add(0, false, false, &e.L, "L");
            break;
        }
        case Underlying::L_plus_Linv:
            add(0, at(Position::on_L, 0), at(Position::on_L, 1), &e.L, "L");
            {
            DivisorClass inv = elliptic::class_neg(e.L);
            add(0, at(Position::on_M, 0), at(Position::on_M, 1), &inv, "L^-1");
        }
            break;
        case Underlying::E0_twist:
            add(0, at(Position::on_L, 0), at(Position::on_L, 1), &e.L, "L_k");
            break;
        case Underlying::Lk_plus_Lk:
            if (e.common) add(0, true, true, &e.L, "L_k");
            add(0, true, false, &e.L, "L_k through m1");
            add(0, false, true, &e.L, "L_k through m2");
            add(0, false, false, &e.L, "L_k");
            break;
    }
    add(-1, true, true, nullptr, "degree -1 through both");
    return out;
}

Scalar parabolic_index(const BundleDescriptor& e, const SubbundleDescriptor& l, const WeightVector& mu) {
    auto adm = admissible_subbundles(e);
    bool ok = std::any_of(adm.begin(), adm.end(),
                          [&](const SubbundleDescriptor& s) { return s.degree == l.degree && s.passes == l.passes; });
    if (!ok) throw InadmissibleSubbundle();
    Scalar r = e.degree() - 2 * l.degree;
    for (int i = 0; i < 2; ++i) r += l.passes[std::size_t(i)] ? Scalar(-mu[i]) : mu[i];
    return r;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::stable: return "stable";
        case Status::strictly_semistable: return "strictly_semistable";
        case Status::unstable: return "unstable";
    }
    return "";
}

Classification classify(const BundleDescriptor& e, const WeightVector& mu) {
    auto adm = admissible_subbundles(e);
    std::size_t best = 0;
    Scalar best_index = parabolic_index(e, adm[0], mu);
    for (std::size_t i = 1; i < adm.size(); ++i) {
        Scalar v = parabolic_index(e, adm[i], mu);
        if (v < best_index) best = i, best_index = v;
    }
    Classification out{Status::stable, best_index, std::nullopt};
    if (best_index <= 0) {
        out.status = best_index == 0 ? Status::strictly_semistable : Status::unstable;
        out.witness = adm[best];
    }
    return out;
}

std::string role_name(Role r) {
    switch (r) {
        case Role::generic_stable: return "generic";
        case Role::E_less: return "E_<";
        case Role::E_greater: return "E_>";
        case Role::E_equal: return "E_=";
        case Role::F_less: return "F_<";
        case Role::F_greater: return "F_>";
        case Role::F_equal: return "F_=";
        case Role::never_semistable: return "never_semistable";
    }
    return "";
}

Role role(const BundleDescriptor& e) {
    bool a = on(e.position[0]), b = on(e.position[1]);
    switch (e.type) {
        case Underlying::E1: return e.common ? Role::E_less : Role::generic_stable;
        case Underlying::L_plus_Linv_winf:
            if (a || b) return Role::never_semistable;
            return e.common ? Role::E_equal : Role::E_greater;
        case Underlying::L_plus_Linv:
        case Underlying::E0_twist:
            if (!a && !b) return Role::generic_stable;
            if (a && !b) return Role::F_less;
            if (!a && b) return Role::F_greater;
            return e.position[0] != e.position[1] ? Role::F_equal : Role::never_semistable;
        case Underlying::Lk_plus_Lk: return e.common ? Role::never_semistable : Role::F_equal;
    }
    return Role::never_semistable;
}

Region region(Parity p, const WeightVector& mu) {
    if (mu.mu1 == 0 || mu.mu1 == 1 || mu.mu2 == 0 || mu.mu2 == 1) return Region::boundary;
    Scalar d = p == Parity::odd ? Scalar(mu.mu1 + mu.mu2 - 1) : Scalar(mu.mu1 - mu.mu2);
    if (d < 0) return Region::chamber_less;
    return d == 0 ? Region::wall : Region::chamber_greater;
}

Status expected_status(Role r, Region g) {
    if (g == Region::boundary) throw Error("the chamber tables cover interior weights only");
    switch (r) {
        case Role::generic_stable: return Status::stable;
        case Role::E_less:
        case Role::F_less:
            return g == Region::chamber_less ? Status::stable
                   : g == Region::wall       ? Status::strictly_semistable
                                             : Status::unstable;
        case Role::E_greater:
        case Role::F_greater:
            return g == Region::chamber_greater ? Status::stable
                   : g == Region::wall          ? Status::strictly_semistable
                                                : Status::unstable;
        case Role::E_equal:
        case Role::F_equal: return g == Region::wall ? Status::strictly_semistable : Status::unstable;
        case Role::never_semistable: return Status::unstable;
    }
    return Status::unstable;
}

BundleDescriptor wall_partner(const BundleDescriptor& e) {
    const auto g = Position::generic;
    auto other = [](Position p) { return p == Position::on_L ? Position::on_M : Position::on_L; };
    switch (role(e)) {
        case Role::E_less: return BundleDescriptor::make(e.curve, Underlying::L_plus_Linv_winf, e.L);
        case Role::E_greater: return BundleDescriptor::make(e.curve, Underlying::E1, e.L, {g, g}, true);
        case Role::F_less:
            if (e.type == Underlying::E0_twist)
                return BundleDescriptor::make(e.curve, e.type, e.L, {g, Position::on_L});
            return BundleDescriptor::make(e.curve, e.type, e.L, {g, other(e.position[0])});
        case Role::F_greater:
            if (e.type == Underlying::E0_twist)
                return BundleDescriptor::make(e.curve, e.type, e.L, {Position::on_L, g});
            return BundleDescriptor::make(e.curve, e.type, e.L, {other(e.position[1]), g});
        default: throw NotOnWall();
    }
}

Graded graded(const BundleDescriptor& e, const WeightVector& mu) {
    auto cls = classify(e, mu);
    if (cls.status != Status::strictly_semistable) throw NotStrictlySemistable();
    const auto& w = *cls.witness;
    if (!w.cls) throw Error("destabilizing subbundle class is not determined by the catalog");
    DivisorClass quot = elliptic::class_add(e.curve, e.determinant(), elliptic::class_neg(*w.cls));
    return {GradedPiece{*w.cls, w.passes}, GradedPiece{quot, {!w.passes[0], !w.passes[1]}}};
}

bool graded_equal(const Graded& a, const Graded& b) {
    return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
}

std::vector<BundleDescriptor> catalog(const CurveParams& c, const DivisorClass& L) {
    const Position P[3] = {Position::generic, Position::on_L, Position::on_M};
    std::vector<BundleDescriptor> out;
    auto attempt = [&](Underlying t, const DivisorClass& cl, std::array<Position, 2> pos, bool common) {
        try {
            out.push_back(BundleDescriptor::make(c, t, cl, pos, common));
        } catch (const InvalidDescriptor&) {
        }
    };
    std::vector<DivisorClass> classes{L};
    for (auto k : elliptic::kBranches) classes.push_back(elliptic::jacobian_class(elliptic::weierstrass(c, k)));
    for (const auto& cl : classes)
        for (auto t : {Underlying::E1, Underlying::L_plus_Linv_winf, Underlying::L_plus_Linv, Underlying::E0_twist,
                       Underlying::Lk_plus_Lk})
            for (auto p0 : P)
                for (auto p1 : P)
                    for (bool common : {false, true}) attempt(t, cl, {p0, p1}, common);
    return out;
}

std::vector<WeightVector> weight_grid() {
    std::vector<WeightVector> out;
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b) {
            Scalar x(a, 6), y(b, 6);
            x.canonicalize();
            y.canonicalize();
            out.emplace_back(x, y);
        }
    return out;
}

namespace {

Underlying type_from_name(const std::string& s) {
    for (auto t : {Underlying::E1, Underlying::L_plus_Linv_winf, Underlying::L_plus_Linv, Underlying::E0_twist,
                   Underlying::Lk_plus_Lk})
        if (s == type_name(t)) return t;
    throw exact::ParseError("unknown bundle type " + s);
}

Position position_from_name(const std::string& s) {
    for (auto p : {Position::generic, Position::on_L, Position::on_M})
        if (s == position_name(p)) return p;
    throw exact::ParseError("unknown parabolic position " + s);
}

}  // namespace

exact::Json to_json(const BundleDescriptor& e) {
    return {{"type", type_name(e.type)},
            {"parity", e.parity() == Parity::odd ? "odd" : "even"},
            {"curve", elliptic::to_json(e.curve)},
            {"L", elliptic::to_json(e.L)},
            {"parabolics", {position_name(e.position[0]), position_name(e.position[1])}},
            {"common", e.common}};
}

BundleDescriptor descriptor_from_json(const exact::Json& j) {
    auto c = elliptic::params_from_json(j.at("curve"));
    const auto& p = j.at("parabolics");
    return BundleDescriptor::make(c, type_from_name(j.at("type").get<std::string>()),
                                  elliptic::class_from_json(c, j.at("L")),
                                  {position_from_name(p.at(0).get<std::string>()),
                                   position_from_name(p.at(1).get<std::string>())},
                                  j.value("common", false));
}

exact::Json to_json(const SubbundleDescriptor& s) {
    exact::Json j{{"name", s.name}, {"degree", s.degree}, {"passes", {s.passes[0], s.passes[1]}}};
    if (s.cls) j["class"] = elliptic::to_json(*s.cls);
    return j;
}

exact::Json to_json(const Classification& c) {
    exact::Json j{{"status", status_name(c.status)}, {"min_index", exact::scalar_json(c.min_index)}};
    if (c.witness) j["witness"] = to_json(*c.witness);
    return j;
}

}  // namespace parmod::stability
