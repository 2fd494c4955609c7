#include "parmod/exact/roots.hpp"

#include "parmod/exact/errors.hpp"
#include "parmod/exact/resultant.hpp"

#include <algorithm>

namespace parmod::exact {

namespace {

using UPoly = std::vector<Scalar>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return int(p.size()) - 1; }

Scalar eval(const UPoly& p, const Scalar& x) {
    Scalar r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly deriv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * long(i));
    return d;
}

// Returns quotient, leaves remainder in `a`.
UPoly divmod(UPoly& a, const UPoly& b) {
    UPoly q(std::max<int>(0, deg(a) - deg(b) + 1));
    while (deg(a) >= deg(b) && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Scalar f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        divmod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<UPoly> sturm_chain(const UPoly& f) {
    std::vector<UPoly> chain{f, deriv(f)};
    trim(chain.back());
    while (!chain.back().empty() && deg(chain.back()) > 0) {
        UPoly r = chain[chain.size() - 2];
        divmod(r, chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
    return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Scalar& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Integer a with every rational root of f of the form k/a.
Integer root_denominator_bound(const UPoly& f) {
    Integer l = 1;
    for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Scalar lead = f.back() * Scalar(l);
    Integer a = lead.get_num();
    return abs(a);
}

// One rational root of a square-free f, or IrrationalRoot.
Scalar find_rational_root(const UPoly& f) {
    if (deg(f) == 1) return -f[0] / f[1];
    auto chain = sturm_chain(f);
    Scalar bound = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, Scalar(abs(f[i] / f.back())));
    bound += 1;
    Scalar lo = -bound, hi = bound;
    int vlo = sign_changes(chain, lo), vhi = sign_changes(chain, hi);
    if (vlo - vhi <= 0) throw IrrationalRoot();
    Integer a = root_denominator_bound(f);
    Scalar min_width = Scalar(1) / Scalar(4 * a);
    // Keep an interval (lo, hi] holding exactly one root, then test the one
    // admissible candidate k/a.
    while (true) {
        Scalar mid = (lo + hi) / 2;
        if (eval(f, mid) == 0) return mid;
        int vmid = sign_changes(chain, mid);
        int left = vlo - vmid;
        if (left > 0) {
            hi = mid;
            vhi = vmid;
        } else {
            lo = mid;
            vlo = vmid;
        }
        if (vlo - vhi == 1 && hi - lo < min_width) break;
    }
    Scalar scaled_lo = lo * Scalar(a);
    Integer k = scaled_lo.get_num() / scaled_lo.get_den();  // truncation toward zero
    for (Integer j = k - 1; j <= k + 2; ++j) {
        Scalar cand(j, a);
        cand.canonicalize();
        if (cand > lo && cand <= hi && eval(f, cand) == 0) return cand;
    }
    throw IrrationalRoot();
}

}  // namespace

RationalP1 RationalP1::normalized() const {
    if (b == 0) return infinity();
    return finite(a / b);
}

std::string RationalP1::str() const {
    if (b == 0) return "inf";
    return to_string(a / b);
}

std::vector<RationalP1> rational_roots(const std::vector<Scalar>& coeffs, bool projective) {
    UPoly p = coeffs;
    std::size_t formal = coeffs.empty() ? 0 : coeffs.size() - 1;
    trim(p);
    if (p.empty()) throw Error("rational_roots of the zero polynomial");
    std::vector<RationalP1> roots;
    std::size_t at_infinity = projective ? formal - std::size_t(deg(p)) : 0;
    std::vector<Scalar> finite;
    while (deg(p) > 0) {
        UPoly g = ugcd(p, deriv(p));
        UPoly sq = p;
        if (deg(g) > 0) sq = divmod(sq, g);
        Scalar r = find_rational_root(sq);
        UPoly lin{-r, Scalar(1)};
        while (true) {
            UPoly rem = p;
            UPoly q = divmod(rem, lin);
            if (!rem.empty()) break;
            p = q;
            finite.push_back(r);
        }
    }
    std::sort(finite.begin(), finite.end());
    for (const auto& r : finite) roots.push_back(RationalP1::finite(r));
    for (std::size_t i = 0; i < at_infinity; ++i) roots.push_back(RationalP1::infinity());
    return roots;
}

std::vector<RationalP1> binary_form_roots(const Poly& form, Var v0, Var v1) {
    int d = 0;
    if (!form.is_homogeneous_in({v0, v1}, &d)) throw Error("not a binary form");
    auto cs = binary_coefficients(form, v0, v1, d);
    std::vector<Scalar> c;
    for (const auto& p : cs) c.push_back(p.constant_value());
    return rational_roots(c, true);
}

}  // namespace parmod::exact
