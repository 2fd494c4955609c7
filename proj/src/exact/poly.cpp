#include "parmod/exact/poly.hpp"

#include "parmod/exact/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace parmod::exact {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "b0", "b1", "b2", "z0", "z1", "w0", "w1", "lambda", "t", "c",
    "l",  "x",  "y",  "s",  "u",  "v",  "u0", "u1",     "u2", "u3",
};

bool term_desc(const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) > 0; }

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// Merge two sorted term lists, scaling the second by `sb`.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, int sb) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = grlex_cmp(a[i].m, b[j].m);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (sb < 0) out.back().c = -out.back().c;
        } else {
            Scalar s = sb > 0 ? Scalar(a[i].c + b[j].c) : Scalar(a[i].c - b[j].c);
            if (s != 0) out.push_back(Term{a[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (sb < 0) out.back().c = -out.back().c;
    }
    return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[slot(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

bool Monomial::divides(const Monomial& other) const {
    if (deg > other.deg) return false;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 255) throw Error("exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
}

Monomial Monomial::of(Var v, unsigned power) {
    Monomial m;
    m.e[slot(v)] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

Poly::Poly(const Scalar& c) {
    if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::var(Var v, unsigned power) { return monomial(Monomial::of(v, power), Scalar(1)); }

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
    Poly p;
    if (c != 0) p.terms_.push_back(Term{m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_desc);
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
        } else {
            if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
}

Scalar Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? Scalar(0) : terms_[0].c;
}

Scalar Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
    return Scalar(0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }

int Poly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, int(t.m[v]));
    return d;
}

int Poly::min_degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 255;
    for (const auto& t : terms_) d = std::min(d, int(t.m[v]));
    return d;
}

std::vector<Var> Poly::variables() const {
    std::array<bool, kNumVars> seen{};
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (t.m.e[i]) seen[i] = true;
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

bool Poly::is_homogeneous_in(std::initializer_list<Var> vs, int* deg_out) const {
    return is_homogeneous_in(std::vector<Var>(vs), deg_out);
}

bool Poly::is_homogeneous_in(const std::vector<Var>& vs, int* deg_out) const {
    int d = -1;
    for (const auto& t : terms_) {
        int td = 0;
        for (Var v : vs) td += t.m[v];
        if (d < 0) d = td;
        else if (td != d) return false;
    }
    if (deg_out) *deg_out = d;
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_add(terms_, o.terms_, 1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_add(terms_, o.terms_, -1);
    return *this;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
    Poly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.m * m, t.c * c});
    return r;
}

Poly Poly::scaled(const Scalar& c) const { return times_monomial(Monomial{}, c); }

namespace {

// Divide and conquer over the terms of a; each slice times b stays sorted
// because monomial multiplication preserves the order.
Poly mul_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi, const Poly& b) {
    if (hi - lo == 1) return b.times_monomial(a[lo].m, a[lo].c);
    std::size_t mid = lo + (hi - lo) / 2;
    Poly left = mul_range(a, lo, mid, b);
    left += mul_range(a, mid, hi, b);
    return left;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.size() > b.size()) return mul_range(b.terms(), 0, b.size(), a);
    return mul_range(a.terms(), 0, a.size(), b);
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned k) const {
    Poly result(1);
    Poly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned k = t.m[v];
        if (!k) continue;
        Monomial m = t.m;
        m.e[slot(v)]--;
        m.deg--;
        out.push_back(Term{m, t.c * k});
    }
    return from_terms(std::move(out));
}

Poly Poly::subs(Var v, const Poly& value) const { return subs({{v, value}}); }

Poly Poly::subs(const std::vector<std::pair<Var, Poly>>& values) const {
    if (terms_.empty()) return Poly();
    // Cache powers of each substituted value.
    std::vector<std::vector<Poly>> powers(values.size());
    std::vector<Poly> parts;
    parts.reserve(terms_.size());
    // Group terms by the exponent pattern of the substituted variables so that
    // the leftover monomial parts are collected before multiplying.
    std::map<std::vector<std::uint8_t>, std::vector<Term>> groups;
    for (const auto& t : terms_) {
        std::vector<std::uint8_t> key(values.size());
        Monomial rest = t.m;
        for (std::size_t i = 0; i < values.size(); ++i) {
            key[i] = t.m[values[i].first];
            rest.e[slot(values[i].first)] = 0;
            rest.deg = static_cast<std::uint16_t>(rest.deg - key[i]);
        }
        groups[key].push_back(Term{rest, t.c});
    }
    for (auto& [key, ts] : groups) {
        Poly acc = Poly::from_terms(std::move(ts));
        for (std::size_t i = 0; i < values.size(); ++i) {
            unsigned k = key[i];
            if (!k) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Poly(1));
            while (pw.size() <= k) pw.push_back(pw.back() * values[i].second);
            acc = acc * pw[k];
        }
        parts.push_back(std::move(acc));
    }
    // Balanced summation.
    while (parts.size() > 1) {
        std::vector<Poly> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return parts.front();
}

Poly Poly::eval_partial(const Assignment& values) const {
    std::vector<std::pair<Var, Poly>> subs_list;
    subs_list.reserve(values.size());
    for (const auto& [v, q] : values) subs_list.emplace_back(v, Poly(q));
    return subs(subs_list);
}

Scalar Poly::eval(const Assignment& values) const {
    std::array<const Scalar*, kNumVars> val{};
    for (const auto& [v, q] : values) val[slot(v)] = &q;
    std::array<std::vector<Scalar>, kNumVars> powers;
    Scalar sum = 0;
    for (const auto& t : terms_) {
        Scalar prod = t.c;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            unsigned k = t.m.e[i];
            if (!k) continue;
            if (!val[i]) throw Error("eval: variable " + std::string(kVarNames[i]) + " not assigned");
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Scalar(1));
            while (pw.size() <= k) pw.push_back(pw.back() * *val[i]);
            prod *= pw[k];
        }
        sum += prod;
    }
    return sum;
}

Scalar Poly::content() const {
    if (terms_.empty()) return Scalar(0);
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Scalar c(g, l);
    c.canonicalize();
    if (terms_.front().c < 0) c = -c;
    return c;
}

Poly Poly::primitive() const {
    if (terms_.empty()) return Poly();
    Scalar c = content();
    if (c == 1) return *this;
    return scaled(Scalar(1) / c);
}

Monomial Poly::monomial_content() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_.front().m;
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
    }
    unsigned d = 0;
    for (auto x : m.e) d += x;
    m.deg = static_cast<std::uint16_t>(d);
    return m;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (c == 1);
        if (!unit || t.m.deg == 0) {
            os << c.get_str();
            if (t.m.deg) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!t.m.e[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << kVarNames[i];
            if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
        }
    }
    return os.str();
}

std::vector<Poly> univariate_view(const Poly& p, Var v) {
    int d = p.degree(v);
    if (d < 0) return {Poly()};
    std::vector<std::vector<Term>> buckets(std::size_t(d) + 1);
    for (const auto& t : p.terms()) {
        unsigned k = t.m[v];
        Monomial m = t.m;
        m.e[slot(v)] = 0;
        m.deg = static_cast<std::uint16_t>(m.deg - k);
        buckets[k].push_back(Term{m, t.c});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly from_univariate(const std::vector<Poly>& coeffs, Var v) {
    std::vector<Term> all;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial mk = Monomial::of(v, unsigned(k));
        for (const auto& t : coeffs[k].terms()) all.push_back(Term{t.m * mk, t.c});
    }
    return Poly::from_terms(std::move(all));
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) return a.scaled(Scalar(1) / b.constant_value());
    if (b.is_monomial()) {
        const Term& bt = b.leading();
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!bt.m.divides(t.m)) return std::nullopt;
            out.push_back(Term{t.m / bt.m, t.c / bt.c});
        }
        return Poly::from_terms(std::move(out));
    }
    // Leading-term division; with a single divisor under a monomial order
    // the remainder is zero exactly when b divides a.
    for (Var v : b.variables())
        if (a.degree(v) < b.degree(v)) return std::nullopt;
    if (a.total_degree() < b.total_degree()) return std::nullopt;
    const Term& lb = b.leading();
    Scalar inv = Scalar(1) / lb.c;
    std::map<Monomial, Scalar, GrlexDesc> rem;
    for (const auto& t : a.terms()) rem.emplace(t.m, t.c);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lb.m.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / lb.m;
        Scalar qc = it->second * inv;
        for (const auto& t : b.terms()) {
            Monomial m = t.m * qm;
            auto [pos, inserted] = rem.try_emplace(m, 0);
            pos->second -= t.c * qc;
            if (pos->second == 0) rem.erase(pos);
        }
        q.push_back(Term{qm, qc});
    }
    return Poly::from_terms(std::move(q));
}

Poly exact_divide(const Poly& a, const Poly& b) {
    auto q = try_divide(a, b);
    if (!q) throw NotDivisible();
    return *std::move(q);
}

}  // namespace parmod::exact

std::size_t std::hash<parmod::exact::Monomial>::operator()(const parmod::exact::Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
}
