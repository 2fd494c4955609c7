#include "parmod/exact/json_io.hpp"

#include "parmod/exact/errors.hpp"

#include <algorithm>

namespace parmod::exact {

Json scalar_json(const Scalar& q) { return to_string(q); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("expected rational string");
}

Json to_json(const Poly& p, std::vector<Var> vars) {
    for (Var v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    Json names = Json::array();
    for (Var v : vars) names.push_back(std::string(var_name(v)));
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json e = Json::array();
        for (Var v : vars) e.push_back(int(t.m[v]));
        terms.push_back({{"e", e}, {"n", t.c.get_num().get_str()}, {"d", t.c.get_den().get_str()}});
    }
    return {{"vars", names}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial needs 'vars' and 'terms'");
    std::vector<Var> vars;
    for (const auto& n : j.at("vars")) {
        auto v = var_from_name(n.get<std::string>());
        if (!v) throw ParseError("unknown variable '" + n.get<std::string>() + "'");
        vars.push_back(*v);
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("e");
        if (e.size() != vars.size()) throw ParseError("exponent vector length mismatch");
        Monomial m;
        unsigned d = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            int k = e[i].get<int>();
            if (k < 0 || k > 255) throw ParseError("exponent out of range");
            m.e[slot(vars[i])] = static_cast<std::uint8_t>(m.e[slot(vars[i])] + k);
            d += unsigned(k);
        }
        m.deg = static_cast<std::uint16_t>(d);
        Scalar num = parse_scalar(t.at("n").get<std::string>());
        Scalar den = t.contains("d") ? parse_scalar(t.at("d").get<std::string>()) : Scalar(1);
        if (den == 0) throw ParseError("zero denominator");
        terms.push_back(Term{m, num / den});
    }
    return Poly::from_terms(std::move(terms));
}

Json to_json(const RatFunc& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace parmod::exact
