#include "parmod/exact/scalar.hpp"

#include "parmod/exact/errors.hpp"

namespace parmod::exact {

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw ParseError("empty rational");
    Scalar q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(10); }

bool numden_less(const Scalar& a, const Scalar& b) {
    int c = cmp(a.get_num(), b.get_num());
    if (c != 0) return c < 0;
    return cmp(a.get_den(), b.get_den()) < 0;
}

}  // namespace parmod::exact
