#include "parmod/exact/linalg.hpp"

#include "parmod/exact/errors.hpp"

#include <algorithm>

namespace parmod::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw Error("matrix entry count mismatch");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
    return m;
}

bool ExactMatrix::all_constant() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const RatFunc& r) { return r.num().is_constant() && r.den().is_constant(); });
}

namespace {

struct Reduced {
    PolyMatrix m;
    std::vector<std::size_t> pivot_cols;
    Poly scale = Poly(1);  // every pivot entry equals this after reduction
    int swaps = 0;
};

// Fraction-free Gauss-Jordan: after step k every entry is a (k+1)-minor, so
// the division by the previous pivot is exact.
Reduced reduce(PolyMatrix m, bool full) {
    Reduced out;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    Poly prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            if (best == rows || m[i][col].size() < m[best][col].size() ||
                (m[i][col].size() == m[best][col].size() &&
                 m[i][col].total_degree() < m[best][col].total_degree()))
                best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            std::swap(m[best], m[r]);
            out.swaps++;
        }
        const Poly p = m[r][col];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || (!full && i < r)) continue;
            const Poly f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col) continue;
                if (!full && j < col) continue;
                Poly v = p * m[i][j];
                if (!f.is_zero() && !m[r][j].is_zero()) v -= f * m[r][j];
                m[i][j] = exact_divide(v, prev);
            }
            m[i][col] = Poly();
        }
        if (full) {
            // Rows already reduced had pivot prev; scaling above made it p.
            for (std::size_t k = 0; k < out.pivot_cols.size(); ++k) m[k][out.pivot_cols[k]] = p;
        }
        out.pivot_cols.push_back(col);
        prev = p;
        ++r;
    }
    out.scale = prev;
    out.m = std::move(m);
    return out;
}

PolyMatrix clear_denominators(const ExactMatrix& a, const std::vector<RatFunc>* b) {
    PolyMatrix m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Poly l(1);
        auto absorb = [&](const RatFunc& e) {
            if (!e.den().is_constant()) l = exact_divide(l * e.den(), gcd(l, e.den()));
        };
        for (std::size_t j = 0; j < a.cols(); ++j) absorb(a(i, j));
        if (b) absorb((*b)[i]);
        auto cleared = [&](const RatFunc& e) { return exact_divide(e.num() * l, e.den()); };
        for (std::size_t j = 0; j < a.cols(); ++j) m[i].push_back(cleared(a(i, j)));
        if (b) m[i].push_back(cleared((*b)[i]));
    }
    return m;
}

std::vector<Poly> make_primitive(std::vector<Poly> v) {
    Poly g = gcd(v);
    if (g.is_zero()) return v;
    // keep the sign of the first nonzero entry positive
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        Poly q = exact_divide(e, g);
        if (q.leading_coeff() < 0) g = -g;
        break;
    }
    for (auto& e : v) e = exact_divide(e, g);
    return v;
}

std::vector<std::vector<Poly>> kernel_from(const Reduced& red, std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Poly>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Poly> v(ncols);
        v[f] = red.scale;
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) v[red.pivot_cols[i]] = -red.m[i][f];
        basis.push_back(make_primitive(std::move(v)));
    }
    return basis;
}

}  // namespace

LinearSolution solve_linear(const ExactMatrix& a, const std::vector<RatFunc>& b) {
    if (b.size() != a.rows()) throw Error("right-hand side length mismatch");
    PolyMatrix aug = clear_denominators(a, &b);
    Reduced red = reduce(std::move(aug), true);
    std::size_t n = a.cols();
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == n) throw Inconsistent();
    LinearSolution sol;
    sol.particular.assign(n, RatFunc(0));
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        sol.particular[red.pivot_cols[i]] = RatFunc(red.m[i][n], red.scale);
    Reduced hom = red;
    for (auto& row : hom.m) row.pop_back();
    sol.kernel = kernel_from(hom, n);
    sol.kind = sol.kernel.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::underdetermined;
    return sol;
}

std::vector<std::vector<Poly>> kernel(const PolyMatrix& a) {
    std::size_t n = a.empty() ? 0 : a[0].size();
    Reduced red = reduce(a, true);
    return kernel_from(red, n);
}

std::size_t rank(const PolyMatrix& a) { return reduce(a, false).pivot_cols.size(); }

Poly determinant(PolyMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of non-square matrix");
    if (n == 0) return Poly(1);
    Reduced red = reduce(std::move(m), false);
    if (red.pivot_cols.size() < n) return Poly();
    return red.swaps % 2 ? -red.scale : red.scale;
}

}  // namespace parmod::exact
