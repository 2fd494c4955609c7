#pragma once

#include "parmod/exact/ratfunc.hpp"

#include <vector>

namespace parmod::exact {

using PolyMatrix = std::vector<std::vector<Poly>>;

class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    bool all_constant() const;

private:
    std::size_t rows_, cols_;
    std::vector<RatFunc> entries_;
};

struct LinearSolution {
    enum class Kind { unique, underdetermined };
    Kind kind = Kind::unique;
    std::vector<RatFunc> particular;           // free variables set to zero
    std::vector<std::vector<Poly>> kernel;     // basis of the homogeneous solutions
};

// Fraction-free Gauss-Jordan elimination; throws Inconsistent.
LinearSolution solve_linear(const ExactMatrix& a, const std::vector<RatFunc>& b);

// Basis of the right kernel, each vector primitive.
std::vector<std::vector<Poly>> kernel(const PolyMatrix& a);
Poly determinant(PolyMatrix m);
std::size_t rank(const PolyMatrix& a);

}  // namespace parmod::exact
