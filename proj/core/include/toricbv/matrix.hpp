#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricbv/rational.hpp"

namespace toricbv {

// Dense matrix over Q. Sizes here are tiny (at most a few hundred rows), so
// no sparse machinery: exactness and determinism are what matter.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    void set_row(std::size_t r, const RatVec& v);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    bool is_zero() const;
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, strictly increasing
};

// Reduced row echelon form with deterministic pivoting (first nonzero entry
// in column order). Idempotent: rref(rref(m).reduced) == rref(m).
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of the right null space { v : m v = 0 }. Size is cols - rank.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

struct AffineSolution {
    RatVec particular;
    std::vector<RatVec> kernel;  // direction space of the solution set
};

// Exact solution set of m x = b, or nothing when inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVec& b);

// Inverse of a square nonsingular matrix; nothing when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Determinant of a square matrix (fraction-free over the rationals is not
// needed; plain elimination is exact).
Rat determinant(const RatMatrix& m);

RatVec matvec(const RatMatrix& m, const RatVec& v);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

}  // namespace toricbv
