#include "toricbv/matrix.hpp"

#include <sstream>

namespace toricbv {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw input_error("ragged matrix initializer");
        for (const auto& x : r) data_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

RatVec RatMatrix::row(std::size_t r) const {
    RatVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void RatMatrix::set_row(std::size_t r, const RatVec& v) {
    if (v.size() != cols_) throw input_error("set_row: dimension mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << at(r, c).str();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    return os.str();
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead) {
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(piv, c), a.at(lead, c));
        }
        const Rat inv = Rat(1) / a.at(lead, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            const Rat f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    const auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(m.cols());
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw input_error("solve_affine: rhs length != rows");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const auto [red, pivots] = rref(aug);
    for (auto p : pivots)
        if (p == m.cols()) return std::nullopt;  // pivot in the rhs column

    RatVec particular(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        particular[pivots[r]] = red.at(r, m.cols());
    return AffineSolution{std::move(particular), kernel_basis(m)};
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const auto [red, pivots] = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
    return inv;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        const Rat inv = Rat(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Rat f = a.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

RatVec matvec(const RatMatrix& m, const RatVec& v) {
    if (v.size() != m.cols()) throw input_error("matvec: dimension mismatch");
    RatVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rat s;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matmul: dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return out;
}

}  // namespace toricbv
