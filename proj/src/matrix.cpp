#include "qha/matrix.hpp"

#include "qha/errors.hpp"

namespace qha::exactla {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix add: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix sub: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = c * a.a_[i];
    return r;
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mul: inner dimension mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mul: inner dimension mismatch");
    Matrix r(a.rows(), b.cols());
    const long n = static_cast<long>(a.rows());
    // Row blocks are independent; per-row arithmetic identical to the serial
    // kernel, so results agree exactly.
#pragma omp parallel for schedule(static) if (n >= 16)
    for (long i = 0; i < n; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Vec mul_vec(const Matrix& a, const Vec& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("mul_vec: dimension mismatch");
    Vec r(a.rows(), Scalar(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && x[j] != 0) r[i] += a.at(i, j) * x[j];
    return r;
}

Vec vec_mul(const Vec& x, const Matrix& a) {
    if (a.rows() != x.size()) throw DimensionMismatch("vec_mul: dimension mismatch");
    Vec r(a.cols(), Scalar(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) r[j] += x[i] * a.at(i, j);
    }
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

namespace {

// Shared elimination. Pivot choice is the first nonzero entry in column
// order, so the reduced form is canonical for the row space.
template <bool Parallel>
Echelon rref_impl(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        if (m.at(r, c) != 1) {
            const Scalar inv = 1 / m.at(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (m.at(r, j) != 0) m.at(r, j) *= inv;
        }
        const long nrows = static_cast<long>(rows);
        // Each row update only touches its own row; order is irrelevant, so
        // the parallel pass matches the serial one exactly.
#pragma omp parallel for schedule(static) if (Parallel && nrows >= 32)
        for (long i = 0; i < nrows; ++i) {
            if (static_cast<std::size_t>(i) == r) continue;
            const Scalar f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix kept(r, cols);
    for (std::size_t i = 0; i < r; ++i) kept.set_row(i, m.row(i));
    return Echelon{std::move(kept), std::move(pivots)};
}

}  // namespace

Echelon rref_serial(const Matrix& a) { return rref_impl<false>(a); }

Echelon rref(const Matrix& a) { return rref_impl<true>(a); }

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
    const Echelon e = rref(a);
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(free_cols.size(), cols);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t c = free_cols[t];
        basis.at(t, c) = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            basis.at(t, e.pivots[k]) = -e.mat.at(k, c);
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    Vec x(a.cols(), Scalar(0));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == a.cols()) return std::nullopt;  // pivot in rhs column
        x[e.pivots[k]] = e.mat.at(k, a.cols());
    }
    return x;
}

}  // namespace qha::exactla
