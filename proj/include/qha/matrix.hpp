// Dense rational matrices and the elimination kernels everything else rests
// on. The *_serial variants are the reference implementations; the unsuffixed
// kernels use OpenMP on large inputs and must agree bit for bit.
#ifndef QHA_MATRIX_HPP
#define QHA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qha/rational.hpp"

namespace qha::exactla {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n);
    // Rows listed explicitly; all must share one length.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);

Vec mul_vec(const Matrix& a, const Vec& x);       // a * x, x as column
Vec vec_mul(const Vec& x, const Matrix& a);  // x^T * a, result as row

Matrix transpose(const Matrix& a);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix mat;                       // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each kept row, increasing
};

Echelon rref_serial(const Matrix& a);
Echelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

// Basis of {x : a x = 0}, one basis vector per row. Deterministic: the
// standard non-pivot parameterization of the reduced form.
Matrix kernel(const Matrix& a);

// One solution of a x = b, if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace qha::exactla

#endif
