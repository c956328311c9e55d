#include "qha/subspace.hpp"

#include "qha/errors.hpp"

namespace qha::exactla {

Subspace Subspace::span(std::size_t ambient, const Matrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw DimensionMismatch("span: row length does not match ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    Matrix padded = rows.rows() ? rows : Matrix(0, ambient);
    s.basis_ = rref(padded);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& rows) {
    return span(ambient, Matrix::from_rows(rows, ambient));
}

Subspace Subspace::zero(std::size_t ambient) { return span(ambient, Matrix(0, ambient)); }

Subspace Subspace::full(std::size_t ambient) {
    return span(ambient, Matrix::identity(ambient));
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: ambient mismatch");
    for (std::size_t k = 0; k < basis_.pivots.size(); ++k) {
        const Scalar f = v[basis_.pivots[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_.mat.at(k, j) != 0) v[j] -= f * basis_.mat.at(k, j);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.mat.row(i))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("sum: ambient mismatch");
    return Subspace::span(a.ambient(), vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    // (x, y) with U^T x + V^T y = 0 gives U^T x in the intersection.
    const Matrix ut = transpose(a.basis());
    const Matrix vt = transpose(b.basis());
    const Matrix k = kernel(hstack(ut, vt));
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        Vec x(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) x[j] = k.at(i, j);
        gens.push_back(vec_mul(x, a.basis()));
    }
    return Subspace::span(a.ambient(), gens);
}

QuotientMap::QuotientMap(Subspace w) : w_(std::move(w)) {
    std::vector<bool> is_pivot(w_.ambient(), false);
    for (auto c : w_.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < w_.ambient(); ++c)
        if (!is_pivot[c]) rep_coords_.push_back(c);
}

Vec QuotientMap::project(const Vec& v) const {
    const Vec r = w_.reduce(v);
    Vec q(rep_coords_.size());
    for (std::size_t t = 0; t < rep_coords_.size(); ++t) q[t] = r[rep_coords_[t]];
    return q;
}

Vec QuotientMap::lift(const Vec& q) const {
    if (q.size() != rep_coords_.size()) throw DimensionMismatch("lift: quotient dimension mismatch");
    Vec v(w_.ambient(), Scalar(0));
    for (std::size_t t = 0; t < rep_coords_.size(); ++t) v[rep_coords_[t]] = q[t];
    return v;
}

}  // namespace qha::exactla
