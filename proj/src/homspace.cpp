// Hom spaces between modules, endomorphism algebras, and the isomorphism
// test built on them.
#include <cstddef>
#include <utility>
#include <vector>

#include "qha/errors.hpp"
#include "qha/module.hpp"

namespace qha::repmod {

using exactla::kernel;
using exactla::mul;
using exactla::rank;
using exactla::solve;
using exactla::transpose;

std::vector<Matrix> hom_space(const AModule& x, const AModule& y) {
    if (!(x.algebra() == y.algebra()))
        throw DimensionMismatch("hom space needs modules over one algebra");
    const std::size_t n = x.algebra().dim(), dx = x.dim(), dy = y.dim();
    // Unknown F is dy-by-dx, flattened row major. For every basis element i
    // and every entry (a, b): sum_c F(a,c) X_i(c,b) - Y_i(a,c) F(c,b) = 0.
    Matrix eqs(n * dy * dx, dy * dx);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& xi = x.action(i);
        const Matrix& yi = y.action(i);
        for (std::size_t a = 0; a < dy; ++a)
            for (std::size_t b = 0; b < dx; ++b) {
                const std::size_t row = (i * dy + a) * dx + b;
                for (std::size_t c = 0; c < dx; ++c)
                    eqs.at(row, a * dx + c) = eqs.at(row, a * dx + c) + xi.at(c, b);
                for (std::size_t c = 0; c < dy; ++c)
                    eqs.at(row, c * dx + b) = eqs.at(row, c * dx + b) - yi.at(a, c);
            }
    }
    Matrix flat = kernel(eqs);
    std::vector<Matrix> out;
    out.reserve(flat.rows());
    for (std::size_t k = 0; k < flat.rows(); ++k) {
        Matrix f(dy, dx);
        for (std::size_t a = 0; a < dy; ++a)
            for (std::size_t b = 0; b < dx; ++b) f.at(a, b) = flat.at(k, a * dx + b);
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const AModule& x, const AModule& y) { return hom_space(x, y).size(); }

namespace {

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols(), Scalar(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
    return v;
}

}  // namespace

EndAlgebra endomorphism_algebra(const AModule& m) {
    std::vector<Matrix> basis = hom_space(m, m);
    const std::size_t h = basis.size(), d = m.dim();
    // Columns of this system are the flattened basis maps; solving against it
    // re-expresses a map in coordinates.
    Matrix cols(d * d, h);
    for (std::size_t k = 0; k < h; ++k) {
        Vec fk = flatten(basis[k]);
        for (std::size_t r = 0; r < d * d; ++r) cols.at(r, k) = fk[r];
    }
    auto coords = [&](const Matrix& f) {
        auto c = solve(cols, flatten(f));
        if (!c) throw Error("endomorphism fell outside its own span");
        return *c;
    };
    std::vector<std::vector<Vec>> table(h, std::vector<Vec>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) table[i][j] = coords(mul(basis[i], basis[j]));
    Vec unit = h == 0 ? Vec{} : coords(Matrix::identity(d));
    return EndAlgebra{FDAlgebra(std::move(table), std::move(unit)), std::move(basis)};
}

Iso is_isomorphic(const AModule& x, const AModule& y) {
    if (!(x.algebra() == y.algebra()))
        throw DimensionMismatch("isomorphism test needs modules over one algebra");
    if (x.dim() != y.dim()) return Iso::No;
    if (x.dim() == 0) return Iso::Yes;
    std::vector<Matrix> homs = hom_space(x, y);
    if (homs.empty()) return Iso::No;
    // Isomorphic modules have matching hom dimensions in all four pairings.
    if (homs.size() != hom_dim(x, x) || homs.size() != hom_dim(y, y) ||
        homs.size() != hom_dim(y, x))
        return Iso::No;
    auto invertible = [&](const Matrix& f) { return rank(f) == x.dim(); };
    for (const Matrix& f : homs)
        if (invertible(f)) return Iso::Yes;
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j) {
            if (invertible(homs[i] + homs[j])) return Iso::Yes;
            if (invertible(homs[i] - homs[j])) return Iso::Yes;
        }
    // Geometric weight vectors; enough in practice to hit an invertible
    // combination whenever one exists in a space this small.
    for (long t : {2L, 3L, 5L, 7L, 11L, 13L}) {
        Matrix f(y.dim(), x.dim());
        Scalar w(1);
        for (const Matrix& h : homs) {
            f = f + w * h;
            w = w * Scalar(t);
        }
        if (invertible(f)) return Iso::Yes;
    }
    return Iso::Undecided;
}

}  // namespace qha::repmod
