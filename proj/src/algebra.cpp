#include "qha/algebra.hpp"

#include <string>

#include "qha/errors.hpp"

namespace qha::algcore {

using exactla::Echelon;
using exactla::is_zero_vec;
using exactla::mul_vec;
using exactla::unit_vec;
using exactla::vec_mul;
using exactla::zero_vec;

FDAlgebra::FDAlgebra(std::vector<std::vector<Vec>> table, Vec unit,
                     std::vector<std::string> labels)
    : dim_(unit.size()), table_(std::move(table)), unit_(std::move(unit)),
      labels_(std::move(labels)) {
    if (table_.size() != dim_)
        throw DimensionMismatch("algebra table: row count != dimension");
    for (const auto& row : table_) {
        if (row.size() != dim_)
            throw DimensionMismatch("algebra table: column count != dimension");
        for (const auto& v : row)
            if (v.size() != dim_)
                throw DimensionMismatch("algebra table: product vector length != dimension");
    }
    if (!labels_.empty() && labels_.size() != dim_)
        throw DimensionMismatch("algebra labels: count != dimension");
}

Vec FDAlgebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatch("algebra mul: operand length mismatch");
    Vec r = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Scalar c = x[i] * y[j];
            const Vec& t = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (t[k] != 0) r[k] += c * t[k];
        }
    }
    return r;
}

Matrix FDAlgebra::left_mult(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = mul(x, unit_vec(dim_, j));
        for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix FDAlgebra::right_mult(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = mul(unit_vec(dim_, j), x);
        for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::string FDAlgebra::label(std::size_t i) const {
    if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
    return "b" + std::to_string(i);
}

void validate_algebra(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t j = 0; j < n; ++j) {
        const Vec ej = unit_vec(n, j);
        if (a.mul(a.unit(), ej) != ej)
            throw ValidationError("unit axiom fails: 1*" + a.label(j) + " != " + a.label(j));
        if (a.mul(ej, a.unit()) != ej)
            throw ValidationError("unit axiom fails: " + a.label(j) + "*1 != " + a.label(j));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ij = a.table(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec lhs = a.mul(ij, unit_vec(n, k));
                const Vec rhs = a.mul(unit_vec(n, i), a.table(j, k));
                if (lhs != rhs)
                    throw ValidationError("associativity fails at (" + a.label(i) + "," +
                                          a.label(j) + "," + a.label(k) + ")");
            }
        }
}

FDAlgebra opposite(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = a.table(j, i);
    return FDAlgebra(std::move(table), a.unit(), a.labels());
}

Ideal ideal_from_generators(const FDAlgebra& a, const std::vector<Vec>& gens) {
    const std::size_t n = a.dim();
    Subspace span = Subspace::span(n, gens);
    // saturate under left and right multiplication by basis elements
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t r = 0; r < span.dim(); ++r) {
            const Vec v = span.basis().row(r);
            for (std::size_t i = 0; i < n; ++i) {
                next.push_back(a.mul(unit_vec(n, i), v));
                next.push_back(a.mul(v, unit_vec(n, i)));
            }
        }
        Subspace grown = sum(span, Subspace::span(n, next));
        if (grown.dim() == span.dim()) return span;
        span = grown;
    }
}

bool is_ideal(const FDAlgebra& a, const Subspace& w) {
    if (w.ambient() != a.dim()) throw DimensionMismatch("is_ideal: ambient mismatch");
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < w.dim(); ++r) {
        const Vec v = w.basis().row(r);
        for (std::size_t i = 0; i < n; ++i) {
            if (!w.contains(a.mul(unit_vec(n, i), v))) return false;
            if (!w.contains(a.mul(v, unit_vec(n, i)))) return false;
        }
    }
    return true;
}

Ideal ideal_product(const FDAlgebra& a, const Ideal& x, const Ideal& y) {
    if (x.ambient() != a.dim() || y.ambient() != a.dim())
        throw DimensionMismatch("ideal_product: ambient mismatch");
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < y.dim(); ++j)
            prods.push_back(a.mul(x.basis().row(i), y.basis().row(j)));
    return Subspace::span(a.dim(), prods);
}

QuotientAlgebra quotient_algebra(const FDAlgebra& a, const Ideal& ideal) {
    if (!is_ideal(a, ideal))
        throw ValidationError("quotient_algebra: subspace is not a two-sided ideal");
    exactla::QuotientMap q(ideal);
    const std::size_t m = q.dim();
    std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = q.project(a.mul(q.lift_basis(i), q.lift_basis(j)));
        labels[i] = a.label(q.rep_coords()[i]) + "~";
    }
    Vec unit = q.project(a.unit());
    return QuotientAlgebra{FDAlgebra(std::move(table), std::move(unit), std::move(labels)),
                           std::move(q)};
}

Vec CornerAlgebra::coords(const Vec& parent_elt) const {
    // rows of `basis` are in reduced form: coefficients read off pivots
    if (!is_zero_vec(Subspace::span(basis.cols(), basis).reduce(parent_elt)))
        throw ValidationError("corner coords: element lies outside the corner");
    const Echelon e = exactla::rref(basis);
    Vec c(basis.rows());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) c[k] = parent_elt[e.pivots[k]];
    return c;
}

Vec CornerAlgebra::embed(const Vec& corner_elt) const {
    return vec_mul(corner_elt, basis);
}

CornerAlgebra corner_algebra(const FDAlgebra& a, const Vec& idem) {
    const std::size_t n = a.dim();
    if (a.mul(idem, idem) != idem)
        throw ValidationError("corner_algebra: element is not idempotent");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(a.mul(idem, a.mul(unit_vec(n, i), idem)));
    const Subspace sp = Subspace::span(n, gens);
    const Matrix basis = sp.basis();
    const std::size_t m = basis.rows();

    CornerAlgebra c;
    c.basis = basis;
    std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = "c" + std::to_string(i);
    CornerAlgebra probe;  // temporary for coords before algebra is built
    probe.basis = basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = probe.coords(a.mul(basis.row(i), basis.row(j)));
    Vec unit = probe.coords(idem);
    c.algebra = FDAlgebra(std::move(table), std::move(unit), std::move(labels));
    return c;
}

}  // namespace qha::algcore
