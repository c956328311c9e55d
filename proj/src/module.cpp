#include "qha/module.hpp"

#include <utility>

#include "qha/errors.hpp"

namespace qha::repmod {

using algcore::Ideal;
using exactla::QuotientMap;
using exactla::kernel;
using exactla::mul;
using exactla::mul_vec;
using exactla::transpose;
using exactla::unit_vec;
using exactla::vstack;

AModule::AModule(FDAlgebra algebra, std::vector<Matrix> action, std::size_t dim)
    : a_(std::move(algebra)), action_(std::move(action)), dim_(dim) {
    if (action_.size() != a_.dim())
        throw DimensionMismatch("need one action matrix per algebra basis element");
    for (const Matrix& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionMismatch("action matrix shape does not match the module dimension");
}

Matrix AModule::act(const Vec& x) const {
    if (x.size() != a_.dim()) throw DimensionMismatch("element size does not match the algebra");
    Matrix r(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) r = r + x[i] * action_[i];
    return r;
}

Vec AModule::apply(const Vec& x, const Vec& v) const { return mul_vec(act(x), v); }

void validate_module(const AModule& m) {
    const FDAlgebra& a = m.algebra();
    if (m.act(a.unit()) != Matrix::identity(m.dim()))
        throw ValidationError("unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.act(a.table(i, j)) != mul(m.action(i), m.action(j)))
                throw ValidationError("action breaks on the product " + a.label(i) + " * " +
                                      a.label(j));
}

AModule regular_module(const FDAlgebra& a) {
    std::vector<Matrix> action;
    action.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        action.push_back(a.left_mult(unit_vec(a.dim(), i)));
    return AModule(a, std::move(action), a.dim());
}

Subspace annihilator(const AModule& m) {
    const std::size_t n = m.algebra().dim(), d = m.dim();
    // x is annihilating iff sum_i x_i action[i] = 0, one equation per matrix
    // entry.
    Matrix eqs(d * d, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) eqs.at(r * d + c, i) = m.action(i).at(r, c);
    return Subspace::span(n, kernel(eqs));
}

Subspace spanned_submodule(const AModule& m, const std::vector<Vec>& gens) {
    Subspace cur = Subspace::span(m.dim(), gens);
    for (;;) {
        std::vector<Vec> images;
        for (std::size_t t = 0; t < cur.dim(); ++t)
            for (std::size_t i = 0; i < m.algebra().dim(); ++i)
                images.push_back(mul_vec(m.action(i), cur.basis().row(t)));
        Subspace next = exactla::sum(cur, Subspace::span(m.dim(), images));
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_submodule(const AModule& m, const Subspace& w) {
    if (w.ambient() != m.dim()) return false;
    for (std::size_t t = 0; t < w.dim(); ++t)
        for (std::size_t i = 0; i < m.algebra().dim(); ++i)
            if (!w.contains(mul_vec(m.action(i), w.basis().row(t)))) return false;
    return true;
}

namespace {

// Coordinates of v (assumed inside w) in w's reduced basis: read off the
// pivot positions.
Vec coords_in(const Subspace& w, const Vec& v) {
    Vec c(w.dim(), Scalar(0));
    for (std::size_t s = 0; s < w.dim(); ++s) c[s] = v[w.pivots()[s]];
    return c;
}

}  // namespace

AModule submodule(const AModule& m, const Subspace& w) {
    if (!is_submodule(m, w)) throw ValidationError("subspace is not closed under the action");
    std::vector<Matrix> action(m.algebra().dim(), Matrix(w.dim(), w.dim()));
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        for (std::size_t t = 0; t < w.dim(); ++t) {
            Vec img = coords_in(w, mul_vec(m.action(i), w.basis().row(t)));
            for (std::size_t s = 0; s < w.dim(); ++s) action[i].at(s, t) = img[s];
        }
    return AModule(m.algebra(), std::move(action), w.dim());
}

AModule quotient_module(const AModule& m, const Subspace& w) {
    if (!is_submodule(m, w)) throw ValidationError("subspace is not closed under the action");
    QuotientMap q(w);
    std::vector<Matrix> action(m.algebra().dim(), Matrix(q.dim(), q.dim()));
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        for (std::size_t t = 0; t < q.dim(); ++t) {
            Vec img = q.project(mul_vec(m.action(i), q.lift_basis(t)));
            for (std::size_t s = 0; s < q.dim(); ++s) action[i].at(s, t) = img[s];
        }
    return AModule(m.algebra(), std::move(action), q.dim());
}

Subspace radical_submodule(const AModule& m) {
    Ideal j = algcore::jacobson_radical(m.algebra());
    std::vector<Vec> images;
    for (std::size_t r = 0; r < j.dim(); ++r) {
        Matrix jr = m.act(j.basis().row(r));
        for (std::size_t t = 0; t < m.dim(); ++t)
            images.push_back(mul_vec(jr, unit_vec(m.dim(), t)));
    }
    return Subspace::span(m.dim(), images);
}

Subspace socle_submodule(const AModule& m) {
    Ideal j = algcore::jacobson_radical(m.algebra());
    if (j.dim() == 0) return Subspace::full(m.dim());
    Matrix stacked(0, m.dim());
    for (std::size_t r = 0; r < j.dim(); ++r) stacked = vstack(stacked, m.act(j.basis().row(r)));
    return Subspace::span(m.dim(), kernel(stacked));
}

AModule top_module(const AModule& m) { return quotient_module(m, radical_submodule(m)); }

AModule direct_sum(const AModule& x, const AModule& y) {
    if (!(x.algebra() == y.algebra()))
        throw DimensionMismatch("direct sum needs modules over one algebra");
    const std::size_t dx = x.dim(), dy = y.dim();
    std::vector<Matrix> action(x.algebra().dim(), Matrix(dx + dy, dx + dy));
    for (std::size_t i = 0; i < action.size(); ++i) {
        for (std::size_t r = 0; r < dx; ++r)
            for (std::size_t c = 0; c < dx; ++c) action[i].at(r, c) = x.action(i).at(r, c);
        for (std::size_t r = 0; r < dy; ++r)
            for (std::size_t c = 0; c < dy; ++c) action[i].at(dx + r, dx + c) = y.action(i).at(r, c);
    }
    return AModule(x.algebra(), std::move(action), dx + dy);
}

}  // namespace qha::repmod
