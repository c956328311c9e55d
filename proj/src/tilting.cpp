#include <string>
#include <utility>
#include <vector>

#include "qha/errors.hpp"
#include "qha/strat.hpp"

namespace qha::strat {

using exactla::intersect;
using exactla::Matrix;
using exactla::mul;
using exactla::mul_vec;
using exactla::QuotientMap;
using exactla::rank;
using exactla::Scalar;
using exactla::Subspace;
using exactla::unit_vec;
using exactla::Vec;

namespace {

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

// Surjectivity of multiplication by the unit class of cell (i+1, i) from the
// e_i part of m onto the e_{i+1} part. The image always lands inside the
// e_{i+1} part, so comparing ranks against the idempotent is enough. At
// i = d both sides are zero.
bool ext_surjective(const ConstructedAlgebra& ca, const AModule& m, std::size_t i) {
    const Vec unit = ca.system().parent().unit();
    const Vec u = ca.embed(i + 1, i, ca.cell_coords(i + 1, i, unit));
    return rank(m.act(u)) == rank(m.act(ca.idempotent(i + 1)));
}

}  // namespace

std::size_t TiltingBimodule::block_dim(std::size_t k, std::size_t l) const {
    return cell.at(k - 1).at(l - 1).dim();
}

Subspace TiltingBimodule::column_span(std::size_t l) const {
    std::vector<Vec> rows;
    for (std::size_t k = 1; k <= cell.size(); ++k)
        for (std::size_t s = 0; s < block_dim(k, l); ++s)
            rows.push_back(unit_vec(dim, offset[k - 1][l - 1] + s));
    return Subspace::span(dim, rows);
}

Subspace TiltingBimodule::row_span(std::size_t k) const {
    std::vector<Vec> rows;
    for (std::size_t l = 1; l <= cell.size(); ++l)
        for (std::size_t s = 0; s < block_dim(k, l); ++s)
            rows.push_back(unit_vec(dim, offset[k - 1][l - 1] + s));
    return Subspace::span(dim, rows);
}

AModule TiltingBimodule::column(std::size_t l) const {
    return repmod::submodule(over_a, column_span(l));
}

AModule TiltingBimodule::row(std::size_t k) const {
    return repmod::submodule(over_b, row_span(k));
}

TiltingBimodule build_T(const ConstructedAlgebra& ca) {
    TiltingBimodule t;
    t.a_side = ca;
    t.b_side = construct::build_algebra(systems::dual_system(ca.system()));
    const IdealSystem& sys = ca.system();
    const FDAlgebra& r = sys.parent();
    const std::size_t d = sys.d();

    t.cell.assign(d, {});
    t.offset.assign(d, std::vector<std::size_t>(d, 0));
    std::size_t off = 0;
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t l = 1; l <= d; ++l) {
            QuotientMap qm(sys.at(k, d + 2 - l));
            t.offset[k - 1][l - 1] = off;
            off += qm.dim();
            t.cell[k - 1].push_back(std::move(qm));
        }
    t.dim = off;

    // A acts through the inner index: a basis coordinate of cell (i,j) sends
    // T-cell (j,l) into (i,l) by left multiplication of representatives.
    const FDAlgebra& a = ca.algebra();
    std::vector<Matrix> acta;
    for (std::size_t u = 0; u < a.dim(); ++u) {
        Matrix mat(t.dim, t.dim);
        const auto [bi, bj] = ca.block_of(u);
        const auto& blk = ca.block(bi, bj);
        const Vec x = blk.reps.row(u - blk.offset);
        for (std::size_t l = 1; l <= d; ++l) {
            const QuotientMap& src = t.cell[bj - 1][l - 1];
            const QuotientMap& dst = t.cell[bi - 1][l - 1];
            for (std::size_t s = 0; s < src.dim(); ++s) {
                const Vec img = dst.project(r.mul(x, src.lift_basis(s)));
                for (std::size_t rr = 0; rr < img.size(); ++rr)
                    mat.at(t.offset[bi - 1][l - 1] + rr, t.offset[bj - 1][l - 1] + s) =
                        img[rr];
            }
        }
        acta.push_back(std::move(mat));
    }
    t.over_a = AModule(a, std::move(acta), t.dim);
    repmod::validate_module(t.over_a);

    // The dual-grid algebra acts through the outer index: a basis coordinate
    // of its cell (i,j) sends T-cell (k,j) into (k,i), multiplying the
    // representative on the right inside R.
    const FDAlgebra& b = t.b_side.algebra();
    std::vector<Matrix> actb;
    for (std::size_t u = 0; u < b.dim(); ++u) {
        Matrix mat(t.dim, t.dim);
        const auto [bi, bj] = t.b_side.block_of(u);
        const auto& blk = t.b_side.block(bi, bj);
        const Vec x = blk.reps.row(u - blk.offset);
        for (std::size_t k = 1; k <= d; ++k) {
            const QuotientMap& src = t.cell[k - 1][bj - 1];
            const QuotientMap& dst = t.cell[k - 1][bi - 1];
            for (std::size_t s = 0; s < src.dim(); ++s) {
                const Vec img = dst.project(r.mul(src.lift_basis(s), x));
                for (std::size_t rr = 0; rr < img.size(); ++rr)
                    mat.at(t.offset[k - 1][bi - 1] + rr, t.offset[k - 1][bj - 1] + s) =
                        img[rr];
            }
        }
        actb.push_back(std::move(mat));
    }
    t.over_b = AModule(b, std::move(actb), t.dim);
    repmod::validate_module(t.over_b);

    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q)
            if (!(mul(t.over_a.action(p), t.over_b.action(q)) ==
                  mul(t.over_b.action(q), t.over_a.action(p))))
                throw ValidationError("the two actions on the carrier fail to commute");
    return t;
}

FaithfulCheck verify_faithful(const TiltingBimodule& t) {
    FaithfulCheck f;
    f.a_annihilator_dim = repmod::annihilator(t.over_a).dim();
    f.b_annihilator_dim = repmod::annihilator(t.over_b).dim();
    f.first_column_faithful = repmod::annihilator(t.column(1)).dim() == 0;
    return f;
}

CentralizerCheck verify_double_centralizer(const TiltingBimodule& t) {
    CentralizerCheck c;
    const std::size_t nn = t.dim * t.dim;

    std::vector<Vec> fa;
    for (const Matrix& m : repmod::hom_space(t.over_a, t.over_a)) fa.push_back(flatten(m));
    c.dim_end_over_a = fa.size();
    const Subspace cent_a = Subspace::span(nn, fa);
    std::vector<Vec> fb;
    for (std::size_t q = 0; q < t.over_b.algebra().dim(); ++q)
        fb.push_back(flatten(t.over_b.action(q)));
    const Subspace img_b = Subspace::span(nn, fb);
    c.dim_b_image = img_b.dim();
    c.b_equals_centralizer = cent_a == img_b;

    std::vector<Vec> ga;
    for (const Matrix& m : repmod::hom_space(t.over_b, t.over_b)) ga.push_back(flatten(m));
    c.dim_end_over_b = ga.size();
    const Subspace cent_b = Subspace::span(nn, ga);
    std::vector<Vec> gb;
    for (std::size_t p = 0; p < t.over_a.algebra().dim(); ++p)
        gb.push_back(flatten(t.over_a.action(p)));
    const Subspace img_a = Subspace::span(nn, gb);
    c.dim_a_image = img_a.dim();
    c.a_equals_centralizer = cent_b == img_a;
    return c;
}

TStructureCheck verify_T_structure(const TiltingBimodule& t) {
    TStructureCheck out;
    const ConstructedAlgebra& ca = t.a_side;
    const FDAlgebra& r = ca.system().parent();
    const std::size_t d = ca.d();
    const Subspace ae1 = construct::column_space(ca, 1);

    // Each T-column is the first column of A cut by the matching layer
    // ideal: w -> w * (unit class of cell (1,l)) kills exactly the cut and
    // fills the column.
    for (std::size_t l = 1; l <= d; ++l) {
        const Ideal cut = construct::layer_ideal(ca, d + 1 - l);
        Vec x0(t.dim, Scalar(0));
        const Vec q0 = t.cell[0][l - 1].project(r.unit());
        for (std::size_t s = 0; s < q0.size(); ++s) x0[t.offset[0][l - 1] + s] = q0[s];

        const Subspace expected_kernel = intersect(cut, ae1);
        bool killed = true;
        for (std::size_t rr = 0; rr < expected_kernel.basis().rows(); ++rr) {
            Vec img = mul_vec(t.over_a.act(expected_kernel.basis().row(rr)), x0);
            for (const Scalar& v : img)
                if (v != 0) killed = false;
        }
        std::vector<Vec> imgs;
        for (std::size_t rr = 0; rr < ae1.basis().rows(); ++rr)
            imgs.push_back(mul_vec(t.over_a.act(ae1.basis().row(rr)), x0));
        const Subspace image = Subspace::span(t.dim, imgs);
        out.column_flags.push_back(killed &&
                                   image.dim() == ae1.dim() - expected_kernel.dim() &&
                                   image == t.column_span(l));
    }

    for (std::size_t l = 1; l <= d; ++l) {
        const AModule col = t.column(l);
        std::vector<bool> per_level;
        for (std::size_t i = 1; i <= d; ++i)
            per_level.push_back(ext_surjective(ca, col, i));
        out.ext_surjections.push_back(std::move(per_level));
    }

    // Standard module at level k sits inside column d+1-k as the part
    // generated by the layer ideal one step up: e_k -> unit class of cell
    // (k, d+1-k).
    for (std::size_t k = 1; k <= d; ++k) {
        const std::size_t l = d + 1 - k;
        const Subspace aek = construct::column_space(ca, k);
        const Ideal jk = construct::layer_ideal(ca, k);
        const Ideal jkm1 = construct::layer_ideal(ca, k - 1);
        Vec x0(t.dim, Scalar(0));
        const Vec q0 = t.cell[k - 1][l - 1].project(r.unit());
        for (std::size_t s = 0; s < q0.size(); ++s) x0[t.offset[k - 1][l - 1] + s] = q0[s];

        const Subspace expected_kernel = intersect(jk, aek);
        bool killed = true;
        for (std::size_t rr = 0; rr < expected_kernel.basis().rows(); ++rr) {
            Vec img = mul_vec(t.over_a.act(expected_kernel.basis().row(rr)), x0);
            for (const Scalar& v : img)
                if (v != 0) killed = false;
        }
        std::vector<Vec> imgs;
        for (std::size_t rr = 0; rr < aek.basis().rows(); ++rr)
            imgs.push_back(mul_vec(t.over_a.act(aek.basis().row(rr)), x0));
        const Subspace image = Subspace::span(t.dim, imgs);

        std::vector<Vec> cut_column;
        const Subspace cspan = t.column_span(l);
        for (std::size_t rr = 0; rr < jkm1.basis().rows(); ++rr) {
            const Matrix act = t.over_a.act(jkm1.basis().row(rr));
            for (std::size_t s = 0; s < cspan.basis().rows(); ++s)
                cut_column.push_back(mul_vec(act, cspan.basis().row(s)));
        }
        const Subspace target = Subspace::span(t.dim, cut_column);
        out.delta_embeddings.push_back(killed &&
                                       image.dim() == aek.dim() - expected_kernel.dim() &&
                                       image == target);
    }
    return out;
}

}  // namespace qha::strat
