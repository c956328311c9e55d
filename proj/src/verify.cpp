// Machine certificates for the layered structure of a constructed algebra.
#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "qha/construct.hpp"
#include "qha/errors.hpp"

namespace qha::construct {

using exactla::Echelon;
using exactla::Matrix;
using exactla::QuotientMap;
using exactla::Scalar;
using exactla::mul_vec;
using exactla::rank;
using exactla::solve;
using exactla::unit_vec;

namespace {

// span of {w * m : w in the subspace}
Subspace mult_image(const FDAlgebra& a, const Subspace& w, const Vec& m) {
    Matrix rm = a.right_mult(m);
    std::vector<Vec> ims;
    for (std::size_t t = 0; t < w.dim(); ++t) ims.push_back(mul_vec(rm, w.basis().row(t)));
    return Subspace::span(a.dim(), ims);
}

// coordinates of v (assumed inside w) in the reduced basis of w
Vec coords_in(const Subspace& w, const Vec& v) {
    Vec c(w.dim(), Scalar(0));
    for (std::size_t s = 0; s < w.dim(); ++s) c[s] = v[w.pivots()[s]];
    return c;
}

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols(), Scalar(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
    return v;
}

// isomorphism certificate for e_i (A/J) e_i against R/I(i,i+1), J two-sided
bool corner_level_iso(const ConstructedAlgebra& ca, std::size_t i, const Ideal& j) {
    const FDAlgebra& a = ca.algebra();
    algcore::QuotientAlgebra qa = algcore::quotient_algebra(a, j);
    algcore::QuotientAlgebra level =
        algcore::quotient_algebra(ca.system().parent(), ca.system().at(i, i + 1));
    try {
        algcore::CornerAlgebra corner =
            algcore::corner_algebra(qa.algebra, qa.map.project(ca.idempotent(i)));
        Matrix phi(corner.algebra.dim(), level.algebra.dim());
        for (std::size_t t = 0; t < level.algebra.dim(); ++t) {
            Vec lift = level.map.lift(unit_vec(level.map.dim(), t));
            Vec cc = corner.coords(qa.map.project(ca.embed(i, i, ca.cell_coords(i, i, lift))));
            for (std::size_t s = 0; s < cc.size(); ++s) phi.at(s, t) = cc[s];
        }
        return algcore::check_algebra_morphism(level.algebra, corner.algebra, phi).ok();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::vector<LevelCheck> verify_layers(const ConstructedAlgebra& ca) {
    const FDAlgebra& a = ca.algebra();
    std::vector<LevelCheck> out;
    for (std::size_t i = 1; i <= ca.d(); ++i) {
        LevelCheck c;
        c.level = i;
        Ideal ji = layer_ideal(ca, i);
        Ideal jprev = layer_ideal(ca, i - 1);
        c.layer_formula = ji == algcore::ideal_from_generators(a, {ca.level_cut(i)});

        algcore::QuotientAlgebra qa = algcore::quotient_algebra(a, ji);
        std::vector<Vec> w;
        for (std::size_t t = 0; t < jprev.dim(); ++t)
            w.push_back(qa.map.project(jprev.basis().row(t)));
        AModule layer = repmod::submodule(repmod::regular_module(qa.algebra),
                                          Subspace::span(qa.algebra.dim(), w));
        c.layer_projective =
            repmod::is_projective(repmod::projective_covers(qa.algebra), layer);

        c.corner_matches = corner_level_iso(ca, i, ji);

        Ideal cut_ideal = algcore::ideal_from_generators(a, {ca.level_cut(i)});
        Ideal idem_ideal = algcore::ideal_from_generators(a, {ca.idempotent(i + 1)});
        // valid precisely for columns at or above the cut level
        c.parabolic_identity = true;
        for (std::size_t k = 1; k <= i; ++k)
            if (mult_image(a, cut_ideal, ca.idempotent(k)) !=
                mult_image(a, idem_ideal, ca.idempotent(k))) {
                c.parabolic_identity = false;
                break;
            }
        out.push_back(c);
    }
    return out;
}

PeelCheck verify_peel(const ConstructedAlgebra& ca) {
    PeelCheck c;
    const FDAlgebra& a = ca.algebra();
    const FDAlgebra& r = ca.system().parent();
    const std::size_t d = ca.d();

    Ideal target = layer_ideal(ca, d - 1);
    Subspace col = column_space(ca, d);
    std::vector<Vec> ims;
    bool inside = true;
    for (std::size_t j = 1; j <= d; ++j) {
        Vec u = ca.embed(d, j, ca.cell_coords(d, j, r.unit()));
        Matrix ru = a.right_mult(u);
        for (std::size_t t = 0; t < col.dim(); ++t) {
            Vec v = mul_vec(ru, col.basis().row(t));
            if (!target.contains(v)) inside = false;
            ims.push_back(v);
        }
    }
    c.bottom_free = inside && rank(Matrix::from_rows(ims, a.dim())) == d * col.dim() &&
                    d * col.dim() == target.dim();

    c.corner_quotient = corner_level_iso(ca, d, Subspace::zero(a.dim()));

    if (d >= 2) {
        try {
            ConstructedAlgebra small = build_algebra(systems::truncate(ca.system()));
            Ideal bottom = algcore::ideal_from_generators(a, {ca.idempotent(d)});
            algcore::QuotientAlgebra qa = algcore::quotient_algebra(a, bottom);
            Matrix phi(qa.algebra.dim(), small.dim());
            for (std::size_t u = 0; u < small.dim(); ++u) {
                auto [bi, bj] = small.block_of(u);
                Vec rep = small.block(bi, bj).reps.row(u - small.block(bi, bj).offset);
                Vec px = qa.map.project(ca.embed(bi, bj, ca.cell_coords(bi, bj, rep)));
                for (std::size_t s = 0; s < px.size(); ++s) phi.at(s, u) = px[s];
            }
            c.truncation_matches =
                algcore::check_algebra_morphism(small.algebra(), qa.algebra, phi).ok();
        } catch (const Error&) {
            c.truncation_matches = false;
        }
    }
    return c;
}

std::vector<SesCheck> verify_delta_resolutions(const ConstructedAlgebra& ca) {
    const FDAlgebra& a = ca.algebra();
    const FDAlgebra& r = ca.system().parent();
    std::vector<SesCheck> out;
    for (std::size_t k = 1; k <= ca.d(); ++k) {
        SesCheck c;
        c.level = k;
        Vec u = ca.embed(k + 1, k, ca.cell_coords(k + 1, k, r.unit()));
        Subspace colk = column_space(ca, k);
        Subspace colk1 = column_space(ca, k + 1);
        Matrix ru = a.right_mult(u);
        std::vector<Vec> ims;
        for (std::size_t t = 0; t < colk1.dim(); ++t)
            ims.push_back(mul_vec(ru, colk1.basis().row(t)));
        Subspace image = Subspace::span(a.dim(), ims);
        c.injective = image.dim() == colk1.dim();
        c.image_matches = image == mult_image(a, layer_ideal(ca, k), ca.idempotent(k));

        AModule colmod = column_module(ca, k);
        std::vector<Vec> incol;
        for (std::size_t t = 0; t < image.dim(); ++t)
            incol.push_back(coords_in(colk, image.basis().row(t)));
        AModule quot =
            repmod::quotient_module(colmod, Subspace::span(colk.dim(), incol));
        AModule delta = delta_module(ca, k);
        c.quotient_matches =
            quot.dim() == delta.dim() && repmod::is_isomorphic(quot, delta) == repmod::Iso::Yes;
        out.push_back(c);
    }
    return out;
}

TowerCheck verify_radical_tower(const FDAlgebra& r) {
    TowerCheck check;
    IdealSystem sys = systems::jacobson_system(r);
    ConstructedAlgebra ca(sys);
    const std::size_t d = sys.d();
    check.dim_built = ca.dim();

    // Tower of radical-power quotients, viewed over the opposite algebra so
    // that left multiplications are module maps. Radical powers agree as
    // subspaces on both sides.
    FDAlgebra rop = algcore::opposite(r);
    AModule reg = repmod::regular_module(rop);
    std::vector<Ideal> powers = algcore::radical_series(r);
    auto power = [&](std::size_t e) {
        return e < powers.size() ? powers[e] : Subspace::zero(r.dim());
    };
    std::vector<QuotientMap> maps;
    std::vector<std::size_t> offs;
    AModule m;
    std::size_t total = 0;
    for (std::size_t j = 1; j <= d; ++j) {
        Subspace w = power(d + 1 - j);
        AModule comp = repmod::quotient_module(reg, w);
        m = j == 1 ? comp : repmod::direct_sum(m, comp);
        offs.push_back(total);
        total += comp.dim();
        maps.emplace_back(w);
    }

    repmod::EndAlgebra end = repmod::endomorphism_algebra(m);
    check.endomorphisms = end.algebra;
    check.dim_endo = end.algebra.dim();

    const std::size_t dm = m.dim(), h = end.basis.size();
    Matrix cols(dm * dm, h);
    for (std::size_t k = 0; k < h; ++k) {
        Vec fk = flatten(end.basis[k]);
        for (std::size_t t = 0; t < fk.size(); ++t) cols.at(t, k) = fk[t];
    }

    Matrix phi(h, ca.dim());
    for (std::size_t u = 0; u < ca.dim(); ++u) {
        auto [bi, bj] = ca.block_of(u);
        Vec x = ca.block(bi, bj).reps.row(u - ca.block(bi, bj).offset);
        Matrix f(dm, dm);
        for (std::size_t cc = 0; cc < maps[bj - 1].dim(); ++cc) {
            Vec img = maps[bi - 1].project(r.mul(x, maps[bj - 1].lift_basis(cc)));
            for (std::size_t rr = 0; rr < img.size(); ++rr)
                f.at(offs[bi - 1] + rr, offs[bj - 1] + cc) = img[rr];
        }
        auto coords = solve(cols, flatten(f));
        if (!coords) return check;  // left-multiplication map escaped the hom space
        for (std::size_t s = 0; s < h; ++s) phi.at(s, u) = (*coords)[s];
    }
    check.morphism = algcore::check_algebra_morphism(ca.algebra(), end.algebra, phi);
    return check;
}

}  // namespace qha::construct
