#include <string>
#include <utility>
#include <vector>

#include "qha/errors.hpp"
#include "qha/strat.hpp"

namespace qha::strat {

using exactla::Matrix;
using exactla::mul;
using exactla::mul_vec;
using exactla::rank;
using exactla::Subspace;
using exactla::transpose;
using exactla::Vec;

namespace {

bool ext_surjective(const ConstructedAlgebra& ca, const AModule& m, std::size_t i) {
    const Vec unit = ca.system().parent().unit();
    const Vec u = ca.embed(i + 1, i, ca.cell_coords(i + 1, i, unit));
    return rank(m.act(u)) == rank(m.act(ca.idempotent(i + 1)));
}

bool ext_vanishing_all(const ConstructedAlgebra& ca, const AModule& m) {
    for (std::size_t i = 1; i <= ca.d(); ++i)
        if (!ext_surjective(ca, m, i)) return false;
    return true;
}

}  // namespace

RingelReport ringel_dual_report(const ConstructedAlgebra& ca) {
    if (!systems::is_semisimple_system(ca.system()))
        throw ValidationError(
            "a level quotient is not semisimple; only the stratified certificates apply");
    RingelReport rep;
    const StratData sd = strat_data(ca);
    rep.labels = sd.labelled.labels;
    const std::size_t d = ca.d();
    for (const Label& l : rep.labels) {
        if (l.level == 1) ++rep.lambda_first;
        if (l.level == d) ++rep.lambda_last;
    }

    TiltingBimodule t = build_T(ca);
    std::vector<AModule> cols;
    for (std::size_t l = 1; l <= d; ++l) cols.push_back(t.column(l));

    rep.t_delta_filtered = true;
    rep.ext_vanishing = true;
    for (std::size_t l = 1; l <= d; ++l) {
        DeltaFiltration f = delta_layer_check(ca, sd, cols[l - 1]);
        if (!f.filtered) rep.t_delta_filtered = false;
        rep.column_filtrations.push_back(std::move(f));
        if (!ext_vanishing_all(ca, cols[l - 1])) rep.ext_vanishing = false;
    }

    // Column d+1-i must realize every level-i label as the top filtration
    // factor of one of its indecomposable summands, with multiplicity one.
    rep.summands_tilting = true;
    rep.levels_covered = true;
    for (std::size_t i = 1; i <= d; ++i) {
        const std::size_t l = d + 1 - i;
        std::vector<bool> seen(rep.labels.size(), false);
        for (const auto& part : repmod::indecomposable_summands(cols[l - 1])) {
            TiltingSummand s;
            s.column = l;
            s.dim = part.module.dim();
            s.filtration = delta_layer_check(ca, sd, part.module);
            bool unique_top = false;
            if (s.filtration.filtered) {
                std::size_t top_level = 0, hits = 0;
                for (std::size_t k = 0; k < rep.labels.size(); ++k)
                    if (s.filtration.multiplicities[k] > 0 &&
                        rep.labels[k].level > top_level)
                        top_level = rep.labels[k].level;
                for (std::size_t k = 0; k < rep.labels.size(); ++k)
                    if (s.filtration.multiplicities[k] > 0 &&
                        rep.labels[k].level == top_level) {
                        s.label = k;
                        ++hits;
                    }
                unique_top = hits == 1 && s.filtration.multiplicities[s.label] == 1;
                if (unique_top) seen[s.label] = true;
            }
            s.tilting = s.filtration.filtered && unique_top &&
                        ext_vanishing_all(ca, part.module);
            if (!s.tilting) rep.summands_tilting = false;
            rep.summands.push_back(std::move(s));
        }
        for (std::size_t k = 0; k < rep.labels.size(); ++k)
            if (rep.labels[k].level == i && !seen[k]) rep.levels_covered = false;
    }

    rep.centralizer = verify_double_centralizer(t);
    rep.dim_end = rep.centralizer.dim_end_over_a;
    rep.dim_dual = t.b_side.dim();

    if (ca.dim() == 0) {
        rep.basic_dims_match = rep.dim_dual == 0;
        rep.quiver_match = rep.dim_dual == 0;
        return rep;
    }
    const FDAlgebra end_op = algcore::opposite(repmod::endomorphism_algebra(t.over_a).algebra);
    const FDAlgebra dual_op = algcore::opposite(t.b_side.algebra());
    rep.basic_dims_match = algcore::basic_algebra(end_op).algebra.dim() ==
                           algcore::basic_algebra(dual_op).algebra.dim();
    rep.end_quiver = algcore::gabriel_quiver(end_op);
    rep.dual_quiver = algcore::gabriel_quiver(dual_op);
    rep.quiver_match = algcore::same_quiver_shape(rep.end_quiver, rep.dual_quiver);
    return rep;
}

StratifiedReport verify_stratified(const ConstructedAlgebra& ca) {
    StratifiedReport rep;
    rep.levels = construct::verify_layers(ca);
    rep.peel = construct::verify_peel(ca);
    const TiltingBimodule t = build_T(ca);
    rep.faithful = verify_faithful(t);
    rep.centralizer = verify_double_centralizer(t);
    return rep;
}

IdealSystem transport_system(const IdealSystem& src, const FDAlgebra& target,
                             const Matrix& phi) {
    if (!algcore::check_algebra_morphism(src.parent(), target, phi).ok())
        throw ValidationError("transport needs a verified algebra isomorphism");
    const std::size_t n = src.d() + 1;
    std::vector<std::vector<Ideal>> grid(n, std::vector<Ideal>(n));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            grid[i - 1][j - 1] = Subspace::span(
                target.dim(), mul(src.at(i, j).basis(), transpose(phi)));
    return IdealSystem(target, src.d(), grid);
}

algcore::MorphismCheck transported_equivalence(const ConstructedAlgebra& src,
                                               const ConstructedAlgebra& tgt,
                                               const Matrix& phi) {
    try {
        Matrix big(tgt.dim(), src.dim());
        for (std::size_t u = 0; u < src.dim(); ++u) {
            const auto [i, j] = src.block_of(u);
            const auto& blk = src.block(i, j);
            const Vec moved = mul_vec(phi, blk.reps.row(u - blk.offset));
            const Vec img = tgt.embed(i, j, tgt.cell_coords(i, j, moved));
            for (std::size_t rr = 0; rr < img.size(); ++rr) big.at(rr, u) = img[rr];
        }
        return algcore::check_algebra_morphism(src.algebra(), tgt.algebra(), big);
    } catch (const Error&) {
        return {};
    }
}

}  // namespace qha::strat
