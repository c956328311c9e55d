#include "qha/strat.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qha/errors.hpp"

namespace qha::strat {

using exactla::kernel;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Subspace;
using exactla::transpose;
using exactla::unit_vec;
using exactla::Vec;
using exactla::vec_mul;

namespace {

// Coordinates of v relative to the reduced basis of w; v must lie in w.
Vec coords_in(const Subspace& w, const Vec& v) {
    Vec c(w.dim(), Scalar(0));
    for (std::size_t s = 0; s < w.dim(); ++s) c[s] = v[w.pivots()[s]];
    return c;
}

bool lex_less(const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return x.size() < y.size();
}

std::size_t first_support(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

// J * M inside M's coordinates: the span of the columns of every action
// matrix of a basis element of the ideal.
Subspace ideal_image(const AModule& m, const Ideal& j) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < j.basis().rows(); ++r) {
        const Matrix cols = transpose(m.act(j.basis().row(r)));
        for (std::size_t s = 0; s < cols.rows(); ++s) rows.push_back(cols.row(s));
    }
    return Subspace::span(m.dim(), rows);
}

std::string level_name(std::size_t level, const std::string& block) {
    return "(" + std::to_string(level) + "," + block + ")";
}

}  // namespace

BlockDecomposition block_decomposition(const FDAlgebra& r) {
    BlockDecomposition bd;
    const Ideal rad = algcore::jacobson_radical(r);
    bd.quotient = algcore::quotient_algebra(r, rad);
    const FDAlgebra& bar = bd.quotient.algebra;
    const std::size_t n = bar.dim();
    if (n == 0) return bd;

    // Center of the semisimple quotient, then its primitive idempotents.
    Matrix eqs(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix diff = bar.left_mult(unit_vec(n, k)) - bar.right_mult(unit_vec(n, k));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) eqs.at(k * n + a, b) = diff.at(a, b);
    }
    const Subspace z = Subspace::span(n, kernel(eqs));
    const std::size_t m = z.dim();
    std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            table[s][t] = coords_in(z, bar.mul(z.basis().row(s), z.basis().row(t)));
    const FDAlgebra center(table, coords_in(z, bar.unit()));

    std::vector<Vec> lifted;
    for (const Vec& p : algcore::primitive_orthogonal_idempotents(center))
        lifted.push_back(bd.quotient.map.lift(vec_mul(p, z.basis())));
    std::sort(lifted.begin(), lifted.end(), [](const Vec& x, const Vec& y) {
        const std::size_t sx = first_support(x), sy = first_support(y);
        if (sx != sy) return sx < sy;
        return lex_less(x, y);
    });
    for (const Vec& v : lifted) bd.names.push_back(r.label(first_support(v)));
    bd.idempotents = std::move(lifted);
    return bd;
}

bool label_below(const Label& x, const Label& y) { return x.level < y.level; }

std::vector<Label> label_poset(const IdealSystem& s, const BlockDecomposition& bd) {
    std::vector<Label> out;
    for (std::size_t i = 1; i <= s.d(); ++i) {
        const Ideal& lvl = s.at(i, i + 1);
        for (std::size_t g = 0; g < bd.idempotents.size(); ++g)
            if (!lvl.contains(bd.idempotents[g]))
                out.push_back({i, g, level_name(i, bd.names[g])});
    }
    return out;
}

LabelledSimples simples_with_labels(const ConstructedAlgebra& ca) {
    LabelledSimples ls;
    ls.blocks = block_decomposition(ca.system().parent());
    ls.labels = label_poset(ca.system(), ls.blocks);
    if (ca.dim() == 0) {
        if (!ls.labels.empty()) throw Error("labels assigned to an empty algebra");
        return ls;
    }

    ls.covers = repmod::projective_covers(ca.algebra());
    const std::size_t d = ca.d();
    std::vector<Ideal> layer(d + 1);
    for (std::size_t j = 0; j <= d; ++j) layer[j] = construct::layer_ideal(ca, j);

    const std::size_t nc = ls.covers.classes.size();
    if (nc != ls.labels.size())
        throw Error("found " + std::to_string(nc) + " simple classes for " +
                    std::to_string(ls.labels.size()) + " labels");

    ls.cls.assign(nc, nc);
    for (std::size_t c = 0; c < nc; ++c) {
        const AModule& simple = ls.covers.simples[c];
        // Level: the first layer ideal annihilating the simple.
        std::size_t lev = 0;
        for (std::size_t i = 1; i <= d && lev == 0; ++i) {
            bool kills = true;
            for (std::size_t rr = 0; rr < layer[i].basis().rows() && kills; ++rr)
                if (!simple.act(layer[i].basis().row(rr)).is_zero()) kills = false;
            if (kills) lev = i;
        }
        if (lev == 0) throw Error("a simple survives every layer cut");
        // Block: the unique central idempotent still acting through the
        // diagonal cell at that level.
        std::size_t blk = ls.blocks.idempotents.size();
        for (std::size_t g = 0; g < ls.blocks.idempotents.size(); ++g) {
            const Vec za =
                ca.embed(lev, lev, ca.cell_coords(lev, lev, ls.blocks.idempotents[g]));
            if (simple.act(za).is_zero()) continue;
            if (blk != ls.blocks.idempotents.size())
                throw Error("two blocks act on one simple");
            blk = g;
        }
        if (blk == ls.blocks.idempotents.size()) throw Error("no block acts on a simple");

        bool placed = false;
        for (std::size_t k = 0; k < ls.labels.size() && !placed; ++k) {
            if (ls.labels[k].level != lev || ls.labels[k].block != blk) continue;
            if (ls.cls[k] != nc) throw Error("two simples share the label " + ls.labels[k].name);
            ls.cls[k] = c;
            placed = true;
        }
        if (!placed) throw Error("a simple matches no label at level " + std::to_string(lev));
    }
    for (std::size_t k = 0; k < ls.labels.size(); ++k) {
        if (ls.cls[k] == nc) throw Error("no simple carries the label " + ls.labels[k].name);
        ls.projectives.push_back(ls.covers.projectives[ls.cls[k]]);
        ls.simples.push_back(ls.covers.simples[ls.cls[k]]);
    }
    return ls;
}

StratData strat_data(const ConstructedAlgebra& ca) {
    StratData sd;
    sd.labelled = simples_with_labels(ca);
    sd.layer.resize(ca.d() + 1);
    for (std::size_t j = 0; j <= ca.d(); ++j) sd.layer[j] = construct::layer_ideal(ca, j);
    for (std::size_t k = 0; k < sd.labelled.labels.size(); ++k) {
        const AModule& p = sd.labelled.projectives[k];
        const Subspace w = ideal_image(p, sd.layer[sd.labelled.labels[k].level]);
        sd.deltas.push_back(repmod::quotient_module(p, w));
    }
    return sd;
}

DeltaFiltration delta_layer_check(const ConstructedAlgebra& ca, const StratData& sd,
                                  const AModule& m) {
    DeltaFiltration out;
    const std::size_t n = sd.labelled.labels.size();
    out.multiplicities.assign(n, 0);
    Subspace prev = Subspace::full(m.dim());
    for (std::size_t j = 1; j <= ca.d(); ++j) {
        const Subspace cur = ideal_image(m, sd.layer[j]);
        const AModule sub = repmod::submodule(m, prev);
        std::vector<Vec> inside;
        for (std::size_t rr = 0; rr < cur.basis().rows(); ++rr)
            inside.push_back(coords_in(prev, cur.basis().row(rr)));
        const AModule slice =
            repmod::quotient_module(sub, Subspace::span(sub.dim(), inside));
        const AModule top = repmod::top_module(slice);

        std::size_t predicted = 0;
        bool off_level = false;
        for (std::size_t k = 0; k < n && !off_level; ++k) {
            const std::size_t cm =
                repmod::composition_multiplicity(sd.labelled.covers, top, sd.labelled.cls[k]);
            if (cm == 0) continue;
            if (sd.labelled.labels[k].level != j) {
                off_level = true;
                break;
            }
            out.multiplicities[k] = cm;
            predicted += cm * sd.deltas[k].dim();
        }
        if (off_level || predicted != slice.dim()) {
            out.filtered = false;
            out.failing_layer = j;
            out.multiplicities.assign(n, 0);
            return out;
        }
        prev = cur;
    }
    out.filtered = true;
    return out;
}

QHCertificate verify_quasi_hereditary(const ConstructedAlgebra& ca) {
    if (!systems::is_semisimple_system(ca.system()))
        throw ValidationError(
            "a level quotient is not semisimple; only the stratified certificates apply");
    const StratData sd = strat_data(ca);
    QHCertificate cert;
    cert.labels = sd.labelled.labels;
    const std::size_t n = cert.labels.size();
    const std::size_t d = ca.d();

    cert.delta_simple_mults.assign(n, std::vector<std::size_t>(n, 0));
    cert.diagonal_ones = true;
    cert.lower_levels_only = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t mu = 0; mu < n; ++mu) {
            const std::size_t cm = repmod::composition_multiplicity(
                sd.labelled.covers, sd.deltas[k], sd.labelled.cls[mu]);
            cert.delta_simple_mults[k][mu] = cm;
            if (mu == k && cm != 1) cert.diagonal_ones = false;
            if (mu != k && cert.labels[mu].level >= cert.labels[k].level && cm != 0)
                cert.lower_levels_only = false;
        }

    cert.kernels_filtered = true;
    cert.kernels_projective = true;
    for (std::size_t k = 0; k < n; ++k) {
        const AModule& p = sd.labelled.projectives[k];
        const Subspace w = ideal_image(p, sd.layer[cert.labels[k].level]);
        const AModule ker = repmod::submodule(p, w);
        DeltaFiltration f = delta_layer_check(ca, sd, ker);
        bool above = f.filtered;
        if (f.filtered)
            for (std::size_t nu = 0; nu < n; ++nu)
                if (f.multiplicities[nu] > 0 && cert.labels[nu].level < cert.labels[k].level)
                    above = false;
        cert.kernel_filtrations.push_back(std::move(f));
        if (!above) cert.kernels_filtered = false;
        if (!repmod::is_projective(sd.labelled.covers, ker)) cert.kernels_projective = false;
    }

    for (std::size_t lev = 1; lev <= d; ++lev) {
        std::vector<std::size_t> here;
        for (std::size_t k = 0; k < n; ++k)
            if (cert.labels[k].level == lev) here.push_back(k);
        const AModule dm = construct::delta_module(ca, lev);
        bool good = true;
        if (dm.dim() == 0) {
            good = here.empty();
        } else {
            std::vector<bool> seen(here.size(), false);
            for (const auto& part : repmod::indecomposable_summands(dm)) {
                std::size_t matches = 0;
                for (std::size_t h = 0; h < here.size(); ++h)
                    if (repmod::is_isomorphic(part.module, sd.deltas[here[h]]) ==
                        repmod::Iso::Yes) {
                        seen[h] = true;
                        ++matches;
                    }
                if (matches != 1) good = false;
            }
            for (bool s : seen) good = good && s;
        }
        cert.layer_sums.push_back(good);
    }

    for (const Label& l : cert.labels) {
        if (l.level == 1) ++cert.lambda_first;
        if (l.level == d) ++cert.lambda_last;
    }
    return cert;
}

}  // namespace qha::strat
