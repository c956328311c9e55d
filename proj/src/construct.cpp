#include "qha/construct.hpp"

#include <string>
#include <utility>

#include "qha/errors.hpp"

namespace qha::construct {

using exactla::QuotientMap;
using exactla::Scalar;
using exactla::mul_vec;
using exactla::unit_vec;
using exactla::vec_mul;
using exactla::zero_vec;

const Subspace& ConstructedAlgebra::row_image(std::size_t i, std::size_t j) const {
    return row_images_[(i - 1) * sys_.size() + (j - 1)];
}

ConstructedAlgebra::ConstructedAlgebra(const IdealSystem& sys) : sys_(sys) {
    systems::validate_system(sys_);
    const FDAlgebra& r = sys_.parent();
    const std::size_t n = sys_.size();

    row_maps_.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) row_maps_.emplace_back(sys_.at(i, n));

    blocks_.assign(n, std::vector<Block>(n));
    row_images_.resize(n * n);
    std::size_t offset = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const QuotientMap& q = row_maps_[i - 1];
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<Vec> proj;
            for (std::size_t t = 0; t < sys_.at(i, j).dim(); ++t)
                proj.push_back(q.project(sys_.at(i, j).basis().row(t)));
            Subspace img = Subspace::span(q.dim(), proj);
            Block b;
            b.offset = offset;
            b.size = img.dim();
            b.reps = Matrix(img.dim(), r.dim());
            for (std::size_t t = 0; t < img.dim(); ++t)
                b.reps.set_row(t, q.lift(img.basis().row(t)));
            offset += b.size;
            row_images_[(i - 1) * n + (j - 1)] = std::move(img);
            blocks_[i - 1][j - 1] = std::move(b);
        }
    }
    adim_ = offset;
    const std::size_t adim = adim_;

    std::vector<std::string> labels(adim);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Block& b = blocks_[i - 1][j - 1];
            for (std::size_t t = 0; t < b.size; ++t)
                labels[b.offset + t] = "x(" + std::to_string(i) + "," + std::to_string(j) +
                                       ")" + std::to_string(t);
        }

    // Cell (i,j) times cell (k,l) vanishes unless j = k and otherwise lands
    // in cell (i,l) through the product of representatives.
    std::vector<std::vector<Vec>> table(adim, std::vector<Vec>(adim, zero_vec(adim)));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Block& bl = blocks_[i - 1][j - 1];
            for (std::size_t l = 1; l <= n; ++l) {
                const Block& br = blocks_[j - 1][l - 1];
                for (std::size_t t = 0; t < bl.size; ++t)
                    for (std::size_t s = 0; s < br.size; ++s) {
                        Vec prod = r.mul(bl.reps.row(t), br.reps.row(s));
                        table[bl.offset + t][br.offset + s] =
                            embed(i, l, cell_coords(i, l, prod));
                    }
            }
        }

    Vec unit = zero_vec(adim);
    for (std::size_t k = 1; k <= n; ++k) {
        Vec ek = embed(k, k, cell_coords(k, k, r.unit()));
        for (std::size_t t = 0; t < adim; ++t) unit[t] = unit[t] + ek[t];
    }

    a_ = FDAlgebra(std::move(table), std::move(unit), std::move(labels));
}

const ConstructedAlgebra::Block& ConstructedAlgebra::block(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > sys_.size() || j > sys_.size())
        throw DimensionMismatch("cell index out of range");
    return blocks_[i - 1][j - 1];
}

std::pair<std::size_t, std::size_t> ConstructedAlgebra::block_of(std::size_t coord) const {
    const std::size_t n = sys_.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Block& b = blocks_[i - 1][j - 1];
            if (coord >= b.offset && coord < b.offset + b.size) return {i, j};
        }
    throw DimensionMismatch("coordinate out of range");
}

Vec ConstructedAlgebra::cell_coords(std::size_t i, std::size_t j, const Vec& r) const {
    block(i, j);  // bounds check
    const QuotientMap& q = row_maps_[i - 1];
    Vec p = q.project(r);
    const Subspace& img = row_image(i, j);
    if (!img.contains(p))
        throw ValidationError("element does not lie in the (" + std::to_string(i) + "," +
                              std::to_string(j) + ") ideal");
    Vec c(img.dim(), Scalar(0));
    for (std::size_t t = 0; t < img.dim(); ++t) c[t] = p[img.pivots()[t]];
    return c;
}

Vec ConstructedAlgebra::representative(std::size_t i, std::size_t j, const Vec& coords) const {
    const Block& b = block(i, j);
    if (coords.size() != b.size) throw DimensionMismatch("cell coordinate size mismatch");
    return vec_mul(coords, b.reps);
}

Vec ConstructedAlgebra::embed(std::size_t i, std::size_t j, const Vec& coords) const {
    const Block& b = block(i, j);
    if (coords.size() != b.size) throw DimensionMismatch("cell coordinate size mismatch");
    Vec v = zero_vec(adim_);
    for (std::size_t t = 0; t < b.size; ++t) v[b.offset + t] = coords[t];
    return v;
}

Vec ConstructedAlgebra::cell_part(std::size_t i, std::size_t j, const Vec& a_elt) const {
    const Block& b = block(i, j);
    if (a_elt.size() != adim_) throw DimensionMismatch("element size does not match the algebra");
    Vec v(b.size, Scalar(0));
    for (std::size_t t = 0; t < b.size; ++t) v[t] = a_elt[b.offset + t];
    return v;
}

Vec ConstructedAlgebra::idempotent(std::size_t k) const {
    return embed(k, k, cell_coords(k, k, sys_.parent().unit()));
}

Vec ConstructedAlgebra::level_cut(std::size_t j) const {
    Vec v = zero_vec(adim_);
    for (std::size_t k = j + 1; k <= sys_.size(); ++k) {
        Vec ek = idempotent(k);
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = v[t] + ek[t];
    }
    return v;
}

ConstructedAlgebra build_algebra(const IdealSystem& sys) { return ConstructedAlgebra(sys); }

Ideal layer_ideal(const ConstructedAlgebra& ca, std::size_t j) {
    const std::size_t n = ca.d() + 1;
    std::vector<Vec> gens;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t l = 1; l <= n; ++l) {
            std::size_t col = std::max(l, j + 1);
            if (col > n) continue;
            const Ideal& src = ca.system().at(i, col);
            for (std::size_t t = 0; t < src.dim(); ++t)
                gens.push_back(ca.embed(i, l, ca.cell_coords(i, l, src.basis().row(t))));
        }
    return Subspace::span(ca.dim(), gens);
}

Subspace column_space(const ConstructedAlgebra& ca, std::size_t k) {
    std::vector<Vec> gens;
    for (std::size_t i = 1; i <= ca.d() + 1; ++i) {
        const auto& b = ca.block(i, k);
        for (std::size_t t = 0; t < b.size; ++t) gens.push_back(unit_vec(ca.dim(), b.offset + t));
    }
    return Subspace::span(ca.dim(), gens);
}

AModule column_module(const ConstructedAlgebra& ca, std::size_t k) {
    return repmod::submodule(repmod::regular_module(ca.algebra()), column_space(ca, k));
}

AModule delta_module(const ConstructedAlgebra& ca, std::size_t k) {
    Ideal jk = layer_ideal(ca, k);
    AModule reg = repmod::regular_module(ca.algebra());
    AModule q = repmod::quotient_module(reg, jk);
    QuotientMap qm(jk);
    Subspace gen = repmod::spanned_submodule(q, {qm.project(ca.idempotent(k))});
    return repmod::submodule(q, gen);
}

}  // namespace qha::construct
