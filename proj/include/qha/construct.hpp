// Builds the layered algebra A attached to an ideal grid over R: one block
// per grid cell, cell (i,j) carrying I(i,j)/I(i,d+1), with multiplication
// induced from R down the matching inner index. Also the layer ideals, the
// column projectives, the standard modules with their two-step resolutions,
// and the machine checks that certify the layered structure.
#ifndef QHA_CONSTRUCT_HPP
#define QHA_CONSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/module.hpp"
#include "qha/systems.hpp"

namespace qha::construct {

using algcore::FDAlgebra;
using algcore::Ideal;
using exactla::Matrix;
using exactla::Subspace;
using exactla::Vec;
using repmod::AModule;
using systems::IdealSystem;

class ConstructedAlgebra {
public:
    struct Block {
        std::size_t offset = 0;  // first global coordinate of this block
        std::size_t size = 0;
        Matrix reps;  // size x dim R, canonical coset representatives
    };

    ConstructedAlgebra() = default;
    explicit ConstructedAlgebra(const IdealSystem& sys);

    const FDAlgebra& algebra() const { return a_; }
    const IdealSystem& system() const { return sys_; }
    std::size_t d() const { return sys_.d(); }
    std::size_t dim() const { return a_.dim(); }

    // Cell indices run 1..d+1 in both directions; cells in row or column
    // d+1 are always zero.
    const Block& block(std::size_t i, std::size_t j) const;
    std::pair<std::size_t, std::size_t> block_of(std::size_t coord) const;

    // Coset coordinates of r inside cell (i,j); r must lie in I(i,j).
    Vec cell_coords(std::size_t i, std::size_t j, const Vec& r) const;
    // Canonical representative in R of a cell coordinate vector.
    Vec representative(std::size_t i, std::size_t j, const Vec& coords) const;
    Vec embed(std::size_t i, std::size_t j, const Vec& coords) const;
    Vec cell_part(std::size_t i, std::size_t j, const Vec& a_elt) const;

    // The class of 1 in cell (k,k); zero for k = d+1.
    Vec idempotent(std::size_t k) const;
    // f_j = sum of the idempotents below level j; f_0 is the unit.
    Vec level_cut(std::size_t j) const;

private:
    IdealSystem sys_;
    FDAlgebra a_;
    std::size_t adim_ = 0;
    std::vector<std::vector<Block>> blocks_;          // [i-1][j-1]
    std::vector<exactla::QuotientMap> row_maps_;      // mod I(i,d+1), per row
    std::vector<Subspace> row_images_;                // flattened (i,j): image of I(i,j)
    const Subspace& row_image(std::size_t i, std::size_t j) const;
};

ConstructedAlgebra build_algebra(const IdealSystem& sys);

// J_j generated by the level cut f_j, realized blockwise as
// I(i, max(l, j+1)) / I(i, d+1); j runs 0..d+1 with J_0 = A and J_d = 0.
Ideal layer_ideal(const ConstructedAlgebra& ca, std::size_t j);

// A e_k, the k-th column, as a subspace and as a module.
Subspace column_space(const ConstructedAlgebra& ca, std::size_t k);
AModule column_module(const ConstructedAlgebra& ca, std::size_t k);

// Delta_k = (A / J_k) e_k as a left A-module.
AModule delta_module(const ConstructedAlgebra& ca, std::size_t k);

// Per-level structure certificate, levels i = 1..d:
//   layer_formula      blockwise J_i equals the saturated ideal of f_i
//   layer_projective   J_{i-1}/J_i is projective over A/J_i
//   corner_matches     e_i (A/J_i) e_i is isomorphic to R/I(i,i+1) by the
//                      explicit coset map
//   parabolic_identity A f_i A e_k = A e_{i+1} A e_k for every column k <= i
struct LevelCheck {
    std::size_t level = 0;
    bool layer_formula = false;
    bool layer_projective = false;
    bool corner_matches = false;
    bool parabolic_identity = false;
    bool ok() const {
        return layer_formula && layer_projective && corner_matches && parabolic_identity;
    }
};

std::vector<LevelCheck> verify_layers(const ConstructedAlgebra& ca);

// Structure at the bottom level:
//   bottom_free         J_{d-1} is a direct sum of d copies of A e_d, glued
//                       by right multiplication with the unit cosets of row d
//   corner_quotient     e_d A e_d is isomorphic to R/I(d,d+1)
//   truncation_matches  A/(A e_d A) is isomorphic to the algebra of the
//                       truncated grid (absent when d = 1)
struct PeelCheck {
    bool bottom_free = false;
    bool corner_quotient = false;
    std::optional<bool> truncation_matches;
    bool ok() const {
        return bottom_free && corner_quotient && truncation_matches.value_or(true);
    }
};

PeelCheck verify_peel(const ConstructedAlgebra& ca);

// 0 -> A e_{k+1} -> A e_k -> Delta_k -> 0 with the middle map given by right
// multiplication with the unit coset of cell (k+1, k); k runs 1..d.
struct SesCheck {
    std::size_t level = 0;
    bool injective = false;
    bool image_matches = false;
    bool quotient_matches = false;
    bool ok() const { return injective && image_matches && quotient_matches; }
};

std::vector<SesCheck> verify_delta_resolutions(const ConstructedAlgebra& ca);

// Endomorphism algebra of the tower of radical-power quotients of R (as
// maps of right modules, written on the left), compared against the algebra
// built from the radical-power grid via the explicit cell map.
struct TowerCheck {
    FDAlgebra endomorphisms;
    std::size_t dim_endo = 0;
    std::size_t dim_built = 0;
    algcore::MorphismCheck morphism;
    bool ok() const { return morphism.ok(); }
};

TowerCheck verify_radical_tower(const FDAlgebra& r);

}  // namespace qha::construct

#endif
