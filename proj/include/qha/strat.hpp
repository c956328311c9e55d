// Layered-structure certification on top of the constructed algebra: simple
// labels graded by level, standard modules, the quasi-hereditary axioms, the
// bimodule T carrying commuting actions of the algebra and of its dual-grid
// partner, faithfulness, the double centralizer, and the comparison of
// End(T) with the dual-grid algebra down to basic quiver data.
#ifndef QHA_STRAT_HPP
#define QHA_STRAT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/construct.hpp"
#include "qha/module.hpp"
#include "qha/systems.hpp"

namespace qha::strat {

using algcore::FDAlgebra;
using algcore::Ideal;
using construct::ConstructedAlgebra;
using exactla::Matrix;
using exactla::Subspace;
using exactla::Vec;
using repmod::AModule;
using systems::IdealSystem;

// Blocks of the semisimple quotient R/J(R): the central primitive
// idempotents, lifted to R coordinates and sorted by smallest supporting
// basis index (ties broken lexicographically). Names come from the parent
// basis label at that index.
struct BlockDecomposition {
    algcore::QuotientAlgebra quotient;  // R / J(R)
    std::vector<Vec> idempotents;       // lifted central primitive idempotents
    std::vector<std::string> names;
};

BlockDecomposition block_decomposition(const FDAlgebra& r);

// A simple label (level, block): the block survives in the level quotient
// R/I(level, level+1). Order is by level alone; same-level labels are
// incomparable.
struct Label {
    std::size_t level = 0;  // 1..d
    std::size_t block = 0;  // index into BlockDecomposition
    std::string name;       // "(level,block-name)"
};

bool label_below(const Label& x, const Label& y);  // x < y

// All labels of a semisimple grid, sorted by (level, block).
std::vector<Label> label_poset(const IdealSystem& s, const BlockDecomposition& bd);

// Simple modules of the constructed algebra matched to labels: the level of
// a simple is the first layer ideal annihilating it, the block is the one
// whose central idempotent survives on it through the diagonal cell.
struct LabelledSimples {
    BlockDecomposition blocks;
    std::vector<Label> labels;
    repmod::ProjectiveData covers;
    std::vector<std::size_t> cls;     // label index -> cover class
    std::vector<AModule> projectives; // aligned with labels
    std::vector<AModule> simples;
};

LabelledSimples simples_with_labels(const ConstructedAlgebra& ca);

// Labels plus the standard modules delta(k) = P(k) / J_level P(k) and the
// cached layer ideals J_0..J_d.
struct StratData {
    LabelledSimples labelled;
    std::vector<AModule> deltas;
    std::vector<Ideal> layer;
};

StratData strat_data(const ConstructedAlgebra& ca);

// Layer criterion for delta-filtered modules: every slice J_{j-1}m / J_j m
// must be projective over A/J_j with top concentrated at level j. On success
// multiplicities[k] = (m : delta(k)).
struct DeltaFiltration {
    bool filtered = false;
    std::size_t failing_layer = 0;  // 1..d when not filtered
    std::vector<std::size_t> multiplicities;
};

DeltaFiltration delta_layer_check(const ConstructedAlgebra& ca, const StratData& sd,
                                  const AModule& m);

// The axioms checked on a semisimple grid:
//   diagonal_ones        [delta(k) : L(k)] = 1
//   lower_levels_only    [delta(k) : L(m)] = 0 unless m = k or the level of
//                        m is strictly below the level of k
//   kernels_filtered     ker(P(k) -> delta(k)) is delta-filtered with
//                        factors at levels >= the level of k
//   kernels_projective   the same kernels are projective
//   layer_sums           delta_module(level) decomposes into the delta(k) of
//                        that level, each appearing at least once
struct QHCertificate {
    std::vector<Label> labels;
    std::vector<std::vector<std::size_t>> delta_simple_mults;  // [k][m]
    bool diagonal_ones = false;
    bool lower_levels_only = false;
    std::vector<DeltaFiltration> kernel_filtrations;
    bool kernels_filtered = false;
    bool kernels_projective = false;
    std::vector<bool> layer_sums;                 // index level-1
    std::size_t lambda_first = 0, lambda_last = 0;  // |level-1| vs |level-d| labels
    bool ok() const {
        if (!(diagonal_ones && lower_levels_only && kernels_filtered && kernels_projective))
            return false;
        for (bool b : layer_sums)
            if (!b) return false;
        return true;
    }
};

// Refuses grids with a non-semisimple level; see verify_stratified for the
// certificates that do not need standard modules.
QHCertificate verify_quasi_hereditary(const ConstructedAlgebra& ca);

// Carrier with cell (k,l) = R/I(k, d+2-l), a left module over the algebra A
// of the grid (action through the inner index k) and over the algebra B of
// the dual grid on the opposite parent (action through the inner index l,
// multiplying on the right inside R). Both actions are validated and
// checked to commute at build time.
struct TiltingBimodule {
    ConstructedAlgebra a_side;
    ConstructedAlgebra b_side;
    std::vector<std::vector<exactla::QuotientMap>> cell;  // [k-1][l-1]: R -> cell coords
    std::vector<std::vector<std::size_t>> offset;         // cell offsets in the carrier
    std::size_t dim = 0;
    AModule over_a;
    AModule over_b;

    std::size_t block_dim(std::size_t k, std::size_t l) const;  // 1-based
    Subspace column_span(std::size_t l) const;
    Subspace row_span(std::size_t k) const;
    AModule column(std::size_t l) const;  // over a_side's algebra
    AModule row(std::size_t k) const;     // over b_side's algebra
};

TiltingBimodule build_T(const ConstructedAlgebra& ca);

// Zero annihilators on both sides; the first column alone already has zero
// annihilator over A.
struct FaithfulCheck {
    std::size_t a_annihilator_dim = 0;
    std::size_t b_annihilator_dim = 0;
    bool first_column_faithful = false;
    bool ok() const {
        return a_annihilator_dim == 0 && b_annihilator_dim == 0 && first_column_faithful;
    }
};

FaithfulCheck verify_faithful(const TiltingBimodule& t);

// The full centralizer of each action inside End(T) equals the image of the
// partner algebra, as subspaces of the flattened matrix space.
struct CentralizerCheck {
    std::size_t dim_end_over_a = 0;  // centralizer of the A-action
    std::size_t dim_b_image = 0;
    bool b_equals_centralizer = false;
    std::size_t dim_end_over_b = 0;
    std::size_t dim_a_image = 0;
    bool a_equals_centralizer = false;
    bool ok() const { return a_equals_centralizer && b_equals_centralizer; }
};

CentralizerCheck verify_double_centralizer(const TiltingBimodule& t);

// Structure of T over A:
//   column_flags       column l is isomorphic to (A/J_{d+1-l}) e_1 via the
//                      explicit map sending e_1 to the unit class of cell (1,l)
//   ext_surjections    [l-1][i-1]: the multiplication map from the e_i part
//                      to the e_{i+1} part of column l is onto, which is the
//                      vanishing criterion for extensions of the level-i
//                      standard series against that column
//   delta_embeddings   delta_module(k) embeds onto J_{k-1} * column(d+1-k)
//                      via the explicit map sending e_k to the unit class of
//                      cell (k, d+1-k)
struct TStructureCheck {
    std::vector<bool> column_flags;
    std::vector<std::vector<bool>> ext_surjections;
    std::vector<bool> delta_embeddings;
    bool ok() const {
        for (bool b : column_flags)
            if (!b) return false;
        for (const auto& col : ext_surjections)
            for (bool b : col)
                if (!b) return false;
        for (bool b : delta_embeddings)
            if (!b) return false;
        return true;
    }
};

TStructureCheck verify_T_structure(const TiltingBimodule& t);

// One indecomposable summand of a column of T, tagged with the unique
// maximal label among its delta-filtration factors.
struct TiltingSummand {
    std::size_t column = 0;
    std::size_t dim = 0;
    std::size_t label = 0;  // index into labels
    DeltaFiltration filtration;
    bool tilting = false;  // filtered, top factor once, extension criterion holds
};

// The duality report on a semisimple grid:
//   stages 1-2: every column of T is delta-filtered and satisfies the
//               extension criterion, so T is a full tilting module
//   stage 3:    column d+1-i realizes every level-i label on a summand
//   stage 4:    double centralizer, so End over A equals the dual-grid
//               algebra inside End(T)
//   stage 5:    basic algebras of End(T)^op and of the dual algebra's
//               opposite carry the same quiver data
struct RingelReport {
    std::vector<Label> labels;
    std::vector<DeltaFiltration> column_filtrations;  // index l-1
    bool t_delta_filtered = false;
    bool ext_vanishing = false;
    std::vector<TiltingSummand> summands;
    bool summands_tilting = false;
    bool levels_covered = false;
    CentralizerCheck centralizer;
    std::size_t dim_end = 0;
    std::size_t dim_dual = 0;
    bool basic_dims_match = false;
    bool quiver_match = false;
    algcore::QuiverData end_quiver, dual_quiver;
    std::size_t lambda_first = 0, lambda_last = 0;  // reported, never asserted
    bool ok() const {
        return t_delta_filtered && ext_vanishing && summands_tilting && levels_covered &&
               centralizer.ok() && basic_dims_match && quiver_match;
    }
};

RingelReport ringel_dual_report(const ConstructedAlgebra& ca);

// The certificates that hold for every grid, semisimple levels or not: the
// layer chain, the bottom peel, T with both actions, faithfulness, and the
// double centralizer.
struct StratifiedReport {
    std::vector<construct::LevelCheck> levels;
    construct::PeelCheck peel;
    FaithfulCheck faithful;
    CentralizerCheck centralizer;
    bool ok() const {
        for (const auto& l : levels)
            if (!l.ok()) return false;
        return peel.ok() && faithful.ok() && centralizer.ok();
    }
};

StratifiedReport verify_stratified(const ConstructedAlgebra& ca);

// Transport a grid along an algebra isomorphism phi (columns indexed by
// src coordinates, values in target coordinates). Throws unless phi is a
// verified isomorphism.
IdealSystem transport_system(const IdealSystem& src, const FDAlgebra& target,
                             const Matrix& phi);

// The cell-wise map induced by phi between the two constructed algebras;
// all-false when some cell representative falls outside its target cell.
algcore::MorphismCheck transported_equivalence(const ConstructedAlgebra& src,
                                               const ConstructedAlgebra& tgt,
                                               const Matrix& phi);

}  // namespace qha::strat

#endif
