// Grids of two-sided ideals I_{ij} (1 <= i,j <= d+1) with I_{ij}I_{jk}
// inside I_{ik} and I_{ij} = R for i >= j, together with the operations the
// construction needs: power grids, the radical grid, duality over the
// opposite algebra, truncation, and exhaustive enumeration of the grids
// whose level quotients are all semisimple.
#ifndef QHA_SYSTEMS_HPP
#define QHA_SYSTEMS_HPP

#include <cstddef>
#include <vector>

#include "qha/algebra.hpp"

namespace qha::systems {

using algcore::FDAlgebra;
using algcore::Ideal;
using exactla::Subspace;

class IdealSystem {
public:
    IdealSystem() = default;
    // grid[i-1][j-1] = I_{ij}, full (d+1) x (d+1)
    IdealSystem(FDAlgebra parent, std::size_t d, std::vector<std::vector<Ideal>> grid);

    const FDAlgebra& parent() const { return parent_; }
    std::size_t d() const { return d_; }
    std::size_t size() const { return d_ + 1; }  // grid side length
    const Ideal& at(std::size_t i, std::size_t j) const;  // 1-based

    bool operator==(const IdealSystem& o) const {
        return d_ == o.d_ && parent_ == o.parent_ && grid_ == o.grid_;
    }

private:
    FDAlgebra parent_;
    std::size_t d_ = 0;
    std::vector<std::vector<Ideal>> grid_;
};

// Build from the strict upper triangle only; everything on or below the
// diagonal is the whole algebra. upper[(i,j)] indexed by row then column,
// i.e. upper triangle flattened row-major: (1,2),(1,3),..,(2,3),..
IdealSystem system_from_upper(FDAlgebra parent, std::size_t d,
                              const std::vector<Ideal>& upper_row_major);

// All grid axioms: every entry a two-sided ideal, lower triangle full, and
// I_{ij} I_{jk} inside I_{ik} for every triple. ValidationError names the
// first failing entry or triple.
void validate_system(const IdealSystem& s);

// Quotients R/I_{k,k+1} for k = 1..d are the levels; the grid is semisimple
// when every level is a semisimple (possibly zero) algebra.
std::vector<bool> semisimple_levels(const IdealSystem& s);
bool is_semisimple_system(const IdealSystem& s);

// {x : x * M inside N} for two-sided ideals M, N; again a two-sided ideal.
Ideal transporter(const FDAlgebra& r, const Subspace& m, const Subspace& n);

// I_{ij} = {x : x L^(d+1-j) inside L^(d+1-i)} for any two-sided ideal L.
IdealSystem power_system(const FDAlgebra& r, const Ideal& l, std::size_t d);

// The power grid of the radical at d = Loewy length (d >= 1 even for
// semisimple parents, where the grid is trivial).
IdealSystem jacobson_system(const FDAlgebra& r);

// Dual grid over the opposite algebra: I'_{ij} = I_{d+2-j, d+2-i}.
IdealSystem dual_system(const IdealSystem& s);

// Forget the last row and column: a (d-1)-system over the same parent.
IdealSystem truncate(const IdealSystem& s);

// The radical-power grid of the opposite algebra equals the dual of the
// radical-power grid exactly when power and annihilator series coincide.
struct RigidDualityReport {
    algcore::RigidityReport rigidity;
    bool dual_is_opposite_radical_grid = false;
    bool agree = false;  // the two certificates match
};

RigidDualityReport verify_rigid_duality(const FDAlgebra& r);

// Closure of {0, R} and principal ideals of scheduled generators (basis
// vectors, pairwise sums/differences, small-prime weightings) under sum,
// intersection, and product. Complete whenever every ideal is generated by
// scheduled elements; stops with Error beyond max_count. Sorted by dimension,
// then by basis bytes.
std::vector<Ideal> ideal_lattice(const FDAlgebra& r, std::size_t max_count = 512);

// Every d-system from the pool whose levels are all semisimple, in
// lexicographic pool-index order of the upper triangle. The pool defaults to
// ideal_lattice(r).
std::vector<IdealSystem> enumerate_semisimple_systems(const FDAlgebra& r, std::size_t d);
std::vector<IdealSystem> enumerate_semisimple_systems(const FDAlgebra& r, std::size_t d,
                                                      const std::vector<Ideal>& pool);

}  // namespace qha::systems

#endif
