// Finite-dimensional associative unital algebras over Q, given by structure
// constants, plus the structural toolbox: two-sided ideals, quotients,
// radical, semisimplicity, primitive idempotents, basic algebra and its
// quiver. Everything is exact; anything that cannot be certified raises a
// typed error instead of guessing.
#ifndef QHA_ALGEBRA_HPP
#define QHA_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qha/matrix.hpp"
#include "qha/subspace.hpp"

namespace qha::algcore {

using exactla::Matrix;
using exactla::Scalar;
using exactla::Subspace;
using exactla::Vec;

class FDAlgebra {
public:
    FDAlgebra() = default;
    // table[i][j] = coordinates of (basis i) * (basis j). Shape is checked
    // here; axioms are checked by validate_algebra.
    FDAlgebra(std::vector<std::vector<Vec>> table, Vec unit,
              std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    const Vec& unit() const { return unit_; }
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i][j]; }

    Vec mul(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;   // column action of y -> x*y
    Matrix right_mult(const Vec& x) const;  // column action of y -> y*x

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(std::size_t i) const;

    bool operator==(const FDAlgebra& o) const {
        return table_ == o.table_ && unit_ == o.unit_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<Vec>> table_;
    Vec unit_;
    std::vector<std::string> labels_;
};

// Unit and associativity axioms on the whole basis; ValidationError carries
// the first failing triple.
void validate_algebra(const FDAlgebra& a);

FDAlgebra opposite(const FDAlgebra& a);

// Two-sided ideals are subspaces of the coordinate space.
using Ideal = Subspace;

Ideal ideal_from_generators(const FDAlgebra& a, const std::vector<Vec>& gens);
bool is_ideal(const FDAlgebra& a, const Subspace& w);
Ideal ideal_product(const FDAlgebra& a, const Ideal& x, const Ideal& y);

struct QuotientAlgebra {
    FDAlgebra algebra;
    exactla::QuotientMap map;  // coordinates of A -> coordinates of A/I
};

QuotientAlgebra quotient_algebra(const FDAlgebra& a, const Ideal& ideal);

// Corner e*A*e as an algebra in its own right, with the embedding data.
struct CornerAlgebra {
    FDAlgebra algebra;
    Matrix basis;  // rows = corner basis vectors in parent coordinates
    Vec coords(const Vec& parent_elt) const;  // parent_elt must lie in the corner
    Vec embed(const Vec& corner_elt) const;
};

CornerAlgebra corner_algebra(const FDAlgebra& a, const Vec& idem);

// Largest nilpotent ideal. Computed from the trace form (characteristic 0),
// then certified: two-sided ideal, nilpotent, semisimple quotient.
Ideal jacobson_radical(const FDAlgebra& a);

bool is_semisimple(const FDAlgebra& a);

// A = J^0 > J^1 > ... > J^len = 0; returns all powers including both ends.
std::vector<Ideal> radical_series(const FDAlgebra& a);
std::size_t loewy_length(const FDAlgebra& a);

// soc_k = {x : J^k x = 0}, k = 0..loewy length (left socle series).
std::vector<Subspace> left_socle_series(const FDAlgebra& a);

// {x : x*w = 0 for all w in W} resp. {x : w*x = 0 for all w in W}.
Subspace left_annihilator(const FDAlgebra& a, const Subspace& w);
Subspace right_annihilator(const FDAlgebra& a, const Subspace& w);

// Whether J^i = {x : J^(len-i) x = 0} = {x : x J^(len-i) = 0} for every i.
struct RigidityReport {
    bool rigid = false;
    std::size_t loewy = 0;
    struct Entry {
        std::size_t power_dim, left_kill_dim, right_kill_dim;
        bool matches;
    };
    std::vector<Entry> levels;             // index i = 0..loewy
    std::optional<std::size_t> witness_i;  // first failing level
};

RigidityReport rigidity(const FDAlgebra& a);

// Complete list of primitive orthogonal idempotents summing to 1.
// Deterministic; raises NonSplitSemisimpleQuotient when a semisimple corner
// cannot be split over Q by the candidate schedule.
std::vector<Vec> primitive_orthogonal_idempotents(const FDAlgebra& a);

// Basic algebra e*A*e for e a sum of one primitive idempotent per
// isomorphism class of indecomposable projectives.
struct BasicAlgebra {
    FDAlgebra algebra;
    Vec idempotent;                                // e in parent coordinates
    std::vector<std::vector<std::size_t>> classes; // partition of the primitive list
    Matrix corner_basis;                           // rows in parent coordinates
};

BasicAlgebra basic_algebra(const FDAlgebra& a);

// Gabriel quiver data: one vertex per isomorphism class of simples, arrow
// counts arrows[j][i] = dim e_j (J/J^2) e_i for arrows i -> j.
struct QuiverData {
    std::vector<std::string> vertex_names;
    std::vector<std::vector<std::size_t>> arrows;
};

QuiverData gabriel_quiver(const FDAlgebra& a);

// Canonical form under vertex relabeling: lexicographically least flattened
// arrow matrix over all simultaneous row/column permutations. Vertex count
// is expected to stay single-digit.
std::vector<std::size_t> canonical_quiver_form(const QuiverData& q);
bool same_quiver_shape(const QuiverData& a, const QuiverData& b);

// phi maps a-coordinates to b-coordinates (columns indexed by a-basis).
struct MorphismCheck {
    bool shape_ok = false, unital = false, multiplicative = false, bijective = false;
    bool ok() const { return shape_ok && unital && multiplicative && bijective; }
};

MorphismCheck check_algebra_morphism(const FDAlgebra& a, const FDAlgebra& b, const Matrix& phi);

}  // namespace qha::algcore

#endif
