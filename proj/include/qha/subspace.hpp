// Subspaces of Q^n in canonical reduced form, plus quotient maps with a
// deterministic section. Two subspaces are equal iff their stored reduced
// bases are identical, so == is cheap and canonical.
#ifndef QHA_SUBSPACE_HPP
#define QHA_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "qha/matrix.hpp"

namespace qha::exactla {

class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace span(std::size_t ambient, const Matrix& rows);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& rows);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.mat.rows(); }

    // Reduced-form basis, one vector per row.
    const Matrix& basis() const { return basis_.mat; }
    const std::vector<std::size_t>& pivots() const { return basis_.pivots; }

    // Canonical representative of v modulo this subspace: pivot coordinates
    // eliminated, support only on non-pivot coordinates.
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_.mat == o.basis_.mat;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    Echelon basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Q^n -> Q^n / W with the canonical section spanned by the non-pivot
// standard basis vectors of W.
class QuotientMap {
public:
    QuotientMap() = default;
    explicit QuotientMap(Subspace w);

    std::size_t ambient() const { return w_.ambient(); }
    std::size_t dim() const { return rep_coords_.size(); }
    const Subspace& space() const { return w_; }
    // Ambient coordinate carrying quotient coordinate t.
    const std::vector<std::size_t>& rep_coords() const { return rep_coords_; }

    Vec project(const Vec& v) const;  // quotient coordinates of v + W
    Vec lift(const Vec& q) const;     // canonical representative of q
    Vec lift_basis(std::size_t t) const { return lift(unit_vec(dim(), t)); }

private:
    Subspace w_;
    std::vector<std::size_t> rep_coords_;
};

}  // namespace qha::exactla

#endif
