// Finite-dimensional left modules over a structure-constant algebra, given
// by one action matrix per algebra basis element, plus the representation
// toolbox: submodules, quotients, radical and socle, homomorphism spaces,
// endomorphism algebras, indecomposable decomposition, projectives and
// composition multiplicities.
#ifndef QHA_MODULE_HPP
#define QHA_MODULE_HPP

#include <cstddef>
#include <vector>

#include "qha/algebra.hpp"

namespace qha::repmod {

using algcore::FDAlgebra;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Subspace;
using exactla::Vec;

class AModule {
public:
    AModule() = default;
    // action[i] = matrix of the i-th algebra basis element (columns act on
    // coordinate vectors)
    AModule(FDAlgebra algebra, std::vector<Matrix> action, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const FDAlgebra& algebra() const { return a_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    Matrix act(const Vec& x) const;              // sum x_i action[i]
    Vec apply(const Vec& x, const Vec& v) const; // act(x) * v

private:
    FDAlgebra a_;
    std::vector<Matrix> action_;
    std::size_t dim_ = 0;
};

// unit acts as the identity and action respects every basis product
void validate_module(const AModule& m);

AModule regular_module(const FDAlgebra& a);

// {x in A : x annihilates all of M}
Subspace annihilator(const AModule& m);

Subspace spanned_submodule(const AModule& m, const std::vector<Vec>& gens);
bool is_submodule(const AModule& m, const Subspace& w);

AModule submodule(const AModule& m, const Subspace& w);        // w must be invariant
AModule quotient_module(const AModule& m, const Subspace& w);  // w must be invariant

Subspace radical_submodule(const AModule& m);  // J(A) * M
Subspace socle_submodule(const AModule& m);    // {v : J(A) v = 0}
AModule top_module(const AModule& m);          // M / J(A)M

AModule direct_sum(const AModule& x, const AModule& y);

// Basis of {F : F X_i = Y_i F for all i}, i.e. Hom_A(X, Y) as dy-by-dx
// matrices.
std::vector<Matrix> hom_space(const AModule& x, const AModule& y);
std::size_t hom_dim(const AModule& x, const AModule& y);

struct EndAlgebra {
    FDAlgebra algebra;
    std::vector<Matrix> basis;
};

EndAlgebra endomorphism_algebra(const AModule& m);

// Exact yes/no where certified, Undecided when the invertible-combination
// search exhausts its schedule without a witness either way.
enum class Iso { Yes, No, Undecided };
Iso is_isomorphic(const AModule& x, const AModule& y);

struct Summand {
    Subspace space;  // inside the ambient of the decomposed module
    AModule module;
};

// Decomposition into indecomposable direct summands via a complete primitive
// idempotent system of the endomorphism algebra.
std::vector<Summand> indecomposable_summands(const AModule& m);

// Indecomposable projectives P(c) = A e_c, one per isomorphism class of
// primitive idempotents, with their simple tops.
struct ProjectiveData {
    std::vector<Vec> idempotents;                   // one representative per class
    std::vector<std::vector<std::size_t>> classes;  // partition of the full list
    std::vector<AModule> projectives;
    std::vector<AModule> simples;
};

ProjectiveData projective_covers(const FDAlgebra& a);

// [M : L(c)] = dim Hom(P(c), M); valid because every simple has scalar
// endomorphisms here (split idempotent machinery).
std::size_t composition_multiplicity(const ProjectiveData& pd, const AModule& m,
                                     std::size_t cls);

// M is projective iff its projective cover (read off the top) has the same
// dimension.
bool is_projective(const ProjectiveData& pd, const AModule& m);

}  // namespace qha::repmod

#endif
