// Direct-sum decomposition and projective recognition.
#include <cstddef>
#include <utility>
#include <vector>

#include "qha/errors.hpp"
#include "qha/module.hpp"

namespace qha::repmod {

using exactla::rank;
using exactla::transpose;
using exactla::unit_vec;

std::vector<Summand> indecomposable_summands(const AModule& m) {
    if (m.dim() == 0) return {};
    EndAlgebra end = endomorphism_algebra(m);
    std::vector<Vec> prims = algcore::primitive_orthogonal_idempotents(end.algebra);
    std::vector<Summand> out;
    out.reserve(prims.size());
    for (const Vec& p : prims) {
        Matrix e(m.dim(), m.dim());
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) e = e + p[k] * end.basis[k];
        // p is a primitive idempotent endomorphism, so its image is an
        // indecomposable summand.
        Subspace space = Subspace::span(m.dim(), transpose(e));
        out.push_back(Summand{space, submodule(m, space)});
    }
    std::size_t total = 0;
    for (const Summand& s : out) total += s.module.dim();
    if (total != m.dim()) throw Error("summand dimensions fail to add up");
    return out;
}

ProjectiveData projective_covers(const FDAlgebra& a) {
    ProjectiveData pd;
    std::vector<Vec> prims = algcore::primitive_orthogonal_idempotents(a);
    pd.classes = algcore::basic_algebra(a).classes;
    AModule reg = regular_module(a);
    for (const auto& cls : pd.classes) {
        const Vec& e = prims[cls.front()];
        pd.idempotents.push_back(e);
        Subspace ae = Subspace::span(a.dim(), transpose(a.right_mult(e)));
        pd.projectives.push_back(submodule(reg, ae));
        pd.simples.push_back(top_module(pd.projectives.back()));
    }
    return pd;
}

std::size_t composition_multiplicity(const ProjectiveData& pd, const AModule& m,
                                     std::size_t cls) {
    // dim e M counts the composition factors with top class cls because the
    // simples here all have scalar endomorphisms.
    return rank(m.act(pd.idempotents.at(cls)));
}

bool is_projective(const ProjectiveData& pd, const AModule& m) {
    AModule top = top_module(m);
    std::size_t predicted = 0;
    for (std::size_t c = 0; c < pd.classes.size(); ++c)
        predicted += composition_multiplicity(pd, top, c) * pd.projectives[c].dim();
    // The projective cover read off the top maps onto m, so equal dimensions
    // force an isomorphism.
    return predicted == m.dim();
}

}  // namespace qha::repmod
