#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "qha/errors.hpp"
#include "qha/module.hpp"
#include "testalgebras.hpp"

using namespace qha;
using namespace qha::repmod;
using exactla::Subspace;
using exactla::Vec;
using exactla::unit_vec;

namespace {

// Class indices of the two-vertex sample, identified by projective size:
// the source vertex has the 2-dimensional projective.
struct TwoVertexData {
    FDAlgebra a;
    ProjectiveData pd;
    std::size_t ca, cb;
};

TwoVertexData two_vertex_data() {
    TwoVertexData d{two_vertex_one_arrow(), {}, 0, 0};
    d.pd = projective_covers(d.a);
    REQUIRE(d.pd.classes.size() == 2);
    d.ca = d.pd.projectives[0].dim() == 2 ? 0 : 1;
    d.cb = 1 - d.ca;
    REQUIRE(d.pd.projectives[d.ca].dim() == 2);
    REQUIRE(d.pd.projectives[d.cb].dim() == 1);
    return d;
}

}  // namespace

TEST_CASE("regular modules validate and falsifiers are rejected") {
    for (const FDAlgebra& a :
         {two_vertex_one_arrow(), truncated_polynomials(3),
          matrix_algebra(2), quaternions(), zero_algebra()}) {
        AModule reg = regular_module(a);
        CHECK(reg.dim() == a.dim());
        CHECK_NOTHROW(validate_module(reg));
        CHECK(annihilator(reg).dim() == 0);
    }
    FDAlgebra a = two_vertex_one_arrow();
    AModule reg = regular_module(a);
    std::vector<exactla::Matrix> action{reg.action(0), reg.action(1), reg.action(2)};
    action[2].at(0, 0) = exactla::Scalar(1);
    CHECK_THROWS_AS(validate_module(AModule(a, action, 3)), ValidationError);
    std::vector<exactla::Matrix> zeros(3, exactla::Matrix(3, 3));
    CHECK_THROWS_AS(validate_module(AModule(a, zeros, 3)), ValidationError);
    CHECK_THROWS_AS(AModule(a, {reg.action(0)}, 3), DimensionMismatch);
}

TEST_CASE("submodule machinery on the two-vertex sample") {
    FDAlgebra a = two_vertex_one_arrow();
    AModule reg = regular_module(a);

    Subspace af = spanned_submodule(reg, {unit_vec(3, 2)});
    CHECK(af.dim() == 1);
    Subspace aea = spanned_submodule(reg, {unit_vec(3, 0)});
    CHECK(aea.dim() == 2);
    CHECK(aea.contains(unit_vec(3, 2)));
    CHECK(is_submodule(reg, af));
    CHECK_FALSE(is_submodule(reg, Subspace::span(3, std::vector<Vec>{unit_vec(3, 0)})));
    CHECK_THROWS_AS(submodule(reg, Subspace::span(3, std::vector<Vec>{unit_vec(3, 0)})),
                    ValidationError);

    CHECK(radical_submodule(reg) == af);
    CHECK(socle_submodule(reg) ==
          Subspace::span(3, std::vector<Vec>{unit_vec(3, 1), unit_vec(3, 2)}));
    AModule top = top_module(reg);
    CHECK(top.dim() == 2);
    CHECK_NOTHROW(validate_module(top));
    CHECK(radical_submodule(top).dim() == 0);

    AModule sub = submodule(reg, aea);
    CHECK(sub.dim() == 2);
    CHECK_NOTHROW(validate_module(sub));
    AModule quot = quotient_module(reg, aea);
    CHECK(quot.dim() == 1);
    CHECK_NOTHROW(validate_module(quot));

    AModule zero = quotient_module(reg, Subspace::full(3));
    CHECK(zero.dim() == 0);
    CHECK_NOTHROW(validate_module(zero));
}

TEST_CASE("socle of a semisimple algebra module is everything") {
    AModule reg = regular_module(matrix_algebra(2));
    CHECK(socle_submodule(reg) == Subspace::full(4));
    CHECK(radical_submodule(reg).dim() == 0);
}

TEST_CASE("hom spaces between projectives match corner dimensions") {
    TwoVertexData d = two_vertex_data();
    const AModule& pa = d.pd.projectives[d.ca];
    const AModule& pb = d.pd.projectives[d.cb];
    CHECK(hom_dim(pa, pb) == 0);
    CHECK(hom_dim(pb, pa) == 1);
    CHECK(hom_dim(pa, pa) == 1);
    CHECK(hom_dim(pb, pb) == 1);
    // every hom really intertwines the actions
    for (const auto& f : hom_space(pb, pa))
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(exactla::mul(pa.action(i), f) == exactla::mul(f, pb.action(i)));
    AModule reg = regular_module(d.a);
    CHECK(hom_dim(reg, reg) == 3);
}

TEST_CASE("endomorphism algebra of the regular module is the opposite algebra") {
    for (const FDAlgebra& a : {two_vertex_one_arrow(), matrix_algebra(2),
                               truncated_polynomials(3)}) {
        EndAlgebra end = endomorphism_algebra(regular_module(a));
        CHECK(end.algebra.dim() == a.dim());
        CHECK_NOTHROW(algcore::validate_algebra(end.algebra));
        // right multiplications realize the opposite algebra inside End
        CHECK(algcore::is_semisimple(end.algebra) == algcore::is_semisimple(a));
        CHECK(algcore::loewy_length(end.algebra) == algcore::loewy_length(a));
    }
}

TEST_CASE("projective covers and composition multiplicities") {
    TwoVertexData d = two_vertex_data();
    AModule reg = regular_module(d.a);
    CHECK(composition_multiplicity(d.pd, reg, d.ca) == 1);
    CHECK(composition_multiplicity(d.pd, reg, d.cb) == 2);
    CHECK(d.pd.simples[d.ca].dim() == 1);
    CHECK(d.pd.simples[d.cb].dim() == 1);
    // the arrow submodule is a copy of the sink simple
    AModule af = submodule(reg, spanned_submodule(reg, {unit_vec(3, 2)}));
    CHECK(composition_multiplicity(d.pd, af, d.cb) == 1);
    CHECK(composition_multiplicity(d.pd, af, d.ca) == 0);

    ProjectiveData pm = projective_covers(matrix_algebra(2));
    CHECK(pm.classes.size() == 1);
    CHECK(pm.projectives[0].dim() == 2);
    CHECK(pm.simples[0].dim() == 2);
    CHECK(composition_multiplicity(pm, regular_module(matrix_algebra(2)), 0) == 2);

    ProjectiveData pt = projective_covers(truncated_polynomials(3));
    CHECK(pt.classes.size() == 1);
    CHECK(pt.projectives[0].dim() == 3);
    CHECK(composition_multiplicity(pt, regular_module(truncated_polynomials(3)), 0) == 3);
}

TEST_CASE("projectivity recognition") {
    TwoVertexData d = two_vertex_data();
    AModule reg = regular_module(d.a);
    CHECK(is_projective(d.pd, reg));
    CHECK(is_projective(d.pd, d.pd.projectives[d.ca]));
    CHECK(is_projective(d.pd, d.pd.simples[d.cb]));  // simple projective at the sink
    CHECK_FALSE(is_projective(d.pd, d.pd.simples[d.ca]));
    CHECK(is_projective(d.pd, quotient_module(reg, Subspace::full(3))));

    FDAlgebra t3 = truncated_polynomials(3);
    ProjectiveData pt = projective_covers(t3);
    AModule reg3 = regular_module(t3);
    CHECK(is_projective(pt, reg3));
    CHECK_FALSE(is_projective(pt, top_module(reg3)));
    CHECK_FALSE(is_projective(pt, quotient_module(reg3, socle_submodule(reg3))));
}

TEST_CASE("isomorphism testing") {
    TwoVertexData d = two_vertex_data();
    const AModule& pa = d.pd.projectives[d.ca];
    const AModule& pb = d.pd.projectives[d.cb];
    CHECK(is_isomorphic(pa, pa) == Iso::Yes);
    CHECK(is_isomorphic(pa, pb) == Iso::No);
    CHECK(is_isomorphic(d.pd.simples[d.ca], d.pd.simples[d.cb]) == Iso::No);
    AModule reg = regular_module(d.a);
    AModule af = submodule(reg, spanned_submodule(reg, {unit_vec(3, 2)}));
    CHECK(is_isomorphic(af, d.pd.simples[d.cb]) == Iso::Yes);
    CHECK(is_isomorphic(direct_sum(d.pd.simples[d.ca], d.pd.simples[d.cb]),
                        direct_sum(d.pd.simples[d.cb], d.pd.simples[d.ca])) == Iso::Yes);
    CHECK(is_isomorphic(reg, direct_sum(pa, pb)) == Iso::Yes);
    CHECK(is_isomorphic(reg, direct_sum(pa, d.pd.simples[d.ca])) == Iso::No);
}

TEST_CASE("indecomposable decomposition") {
    TwoVertexData d = two_vertex_data();
    AModule reg = regular_module(d.a);
    auto parts = indecomposable_summands(reg);
    REQUIRE(parts.size() == 2);
    std::size_t small = parts[0].module.dim() == 1 ? 0 : 1;
    CHECK(parts[small].module.dim() == 1);
    CHECK(parts[1 - small].module.dim() == 2);
    CHECK(is_isomorphic(parts[1 - small].module, d.pd.projectives[d.ca]) == Iso::Yes);

    auto m2 = indecomposable_summands(regular_module(matrix_algebra(2)));
    REQUIRE(m2.size() == 2);
    CHECK(m2[0].module.dim() == 2);
    CHECK(is_isomorphic(m2[0].module, m2[1].module) == Iso::Yes);

    auto t3 = indecomposable_summands(regular_module(truncated_polynomials(3)));
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].module.dim() == 3);
    CHECK(t3[0].space == Subspace::full(3));

    CHECK(indecomposable_summands(quotient_module(reg, Subspace::full(3))).empty());
}

TEST_CASE("non-split endomorphism tops are refused, not guessed") {
    AModule reg = regular_module(quaternions());
    CHECK_THROWS_AS(indecomposable_summands(reg), NonSplitSemisimpleQuotient);
}

TEST_CASE("annihilators of simples are the expected ideals") {
    TwoVertexData d = two_vertex_data();
    Subspace ka = Subspace::span(3, std::vector<Vec>{unit_vec(3, 0), unit_vec(3, 2)});
    Subspace kb = Subspace::span(3, std::vector<Vec>{unit_vec(3, 1), unit_vec(3, 2)});
    CHECK(annihilator(d.pd.simples[d.ca]) == kb);
    CHECK(annihilator(d.pd.simples[d.cb]) == ka);
    CHECK(exactla::intersect(annihilator(d.pd.simples[d.ca]),
                             annihilator(d.pd.simples[d.cb])) ==
          Subspace::span(3, std::vector<Vec>{unit_vec(3, 2)}));
    CHECK(annihilator(direct_sum(d.pd.simples[d.ca], d.pd.simples[d.cb])) ==
          Subspace::span(3, std::vector<Vec>{unit_vec(3, 2)}));
}
