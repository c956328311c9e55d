#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qha/errors.hpp"
#include "qha/quiver.hpp"

using namespace qha;
using namespace qha::quiver;
using exactla::unit_vec;

namespace {

const char* kLinearThree = R"(# a -> b -> c with the composite killed
vertex a b c
arrow f a b
arrow g b c
relation g*f = 0
)";

const char* kLoop = R"(vertex v
arrow x v v
relation x*x*x = 0
)";

}  // namespace

TEST_CASE("parse accepts the linear quiver and rejects malformed input") {
    const Quiver q = parse_quiver(kLinearThree);
    CHECK(q.vertices.size() == 3);
    CHECK(q.arrows.size() == 2);
    REQUIRE(q.relations.size() == 1);
    REQUIRE(q.relations[0].size() == 1);
    CHECK(q.relations[0][0].coef == 1);
    // g*f applies f first
    CHECK(q.relations[0][0].arrows_applied == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(parse_quiver("vertex a\narrow f a b\n"), ParseError);   // unknown vertex
    CHECK_THROWS_AS(parse_quiver("vertex a a\n"), ParseError);              // duplicate
    CHECK_THROWS_AS(parse_quiver("vertex a\nnonsense x\n"), ParseError);    // directive
    CHECK_THROWS_AS(parse_quiver(""), ParseError);                          // empty
    // relation with a length-one term is not admissible
    CHECK_THROWS_AS(parse_quiver("vertex a\narrow x a a\nrelation x = 0\n"), ParseError);
    // mismatched endpoints across terms
    CHECK_THROWS_AS(parse_quiver("vertex a b\narrow f a b\narrow h b a\n"
                                 "relation h*f - f*h = 0\n"),
                    ParseError);
    // path that does not compose
    CHECK_THROWS_AS(parse_quiver("vertex a b\narrow f a b\nrelation f*f = 0\n"), ParseError);
}

TEST_CASE("writer round-trips through the parser") {
    const char* src = R"(vertex a b c d
arrow f a b
arrow g b c
arrow h c d
arrow k a c
relation g*f - 2*k = 0
)";
    // term 'k' has length 1, so this must be rejected, not round-tripped
    CHECK_THROWS_AS(parse_quiver(src), ParseError);

    const Quiver q = parse_quiver(kLinearThree);
    const Quiver q2 = parse_quiver(write_quiver(q));
    CHECK(q2.vertices == q.vertices);
    CHECK(q2.arrows.size() == q.arrows.size());
    REQUIRE(q2.relations.size() == 1);
    CHECK(q2.relations[0][0].arrows_applied == q.relations[0][0].arrows_applied);

    // coefficients and signs survive
    Quiver w = q;
    w.relations[0][0].coef = exactla::frac(-3, 2);
    const Quiver w2 = parse_quiver(write_quiver(w));
    CHECK(w2.relations[0][0].coef == exactla::frac(-3, 2));
}

TEST_CASE("path algebra of the linear quiver with one zero relation") {
    const PathAlgebra pa = build_path_algebra(parse_quiver(kLinearThree));
    // basis: e_a, e_b, e_c, f, g (g*f dies)
    CHECK(pa.algebra.dim() == 5);
    CHECK_NOTHROW(algcore::validate_algebra(pa.algebra));
    const std::size_t dim = pa.algebra.dim();
    // the killed composite is zero in the algebra
    const auto f = unit_vec(dim, pa.arrow_elements[0]);
    const auto g = unit_vec(dim, pa.arrow_elements[1]);
    CHECK(exactla::is_zero_vec(pa.algebra.mul(g, f)));
    // without the relation the composite survives
    Quiver free_q = parse_quiver(kLinearThree);
    free_q.relations.clear();
    const PathAlgebra pf = build_path_algebra(free_q);
    CHECK(pf.algebra.dim() == 6);
    const auto f2 = unit_vec(6, pf.arrow_elements[0]);
    const auto g2 = unit_vec(6, pf.arrow_elements[1]);
    CHECK_FALSE(exactla::is_zero_vec(pf.algebra.mul(g2, f2)));
    // and composing the other way round is zero in both
    CHECK(exactla::is_zero_vec(pf.algebra.mul(f2, g2)));
}

TEST_CASE("truncated loop becomes the truncated polynomial ring") {
    const PathAlgebra pa = build_path_algebra(parse_quiver(kLoop));
    CHECK(pa.algebra.dim() == 3);
    CHECK_NOTHROW(algcore::validate_algebra(pa.algebra));
    const auto x = unit_vec(3, pa.arrow_elements[0]);
    const auto x2 = pa.algebra.mul(x, x);
    CHECK_FALSE(exactla::is_zero_vec(x2));
    CHECK(exactla::is_zero_vec(pa.algebra.mul(x, x2)));
    CHECK(algcore::loewy_length(pa.algebra) == 3);
}

TEST_CASE("unbounded loop is refused, not truncated") {
    Quiver q = parse_quiver(kLoop);
    q.relations.clear();
    CHECK_THROWS_AS(build_path_algebra(q), InfiniteDimensional);
}

TEST_CASE("vertex units sum to the identity") {
    const PathAlgebra pa = build_path_algebra(parse_quiver(kLinearThree));
    auto total = exactla::zero_vec(pa.algebra.dim());
    for (auto t : pa.vertex_units)
        total = exactla::add(total, unit_vec(pa.algebra.dim(), t));
    CHECK(total == pa.algebra.unit());
    // each vertex unit is idempotent
    for (auto t : pa.vertex_units) {
        const auto e = unit_vec(pa.algebra.dim(), t);
        CHECK(pa.algebra.mul(e, e) == e);
    }
}

TEST_CASE("the induced quiver of a path algebra has the input shape") {
    const Quiver q = parse_quiver(kLinearThree);
    const PathAlgebra pa = build_path_algebra(q);
    const algcore::QuiverData back = algcore::gabriel_quiver(pa.algebra);
    algcore::QuiverData expect;
    expect.vertex_names = q.vertices;
    expect.arrows.assign(3, std::vector<std::size_t>(3, 0));
    for (const auto& a : q.arrows) expect.arrows[a.tgt][a.src] += 1;
    CHECK(algcore::same_quiver_shape(back, expect));

    // one loop for the truncated polynomial ring
    const PathAlgebra pl = build_path_algebra(parse_quiver(kLoop));
    const algcore::QuiverData lback = algcore::gabriel_quiver(pl.algebra);
    REQUIRE(lback.vertex_names.size() == 1);
    CHECK(lback.arrows[0][0] == 1);
}
