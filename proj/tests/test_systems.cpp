#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qha/errors.hpp"
#include "qha/systems.hpp"
#include "testalgebras.hpp"

using namespace qha;
using namespace qha::systems;
using exactla::Subspace;
using exactla::unit_vec;

namespace {

// named ideals of the two-vertex path algebra
struct PathIdeals {
    algcore::FDAlgebra r = two_vertex_one_arrow();
    Ideal zero = Subspace::zero(3);
    Ideal j = algcore::ideal_from_generators(r, {unit_vec(3, 2)});
    Ideal ka = algcore::ideal_from_generators(r, {unit_vec(3, 0)});
    Ideal kb = algcore::ideal_from_generators(r, {unit_vec(3, 1)});
    Ideal full = Subspace::full(3);
};

}  // namespace

TEST_CASE("system validation accepts valid grids and names violations") {
    PathIdeals p;
    // (K, I, L) = (ka, zero, j) is a valid 2-system
    CHECK_NOTHROW(validate_system(system_from_upper(p.r, 2, {p.ka, p.zero, p.j})));
    // ka * ka = ka is not inside the zero ideal
    CHECK_THROWS_AS(validate_system(system_from_upper(p.r, 2, {p.ka, p.zero, p.ka})),
                    ValidationError);
    // non-ideal entry is caught
    std::vector<std::vector<Ideal>> grid(3, std::vector<Ideal>(3, p.full));
    grid[0][1] = Subspace::span(3, {unit_vec(3, 0)});
    grid[0][2] = p.zero;
    grid[1][2] = p.j;
    CHECK_THROWS_AS(validate_system(IdealSystem(p.r, 2, grid)), ValidationError);
    // altered lower-triangle entry is caught
    std::vector<std::vector<Ideal>> grid2(3, std::vector<Ideal>(3, p.full));
    grid2[0][1] = p.ka;
    grid2[0][2] = p.zero;
    grid2[1][2] = p.j;
    grid2[2][0] = p.j;
    CHECK_THROWS_AS(validate_system(IdealSystem(p.r, 2, grid2)), ValidationError);
}

TEST_CASE("semisimple level detection") {
    PathIdeals p;
    // levels of (ka, zero, j): R/ka is one-dimensional, R/j is two-dimensional split
    const IdealSystem s = system_from_upper(p.r, 2, {p.ka, p.zero, p.j});
    const auto levels = semisimple_levels(s);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0]);
    CHECK(levels[1]);
    CHECK(is_semisimple_system(s));
    // (j, zero, j): R/j semisimple on both levels
    CHECK(is_semisimple_system(system_from_upper(p.r, 2, {p.j, p.zero, p.j})));
    // (zero, zero, zero): level algebra R itself is not semisimple
    CHECK_FALSE(is_semisimple_system(system_from_upper(p.r, 2, {p.zero, p.zero, p.zero})));
}

TEST_CASE("transporter computes ideal quotients") {
    PathIdeals p;
    // {x : x*J = 0} = ka, {x : x*R inside J} = J
    CHECK(transporter(p.r, p.j, p.zero) == p.ka);
    CHECK(transporter(p.r, p.full, p.j) == p.j);
    CHECK(transporter(p.r, p.zero, p.zero) == p.full);
    // x*kb inside j constrains only the e_b coefficient, leaving span{e_a, f}
    CHECK(transporter(p.r, p.kb, p.j) == p.ka);
}

TEST_CASE("the radical power grid of the path algebra") {
    PathIdeals p;
    const IdealSystem s = jacobson_system(p.r);
    REQUIRE(s.d() == 2);
    CHECK(s.at(1, 2) == p.ka);
    CHECK(s.at(1, 3) == p.zero);
    CHECK(s.at(2, 3) == p.j);
    CHECK_NOTHROW(validate_system(s));
    CHECK(is_semisimple_system(s));
}

TEST_CASE("the radical power grid of truncated polynomials") {
    const auto r = truncated_polynomials(3);
    const IdealSystem s = jacobson_system(r);
    REQUIRE(s.d() == 3);
    const auto powers = algcore::radical_series(r);  // R, J, J^2, 0
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j) {
            // rigid parent: grid entry is the (j-i)-th radical power
            CHECK(s.at(i, j) == powers[j - i]);
        }
    CHECK_NOTHROW(validate_system(s));
    CHECK(is_semisimple_system(s));
}

TEST_CASE("duality is an involution matching the index flip") {
    PathIdeals p;
    const IdealSystem s = system_from_upper(p.r, 2, {p.ka, p.zero, p.j});
    const IdealSystem ds = dual_system(s);
    CHECK(ds.parent() == algcore::opposite(p.r));
    // entries flip across the antidiagonal: I'(1,2) = I(2,3), I'(2,3) = I(1,2)
    CHECK(ds.at(1, 2) == p.j);
    CHECK(ds.at(1, 3) == p.zero);
    CHECK(ds.at(2, 3) == p.ka);
    CHECK(dual_system(ds) == s);
    CHECK_NOTHROW(validate_system(ds));
}

TEST_CASE("truncation drops the last row and column") {
    PathIdeals p;
    const IdealSystem s = system_from_upper(p.r, 2, {p.ka, p.zero, p.j});
    const IdealSystem t = truncate(s);
    CHECK(t.d() == 1);
    CHECK(t.at(1, 2) == p.ka);
    CHECK_NOTHROW(validate_system(t));
    CHECK_THROWS_AS(truncate(t), DimensionMismatch);
}

TEST_CASE("rigidity certificate agrees with grid duality") {
    // not rigid: the two-vertex path algebra
    const RigidDualityReport r1 = verify_rigid_duality(two_vertex_one_arrow());
    CHECK_FALSE(r1.rigidity.rigid);
    CHECK_FALSE(r1.dual_is_opposite_radical_grid);
    CHECK(r1.agree);
    // rigid: truncated polynomials (commutative, so both sides coincide)
    const RigidDualityReport r2 = verify_rigid_duality(truncated_polynomials(3));
    CHECK(r2.rigidity.rigid);
    CHECK(r2.dual_is_opposite_radical_grid);
    CHECK(r2.agree);
    // rigid: full matrix algebra (semisimple)
    const RigidDualityReport r3 = verify_rigid_duality(matrix_algebra(2));
    CHECK(r3.rigidity.rigid);
    CHECK(r3.agree);
}

TEST_CASE("ideal lattices of the samples") {
    const auto lat = ideal_lattice(two_vertex_one_arrow());
    REQUIRE(lat.size() == 5);
    std::vector<std::size_t> dims;
    for (const auto& i : lat) dims.push_back(i.dim());
    CHECK(dims == std::vector<std::size_t>{0, 1, 2, 2, 3});

    CHECK(ideal_lattice(matrix_algebra(2)).size() == 2);
    CHECK(ideal_lattice(truncated_polynomials(3)).size() == 4);

    // k x k: four ideals
    std::vector<std::vector<exactla::Vec>> t(2, std::vector<exactla::Vec>(2));
    t[0][0] = unit_vec(2, 0);
    t[0][1] = exactla::zero_vec(2);
    t[1][0] = exactla::zero_vec(2);
    t[1][1] = unit_vec(2, 1);
    exactla::Vec u{exactla::Scalar(1), exactla::Scalar(1)};
    const algcore::FDAlgebra kxk(t, u);
    CHECK(ideal_lattice(kxk).size() == 4);
}

TEST_CASE("enumeration over the two-vertex path algebra") {
    PathIdeals p;
    const auto all = enumerate_semisimple_systems(p.r, 2);
    CHECK(all.size() == 20);
    // spot checks: the radical grid is among them, the broken grid is not
    bool has_radical_grid = false, has_bad = false;
    for (const auto& s : all) {
        if (s.at(1, 2) == p.ka && s.at(1, 3) == p.zero && s.at(2, 3) == p.j)
            has_radical_grid = true;
        if (s.at(1, 2) == p.ka && s.at(1, 3) == p.zero && s.at(2, 3) == p.ka) has_bad = true;
    }
    CHECK(has_radical_grid);
    CHECK_FALSE(has_bad);
    // every produced grid revalidates and has semisimple levels
    for (const auto& s : all) {
        CHECK_NOTHROW(validate_system(s));
        CHECK(is_semisimple_system(s));
    }
    // the two mirror-image grids beyond the classical list are present
    bool mirror1 = false, mirror2 = false;
    for (const auto& s : all) {
        if (s.at(1, 2) == p.j && s.at(1, 3) == p.j && s.at(2, 3) == p.ka) mirror1 = true;
        if (s.at(1, 2) == p.kb && s.at(1, 3) == p.j && s.at(2, 3) == p.j) mirror2 = true;
    }
    CHECK(mirror1);
    CHECK(mirror2);
}

TEST_CASE("enumeration over small semisimple parents") {
    // over a field: pool {0, R}, four valid 2-systems
    std::vector<std::vector<exactla::Vec>> t1(1, std::vector<exactla::Vec>(1));
    t1[0][0] = unit_vec(1, 0);
    const algcore::FDAlgebra field(t1, unit_vec(1, 0));
    CHECK(enumerate_semisimple_systems(field, 2).size() == 4);

    // over k x k: sixteen (the middle entry is forced to the intersection)
    std::vector<std::vector<exactla::Vec>> t2(2, std::vector<exactla::Vec>(2));
    t2[0][0] = unit_vec(2, 0);
    t2[0][1] = exactla::zero_vec(2);
    t2[1][0] = exactla::zero_vec(2);
    t2[1][1] = unit_vec(2, 1);
    exactla::Vec u{exactla::Scalar(1), exactla::Scalar(1)};
    const algcore::FDAlgebra kxk(t2, u);
    const auto systems_kxk = enumerate_semisimple_systems(kxk, 2);
    CHECK(systems_kxk.size() == 16);
    for (const auto& s : systems_kxk)
        CHECK(s.at(1, 3) == intersect(s.at(1, 2), s.at(2, 3)));
}

TEST_CASE("enumeration at d = 1") {
    PathIdeals p;
    // any single ideal with semisimple quotient: j, ka, kb, full qualify; zero does not
    const auto all = enumerate_semisimple_systems(p.r, 1);
    CHECK(all.size() == 4);
}
