#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/algebra.hpp"
#include "qha/errors.hpp"
#include "qha/io.hpp"
#include "qha/module.hpp"
#include "qha/systems.hpp"
#include "testalgebras.hpp"

using namespace qha;
using exactla::Subspace;
using exactla::Vec;

TEST_CASE("algebra text round trip") {
    auto r = two_vertex_one_arrow();
    std::string text = io::write_algebra(r);
    auto back = io::parse_algebra(text);
    CHECK(back == r);
    CHECK(back.labels() == r.labels());
    CHECK(io::write_algebra(back) == text);

    auto zero = algcore::FDAlgebra({}, {}, {});
    CHECK(io::parse_algebra(io::write_algebra(zero)) == zero);
}

TEST_CASE("algebra text rejects malformed input") {
    CHECK_THROWS_AS(io::parse_algebra(""), ParseError);
    CHECK_THROWS_AS(io::parse_algebra("vertex a b\n"), ParseError);
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nmul 0 0 1\n"), ParseError);  // no unit
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nunit 1\n"), ParseError);     // no products
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nunit 1\nmul 0 0 1\nmul 0 0 1\n"),
                    ParseError);  // duplicate pair
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nunit 1\nmul 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nunit 1 2\nmul 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_algebra("algebra dim=1\nunit x\nmul 0 0 1\n"), ParseError);

    // comments and blank lines are fine
    auto a = io::parse_algebra("# one-dimensional\nalgebra dim=1\n\nunit 1  # the unit\nmul 0 0 1\n");
    CHECK(a.dim() == 1);
}

TEST_CASE("auto detection picks the quiver format") {
    auto from_quiver = io::parse_algebra_auto("vertex a b\narrow f a b\n");
    CHECK(from_quiver.dim() == 3);
    auto r = two_vertex_one_arrow();
    // same structure constants up to basis order: both have a 1-dim radical
    CHECK(algcore::jacobson_radical(from_quiver).dim() == 1);
    CHECK(io::parse_algebra_auto(io::write_algebra(r)) == r);
    CHECK_THROWS_AS(io::parse_algebra_auto("nonsense 1 2\n"), ParseError);
}

TEST_CASE("system json round trip") {
    auto r = two_vertex_one_arrow();
    auto ka = algcore::ideal_from_generators(r, {exactla::unit_vec(3, 0)});
    auto j = algcore::ideal_from_generators(r, {exactla::unit_vec(3, 2)});
    auto s = systems::system_from_upper(r, 2, {ka, Subspace::zero(3), j});

    std::string text = io::write_system(s);
    auto back = io::parse_system(text, r);
    CHECK(back == s);
    CHECK(io::write_system(back) == text);

    // labels name unit-vector generators
    CHECK(text.find("\"e_a\"") != std::string::npos);
    CHECK(text.find("\"f\"") != std::string::npos);
}

TEST_CASE("system json accepts labels, coordinates, stars, and defaults") {
    auto r = two_vertex_one_arrow();
    auto s = io::parse_system(
        R"({"d": 2, "ideals": {"1,2": ["e_a", ["0", "0", "1"]], "1,3": [], "2,3": [[0, 0, 1]]}})",
        r);
    CHECK(s.at(1, 2).dim() == 2);
    CHECK(s.at(2, 3).dim() == 1);
    CHECK(s.at(1, 3).dim() == 0);

    // omitted strict-upper entries and "*" both mean the whole algebra
    auto t = io::parse_system(R"({"d": 2, "ideals": {"1,3": "*"}})", r);
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j) CHECK(t.at(i, j).dim() == 3);

    auto u = io::parse_system(R"({"d": 1})", r);
    CHECK(u.at(1, 2).dim() == 3);
}

TEST_CASE("system json rejects malformed input") {
    auto r = two_vertex_one_arrow();
    CHECK_THROWS_AS(io::parse_system("[]", r), ParseError);
    CHECK_THROWS_AS(io::parse_system("{\"ideals\": {}}", r), ParseError);          // no d
    CHECK_THROWS_AS(io::parse_system("{\"d\": 0}", r), ParseError);
    CHECK_THROWS_AS(io::parse_system("{\"d\": 2, \"extra\": 1}", r), ParseError);
    CHECK_THROWS_AS(io::parse_system(R"({"d": 2, "ideals": {"2,1": []}})", r), ParseError);
    CHECK_THROWS_AS(io::parse_system(R"({"d": 2, "ideals": {"1,4": []}})", r), ParseError);
    CHECK_THROWS_AS(io::parse_system(R"({"d": 2, "ideals": {"1,2": ["zzz"]}})", r), ParseError);
    CHECK_THROWS_AS(io::parse_system(R"({"d": 2, "ideals": {"1,2": [["1"]]}})", r), ParseError);
    CHECK_THROWS_AS(io::parse_system(R"({"d": 2, "ideals": {"1,2": "full"}})", r), ParseError);
    CHECK_THROWS_AS(io::parse_system("{", r), ParseError);
}

TEST_CASE("generator lists close to two-sided ideals") {
    auto r = two_vertex_one_arrow();
    // e_a alone generates the span of e_a and f
    auto s = io::parse_system(R"({"d": 1, "ideals": {"1,2": ["e_a"]}})", r);
    CHECK(s.at(1, 2).dim() == 2);
    CHECK(s.at(1, 2).contains(exactla::unit_vec(3, 2)));
}

TEST_CASE("module text round trip") {
    auto r = two_vertex_one_arrow();
    auto m = repmod::regular_module(r);
    std::string text = io::write_module(m);
    auto back = io::parse_module(text, r);
    CHECK(back.dim() == m.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) CHECK(back.action(i) == m.action(i));
    repmod::validate_module(back);
    CHECK(io::write_module(back) == text);
}

TEST_CASE("module text rejects malformed input") {
    auto r = two_vertex_one_arrow();
    CHECK_THROWS_AS(io::parse_module("", r), ParseError);
    CHECK_THROWS_AS(io::parse_module("module dim=1\n", r), ParseError);  // missing actions
    CHECK_THROWS_AS(io::parse_module("module dim=1\nact 0 1\nact 1 1\n", r), ParseError);
    CHECK_THROWS_AS(io::parse_module("module dim=1\nact 0 1\nact 0 1\nact 1 1\nact 2 1\n", r),
                    ParseError);
    CHECK_THROWS_AS(io::parse_module("module dim=2\nact 0 1 0 0\nact 1 1\nact 2 1\n", r),
                    ParseError);
}

TEST_CASE("file helpers") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/path/x"), Error);
    const std::string path = "test_cli_scratch.txt";
    io::write_file(path, "payload");
    CHECK(io::read_file(path) == "payload");
    std::remove(path.c_str());
}
