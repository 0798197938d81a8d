#include <doctest.h>

#include "seplat/errors.hpp"
#include "seplat/json_io.hpp"
#include "seplat/menger.hpp"
#include "seplat/separations.hpp"
#include "testutil.hpp"

using namespace seplat;

TEST_SUITE("json") {

TEST_CASE("graph round trip") {
    const Digraph d = test::par2();
    const Digraph back = digraph_from_json(digraph_to_json(d));
    CHECK(back.order() == d.order());
    CHECK(back.edges() == d.edges());
    CHECK(back.source_set() == d.source_set());
    CHECK(back.sink_set() == d.sink_set());
}

TEST_CASE("graph schema is strict") {
    CHECK_THROWS_AS(digraph_from_json("{"), InputError);
    CHECK_THROWS_AS(digraph_from_json(R"({"vertices":[],"edges":[],"A":[]})"), InputError);
    CHECK_THROWS_AS(
        digraph_from_json(R"({"vertices":[],"edges":[],"A":[],"B":[],"extra":1})"), InputError);
    CHECK_THROWS_AS(
        digraph_from_json(R"({"vertices":["a","a"],"edges":[],"A":[],"B":[]})"), InputError);
    CHECK_THROWS_AS(digraph_from_json(
                        R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"]],"A":[],"B":[]})"),
                    InputError);
    CHECK_THROWS_AS(
        digraph_from_json(R"({"vertices":["a"],"edges":[["a","a"]],"A":[],"B":[]})"), InputError);
    CHECK_THROWS_AS(
        digraph_from_json(R"({"vertices":["a"],"edges":[],"A":["z"],"B":[]})"), InputError);
    CHECK_THROWS_AS(
        digraph_from_json(R"({"vertices":["a"],"edges":[],"A":["a","a"],"B":[]})"), InputError);
}

TEST_CASE("deterministic output") {
    const Digraph d = test::diamond();
    CHECK(digraph_to_json(d) == digraph_to_json(test::diamond()));
    const auto lattice = enumerate_minimal_separations(d);
    CHECK(separation_lattice_to_json(lattice, d) ==
          separation_lattice_to_json(enumerate_minimal_separations(test::diamond()), d));
}

TEST_CASE("lattice json round trip") {
    const Digraph d = test::diamond();
    const FiniteLattice l = to_lattice(enumerate_minimal_separations(d), d);
    const FiniteLattice back = finite_lattice_from_json(finite_lattice_to_json(l));
    CHECK(back.size() == l.size());
    for (int i = 0; i < l.size(); ++i) {
        CHECK(back.label(i) == l.label(i));
        for (int j = 0; j < l.size(); ++j) CHECK(back.less_eq(i, j) == l.less_eq(i, j));
    }
    CHECK_THROWS_AS(finite_lattice_from_json(R"({"elements":["x"],"leq":[[0]]})"), InputError);
}

TEST_CASE("hasse dot lists covers only") {
    const Digraph d = test::diamond();
    const std::string dot = hasse_dot(enumerate_minimal_separations(d), d);
    CHECK(dot.find("n0 -> n1") != std::string::npos); // {a} -> {x,y}
    CHECK(dot.find("n1 -> n2") != std::string::npos); // {x,y} -> {b}
    CHECK(dot.find("n0 -> n2") == std::string::npos); // transitive edge dropped
}

TEST_CASE("witness serialization shape") {
    const Digraph d = test::diamond();
    const auto witness = is_em_separation(d, test::named(d, {"a"})).witness;
    REQUIRE(witness);
    const std::string text = witness_to_json(d, *witness);
    CHECK(text.find("\"separation\"") != std::string::npos);
    CHECK(text.find("\"paths\"") != std::string::npos);
}

TEST_CASE("vertex set parsing") {
    const Digraph d = test::diamond();
    CHECK(vertex_set_from_json(d, R"(["x","y"])") == test::named(d, {"x", "y"}));
    CHECK_THROWS_AS(vertex_set_from_json(d, R"(["nope"])"), InputError);
    CHECK_THROWS_AS(vertex_set_from_json(d, R"({"x":1})"), InputError);
}

} // TEST_SUITE
