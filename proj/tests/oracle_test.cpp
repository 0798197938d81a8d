#include <doctest.h>

#include "seplat/errors.hpp"
#include "seplat/oracle.hpp"
#include "testutil.hpp"

using namespace seplat;

TEST_SUITE("oracle") {

TEST_CASE("oracle minimal separations on the named graphs") {
    const Digraph d = test::diamond();
    const auto sets = oracle::minimal_separations(d);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == test::named(d, {"a"}));
    CHECK(sets[1] == test::named(d, {"x", "y"}));
    CHECK(sets[2] == test::named(d, {"b"}));

    CHECK(oracle::minimal_separations(test::par2()).size() == 9);

    const Digraph no_path({"a", "b"}, {}, {"a"}, {"b"});
    const auto trivial = oracle::minimal_separations(no_path);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].empty());
}

TEST_CASE("oracle max disjoint on the named graphs") {
    CHECK(oracle::max_disjoint(test::diamond()) == 1);
    CHECK(oracle::max_disjoint(test::par2()) == 2);
    CHECK(oracle::max_disjoint(Digraph({"a", "b"}, {}, {"a"}, {"b"})) == 0);
}

TEST_CASE("oracle bounds on the named graphs") {
    const Digraph p = test::par2();
    CHECK(oracle::glb(p, {test::named(p, {"x", "b2"}), test::named(p, {"b1", "y"})}) ==
          test::named(p, {"x", "y"}));
    CHECK(oracle::glb(p, {test::named(p, {"x", "b2"})}) == test::named(p, {"x", "b2"}));

    const Digraph d = test::diamond();
    CHECK(oracle::lub(d, {test::named(d, {"a"}), test::named(d, {"x", "y"})}) ==
          test::named(d, {"x", "y"}));
}

TEST_CASE("oracle guard refuses big graphs") {
    std::vector<std::string> labels;
    for (int i = 0; i < 17; ++i) labels.push_back("v" + std::to_string(i));
    const Digraph big = Digraph::from_indexed(labels, {}, {0}, {1});
    CHECK_THROWS_AS(oracle::all_ab_paths(big), GuardError);
}

TEST_CASE("verify is clean on the named graphs") {
    CHECK(oracle::verify(test::diamond()).ok());
    CHECK(oracle::verify(test::par2()).ok());
    CHECK(oracle::verify(Digraph({"v"}, {}, {"v"}, {"v"})).ok());
}

TEST_CASE("verify is clean on random graphs") {
    test::Rng rng(0xf00d);
    for (int round = 0; round < 25; ++round) {
        const oracle::VerifyReport report = oracle::verify(test::mixed_digraph(rng, 8, 16));
        CHECK(report.mismatches == 0);
    }
}

} // TEST_SUITE
