#include <doctest.h>

#include <algorithm>

#include "seplat/errors.hpp"
#include "seplat/lattice.hpp"
#include "seplat/separations.hpp"
#include "testutil.hpp"

using namespace seplat;

namespace {

FiniteLattice chain(int length) {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> matrix(length, std::vector<bool>(length, false));
    for (int i = 0; i < length; ++i) {
        labels.push_back("c" + std::to_string(i));
        for (int j = i; j < length; ++j) matrix[i][j] = true;
    }
    return FiniteLattice::checked(std::move(labels), std::move(matrix));
}

// bottom, two incomparable atoms, top
FiniteLattice square() {
    std::vector<std::vector<bool>> matrix(4, std::vector<bool>(4, false));
    for (int i = 0; i < 4; ++i) matrix[i][i] = true;
    matrix[0][1] = matrix[0][2] = matrix[0][3] = true;
    matrix[1][3] = matrix[2][3] = true;
    return FiniteLattice::checked({"0", "p", "q", "1"}, std::move(matrix));
}

// pentagon: 0 < a < 1, 0 < b < c < 1, a incomparable to b and c
FiniteLattice pentagon() {
    std::vector<std::vector<bool>> matrix(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) matrix[i][i] = true;
    auto le = [&](int i, int j) { matrix[i][j] = true; };
    le(0, 1);
    le(0, 2);
    le(0, 3);
    le(0, 4);
    le(1, 4);
    le(2, 3);
    le(2, 4);
    le(3, 4);
    return FiniteLattice::checked({"0", "a", "b", "c", "1"}, std::move(matrix));
}

FinitePoset random_poset(test::Rng& rng, int max_elements) {
    const int n = 1 + rng.below(max_elements);
    // relations only from lower to higher index, then transitively closed
    std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) matrix[i][i] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(3) == 0) matrix[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (matrix[i][k] && matrix[k][j]) matrix[i][j] = true;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FinitePoset::checked(std::move(labels), std::move(matrix));
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("construction validates lattice structure") {
    CHECK_THROWS_AS(FiniteLattice::checked({}, {}), InputError);
    // two incomparable elements: no meet
    std::vector<std::vector<bool>> two{{true, false}, {false, true}};
    CHECK_THROWS_AS(FiniteLattice::checked({"x", "y"}, two), InputError);
    // broken reflexivity
    std::vector<std::vector<bool>> bad{{false}};
    CHECK_THROWS_AS(FiniteLattice::checked({"x"}, bad), InputError);
}

TEST_CASE("meet, join, bottom, top") {
    const FiniteLattice l = square();
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 3);
    CHECK(l.meet(1, 2) == 0);
    CHECK(l.join(1, 2) == 3);
    CHECK(l.meet(1, 3) == 1);
}

TEST_CASE("distributivity") {
    CHECK(is_distributive(square()));
    CHECK(is_distributive(chain(1)));
    CHECK(is_distributive(chain(5)));
    CHECK_FALSE(is_distributive(pentagon()));
    const auto triple = distributivity_violation(pentagon());
    REQUIRE(triple);
    const FiniteLattice n5 = pentagon();
    const int x = (*triple)[0], y = (*triple)[1], z = (*triple)[2];
    CHECK(n5.meet(x, n5.join(y, z)) != n5.join(n5.meet(x, y), n5.meet(x, z)));
}

TEST_CASE("join irreducibles of small lattices") {
    const FinitePoset of_chain = join_irreducibles(chain(3));
    CHECK(of_chain.size() == 2);
    CHECK(of_chain.less_eq(0, 1));

    const FinitePoset of_square = join_irreducibles(square());
    CHECK(of_square.size() == 2);
    CHECK_FALSE(of_square.less_eq(0, 1));
    CHECK_FALSE(of_square.less_eq(1, 0));
}

TEST_CASE("downset lattice of small posets") {
    const FinitePoset empty = FinitePoset::checked({}, {});
    CHECK(downset_lattice(empty).size() == 1);

    const FinitePoset two_chain = join_irreducibles(chain(3));
    const FiniteLattice back = downset_lattice(two_chain);
    CHECK(back.size() == 3);
    REQUIRE(are_isomorphic(back, chain(3)));
}

TEST_CASE("are_isomorphic on small lattices") {
    REQUIRE(are_isomorphic(chain(3), chain(3)));
    CHECK_FALSE(are_isomorphic(chain(3), square()));
    CHECK_FALSE(are_isomorphic(chain(4), square())); // same size, different shape

    const auto mapping = are_isomorphic(square(), square());
    REQUIRE(mapping);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(square().less_eq(i, j) == square().less_eq((*mapping)[i], (*mapping)[j]));

    CHECK_THROWS_AS(are_isomorphic(chain(3), chain(3), 2), GuardError);
}

TEST_CASE("par2 separation lattice is the 3-chain squared") {
    const Digraph p = test::par2();
    const FiniteLattice grid = to_lattice(enumerate_minimal_separations(p), p);
    // product of two 3-chains, extensionally
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> matrix(9, std::vector<bool>(9, false));
    for (int i = 0; i < 9; ++i) {
        labels.push_back("g" + std::to_string(i));
        for (int j = 0; j < 9; ++j)
            matrix[i][j] = (i / 3 <= j / 3) && (i % 3 <= j % 3);
    }
    const FiniteLattice expected = FiniteLattice::checked(std::move(labels), std::move(matrix));
    REQUIRE(are_isomorphic(grid, expected));
}

TEST_CASE("Birkhoff round trip on random posets") {
    test::Rng rng(0xb1ff);
    for (int round = 0; round < 50; ++round) {
        const FinitePoset p = random_poset(rng, 5);
        const FiniteLattice l = downset_lattice(p);
        REQUIRE(is_distributive(l));
        const FiniteLattice reconstructed = downset_lattice(join_irreducibles(l));
        REQUIRE(are_isomorphic(reconstructed, l,
                               std::max<std::size_t>(kIsomorphismGuard, l.size())));
    }
}

} // TEST_SUITE
