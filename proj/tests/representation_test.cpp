#include <doctest.h>

#include <algorithm>

#include "seplat/errors.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"
#include "seplat/representation.hpp"
#include "seplat/separations.hpp"
#include "testutil.hpp"

using namespace seplat;

namespace {

FiniteLattice pentagon() {
    std::vector<std::vector<bool>> matrix(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) matrix[i][i] = true;
    matrix[0][1] = matrix[0][2] = matrix[0][3] = matrix[0][4] = true;
    matrix[1][4] = true;
    matrix[2][3] = matrix[2][4] = matrix[3][4] = true;
    return FiniteLattice::checked({"0", "a", "b", "c", "1"}, std::move(matrix));
}

FiniteLattice chain(int length) {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> matrix(length, std::vector<bool>(length, false));
    for (int i = 0; i < length; ++i) {
        labels.push_back("c" + std::to_string(i));
        for (int j = i; j < length; ++j) matrix[i][j] = true;
    }
    return FiniteLattice::checked(std::move(labels), std::move(matrix));
}

FiniteLattice square() {
    std::vector<std::vector<bool>> matrix(4, std::vector<bool>(4, false));
    for (int i = 0; i < 4; ++i) matrix[i][i] = true;
    matrix[0][1] = matrix[0][2] = matrix[0][3] = true;
    matrix[1][3] = matrix[2][3] = true;
    return FiniteLattice::checked({"0", "p", "q", "1"}, std::move(matrix));
}

} // namespace

TEST_SUITE("representation") {

TEST_CASE("blow_up shape on the diamond") {
    const Digraph d = test::diamond();
    const Digraph doubled = blow_up(d, 2);
    CHECK(doubled.order() == 8);
    CHECK(doubled.edge_count() == 16);
    CHECK(doubled.source_set().size() == 2);
    CHECK(doubled.sink_set().size() == 2);

    CHECK_THROWS_AS(blow_up(d, 0), InputError);
}

TEST_CASE("blow_up edge rule is exact") {
    test::Rng rng(0xed6e);
    for (int round = 0; round < 10; ++round) {
        const Digraph base = test::mixed_digraph(rng, 5, 10);
        const int copies = 2 + rng.below(2);
        const BlowUp blowup(base, copies);
        const Digraph& product = blowup.product();
        for (Vertex u = 0; u < base.order(); ++u)
            for (Vertex v = 0; v < base.order(); ++v)
                for (int alpha = 0; alpha < copies; ++alpha)
                    for (int beta = 0; beta < copies; ++beta)
                        CHECK(product.has_edge(blowup.copy_of(u, alpha), blowup.copy_of(v, beta)) ==
                              base.has_edge(u, v));
        CHECK(product.edge_count() == base.edge_count() * copies * copies);
    }
}

TEST_CASE("blow_up with one copy reproduces the base") {
    const Digraph d = test::par2();
    const Digraph same = blow_up(d, 1);
    CHECK(same.order() == d.order());
    CHECK(same.edge_count() == d.edge_count());
    for (const auto& [from, to] : d.edges())
        CHECK(same.has_edge(from, to));
}

TEST_CASE("lift and project round-trip") {
    const Digraph d = test::diamond();
    const BlowUp blowup(d, 2);
    const VertexSet t = test::named(d, {"x", "y"});
    const VertexSet lifted = blowup.lift(t);
    CHECK(lifted.size() == 4);
    CHECK(blowup.project(lifted) == t);

    VertexSet broken = lifted;
    broken.pop_back();
    CHECK_THROWS_WITH_AS(blowup.project(broken),
                         doctest::Contains("not copy-saturated"), InputError);
}

TEST_CASE("minimum cut scales with the copy count") {
    const Digraph p = test::par2();
    CHECK(max_disjoint_paths(blow_up(p, 2)).size() == 2 * max_disjoint_paths(p).size());
    const Digraph d = test::diamond();
    CHECK(max_disjoint_paths(blow_up(d, 3)).size() == 3 * max_disjoint_paths(d).size());
}

TEST_CASE("blow-up minimal separations are exactly the lifted ones") {
    const Digraph d = test::diamond();
    const BlowUp blowup(d, 2);
    const auto base_lattice = enumerate_minimal_separations(d);
    const auto blown_lattice = enumerate_minimal_separations(blowup.product());
    std::vector<VertexSet> lifted;
    for (const VertexSet& t : base_lattice.elements) lifted.push_back(blowup.lift(t));
    std::sort(lifted.begin(), lifted.end());
    CHECK(blown_lattice.elements == lifted);
}

TEST_CASE("uniform lift is Erdős–Menger only at minimum cardinality") {
    // the concrete finite gap: |lift(T)| = copies * |T|, so only minimum T
    // survive the uniform blow-up
    const Digraph d = test::diamond();
    const BlowUp blowup(d, 2);
    CHECK(is_em_separation(blowup.product(), blowup.lift(test::named(d, {"a"}))));
    const EmCheck fat = is_em_separation(blowup.product(), blowup.lift(test::named(d, {"x", "y"})));
    CHECK_FALSE(fat);
    CHECK(fat.failure == EmFailure::WrongCardinality);
}

TEST_CASE("witness_blowup_em on the diamond") {
    const Digraph d = test::diamond();
    {
        const AsymmetricBlowUp blowup(d, test::named(d, {"x", "y"}), 1);
        const OrthogonalityWitness w = blowup.witness();
        CHECK(w.system.size() == 2);
        CHECK(is_separation(blowup.product(), w.separation));
    }
    {
        const AsymmetricBlowUp blowup(d, test::named(d, {"x", "y"}), 2);
        CHECK(blowup.other_copies() == 4);
        CHECK(blowup.witness().system.size() == 4);
    }
    {
        const AsymmetricBlowUp blowup(d, test::named(d, {"a"}), 3);
        CHECK(blowup.witness().system.size() == 3);
    }
    CHECK_THROWS_AS(AsymmetricBlowUp(d, test::named(d, {"x"}), 1), InputError);
}

TEST_CASE("witness_blowup_em over random bases") {
    test::Rng rng(0xb1c);
    for (int round = 0; round < 25; ++round) {
        const Digraph d = test::mixed_digraph(rng, 6, 10);
        for (const VertexSet& t : enumerate_minimal_separations(d).elements) {
            const OrthogonalityWitness w = witness_blowup_em(d, t, 1 + rng.below(2));
            CHECK(w.separation.size() == w.system.size());
        }
    }
}

TEST_CASE("represent_distributive on the named lattices") {
    {
        const DistributiveRepresentation rep = represent_distributive(chain(3));
        CHECK(rep.graph.order() == 3); // one path a -> w -> b
        CHECK(rep.em.size() == 3);
    }
    {
        const DistributiveRepresentation rep = represent_distributive(square());
        CHECK(rep.graph.order() == 4); // two disjoint edges
        CHECK(rep.graph.edge_count() == 2);
        CHECK(rep.em.size() == 4);
    }
    {
        const DistributiveRepresentation rep = represent_distributive(chain(1));
        CHECK(rep.em.size() == 1);
    }
    CHECK_THROWS_WITH_AS(represent_distributive(pentagon()),
                         doctest::Contains("violates the law"), InputError);
}

TEST_CASE("represent_distributive round-trips random Birkhoff lattices") {
    test::Rng rng(0x41e);
    for (int round = 0; round < 25; ++round) {
        const int n = 1 + rng.below(5);
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
        const FiniteLattice l =
            downset_lattice(FinitePoset::checked(std::move(labels), std::move(matrix)));

        const DistributiveRepresentation rep = represent_distributive(l);
        const auto iso = are_isomorphic(to_lattice(rep.em, rep.graph), l,
                                        std::max<std::size_t>(kIsomorphismGuard, l.size()));
        REQUIRE(iso);
    }
}

} // TEST_SUITE
