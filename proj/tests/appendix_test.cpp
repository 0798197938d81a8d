#include <doctest.h>

#include <algorithm>

#include "seplat/appendix.hpp"
#include "seplat/errors.hpp"
#include "seplat/menger.hpp"
#include "seplat/separations.hpp"
#include "testutil.hpp"

using namespace seplat;

TEST_SUITE("appendix") {

TEST_CASE("window shape") {
    CHECK_THROWS_AS(Figure1Window(2), InputError);
    const Figure1Window window(3);
    const Digraph& d = window.graph();
    CHECK(d.order() == 2 * (2 * 3) + 1 + 2); // 2n+1 sources, 2n sinks, u, v
    CHECK(d.source_set().size() == 7);
    CHECK(d.sink_set().size() == 6);
    // all paths have at most three vertices
    for (const Path& p : enumerate_ab_paths(d, static_cast<std::size_t>(d.order())))
        CHECK(p.size() <= 3);
}

TEST_CASE("S and T are minimal separations of the window") {
    for (int n = 3; n <= 6; ++n) {
        const Figure1Window window(n);
        CHECK(is_minimal_separation(window.graph(), window.s()));
        CHECK(is_minimal_separation(window.graph(), window.t()));
    }
}

TEST_CASE("figure1_check passes all claims for n = 3..10") {
    for (int n = 3; n <= 10; ++n) {
        const Figure1Report report = figure1_check(n);
        CHECK(report.all_pass);
        REQUIRE(report.claims.size() == 4);
        for (const Figure1Claim& claim : report.claims) {
            INFO(claim.name, ": ", claim.detail);
            CHECK(claim.pass);
        }
    }
}

TEST_CASE("window infimum sits below S and T under both order tests") {
    const Figure1Window window(4);
    const Digraph& d = window.graph();
    const VertexSet inf = infimum(d, {window.s(), window.t()});
    CHECK(leq_dual(d, inf, window.s()));
    CHECK(leq_dual(d, inf, window.t()));
    CHECK(leq(d, inf, window.s()));
    CHECK(leq(d, inf, window.t()));
}

TEST_CASE("window infimum matches the closed form") {
    const Figure1Report report = figure1_check(10);
    const Figure1Window window(10);
    CHECK(report.window_inf == window.inf_st());
    // (A \ {a0}) ∪ {u, v}: 2n sources plus the two middle vertices
    CHECK(report.window_inf.size() == 22);
    CHECK_FALSE(contains(report.window_inf, window.a(0)));
    CHECK(contains(report.window_inf, window.u()));
    CHECK(contains(report.window_inf, window.v()));
}

TEST_CASE("interior results are stable as the window grows") {
    const int m = 4;
    const Figure1Window small(m + 1);
    VertexSet reference;
    for (Vertex v : figure1_check(m + 1).window_inf)
        if (small.index_of(v) <= m) reference.push_back(v);
    std::vector<std::string> reference_labels = small.graph().labels(reference);

    for (int n = m + 2; n <= 9; ++n) {
        const Figure1Window window(n);
        VertexSet restricted;
        for (Vertex v : figure1_check(n).window_inf)
            if (window.index_of(v) <= m) restricted.push_back(v);
        CHECK(window.graph().labels(restricted) == reference_labels);
    }
}

TEST_CASE("the raw window, read as a finite digraph, loses S") {
    // finite truncation: the shifted matchings break, so S ∩ window is one
    // vertex too large to be Erdős–Menger in the standalone window
    for (int n = 3; n <= 6; ++n) {
        const Figure1Window window(n);
        const Digraph& d = window.graph();
        CHECK(static_cast<int>(max_disjoint_paths(d).size()) == 2 * n);
        const EmCheck check = is_em_separation(d, window.s());
        CHECK_FALSE(check);
        CHECK(check.failure == EmFailure::WrongCardinality);
    }
}

} // TEST_SUITE
