#include <doctest.h>

#include "mag/ancestral.hpp"

#include "mag/oracle.hpp"
#include "mag/separation.hpp"

#include "fixtures.hpp"
#include "suite.hpp"

using namespace mag;
using fixtures::A;
using fixtures::T;

TEST_CASE("ancestral conditions") {
    CHECK(isAncestral(fixtures::fig1Mag()));

    // (b): a -> b -> c with c <-> a makes a an ancestor of c.
    MixedGraph viaB = buildGraph({"a", "b", "c"},
                                 {{"a", "b", T, A}, {"b", "c", T, A}, {"c", "a", A, A}});
    AncestralReport rb = checkAncestral(viaB);
    CHECK_FALSE(rb.ancestral);
    CHECK_FALSE(rb.violations.empty());

    // (c): undirected-edge endpoint with a parent.
    MixedGraph viaC = buildGraph({"a", "b", "c"}, {{"a", "b", T, A}, {"b", "c", T, T}});
    CHECK_FALSE(isAncestral(viaC));

    // (a): directed 3-cycle.
    MixedGraph cycle = buildGraph({"a", "b", "c"},
                                  {{"a", "b", T, A}, {"b", "c", T, A}, {"c", "a", T, A}});
    CHECK_FALSE(isAncestral(cycle));
}

TEST_CASE("DAGs and undirected graphs are always maximal") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        MixedGraph d = suite::randomDag(rng, 5);
        CHECK(isMaximal(d));
        CHECK(isMaximal(skeleton(d)));
    }
}

TEST_CASE("fig2 maximality") {
    CHECK_FALSE(isMaximal(fixtures::fig2a()));
    CHECK(isMaximal(fixtures::fig2b()));
    CHECK_THROWS_AS(isMaximal(buildGraph({"a", "b", "c"},
                                         {{"a", "b", T, A}, {"b", "c", T, T}})),
                    std::invalid_argument);
}

TEST_CASE("both maximality routes agree on ancestral graphs") {
    for (const MixedGraph& skel : suite::allSkeletons(4)) {
        if (skel.edgeCount() < 3) continue;  // smaller cases trivially maximal
        for (const MixedGraph& g : enumerateOrientations(skel, OrientationFilter::Ancestral))
            CHECK(isMaximal(g) == isMaximalBySeparation(g));
    }
}

TEST_CASE("maximalize fig2a yields fig2b") {
    CHECK(maximalize(fixtures::fig2a()) == fixtures::fig2b());
}

TEST_CASE("maximalize is idempotent and model-preserving") {
    CHECK(maximalize(fixtures::fig1Mag()) == fixtures::fig1Mag());

    std::mt19937 rng(37);
    int nonMaximalSeen = 0;
    for (int trial = 0; trial < 40 && nonMaximalSeen < 5; ++trial) {
        MixedGraph skel = suite::randomConnectedSkeleton(rng, 5, 7);
        for (const MixedGraph& g : enumerateOrientations(skel, OrientationFilter::Ancestral)) {
            if (isMaximal(g)) continue;
            ++nonMaximalSeen;
            MixedGraph m = maximalize(g);
            CHECK(isAncestral(m));
            CHECK(isMaximal(m));
            CHECK(maximalize(m) == m);
            CHECK(independenceModel(m) == independenceModel(g));
            break;
        }
    }
    CHECK(nonMaximalSeen > 0);
}

TEST_CASE("balance of fixtures") {
    CHECK(isBalanced(fixtures::fig1Mag()));
    CHECK(isBalanced(fixtures::fig2b()));

    // Partially directed 3-cycle: unbalanced at every vertex.
    MixedGraph cycle = buildGraph({"x", "y", "z"},
                                  {{"x", "y", T, A}, {"y", "z", T, A}, {"z", "x", T, A}});
    BalanceReport r = checkBalanced(cycle);
    CHECK_FALSE(r.balanced);
    CHECK(r.unbalanced.size() == 3);
}

TEST_CASE("ancestral graphs are balanced") {
    for (const MixedGraph& skel : suite::allSkeletons(4)) {
        if (skel.edgeCount() < 3) continue;  // balance is about triangles
        for (const MixedGraph& g : enumerateOrientations(skel, OrientationFilter::Ancestral))
            CHECK(isBalanced(g));
    }
}

TEST_CASE("chordality") {
    auto undirected = [](const std::vector<std::string>& vs,
                         const std::vector<std::pair<std::string, std::string>>& es) {
        MixedGraph g;
        for (const std::string& v : vs) g.addVertex(v);
        for (const auto& [a, b] : es) g.addEdge(a, b, Mark::Tail, Mark::Tail);
        return g;
    };
    CHECK(isChordal(undirected({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})));
    CHECK(isChordal(undirected({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
    // 4-cycle without a chord.
    CHECK_FALSE(isChordal(
        undirected({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}})));
    CHECK(isChordal(undirected({"a", "b", "c", "d"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"a", "c"}})));
    CHECK_THROWS_AS(isChordal(fixtures::edge1()), std::invalid_argument);
}
