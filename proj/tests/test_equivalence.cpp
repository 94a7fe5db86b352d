#include <doctest.h>

#include "mag/equivalence.hpp"

#include "mag/ancestral.hpp"
#include "mag/oracle.hpp"
#include "mag/separation.hpp"

#include "fixtures.hpp"
#include "suite.hpp"

using namespace mag;
using fixtures::A;
using fixtures::T;

TEST_CASE("discriminating path in fig3") {
    for (const MixedGraph& g :
         {fixtures::fig3G1(), fixtures::fig3G2(), fixtures::fig3G3()}) {
        std::vector<Path> paths = findDiscriminatingPaths(g, "q", "beta", "y");
        REQUIRE(paths.size() == 1);
        CHECK(paths[0] == Path{"x", "q", "beta", "y"});
    }
}

TEST_CASE("no discriminating paths without colliders") {
    MixedGraph chain = fixtures::chain3();
    CHECK(findDiscriminatingPaths(chain, "x", "y", "z").empty());
    CHECK_THROWS_AS(findDiscriminatingPaths(chain, "x", "z", "y"), std::invalid_argument);
}

TEST_CASE("orders in fig3") {
    OrderMap orders = computeOrders(fixtures::fig3G1());
    CHECK(orders.orderOf({"x", "q", "beta"}) == 0);
    CHECK(orders.orderOf({"x", "q", "y"}) == 0);
    CHECK(orders.orderOf({"q", "beta", "y"}) == 1);
    CHECK(orders.orders.size() == 3);
}

TEST_CASE("no triple in fig2b has order") {
    // Complete skeleton: no unshielded triples, so nothing can seed the
    // recursion.
    OrderMap orders = computeOrders(fixtures::fig2b());
    CHECK(orders.orders.empty());
}

TEST_CASE("DAG orders stay at most one") {
    for (const MixedGraph& skel : suite::allSkeletons(4)) {
        for (const MixedGraph& d : enumerateOrientations(skel, OrientationFilter::Dag)) {
            OrderMap orders = computeOrders(d);
            for (const auto& [t, order] : orders.orders) CHECK(order <= 1);
        }
    }
}

TEST_CASE("order computation is deterministic") {
    MixedGraph g = fixtures::fig3G1();
    OrderMap first = computeOrders(g);
    OrderMap second = computeOrders(g);
    CHECK(first.orders == second.orders);
}

TEST_CASE("markov equivalence of the fig3 graphs") {
    CHECK(markovEquivalent(fixtures::fig3G1(), fixtures::fig3G2()));
    CHECK_FALSE(markovEquivalent(fixtures::fig3G1(), fixtures::fig3G3()));
    EquivalenceResult r =
        markovEquivalentWithReason(fixtures::fig3G1(), fixtures::fig3G3());
    CHECK(r.reason == "collider with order differs: (q,beta,y)");
    for (const MixedGraph& g : {fixtures::fig1Mag(), fixtures::fig3G1(),
                                fixtures::fig2b(), fixtures::chain3()})
        CHECK(markovEquivalent(g, g));
}

TEST_CASE("markov equivalence rejects bad inputs") {
    CHECK_THROWS_AS(markovEquivalent(fixtures::fig2a(), fixtures::fig2b()),
                    std::invalid_argument);
}

TEST_CASE("equivalence criterion matches model equality on 3-vertex graphs") {
    for (const MixedGraph& skel : suite::allSkeletons(3)) {
        std::vector<MixedGraph> mags =
            enumerateOrientations(skel, OrientationFilter::MaximalAncestral);
        std::vector<IndependenceModel> models;
        for (const MixedGraph& g : mags) models.push_back(independenceModel(g));
        for (std::size_t i = 0; i < mags.size(); ++i)
            for (std::size_t j = i + 1; j < mags.size(); ++j)
                CHECK(markovEquivalent(mags[i], mags[j]) == (models[i] == models[j]));
    }
}

TEST_CASE("DAG pairs reduce to the skeleton plus unshielded-collider criterion") {
    for (const MixedGraph& skel : suite::allSkeletons(4)) {
        std::vector<MixedGraph> dags = enumerateOrientations(skel, OrientationFilter::Dag);
        for (std::size_t i = 0; i < dags.size(); ++i) {
            std::set<Triple> ci;
            for (const Triple& t : unshieldedTriples(dags[i]))
                if (isCollider(dags[i], t.a, t.b, t.c)) ci.insert(t.canonical());
            for (std::size_t j = i + 1; j < dags.size(); ++j) {
                std::set<Triple> cj;
                for (const Triple& t : unshieldedTriples(dags[j]))
                    if (isCollider(dags[j], t.a, t.b, t.c)) cj.insert(t.canonical());
                CHECK(markovEquivalent(dags[i], dags[j]) == (ci == cj));
            }
        }
    }
}

TEST_CASE("discriminating path semantics for separating sets") {
    // For the fig3 discriminating path <x,q,beta,y> and any separating set Z
    // containing q: beta notin Z when beta is a collider; beta in every
    // separating set when beta is a non-collider.
    for (const MixedGraph& g : {fixtures::fig3G1(), fixtures::fig3G2()}) {
        bool collider = isCollider(g, "q", "beta", "y");
        for (const auto& z : allSubsets({"q", "beta"})) {
            if (!z.count("q")) continue;
            if (!mSeparated(g, "x", "y", z)) continue;
            if (collider) CHECK_FALSE(z.count("beta"));
        }
    }
    MixedGraph g3 = fixtures::fig3G3();
    REQUIRE_FALSE(isCollider(g3, "q", "beta", "y"));
    for (const auto& z : allSubsets({"q", "beta"})) {
        if (mSeparated(g3, "x", "y", z)) CHECK(z.count("beta"));
    }
}

TEST_CASE("filtered discriminating path search honours the order bound") {
    MixedGraph g = fixtures::fig3G1();
    OrderMap orders = computeOrders(g);
    DiscriminatingPathFilter filter{&orders, 0};
    CHECK(findDiscriminatingPaths(g, "q", "beta", "y", filter).size() == 1);
    // An empty order map blocks every path.
    OrderMap empty;
    DiscriminatingPathFilter blocked{&empty, 10};
    CHECK(findDiscriminatingPaths(g, "q", "beta", "y", blocked).empty());
}
