#ifndef MAG_TEST_FIXTURES_HPP
#define MAG_TEST_FIXTURES_HPP

#include "mag/graph.hpp"

namespace fixtures {

using mag::Mark;
using mag::MixedGraph;

constexpr Mark T = Mark::Tail;
constexpr Mark A = Mark::Arrowhead;

// Azt -> Pcp, H -> Pcp, H -> CD4, Ap -> CD4.
inline MixedGraph fig1Dag() {
    return mag::buildGraph({"Azt", "Pcp", "H", "CD4", "Ap"},
                           {{"Azt", "Pcp", T, A},
                            {"H", "Pcp", T, A},
                            {"H", "CD4", T, A},
                            {"Ap", "CD4", T, A}});
}

// Azt -> Pcp, Pcp <-> CD4, Ap -> CD4.
inline MixedGraph fig1Mag() {
    return mag::buildGraph({"Azt", "Pcp", "CD4", "Ap"},
                           {{"Azt", "Pcp", T, A},
                            {"Pcp", "CD4", A, A},
                            {"Ap", "CD4", T, A}});
}

// Non-maximal: gamma <-> beta <-> alpha <-> delta with beta -> delta and
// alpha -> gamma; gamma and delta cannot be m-separated.
inline MixedGraph fig2a() {
    return mag::buildGraph({"gamma", "beta", "alpha", "delta"},
                           {{"gamma", "beta", A, A},
                            {"beta", "alpha", A, A},
                            {"alpha", "delta", A, A},
                            {"beta", "delta", T, A},
                            {"alpha", "gamma", T, A}});
}

// The maximal completion of fig2a: gamma <-> delta added.
inline MixedGraph fig2b() {
    return mag::buildGraph({"gamma", "beta", "alpha", "delta"},
                           {{"gamma", "beta", A, A},
                            {"beta", "alpha", A, A},
                            {"alpha", "delta", A, A},
                            {"beta", "delta", T, A},
                            {"alpha", "gamma", T, A},
                            {"gamma", "delta", A, A}});
}

// x -> q, q -> y, q <-> beta, beta <-> y.
inline MixedGraph fig3G1() {
    return mag::buildGraph({"x", "q", "y", "beta"},
                           {{"x", "q", T, A},
                            {"q", "y", T, A},
                            {"q", "beta", A, A},
                            {"beta", "y", A, A}});
}

// x <-> q, q -> y, q <-> beta, beta <-> y.
inline MixedGraph fig3G2() {
    return mag::buildGraph({"x", "q", "y", "beta"},
                           {{"x", "q", A, A},
                            {"q", "y", T, A},
                            {"q", "beta", A, A},
                            {"beta", "y", A, A}});
}

// x -> q, q -> y, q <-> beta, beta -> y.
inline MixedGraph fig3G3() {
    return mag::buildGraph({"x", "q", "y", "beta"},
                           {{"x", "q", T, A},
                            {"q", "y", T, A},
                            {"q", "beta", A, A},
                            {"beta", "y", T, A}});
}

// x -> y -> z.
inline MixedGraph chain3() {
    return mag::buildGraph({"x", "y", "z"}, {{"x", "y", T, A}, {"y", "z", T, A}});
}

// a -> b.
inline MixedGraph edge1() {
    return mag::buildGraph({"a", "b"}, {{"a", "b", T, A}});
}

// x -> y <- z.
inline MixedGraph collider3() {
    return mag::buildGraph({"x", "y", "z"}, {{"x", "y", T, A}, {"z", "y", T, A}});
}

} // namespace fixtures

#endif
