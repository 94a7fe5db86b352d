#ifndef MAG_ANCESTRAL_HPP
#define MAG_ANCESTRAL_HPP

#include "mag/graph.hpp"

namespace mag {

struct AncestralReport {
    bool ancestral;
    std::vector<std::string> violations;
};

// Def: (a) no directed cycles; (b) no bidirected edge between ancestrally
// related vertices; (c) undirected-edge endpoints have no parents or spouses.
AncestralReport checkAncestral(const MixedGraph& g);
bool isAncestral(const MixedGraph& g);

// Every non-adjacent pair has an m-separating set.  Implemented via the
// inducing-path criterion; requires an ancestral input.
bool isMaximal(const MixedGraph& g);

// Independent route: direct search over all conditioning sets.  Must agree
// with isMaximal on ancestral graphs.
bool isMaximalBySeparation(const MixedGraph& g);

// Adds bidirected edges for inducing-path-connected non-adjacent pairs until
// a fixed point; the result is maximal with the same independence model.
MixedGraph maximalize(const MixedGraph& g);

struct BalanceReport {
    bool balanced;
    std::vector<Triple> unbalanced;  // triangle (y, x, z) unbalanced at x
};

// A triangle is balanced at x when the two marks at x agree, or they differ
// as y*->x, x->z and the third edge has an arrowhead at z from y.
BalanceReport checkBalanced(const MixedGraph& g);
bool isBalanced(const MixedGraph& g);

// Chordality of an undirected graph via maximum cardinality search and a
// perfect-elimination-ordering check.
bool isChordal(const MixedGraph& g);

} // namespace mag

#endif
