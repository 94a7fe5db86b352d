#ifndef MAG_ORACLE_HPP
#define MAG_ORACLE_HPP

#include <functional>

#include "mag/graph.hpp"
#include "mag/separation.hpp"

namespace mag {

enum class OrientationFilter { All, Ancestral, MaximalAncestral, Dag };

// Visits every assignment of the four edge types to the skeleton's edges
// (4^|E| total) that passes the filter, in deterministic order: edges in
// canonical order, types in order ->, <-, <->, --.
void forEachOrientation(const MixedGraph& skel, OrientationFilter filter,
                        const std::function<void(const MixedGraph&)>& visit,
                        std::size_t cap = std::size_t{1} << 24);

std::vector<MixedGraph> enumerateOrientations(const MixedGraph& skel,
                                              OrientationFilter filter,
                                              std::size_t cap = std::size_t{1} << 24);

// All maximal ancestral orientations of skeleton(g) with g's independence
// model; includes g itself.  When searchAllSkeletons is set, every skeleton
// over the vertex set is searched instead (debug mode, small n only).
std::vector<MixedGraph> enumerateClass(const MixedGraph& g,
                                       bool searchAllSkeletons = false);

// Fold of join over the enumerated class: the ground truth for orient_sup.
MixedGraph supBruteforce(const MixedGraph& g);

enum class EndClassification { AlwaysArrowhead, AlwaysTail, Varies };

struct EndReport {
    VertexPair edge;
    std::string at;
    EndClassification classification;
    bool operator==(const EndReport&) const = default;
};

// Classification of every edge end across the enumerated class.
std::vector<EndReport> invariantEnds(const MixedGraph& g);

// A class member with minimum arrowhead count; ties broken by canonical
// edge-mark order.
MixedGraph minArrowheadMember(const MixedGraph& g);

} // namespace mag

#endif
