#ifndef MAG_SEPARATION_HPP
#define MAG_SEPARATION_HPP

#include <optional>

#include "mag/graph.hpp"

namespace mag {

// Canonical independence statement a _||_ b | Z with a < b and Z disjoint
// from {a, b}.
struct IndependenceStatement {
    std::string a;
    std::string b;
    std::set<std::string> given;

    bool operator==(const IndependenceStatement&) const = default;
    auto operator<=>(const IndependenceStatement&) const = default;
};

// The full set of singleton m-separation statements entailed by a graph.
using IndependenceModel = std::set<IndependenceStatement>;

struct SeparationResult {
    bool separated;
    std::optional<Path> witness;  // an m-connecting path when not separated
};

bool isColliderOnPath(const MixedGraph& g, const Path& path, const std::string& v);

// Reference engine: enumerates simple paths between a and b and tests each
// for m-connection given z.  d-separation is the DAG special case.
SeparationResult mSeparatedWithWitness(const MixedGraph& g, const std::string& a,
                                       const std::string& b,
                                       const std::set<std::string>& z);
bool mSeparated(const MixedGraph& g, const std::string& a, const std::string& b,
                const std::set<std::string>& z);

// All statements over singleton pairs and every Z.  Exponential in |V|;
// intended for |V| <= 8.
IndependenceModel independenceModel(const MixedGraph& g);

struct InducingPathResult {
    bool exists;
    std::optional<Path> witness;  // a shortest inducing path when one exists
};

// Every non-endpoint vertex must be a collider on the path and an ancestor
// of an endpoint.  Any single edge qualifies trivially.
InducingPathResult inducingPath(const MixedGraph& g, const std::string& a,
                                const std::string& b);
bool inducingPathExists(const MixedGraph& g, const std::string& a,
                        const std::string& b);

// Enumerates all subsets of universe; helper shared with the oracle suites.
std::vector<std::set<std::string>> allSubsets(const std::vector<std::string>& universe);

} // namespace mag

#endif
