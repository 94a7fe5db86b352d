#ifndef MAG_GRAPH_HPP
#define MAG_GRAPH_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mag {

enum class Mark { Tail, Arrowhead };

// Unordered vertex pair stored canonically: first < second (lexicographic).
using VertexPair = std::pair<std::string, std::string>;

inline VertexPair makePair(const std::string& a, const std::string& b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

struct EndMarks {
    Mark atFirst;
    Mark atSecond;
    bool operator==(const EndMarks&) const = default;
    auto operator<=>(const EndMarks&) const = default;
};

struct VertexRelations {
    std::set<std::string> parents;
    std::set<std::string> children;
    std::set<std::string> spouses;
    std::set<std::string> undirectedNeighbors;
};

/**
 * A mixed graph: at most one edge per vertex pair, each edge carrying a
 * tail/arrowhead mark at each end.  Directed (->) = tail/arrowhead,
 * bidirected (<->) = arrowhead/arrowhead, undirected (--) = tail/tail.
 */
class MixedGraph {
public:
    MixedGraph() = default;

    void addVertex(const std::string& name);
    void addEdge(const std::string& a, const std::string& b, Mark atA, Mark atB);
    void setMark(const std::string& a, const std::string& b,
                 const std::string& at, Mark mark);
    void removeEdge(const std::string& a, const std::string& b);

    bool hasVertex(const std::string& name) const { return vertexSet_.count(name) > 0; }
    bool isAdjacent(const std::string& a, const std::string& b) const;
    Mark markAt(const std::string& a, const std::string& b, const std::string& at) const;

    bool isDirected(const std::string& from, const std::string& to) const;   // from -> to
    bool isBidirected(const std::string& a, const std::string& b) const;
    bool isUndirected(const std::string& a, const std::string& b) const;

    // Vertices in canonical (sorted) order.
    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t vertexCount() const { return vertices_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }

    // Edge pairs in canonical order.
    std::vector<VertexPair> edgePairs() const;
    const std::map<VertexPair, EndMarks>& edgeMap() const { return edges_; }

    std::vector<std::string> adjacentTo(const std::string& v) const;

    VertexRelations relations(const std::string& v) const;
    std::set<std::string> parents(const std::string& v) const;
    std::set<std::string> children(const std::string& v) const;
    std::set<std::string> spouses(const std::string& v) const;
    std::set<std::string> undirectedNeighbors(const std::string& v) const;

    // Reflexive-transitive closure of the parent relation into v.
    std::set<std::string> ancestorsOf(const std::string& v) const;
    std::set<std::string> descendantsOf(const std::string& v) const;
    std::set<std::string> ancestorsOfSet(const std::set<std::string>& vs) const;

    bool isDag() const;

    bool operator==(const MixedGraph&) const = default;
    auto operator<=>(const MixedGraph&) const = default;

private:
    void requireVertex(const std::string& name) const;

    std::vector<std::string> vertices_;  // sorted
    std::set<std::string> vertexSet_;
    std::map<VertexPair, EndMarks> edges_;
};

struct EdgeSpec {
    std::string a;
    std::string b;
    Mark atA;
    Mark atB;
};

MixedGraph buildGraph(const std::vector<std::string>& vertices,
                      const std::vector<EdgeSpec>& edges);

// Ordered triple over a graph: a-b and b-c adjacent, a != c.  Canonical form
// has a < c.
struct Triple {
    std::string a;
    std::string b;
    std::string c;

    Triple canonical() const { return a <= c ? *this : Triple{c, b, a}; }
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

using Path = std::vector<std::string>;

MixedGraph skeleton(const MixedGraph& g);
std::vector<Triple> unshieldedTriples(const MixedGraph& g);
std::vector<Triple> triangles(const MixedGraph& g);
bool sameSkeleton(const MixedGraph& g1, const MixedGraph& g2);

// True iff both edges of the triple carry an arrowhead at b.
bool isCollider(const MixedGraph& g, const std::string& a, const std::string& b,
                const std::string& c);

} // namespace mag

#endif
