#include "mag/graph.hpp"

#include <algorithm>

namespace mag {

void MixedGraph::addVertex(const std::string& name) {
    if (name.empty())
        throw std::invalid_argument("vertex name must be non-empty");
    if (vertexSet_.count(name))
        throw std::invalid_argument("duplicate vertex: " + name);
    vertexSet_.insert(name);
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    vertices_.insert(it, name);
}

void MixedGraph::requireVertex(const std::string& name) const {
    if (!vertexSet_.count(name))
        throw std::invalid_argument("unknown vertex: " + name);
}

void MixedGraph::addEdge(const std::string& a, const std::string& b, Mark atA, Mark atB) {
    if (a == b)
        throw std::invalid_argument("self-loop at vertex: " + a);
    requireVertex(a);
    requireVertex(b);
    VertexPair key = makePair(a, b);
    if (edges_.count(key))
        throw std::invalid_argument("duplicate edge: " + a + " - " + b);
    EndMarks marks = (key.first == a) ? EndMarks{atA, atB} : EndMarks{atB, atA};
    edges_.emplace(key, marks);
}

void MixedGraph::setMark(const std::string& a, const std::string& b,
                         const std::string& at, Mark mark) {
    VertexPair key = makePair(a, b);
    auto it = edges_.find(key);
    if (it == edges_.end())
        throw std::invalid_argument("no edge between " + a + " and " + b);
    if (at == key.first)
        it->second.atFirst = mark;
    else if (at == key.second)
        it->second.atSecond = mark;
    else
        throw std::invalid_argument("vertex " + at + " is not an endpoint of the edge");
}

void MixedGraph::removeEdge(const std::string& a, const std::string& b) {
    VertexPair key = makePair(a, b);
    if (edges_.erase(key) == 0)
        throw std::invalid_argument("no edge between " + a + " and " + b);
}

bool MixedGraph::isAdjacent(const std::string& a, const std::string& b) const {
    return edges_.count(makePair(a, b)) > 0;
}

Mark MixedGraph::markAt(const std::string& a, const std::string& b,
                        const std::string& at) const {
    VertexPair key = makePair(a, b);
    auto it = edges_.find(key);
    if (it == edges_.end())
        throw std::invalid_argument("no edge between " + a + " and " + b);
    if (at == key.first) return it->second.atFirst;
    if (at == key.second) return it->second.atSecond;
    throw std::invalid_argument("vertex " + at + " is not an endpoint of the edge");
}

bool MixedGraph::isDirected(const std::string& from, const std::string& to) const {
    if (!isAdjacent(from, to)) return false;
    return markAt(from, to, from) == Mark::Tail && markAt(from, to, to) == Mark::Arrowhead;
}

bool MixedGraph::isBidirected(const std::string& a, const std::string& b) const {
    if (!isAdjacent(a, b)) return false;
    return markAt(a, b, a) == Mark::Arrowhead && markAt(a, b, b) == Mark::Arrowhead;
}

bool MixedGraph::isUndirected(const std::string& a, const std::string& b) const {
    if (!isAdjacent(a, b)) return false;
    return markAt(a, b, a) == Mark::Tail && markAt(a, b, b) == Mark::Tail;
}

std::vector<VertexPair> MixedGraph::edgePairs() const {
    std::vector<VertexPair> out;
    out.reserve(edges_.size());
    for (const auto& [pair, marks] : edges_) out.push_back(pair);
    return out;
}

std::vector<std::string> MixedGraph::adjacentTo(const std::string& v) const {
    requireVertex(v);
    std::vector<std::string> out;
    for (const auto& [pair, marks] : edges_) {
        if (pair.first == v) out.push_back(pair.second);
        else if (pair.second == v) out.push_back(pair.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexRelations MixedGraph::relations(const std::string& v) const {
    requireVertex(v);
    VertexRelations r;
    for (const std::string& u : adjacentTo(v)) {
        Mark atV = markAt(u, v, v);
        Mark atU = markAt(u, v, u);
        if (atV == Mark::Arrowhead && atU == Mark::Tail) r.parents.insert(u);
        else if (atV == Mark::Tail && atU == Mark::Arrowhead) r.children.insert(u);
        else if (atV == Mark::Arrowhead && atU == Mark::Arrowhead) r.spouses.insert(u);
        else r.undirectedNeighbors.insert(u);
    }
    return r;
}

std::set<std::string> MixedGraph::parents(const std::string& v) const {
    return relations(v).parents;
}
std::set<std::string> MixedGraph::children(const std::string& v) const {
    return relations(v).children;
}
std::set<std::string> MixedGraph::spouses(const std::string& v) const {
    return relations(v).spouses;
}
std::set<std::string> MixedGraph::undirectedNeighbors(const std::string& v) const {
    return relations(v).undirectedNeighbors;
}

std::set<std::string> MixedGraph::ancestorsOf(const std::string& v) const {
    requireVertex(v);
    std::set<std::string> result{v};
    std::vector<std::string> frontier{v};
    while (!frontier.empty()) {
        std::string cur = frontier.back();
        frontier.pop_back();
        for (const std::string& p : parents(cur)) {
            if (result.insert(p).second) frontier.push_back(p);
        }
    }
    return result;
}

std::set<std::string> MixedGraph::descendantsOf(const std::string& v) const {
    requireVertex(v);
    std::set<std::string> result{v};
    std::vector<std::string> frontier{v};
    while (!frontier.empty()) {
        std::string cur = frontier.back();
        frontier.pop_back();
        for (const std::string& c : children(cur)) {
            if (result.insert(c).second) frontier.push_back(c);
        }
    }
    return result;
}

std::set<std::string> MixedGraph::ancestorsOfSet(const std::set<std::string>& vs) const {
    std::set<std::string> result;
    for (const std::string& v : vs) {
        std::set<std::string> a = ancestorsOf(v);
        result.insert(a.begin(), a.end());
    }
    return result;
}

bool MixedGraph::isDag() const {
    for (const auto& [pair, marks] : edges_) {
        bool directed = (marks.atFirst == Mark::Tail && marks.atSecond == Mark::Arrowhead) ||
                        (marks.atFirst == Mark::Arrowhead && marks.atSecond == Mark::Tail);
        if (!directed) return false;
    }
    // Acyclic: no vertex is a strict ancestor of itself.
    for (const std::string& v : vertices_) {
        for (const std::string& c : children(v)) {
            std::set<std::string> anc = ancestorsOf(v);
            if (anc.count(c) && c != v) return false;
        }
    }
    return true;
}

MixedGraph buildGraph(const std::vector<std::string>& vertices,
                      const std::vector<EdgeSpec>& edges) {
    if (vertices.empty())
        throw std::invalid_argument("vertex list must be non-empty");
    MixedGraph g;
    for (const std::string& v : vertices) g.addVertex(v);
    for (const EdgeSpec& e : edges) g.addEdge(e.a, e.b, e.atA, e.atB);
    return g;
}

MixedGraph skeleton(const MixedGraph& g) {
    MixedGraph s;
    for (const std::string& v : g.vertices()) s.addVertex(v);
    for (const auto& [pair, marks] : g.edgeMap())
        s.addEdge(pair.first, pair.second, Mark::Tail, Mark::Tail);
    return s;
}

std::vector<Triple> unshieldedTriples(const MixedGraph& g) {
    std::vector<Triple> out;
    for (const std::string& b : g.vertices()) {
        std::vector<std::string> adj = g.adjacentTo(b);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            for (std::size_t j = i + 1; j < adj.size(); ++j) {
                if (!g.isAdjacent(adj[i], adj[j]))
                    out.push_back(Triple{adj[i], b, adj[j]});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triple> triangles(const MixedGraph& g) {
    std::vector<Triple> out;
    for (const std::string& b : g.vertices()) {
        std::vector<std::string> adj = g.adjacentTo(b);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            for (std::size_t j = i + 1; j < adj.size(); ++j) {
                if (g.isAdjacent(adj[i], adj[j]))
                    out.push_back(Triple{adj[i], b, adj[j]});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool sameSkeleton(const MixedGraph& g1, const MixedGraph& g2) {
    if (g1.vertices() != g2.vertices()) return false;
    return g1.edgePairs() == g2.edgePairs();
}

bool isCollider(const MixedGraph& g, const std::string& a, const std::string& b,
                const std::string& c) {
    if (!g.isAdjacent(a, b) || !g.isAdjacent(b, c))
        throw std::invalid_argument("collider test requires adjacent triple");
    return g.markAt(a, b, b) == Mark::Arrowhead && g.markAt(c, b, b) == Mark::Arrowhead;
}

} // namespace mag
