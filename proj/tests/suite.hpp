#ifndef MAG_TEST_SUITE_HPP
#define MAG_TEST_SUITE_HPP

#include <algorithm>
#include <deque>
#include <random>

#include "mag/graph.hpp"

namespace suite {

using mag::Mark;
using mag::MixedGraph;
using mag::VertexPair;

inline std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
    return out;
}

inline std::vector<VertexPair> allPairs(const std::vector<std::string>& vs) {
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            out.push_back({vs[i], vs[j]});
    return out;
}

// All 2^C(n,2) skeletons over n labeled vertices.
inline std::vector<MixedGraph> allSkeletons(std::size_t n) {
    std::vector<std::string> vs = labels(n);
    std::vector<VertexPair> pairs = allPairs(vs);
    std::vector<MixedGraph> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << pairs.size()); ++bits) {
        MixedGraph g;
        for (const std::string& v : vs) g.addVertex(v);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (bits & (std::size_t{1} << i))
                g.addEdge(pairs[i].first, pairs[i].second, Mark::Tail, Mark::Tail);
        out.push_back(std::move(g));
    }
    return out;
}

// Random connected skeleton: spanning tree plus extra edges up to maxEdges.
inline MixedGraph randomConnectedSkeleton(std::mt19937& rng, std::size_t n,
                                          std::size_t maxEdges) {
    std::vector<std::string> vs = labels(n);
    MixedGraph g;
    for (const std::string& v : vs) g.addVertex(v);
    std::vector<std::string> shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 1; i < shuffled.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        g.addEdge(shuffled[pick(rng)], shuffled[i], Mark::Tail, Mark::Tail);
    }
    std::vector<VertexPair> pairs = allPairs(vs);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const VertexPair& p : pairs) {
        if (g.edgeCount() >= maxEdges) break;
        if (!g.isAdjacent(p.first, p.second) && rng() % 2 == 0)
            g.addEdge(p.first, p.second, Mark::Tail, Mark::Tail);
    }
    return g;
}

// Random DAG: random topological order, each pair directed with probability
// num/den.
inline MixedGraph randomDag(std::mt19937& rng, std::size_t n, unsigned num = 1,
                            unsigned den = 2) {
    std::vector<std::string> vs = labels(n);
    MixedGraph g;
    for (const std::string& v : vs) g.addVertex(v);
    std::vector<std::string> order = vs;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (rng() % den < num)
                g.addEdge(order[i], order[j], Mark::Tail, Mark::Arrowhead);
    return g;
}

// Independent d-separation oracle for DAGs: restrict to ancestors of
// {a,b} u z, marry parents, drop directions, remove z, test connectivity.
inline bool dSeparatedMoral(const MixedGraph& dag, const std::string& a,
                            const std::string& b, const std::set<std::string>& z) {
    std::set<std::string> relevant = dag.ancestorsOfSet([&] {
        std::set<std::string> s = z;
        s.insert(a);
        s.insert(b);
        return s;
    }());

    std::set<std::pair<std::string, std::string>> links;
    auto addLink = [&](const std::string& u, const std::string& v) {
        links.insert(mag::makePair(u, v));
    };
    for (const std::string& v : relevant) {
        std::set<std::string> parents;
        for (const std::string& p : dag.parents(v))
            if (relevant.count(p)) parents.insert(p);
        for (const std::string& p : parents) addLink(p, v);
        for (const std::string& p : parents)
            for (const std::string& q : parents)
                if (p < q) addLink(p, q);
    }

    std::set<std::string> visited{a};
    std::deque<std::string> frontier{a};
    while (!frontier.empty()) {
        std::string cur = frontier.front();
        frontier.pop_front();
        if (cur == b) return false;
        for (const auto& [u, v] : links) {
            std::string next;
            if (u == cur) next = v;
            else if (v == cur) next = u;
            else continue;
            if (z.count(next) || visited.count(next)) continue;
            visited.insert(next);
            frontier.push_back(next);
        }
    }
    return true;
}

} // namespace suite

#endif
