#include "mag/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "mag/ancestral.hpp"
#include "mag/orient.hpp"

namespace mag {

namespace {

// Type order: ->, <-, <->, --  (arrow relative to the canonical pair order).
constexpr EndMarks kEdgeTypes[4] = {
    {Mark::Tail, Mark::Arrowhead},
    {Mark::Arrowhead, Mark::Tail},
    {Mark::Arrowhead, Mark::Arrowhead},
    {Mark::Tail, Mark::Tail},
};

bool passesFilter(const MixedGraph& g, OrientationFilter filter) {
    switch (filter) {
        case OrientationFilter::All:
            return true;
        case OrientationFilter::Ancestral:
            return isAncestral(g);
        case OrientationFilter::MaximalAncestral:
            return isAncestral(g) && isMaximal(g);
        case OrientationFilter::Dag:
            return g.isDag();
    }
    return false;
}

} // namespace

void forEachOrientation(const MixedGraph& skel, OrientationFilter filter,
                        const std::function<void(const MixedGraph&)>& visit,
                        std::size_t cap) {
    for (const auto& [pair, marks] : skel.edgeMap()) {
        if (marks.atFirst != Mark::Tail || marks.atSecond != Mark::Tail)
            throw std::invalid_argument("orientation enumeration requires an all-tails skeleton");
    }
    std::size_t numEdges = skel.edgeCount();
    if (numEdges > 0 && (std::size_t{1} << (2 * numEdges)) > cap)
        throw std::invalid_argument("orientation enumeration would exceed the cap of " +
                                    std::to_string(cap) + " graphs");

    std::vector<VertexPair> edges = skel.edgePairs();
    std::size_t total = std::size_t{1} << (2 * numEdges);
    MixedGraph g = skel;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t bits = code;
        for (const VertexPair& e : edges) {
            const EndMarks& t = kEdgeTypes[bits & 3];
            g.setMark(e.first, e.second, e.first, t.atFirst);
            g.setMark(e.first, e.second, e.second, t.atSecond);
            bits >>= 2;
        }
        if (passesFilter(g, filter)) visit(g);
    }
}

std::vector<MixedGraph> enumerateOrientations(const MixedGraph& skel,
                                              OrientationFilter filter,
                                              std::size_t cap) {
    std::vector<MixedGraph> out;
    forEachOrientation(skel, filter, [&](const MixedGraph& g) { out.push_back(g); }, cap);
    return out;
}

std::vector<MixedGraph> enumerateClass(const MixedGraph& g, bool searchAllSkeletons) {
    if (!isAncestral(g) || !isMaximal(g))
        throw std::invalid_argument("class enumeration requires a maximal ancestral graph");

    IndependenceModel model = independenceModel(g);
    std::vector<MixedGraph> members;

    auto collectFrom = [&](const MixedGraph& skel) {
        forEachOrientation(skel, OrientationFilter::MaximalAncestral,
                           [&](const MixedGraph& cand) {
                               if (independenceModel(cand) == model)
                                   members.push_back(cand);
                           });
    };

    if (!searchAllSkeletons) {
        collectFrom(skeleton(g));
        return members;
    }

    // Debug mode: search every skeleton over the vertex set.
    const std::vector<std::string>& vs = g.vertices();
    std::vector<VertexPair> allPairs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            allPairs.push_back({vs[i], vs[j]});
    if (allPairs.size() > 12)
        throw std::invalid_argument("all-skeleton search limited to small vertex sets");
    for (std::size_t bits = 0; bits < (std::size_t{1} << allPairs.size()); ++bits) {
        MixedGraph skel;
        for (const std::string& v : vs) skel.addVertex(v);
        for (std::size_t i = 0; i < allPairs.size(); ++i)
            if (bits & (std::size_t{1} << i))
                skel.addEdge(allPairs[i].first, allPairs[i].second, Mark::Tail, Mark::Tail);
        collectFrom(skel);
    }
    std::sort(members.begin(), members.end());
    return members;
}

MixedGraph supBruteforce(const MixedGraph& g) {
    std::vector<MixedGraph> members = enumerateClass(g);
    MixedGraph result = members.front();
    for (std::size_t i = 1; i < members.size(); ++i)
        result = join(result, members[i]);
    return result;
}

std::vector<EndReport> invariantEnds(const MixedGraph& g) {
    std::vector<MixedGraph> members = enumerateClass(g);
    std::vector<EndReport> report;
    for (const auto& [pair, marks] : g.edgeMap()) {
        for (const std::string& at : {pair.first, pair.second}) {
            bool sawArrow = false;
            bool sawTail = false;
            for (const MixedGraph& m : members) {
                if (m.markAt(pair.first, pair.second, at) == Mark::Arrowhead)
                    sawArrow = true;
                else
                    sawTail = true;
            }
            EndClassification cls = sawArrow && sawTail ? EndClassification::Varies
                                    : sawArrow          ? EndClassification::AlwaysArrowhead
                                                        : EndClassification::AlwaysTail;
            report.push_back({pair, at, cls});
        }
    }
    return report;
}

MixedGraph minArrowheadMember(const MixedGraph& g) {
    std::vector<MixedGraph> members = enumerateClass(g);
    auto arrowheads = [](const MixedGraph& m) {
        std::size_t n = 0;
        for (const auto& [pair, marks] : m.edgeMap()) {
            if (marks.atFirst == Mark::Arrowhead) ++n;
            if (marks.atSecond == Mark::Arrowhead) ++n;
        }
        return n;
    };
    const MixedGraph* best = &members.front();
    std::size_t bestCount = arrowheads(*best);
    for (const MixedGraph& m : members) {
        std::size_t count = arrowheads(m);
        if (count < bestCount || (count == bestCount && m < *best)) {
            best = &m;
            bestCount = count;
        }
    }
    return *best;
}

} // namespace mag
