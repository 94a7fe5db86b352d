#include "mag/ancestral.hpp"

#include <algorithm>

#include "mag/separation.hpp"

namespace mag {

AncestralReport checkAncestral(const MixedGraph& g) {
    AncestralReport report{true, {}};

    // (a) no directed cycles: no vertex has a child among its strict ancestors.
    for (const std::string& v : g.vertices()) {
        std::set<std::string> anc = g.ancestorsOf(v);
        for (const std::string& c : g.children(v)) {
            if (c != v && anc.count(c)) {
                report.ancestral = false;
                report.violations.push_back("directed cycle through " + v + " -> " + c);
            }
        }
    }

    for (const auto& [pair, marks] : g.edgeMap()) {
        const std::string& x = pair.first;
        const std::string& y = pair.second;
        // (b) bidirected edge between ancestrally related vertices.
        if (marks.atFirst == Mark::Arrowhead && marks.atSecond == Mark::Arrowhead) {
            if (g.ancestorsOf(y).count(x)) {
                report.ancestral = false;
                report.violations.push_back("bidirected edge " + x + " <-> " + y +
                                            " with " + x + " an ancestor of " + y);
            }
            if (g.ancestorsOf(x).count(y)) {
                report.ancestral = false;
                report.violations.push_back("bidirected edge " + x + " <-> " + y +
                                            " with " + y + " an ancestor of " + x);
            }
        }
        // (c) undirected-edge endpoints with parents or spouses.
        if (marks.atFirst == Mark::Tail && marks.atSecond == Mark::Tail) {
            for (const std::string& end : {x, y}) {
                VertexRelations r = g.relations(end);
                if (!r.parents.empty() || !r.spouses.empty()) {
                    report.ancestral = false;
                    report.violations.push_back("undirected edge " + x + " -- " + y +
                                                " with endpoint " + end +
                                                " having a parent or spouse");
                }
            }
        }
    }
    return report;
}

bool isAncestral(const MixedGraph& g) { return checkAncestral(g).ancestral; }

bool isMaximal(const MixedGraph& g) {
    if (!isAncestral(g))
        throw std::invalid_argument("maximality is defined for ancestral graphs");
    const std::vector<std::string>& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.isAdjacent(vs[i], vs[j])) continue;
            if (inducingPathExists(g, vs[i], vs[j])) return false;
        }
    }
    return true;
}

bool isMaximalBySeparation(const MixedGraph& g) {
    if (!isAncestral(g))
        throw std::invalid_argument("maximality is defined for ancestral graphs");
    const std::vector<std::string>& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.isAdjacent(vs[i], vs[j])) continue;
            std::vector<std::string> rest;
            for (const std::string& v : vs)
                if (v != vs[i] && v != vs[j]) rest.push_back(v);
            bool separable = false;
            for (const auto& z : allSubsets(rest)) {
                if (mSeparated(g, vs[i], vs[j], z)) {
                    separable = true;
                    break;
                }
            }
            if (!separable) return false;
        }
    }
    return true;
}

MixedGraph maximalize(const MixedGraph& g) {
    if (!isAncestral(g))
        throw std::invalid_argument("maximalize requires an ancestral graph");
    MixedGraph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<std::string>& vs = h.vertices();
        std::vector<VertexPair> toAdd;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (h.isAdjacent(vs[i], vs[j])) continue;
                if (inducingPathExists(h, vs[i], vs[j]))
                    toAdd.push_back({vs[i], vs[j]});
            }
        }
        for (const auto& [a, b] : toAdd) {
            if (h.ancestorsOf(b).count(a) || h.ancestorsOf(a).count(b))
                throw std::logic_error(
                    "maximalize: required bidirected edge " + a + " <-> " + b +
                    " would break ancestrality; implementation bug");
            h.addEdge(a, b, Mark::Arrowhead, Mark::Arrowhead);
            changed = true;
        }
    }
    if (!isAncestral(h) || !isMaximal(h))
        throw std::logic_error("maximalize: fixed point is not a maximal ancestral graph");
    return h;
}

namespace {

bool balancedAt(const MixedGraph& g, const std::string& x, const std::string& u,
                const std::string& v) {
    Mark mu = g.markAt(u, x, x);
    Mark mv = g.markAt(v, x, x);
    if (mu == mv) return true;
    // Marks differ: y is the neighbor with the arrowhead at x, z the other.
    const std::string& y = (mu == Mark::Arrowhead) ? u : v;
    const std::string& z = (mu == Mark::Arrowhead) ? v : u;
    return g.markAt(y, z, z) == Mark::Arrowhead;
}

} // namespace

BalanceReport checkBalanced(const MixedGraph& g) {
    BalanceReport report{true, {}};
    for (const Triple& t : triangles(g)) {
        // triangles() lists each triangle once per center; keep the entry
        // centered at the smallest vertex so every triangle is checked once.
        if (t.b > t.a || t.b > t.c) continue;
        // t = (a, x, c) centered at x; check all three vertices of the triangle.
        struct Corner { std::string x, u, v; };
        for (const Corner& corner : {Corner{t.b, t.a, t.c}, Corner{t.a, t.b, t.c},
                                     Corner{t.c, t.a, t.b}}) {
            if (!balancedAt(g, corner.x, corner.u, corner.v)) {
                report.balanced = false;
                report.unbalanced.push_back(Triple{corner.u, corner.x, corner.v});
            }
        }
    }
    return report;
}

bool isBalanced(const MixedGraph& g) { return checkBalanced(g).balanced; }

bool isChordal(const MixedGraph& g) {
    for (const auto& [pair, marks] : g.edgeMap()) {
        if (marks.atFirst != Mark::Tail || marks.atSecond != Mark::Tail)
            throw std::invalid_argument("chordality is defined for undirected graphs");
    }
    // Maximum cardinality search produces a reverse perfect elimination
    // ordering iff the graph is chordal.
    std::vector<std::string> order;
    std::set<std::string> numbered;
    std::map<std::string, int> weight;
    for (const std::string& v : g.vertices()) weight[v] = 0;
    while (numbered.size() < g.vertexCount()) {
        std::string best;
        int bestWeight = -1;
        for (const std::string& v : g.vertices()) {
            if (numbered.count(v)) continue;
            if (weight[v] > bestWeight) {
                bestWeight = weight[v];
                best = v;
            }
        }
        order.push_back(best);
        numbered.insert(best);
        for (const std::string& u : g.adjacentTo(best))
            if (!numbered.count(u)) weight[u]++;
    }
    // Check: for each v, its earlier neighbors must form a clique with the
    // latest of them.
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::string& v = order[i];
        std::vector<std::string> earlier;
        for (const std::string& u : g.adjacentTo(v))
            if (pos[u] < i) earlier.push_back(u);
        if (earlier.empty()) continue;
        std::string latest = earlier[0];
        for (const std::string& u : earlier)
            if (pos[u] > pos[latest]) latest = u;
        for (const std::string& u : earlier) {
            if (u != latest && !g.isAdjacent(u, latest)) return false;
        }
    }
    return true;
}

} // namespace mag
