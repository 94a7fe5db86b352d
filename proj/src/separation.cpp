#include "mag/separation.hpp"

#include <algorithm>
#include <deque>

namespace mag {

bool isColliderOnPath(const MixedGraph& g, const Path& path, const std::string& v) {
    auto it = std::find(path.begin(), path.end(), v);
    if (it == path.end() || it == path.begin() || it + 1 == path.end())
        throw std::invalid_argument("vertex is not interior to the path");
    const std::string& prev = *(it - 1);
    const std::string& next = *(it + 1);
    return g.markAt(prev, v, v) == Mark::Arrowhead &&
           g.markAt(next, v, v) == Mark::Arrowhead;
}

namespace {

// A path m-connects given z when no non-collider is in z and every collider
// is an ancestor of a member of z.  ancZ is the ancestor closure of z.
bool pathConnects(const MixedGraph& g, const Path& path,
                  const std::set<std::string>& z,
                  const std::set<std::string>& ancZ) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const std::string& v = path[i];
        bool collider = g.markAt(path[i - 1], v, v) == Mark::Arrowhead &&
                        g.markAt(path[i + 1], v, v) == Mark::Arrowhead;
        if (collider) {
            if (!ancZ.count(v)) return false;
        } else {
            if (z.count(v)) return false;
        }
    }
    return true;
}

bool searchConnecting(const MixedGraph& g, Path& path, const std::string& target,
                      std::set<std::string>& onPath, const std::set<std::string>& z,
                      const std::set<std::string>& ancZ, Path& witness) {
    const std::string& cur = path.back();
    for (const std::string& next : g.adjacentTo(cur)) {
        if (onPath.count(next)) continue;
        path.push_back(next);
        if (next == target) {
            if (pathConnects(g, path, z, ancZ)) {
                witness = path;
                path.pop_back();
                return true;
            }
        } else {
            onPath.insert(next);
            if (searchConnecting(g, path, target, onPath, z, ancZ, witness)) {
                onPath.erase(next);
                path.pop_back();
                return true;
            }
            onPath.erase(next);
        }
        path.pop_back();
    }
    return false;
}

} // namespace

SeparationResult mSeparatedWithWitness(const MixedGraph& g, const std::string& a,
                                       const std::string& b,
                                       const std::set<std::string>& z) {
    if (a == b)
        throw std::invalid_argument("m-separation query requires distinct vertices");
    if (z.count(a) || z.count(b))
        throw std::invalid_argument("conditioning set overlaps the query pair");
    if (!g.hasVertex(a) || !g.hasVertex(b))
        throw std::invalid_argument("unknown vertex in m-separation query");
    for (const std::string& v : z) {
        if (!g.hasVertex(v))
            throw std::invalid_argument("unknown vertex in conditioning set: " + v);
    }

    std::set<std::string> ancZ = g.ancestorsOfSet(z);
    Path path{a};
    std::set<std::string> onPath{a};
    Path witness;
    if (searchConnecting(g, path, b, onPath, z, ancZ, witness))
        return {false, witness};
    return {true, std::nullopt};
}

bool mSeparated(const MixedGraph& g, const std::string& a, const std::string& b,
                const std::set<std::string>& z) {
    return mSeparatedWithWitness(g, a, b, z).separated;
}

std::vector<std::set<std::string>> allSubsets(const std::vector<std::string>& universe) {
    std::vector<std::set<std::string>> out;
    std::size_t n = universe.size();
    if (n > 20)
        throw std::invalid_argument("subset enumeration universe too large");
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits & (std::size_t{1} << i)) s.insert(universe[i]);
        out.push_back(std::move(s));
    }
    return out;
}

IndependenceModel independenceModel(const MixedGraph& g) {
    IndependenceModel model;
    const std::vector<std::string>& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            std::vector<std::string> rest;
            for (const std::string& v : vs)
                if (v != vs[i] && v != vs[j]) rest.push_back(v);
            for (const auto& z : allSubsets(rest)) {
                if (mSeparated(g, vs[i], vs[j], z))
                    model.insert({vs[i], vs[j], z});
            }
        }
    }
    return model;
}

InducingPathResult inducingPath(const MixedGraph& g, const std::string& a,
                                const std::string& b) {
    if (a == b)
        throw std::invalid_argument("inducing-path query requires distinct vertices");
    if (!g.hasVertex(a) || !g.hasVertex(b))
        throw std::invalid_argument("unknown vertex in inducing-path query");

    if (g.isAdjacent(a, b)) return {true, Path{a, b}};

    // Interior vertices must be colliders and ancestors of an endpoint.
    std::set<std::string> endpointAnc = g.ancestorsOf(a);
    std::set<std::string> ancB = g.ancestorsOf(b);
    endpointAnc.insert(ancB.begin(), ancB.end());

    // Breadth-first over simple paths; extending past a vertex fixes it as
    // interior, so its collider/ancestor status can be checked then.
    std::deque<Path> queue;
    queue.push_back({a});
    while (!queue.empty()) {
        Path path = std::move(queue.front());
        queue.pop_front();
        const std::string& cur = path.back();
        for (const std::string& next : g.adjacentTo(cur)) {
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            if (path.size() >= 2) {
                const std::string& prev = path[path.size() - 2];
                if (!endpointAnc.count(cur)) continue;
                if (g.markAt(prev, cur, cur) != Mark::Arrowhead ||
                    g.markAt(next, cur, cur) != Mark::Arrowhead)
                    continue;
            }
            Path extended = path;
            extended.push_back(next);
            if (next == b) return {true, extended};
            queue.push_back(std::move(extended));
        }
    }
    return {false, std::nullopt};
}

bool inducingPathExists(const MixedGraph& g, const std::string& a,
                        const std::string& b) {
    return inducingPath(g, a, b).exists;
}

} // namespace mag
