#include "mag/equivalence.hpp"

#include <algorithm>
#include <deque>

#include "mag/ancestral.hpp"

namespace mag {

namespace {

bool filterAccepts(const Path& path, const std::optional<DiscriminatingPathFilter>& filter) {
    if (!filter) return true;
    // Collider triples are those centered at q1..qp.
    for (std::size_t i = 1; i + 2 < path.size(); ++i) {
        Triple t{path[i - 1], path[i], path[i + 1]};
        auto order = filter->orders->orderOf(t);
        if (!order || *order > filter->maxOrder) return false;
    }
    return true;
}

} // namespace

std::vector<Path> findDiscriminatingPaths(
    const MixedGraph& g, const std::string& alpha, const std::string& beta,
    const std::string& gamma, const std::optional<DiscriminatingPathFilter>& filter) {
    if (!g.isAdjacent(alpha, beta) || !g.isAdjacent(beta, gamma))
        throw std::invalid_argument("discriminating-path search requires an adjacent triple");

    std::vector<Path> found;
    // Every qi, including alpha = qp, must be a parent of gamma.
    if (!g.isDirected(alpha, gamma)) return found;

    // Walk backward from alpha; the front vertex becomes an interior collider
    // once the path is extended past it.
    std::deque<Path> queue;
    queue.push_back({alpha, beta, gamma});
    while (!queue.empty()) {
        Path path = std::move(queue.front());
        queue.pop_front();
        const std::string& front = path[0];
        const std::string& second = path[1];
        for (const std::string& u : g.adjacentTo(front)) {
            if (std::find(path.begin(), path.end(), u) != path.end()) continue;
            // front must be a collider between u and second.
            if (g.markAt(u, front, front) != Mark::Arrowhead ||
                g.markAt(second, front, front) != Mark::Arrowhead)
                continue;
            Path extended;
            extended.reserve(path.size() + 1);
            extended.push_back(u);
            extended.insert(extended.end(), path.begin(), path.end());
            if (!g.isAdjacent(u, gamma)) {
                if (filterAccepts(extended, filter)) found.push_back(extended);
            } else if (g.isDirected(u, gamma)) {
                queue.push_back(std::move(extended));
            }
        }
    }
    return found;
}

OrderMap computeOrders(const MixedGraph& g) {
    OrderMap result;

    for (const Triple& t : unshieldedTriples(g))
        result.orders[t.canonical()] = 0;

    std::vector<Triple> shielded = triangles(g);
    std::size_t totalTriples = result.orders.size() + shielded.size();

    int sweep = 0;
    bool assigned = true;
    while (assigned) {
        assigned = false;
        if (sweep > static_cast<int>(totalTriples))
            throw std::logic_error("order computation exceeded the sweep bound");
        DiscriminatingPathFilter filter{&result, sweep};
        for (const Triple& t : shielded) {
            if (result.hasOrder(t)) continue;
            // A triple may be discriminated from either direction.
            for (const auto& [alpha, gamma] : {std::pair{t.a, t.c}, std::pair{t.c, t.a}}) {
                std::vector<Path> paths =
                    findDiscriminatingPaths(g, alpha, t.b, gamma, filter);
                if (paths.empty()) continue;
                Triple key = t.canonical();
                result.orders[key] = sweep + 1;
                result.witnesses[key] = paths.front();
                // Path order: max order over every consecutive triple on the
                // path, the discriminated one included.
                const Path& p = paths.front();
                int pathOrder = 0;
                for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                    auto o = result.orderOf(Triple{p[i - 1], p[i], p[i + 1]});
                    pathOrder = std::max(pathOrder, o.value_or(0));
                }
                result.pathOrders[key] = pathOrder;
                assigned = true;
                break;
            }
        }
        ++sweep;
    }
    return result;
}

std::set<Triple> collidersWithOrder(const MixedGraph& g, const OrderMap& orders) {
    std::set<Triple> out;
    for (const auto& [t, order] : orders.orders) {
        if (isCollider(g, t.a, t.b, t.c)) out.insert(t);
    }
    return out;
}

EquivalenceResult markovEquivalentWithReason(const MixedGraph& g1, const MixedGraph& g2) {
    for (const MixedGraph* g : {&g1, &g2}) {
        if (!isAncestral(*g))
            throw std::invalid_argument("equivalence test requires ancestral inputs");
        if (!isMaximal(*g))
            throw std::invalid_argument("equivalence test requires maximal inputs");
    }
    if (g1.vertices() != g2.vertices())
        return {false, "vertex sets differ"};
    if (!sameSkeleton(g1, g2))
        return {false, "skeletons differ"};

    std::set<Triple> c1 = collidersWithOrder(g1, computeOrders(g1));
    std::set<Triple> c2 = collidersWithOrder(g2, computeOrders(g2));
    if (c1 == c2) return {true, ""};

    for (const Triple& t : c1) {
        if (!c2.count(t))
            return {false, "collider with order differs: (" + t.a + "," + t.b + "," + t.c + ")"};
    }
    for (const Triple& t : c2) {
        if (!c1.count(t))
            return {false, "collider with order differs: (" + t.a + "," + t.b + "," + t.c + ")"};
    }
    return {false, "colliders with order differ"};
}

bool markovEquivalent(const MixedGraph& g1, const MixedGraph& g2) {
    return markovEquivalentWithReason(g1, g2).equivalent;
}

} // namespace mag
