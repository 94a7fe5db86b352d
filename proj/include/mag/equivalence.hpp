#ifndef MAG_EQUIVALENCE_HPP
#define MAG_EQUIVALENCE_HPP

#include <optional>

#include "mag/graph.hpp"

namespace mag {

// Partial assignment of orders to triples.  Order 0 = unshielded; order i+1
// comes from a discriminating path whose collider triples all have order <= i.
struct OrderMap {
    std::map<Triple, int> orders;                  // canonical triples
    std::map<Triple, Path> witnesses;              // witness path per order >= 1
    std::map<Triple, int> pathOrders;              // order of the witness path

    std::optional<int> orderOf(const Triple& t) const {
        auto it = orders.find(t.canonical());
        return it == orders.end() ? std::nullopt : std::optional<int>{it->second};
    }
    bool hasOrder(const Triple& t) const { return orders.count(t.canonical()) > 0; }
};

struct DiscriminatingPathFilter {
    const OrderMap* orders;
    int maxOrder;
};

// Paths <x, q1..qp=alpha, beta, gamma> with x non-adjacent to gamma, every qi
// a collider on the path and a parent of gamma.  With a filter, only paths
// whose consecutive collider triples carry order <= maxOrder are returned.
// Breadth-first, so shortest witnesses come first.
std::vector<Path> findDiscriminatingPaths(
    const MixedGraph& g, const std::string& alpha, const std::string& beta,
    const std::string& gamma,
    const std::optional<DiscriminatingPathFilter>& filter = std::nullopt);

// Least fixed point of the order recursion.
OrderMap computeOrders(const MixedGraph& g);

// Triples with order that are colliders (canonical form).
std::set<Triple> collidersWithOrder(const MixedGraph& g, const OrderMap& orders);

struct EquivalenceResult {
    bool equivalent;
    std::string reason;  // empty when equivalent
};

// Same adjacencies and same colliders with order.  Inputs must be maximal
// ancestral graphs.
EquivalenceResult markovEquivalentWithReason(const MixedGraph& g1, const MixedGraph& g2);
bool markovEquivalent(const MixedGraph& g1, const MixedGraph& g2);

} // namespace mag

#endif
