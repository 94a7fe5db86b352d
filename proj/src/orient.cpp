#include "mag/orient.hpp"

#include <algorithm>

#include "mag/ancestral.hpp"
#include "mag/equivalence.hpp"
#include "mag/oracle.hpp"

namespace mag {

MixedGraph join(const MixedGraph& g1, const MixedGraph& g2) {
    if (!sameSkeleton(g1, g2))
        throw std::invalid_argument("join requires graphs with the same skeleton");
    MixedGraph out;
    for (const std::string& v : g1.vertices()) out.addVertex(v);
    for (const auto& [pair, marks] : g1.edgeMap()) {
        Mark atFirst = (marks.atFirst == Mark::Arrowhead &&
                        g2.markAt(pair.first, pair.second, pair.first) == Mark::Arrowhead)
                           ? Mark::Arrowhead
                           : Mark::Tail;
        Mark atSecond = (marks.atSecond == Mark::Arrowhead &&
                         g2.markAt(pair.first, pair.second, pair.second) == Mark::Arrowhead)
                            ? Mark::Arrowhead
                            : Mark::Tail;
        out.addEdge(pair.first, pair.second, atFirst, atSecond);
    }
    return out;
}

OrientationState::OrientationState(const MixedGraph& base)
    : base_(base), h_(skeleton(base)) {}

bool OrientationState::hasArrowhead(const std::string& a, const std::string& b,
                                    const std::string& at) const {
    return h_.markAt(a, b, at) == Mark::Arrowhead;
}

bool OrientationState::addArrowhead(const std::string& a, const std::string& b,
                                    const std::string& at, const std::string& rule) {
    EdgeEnd end{makePair(a, b), at};
    if (h_.markAt(a, b, at) == Mark::Arrowhead) return false;
    if (protectedTails_.count(end))
        throw std::logic_error("soundness failure: rule " + rule +
                               " would orient an arrowhead onto the protected tail at " +
                               at + " on (" + end.edge.first + "," + end.edge.second + ")");
    h_.setMark(a, b, at, Mark::Arrowhead);
    provenance_.emplace(end, rule);
    if (provenance_.size() > 2 * base_.edgeCount())
        throw std::logic_error("arrowhead count exceeded 2|E|; monotonicity bug");
    return true;
}

void OrientationState::protectTail(const std::string& a, const std::string& b,
                                   const std::string& at) {
    EdgeEnd end{makePair(a, b), at};
    if (h_.markAt(a, b, at) == Mark::Arrowhead)
        throw std::logic_error("soundness failure: tail protection requested at " + at +
                               " on an end already carrying an arrowhead");
    protectedTails_.insert(end);
}

namespace {

// S2: orient the unshielded colliders of the base graph.
void applyS2(OrientationState& state) {
    const MixedGraph& g = state.base();
    for (const Triple& t : unshieldedTriples(g)) {
        if (isCollider(g, t.a, t.b, t.c)) {
            state.addArrowhead(t.a, t.b, t.b, "S2");
            state.addArrowhead(t.c, t.b, t.b, "S2");
        }
    }
}

bool s3TriggerHolds(const OrientationState& state, const std::string& alpha,
                    const std::string& b, const std::string& gamma) {
    if (!isCollider(state.base(), alpha, b, gamma)) return false;
    return !findDiscriminatingPaths(state.h(), alpha, b, gamma).empty();
}

bool s4TriggerHolds(const OrientationState& state, const std::string& u,
                    const std::string& v, const std::string& a, const std::string& b) {
    const MixedGraph& h = state.h();
    if (!h.isAdjacent(a, b)) return false;
    if (h.isAdjacent(u, v)) return false;
    // <u,a,v> an unshielded collider in H.
    if (!state.hasArrowhead(u, a, a) || !state.hasArrowhead(v, a, a)) return false;
    // <u,b,v> an unshielded non-collider: an unshielded triple that S2 did
    // not orient, i.e. not an unshielded collider of the base graph.
    if (!h.isAdjacent(u, b) || !h.isAdjacent(v, b)) return false;
    return !isCollider(state.base(), u, b, v);
}

bool s5iTriggerHolds(const OrientationState& state, const std::string& a,
                     const std::string& b, const std::string& c) {
    const MixedGraph& g = state.base();
    if (!g.isAdjacent(a, b) || !g.isAdjacent(b, c)) return false;
    if (g.isAdjacent(a, c)) return false;
    if (isCollider(g, a, b, c)) return false;
    return state.hasArrowhead(a, b, b);
}

bool s5iiTriggerHolds(const OrientationState& state, const std::string& a,
                      const std::string& b, const std::string& c) {
    if (isCollider(state.base(), a, b, c)) return false;
    return !findDiscriminatingPaths(state.h(), a, b, c).empty();
}

// S5a-S5c conclusions for the ordered pair (b, c), reading the current H.
bool applyS5Conclusions(OrientationState& state, const std::string& b,
                        const std::string& c, const std::string& rule) {
    bool added = state.addArrowhead(b, c, c, rule + "a");
    state.protectTail(b, c, b);
    std::vector<std::string> adjB = state.h().adjacentTo(b);
    for (const std::string& z : adjB) {
        if (z == c || !state.h().isAdjacent(z, c)) continue;
        if (state.hasArrowhead(z, b, b))
            added |= state.addArrowhead(z, c, c, rule + "b");
        if (state.hasArrowhead(c, z, z))
            added |= state.addArrowhead(b, z, z, rule + "c");
    }
    return added;
}

bool wouldAddS5(const OrientationState& state, const std::string& b, const std::string& c) {
    if (!state.hasArrowhead(b, c, c)) return true;
    for (const std::string& z : state.h().adjacentTo(b)) {
        if (z == c || !state.h().isAdjacent(z, c)) continue;
        if (state.hasArrowhead(z, b, b) && !state.hasArrowhead(z, c, c)) return true;
        if (state.hasArrowhead(c, z, z) && !state.hasArrowhead(b, z, z)) return true;
    }
    return false;
}

// Ordered triples (a, b, c) with a-b and b-c adjacent, a != c.
std::vector<Triple> orderedAdjacentTriples(const MixedGraph& g) {
    std::vector<Triple> out;
    for (const std::string& b : g.vertices()) {
        std::vector<std::string> adj = g.adjacentTo(b);
        for (const std::string& a : adj)
            for (const std::string& c : adj)
                if (a != c) out.push_back(Triple{a, b, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<RuleInstance> applicableInstances(const OrientationState& state) {
    std::vector<RuleInstance> out;
    const MixedGraph& g = state.base();
    const MixedGraph& h = state.h();

    std::vector<Triple> ordered = orderedAdjacentTriples(g);

    // S3: discriminating path in H for a triple that is a collider in G.
    for (const Triple& t : ordered) {
        if (!g.isAdjacent(t.a, t.c)) continue;
        if (!s3TriggerHolds(state, t.a, t.b, t.c)) continue;
        if (!state.hasArrowhead(t.a, t.b, t.b) || !state.hasArrowhead(t.c, t.b, t.b))
            out.push_back({RuleInstance::Kind::S3, {t.a, t.b, t.c}});
    }

    // S4: pairs of unshielded triples sharing the outer (u, v) pair.
    {
        std::vector<Triple> unshielded = unshieldedTriples(h);
        for (const Triple& ca : unshielded) {
            for (const Triple& cb : unshielded) {
                if (ca.canonical().a != cb.canonical().a ||
                    ca.canonical().c != cb.canonical().c || ca.b == cb.b)
                    continue;
                const std::string& u = ca.canonical().a;
                const std::string& v = ca.canonical().c;
                if (!s4TriggerHolds(state, u, v, ca.b, cb.b)) continue;
                if (!state.hasArrowhead(ca.b, cb.b, ca.b))
                    out.push_back({RuleInstance::Kind::S4, {u, v, ca.b, cb.b}});
            }
        }
    }

    // S5i / S5ii.
    for (const Triple& t : ordered) {
        if (!g.isAdjacent(t.a, t.c)) {
            if (s5iTriggerHolds(state, t.a, t.b, t.c) && wouldAddS5(state, t.b, t.c))
                out.push_back({RuleInstance::Kind::S5i, {t.a, t.b, t.c}});
        } else {
            if (s5iiTriggerHolds(state, t.a, t.b, t.c) && wouldAddS5(state, t.b, t.c))
                out.push_back({RuleInstance::Kind::S5ii, {t.a, t.b, t.c}});
        }
    }
    return out;
}

bool fireInstance(OrientationState& state, const RuleInstance& inst) {
    const auto& r = inst.roles;
    switch (inst.kind) {
        case RuleInstance::Kind::S3:
            if (!s3TriggerHolds(state, r[0], r[1], r[2])) return false;
            {
                bool added = state.addArrowhead(r[0], r[1], r[1], "S3");
                added |= state.addArrowhead(r[2], r[1], r[1], "S3");
                return added;
            }
        case RuleInstance::Kind::S4:
            if (!s4TriggerHolds(state, r[0], r[1], r[2], r[3])) return false;
            return state.addArrowhead(r[2], r[3], r[2], "S4");
        case RuleInstance::Kind::S5i:
            if (!s5iTriggerHolds(state, r[0], r[1], r[2])) return false;
            return applyS5Conclusions(state, r[1], r[2], "S5i");
        case RuleInstance::Kind::S5ii:
            if (!s5iiTriggerHolds(state, r[0], r[1], r[2])) return false;
            return applyS5Conclusions(state, r[1], r[2], "S5ii");
    }
    return false;
}

OrientationState orientSupState(const MixedGraph& g) {
    if (!isAncestral(g))
        throw std::invalid_argument("orientation rules require an ancestral graph");
    if (!isMaximal(g))
        throw std::invalid_argument("orientation rules require a maximal graph");

    OrientationState state(g);
    applyS2(state);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const RuleInstance& inst : applicableInstances(state))
            changed |= fireInstance(state, inst);
    }
    return state;
}

MixedGraph orientSup(const MixedGraph& g) { return orientSupState(g).h(); }

MixedGraph ruleSchedule(const MixedGraph& g, const std::vector<std::size_t>& schedule) {
    if (!isAncestral(g))
        throw std::invalid_argument("orientation rules require an ancestral graph");
    if (!isMaximal(g))
        throw std::invalid_argument("orientation rules require a maximal graph");

    OrientationState state(g);
    applyS2(state);
    std::size_t step = 0;
    while (true) {
        std::vector<RuleInstance> insts = applicableInstances(state);
        if (insts.empty()) break;
        std::size_t pick = schedule.empty()
                               ? 0
                               : schedule[step % schedule.size()] % insts.size();
        fireInstance(state, insts[pick]);
        ++step;
    }
    return state.h();
}

MixedGraph essentialGraph(const MixedGraph& d) {
    if (!d.isDag())
        throw std::invalid_argument("essential graph is defined for DAGs");

    std::set<Triple> targetColliders;
    for (const Triple& t : unshieldedTriples(d))
        if (isCollider(d, t.a, t.b, t.c)) targetColliders.insert(t.canonical());

    MixedGraph skel = skeleton(d);
    std::optional<MixedGraph> joined;
    forEachOrientation(skel, OrientationFilter::Dag, [&](const MixedGraph& cand) {
        std::set<Triple> colliders;
        for (const Triple& t : unshieldedTriples(cand))
            if (isCollider(cand, t.a, t.b, t.c)) colliders.insert(t.canonical());
        if (colliders != targetColliders) return;
        joined = joined ? join(*joined, cand) : cand;
    });
    // d itself always qualifies.
    return *joined;
}

bool checkEssentialCoincidence(const MixedGraph& d) {
    return essentialGraph(d) == orientSup(d);
}

} // namespace mag
