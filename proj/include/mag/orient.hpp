#ifndef MAG_ORIENT_HPP
#define MAG_ORIENT_HPP

#include "mag/graph.hpp"

namespace mag {

// Edge end: the edge pair plus the endpoint the mark sits at.
struct EdgeEnd {
    VertexPair edge;
    std::string at;
    bool operator==(const EdgeEnd&) const = default;
    auto operator<=>(const EdgeEnd&) const = default;
};

// AND of arrowheads over graphs sharing a skeleton.
MixedGraph join(const MixedGraph& g1, const MixedGraph& g2);

// The partially oriented graph accumulated by the orientation rules.  H has
// the skeleton of the base graph; ends without an arrowhead read as tails.
class OrientationState {
public:
    explicit OrientationState(const MixedGraph& base);

    const MixedGraph& base() const { return base_; }
    const MixedGraph& h() const { return h_; }

    bool hasArrowhead(const std::string& a, const std::string& b,
                      const std::string& at) const;

    // Returns true when the arrowhead is new.  Placing one on a protected
    // tail is a soundness failure and throws.
    bool addArrowhead(const std::string& a, const std::string& b,
                      const std::string& at, const std::string& rule);

    void protectTail(const std::string& a, const std::string& b, const std::string& at);

    const std::map<EdgeEnd, std::string>& provenance() const { return provenance_; }
    std::size_t arrowheadCount() const { return provenance_.size(); }

private:
    MixedGraph base_;
    MixedGraph h_;
    std::set<EdgeEnd> protectedTails_;
    std::map<EdgeEnd, std::string> provenance_;
};

// A single rule instance, identified by its trigger vertices.  Conclusions
// are recomputed from the current H at fire time, because arrowheads added
// by other instances can invalidate a trigger.
struct RuleInstance {
    enum class Kind { S3, S4, S5i, S5ii };
    Kind kind;
    // S3 / S5ii: {alpha, b, gamma} of the discriminated triple.
    // S4: {u, v, a, b} with <u,a,v> the collider and <u,b,v> the non-collider.
    // S5i: {a, b, c} with the arrowhead at b on (a,b); orients b -> c.
    std::vector<std::string> roles;

    bool operator==(const RuleInstance&) const = default;
    auto operator<=>(const RuleInstance&) const = default;
};

// All currently applicable S3/S4/S5 instances that would add at least one
// new arrowhead, in deterministic order.
std::vector<RuleInstance> applicableInstances(const OrientationState& state);

// Re-validates the trigger against the current H and applies the
// conclusions; returns true when a new arrowhead was added.
bool fireInstance(OrientationState& state, const RuleInstance& instance);

// Runs S1-S6 to a fixed point and returns H.  Input must be a maximal
// ancestral graph.
MixedGraph orientSup(const MixedGraph& g);
OrientationState orientSupState(const MixedGraph& g);

// Confluence harness: after S2, fires applicable instances chosen by the
// schedule (pick k selects applicable[k mod size]) until none remain.
MixedGraph ruleSchedule(const MixedGraph& g, const std::vector<std::size_t>& schedule);

// Join over all DAGs Markov equivalent to d (same skeleton, same unshielded
// colliders), by brute-force enumeration.
MixedGraph essentialGraph(const MixedGraph& d);

// essential_graph(d) == orient_sup(d), end for end.
bool checkEssentialCoincidence(const MixedGraph& d);

} // namespace mag

#endif
