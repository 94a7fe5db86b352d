#include "mag/projection.hpp"

#include "mag/separation.hpp"

namespace mag {

MixedGraph project(const MixedGraph& d, const std::set<std::string>& latent,
                   const std::set<std::string>& selection) {
    if (!d.isDag())
        throw std::invalid_argument("projection requires a DAG input");
    for (const std::string& v : latent) {
        if (!d.hasVertex(v))
            throw std::invalid_argument("unknown latent vertex: " + v);
        if (selection.count(v))
            throw std::invalid_argument("vertex in both latent and selection sets: " + v);
    }
    for (const std::string& v : selection) {
        if (!d.hasVertex(v))
            throw std::invalid_argument("unknown selection vertex: " + v);
    }

    std::vector<std::string> observed;
    for (const std::string& v : d.vertices())
        if (!latent.count(v) && !selection.count(v)) observed.push_back(v);
    if (observed.empty())
        throw std::invalid_argument("projection leaves no observed vertices");

    MixedGraph out;
    for (const std::string& v : observed) out.addVertex(v);

    for (std::size_t i = 0; i < observed.size(); ++i) {
        for (std::size_t j = i + 1; j < observed.size(); ++j) {
            const std::string& a = observed[i];
            const std::string& b = observed[j];
            std::vector<std::string> rest;
            for (const std::string& v : observed)
                if (v != a && v != b) rest.push_back(v);
            bool separable = false;
            for (const auto& z : allSubsets(rest)) {
                std::set<std::string> given = z;
                given.insert(selection.begin(), selection.end());
                if (mSeparated(d, a, b, given)) {
                    separable = true;
                    break;
                }
            }
            if (separable) continue;

            std::set<std::string> ancA = d.ancestorsOfSet([&] {
                std::set<std::string> s = selection;
                s.insert(a);
                return s;
            }());
            std::set<std::string> ancB = d.ancestorsOfSet([&] {
                std::set<std::string> s = selection;
                s.insert(b);
                return s;
            }());
            // Arrowhead at an end iff that end is not an ancestor of the
            // opposite endpoint or a selection vertex.
            Mark atA = ancB.count(a) ? Mark::Tail : Mark::Arrowhead;
            Mark atB = ancA.count(b) ? Mark::Tail : Mark::Arrowhead;
            out.addEdge(a, b, atA, atB);
        }
    }
    return out;
}

} // namespace mag
