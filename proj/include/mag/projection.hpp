#ifndef MAG_PROJECTION_HPP
#define MAG_PROJECTION_HPP

#include "mag/graph.hpp"

namespace mag {

// Latent projection of a DAG onto the observed vertices O = V \ (L u S):
// a and b are adjacent iff no Z subset of O\{a,b} d-separates them given
// Z u S; the end at b is an arrowhead iff b is not an ancestor of {a} u S.
// The output's independence model equals the DAG's model marginalized over
// L and conditioned on S.
MixedGraph project(const MixedGraph& d, const std::set<std::string>& latent,
                   const std::set<std::string>& selection);

} // namespace mag

#endif
