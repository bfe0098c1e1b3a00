#pragma once

#include <vector>

#include "sbinv/topology.hpp"

namespace sbinv {

/// The graph of a degree-d map between curves, sitting inside the
/// product of its domain and target. Only the numerical data survives:
/// the two genera and the degree determine every intersection number
/// used here.
struct GraphDivisor {
    Genus domain_genus;
    Genus target_genus;
    Int degree{1}; // degree of the map whose graph this is, >= 1
};

/// Self-intersection of a graph divisor in domain x target, by the
/// adjunction formula. The domain-genus terms cancel exactly and
///   graph^2 = -degree * (2 * target_genus - 2).
Int graph_self_intersection(const GraphDivisor& gd);

/// A divisor class supported on several graphs. Disjointness is a
/// declared input, established by whoever assembled the class; the
/// square of a disjoint class has no cross terms.
struct BranchClass {
    std::vector<GraphDivisor> components;
    bool pairwise_disjoint{true};
};

/// Square of the class: sum of the component self-intersections.
/// Throws Error when the components are not flagged pairwise disjoint
/// (cross terms would then be unknown).
Int branch_class_square(const BranchClass& bc);

} // namespace sbinv
