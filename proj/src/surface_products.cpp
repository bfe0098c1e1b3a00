#include "sbinv/surface_products.hpp"

namespace sbinv {

Int graph_self_intersection(const GraphDivisor& gd) {
    if (gd.degree < 1)
        throw Error("map degree must be >= 1, got " + gd.degree.str());
    // Adjunction in domain x target: the canonical-degree term
    // 2 g(domain) - 2 appears on both sides and cancels.
    return -gd.degree * (2 * gd.target_genus.value() - 2);
}

Int branch_class_square(const BranchClass& bc) {
    if (!bc.pairwise_disjoint)
        throw Error("branch class components must be pairwise disjoint");
    Int square = 0;
    for (const auto& component : bc.components)
        square += graph_self_intersection(component);
    return square;
}

} // namespace sbinv
