#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbinv/cyclic_signature.hpp"
#include "sbinv/json_util.hpp"
#include "sbinv/surface_products.hpp"
#include "sbinv/topology.hpp"

namespace sbinv {

/// Parameters of the two-fibration family X(g,n): an n-fold cyclic
/// branched cover of a product of curves built from a genus-g curve.
struct ConstructionParams {
    Int g{2};
    Int n{2};
};

/// One covering map in a tower of curves.
struct CoverStep {
    std::string name;
    Genus base_genus;
    Int degree{1};
    RamificationProfile ram;
    Genus total_genus; // genus of the covering curve
};

using CoverTower = std::vector<CoverStep>;

/// One fibration of a 4-manifold over a curve.
struct BundleRecord {
    Genus base_genus;
    Genus fiber_genus;
    Int signature{0};
    std::string provenance;
};

struct CheckResult {
    std::string name;
    bool passed{false};
    std::string detail;
};

/// Full numerical record of one construction: the tower of curves, the
/// branch class inside the final product, the total Euler characteristic,
/// and the two fibrations. Connectivity of the top cover is assumed; a
/// disconnected cover can be replaced by a connected one of the same
/// degree without changing any number recorded here, and `note` carries
/// that caveat on every report.
struct ConstructionReport {
    std::string construction; // "xgn" or "simple_genus2"
    std::optional<ConstructionParams> params;
    Int sheets{1}; // degree of the branched cover of the product
    CoverTower tower;
    BranchClass graphs;
    EulerChar total_chi;
    BundleRecord fibration1; // over the small-genus factor of the product
    BundleRecord fibration2; // over the top curve of the tower
    std::string note;
};

/// Signature of X(g,n) in closed form: 4 g (g-1) (n^2-1) n^(2g-3) / 3,
/// evaluated exactly. Independent of the branched-cover signature route;
/// cross_validate compares the two.
Int signature_closed_form(const ConstructionParams& p);

/// Build the full record of X(g,n) for g, n >= 2:
/// a tower E <- C <- D <- Dt (branched degree g, then unramified degrees
/// g and n^(2g-2)), two disjoint graphs of degree g*n^(2g-2) maps
/// Dt -> C, and the n-fold cyclic cover of Dt x C branched along them.
/// Fibration 1 is over C, fibration 2 over Dt.
ConstructionReport build_xgn(const ConstructionParams& p);

/// Build the low-tech base-genus-2 example: the degree-16 cover Ct of a
/// genus-2 curve C classified by its mod-2 homology, two disjoint graphs
/// of degree-16 maps Ct -> C (the cover map and its composition with a
/// fixed-point-free automorphism of C), and the double cover of Ct x C
/// branched along them. Yields base genus 2, fiber genus 49,
/// signature 32 over C.
ConstructionReport build_simple_genus2();

/// Pull a fibration back over an unramified degree-m cover of its base:
/// signature and (base genus - 1) scale by m, the fiber is unchanged.
BundleRecord pullback(const BundleRecord& rec, const Int& m);

/// Re-derive every headline number of a report along an independent
/// route and compare:
///   chi_product_fibration1/2   total chi vs (2-2b)(2-2f)
///   signature_two_routes       stored sigma vs the branched-cover formula
///                              applied to the stored branch class
///   signature_divisible_by_4   sigma = 4m
///   fibration1_fiber_genus_rh  fiber genus vs Riemann-Hurwitz over the
///                              branch points cut out by both graphs
///   fibration2_fiber_genus_rh  fiber genus vs Riemann-Hurwitz over one
///                              point per graph
/// Failures are reported, never thrown.
std::vector<CheckResult> cross_validate(const ConstructionReport& rep);

Json to_json(const BundleRecord& rec);
Json to_json(const CoverStep& step);
Json to_json(const CheckResult& check);

/// Serialized report: keys params, tower, fibration1, fibration2,
/// signature, total_chi, checks (freshly computed), note — in that order.
Json to_json(const ConstructionReport& rep);

} // namespace sbinv
