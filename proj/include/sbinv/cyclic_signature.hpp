#pragma once

#include "sbinv/error.hpp"
#include "sbinv/numeric.hpp"

namespace sbinv {

/// Data of an n-fold cyclic cover of a 4-manifold branched along a
/// surface: the sheet count, the signature of the ambient manifold
/// (zero for a product of curves), and the self-intersection of the
/// branch class.
struct CyclicCoverSpec {
    Int sheets{1};
    Int ambient_signature{0};
    Int branch_square{0};
};

/// Hirzebruch's signature formula for cyclic branched covers:
///   sigma = ambient_signature - ((n^2 - 1) / (3n)) * branch_square.
/// Evaluated exactly; throws Error when 3n does not divide
/// (n^2 - 1) * branch_square, since geometric branch data always
/// yields an integer and a non-integer marks inconsistent input.
Int hirzebruch_signature(const CyclicCoverSpec& spec);

/// The integer m with sigma = 4m. Every surface bundle over a surface
/// has signature divisible by 4; throws Error otherwise.
Int signature_quantum(const Int& sigma);

} // namespace sbinv
