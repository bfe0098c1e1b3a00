#include "sbinv/cyclic_signature.hpp"

namespace sbinv {

Int hirzebruch_signature(const CyclicCoverSpec& spec) {
    if (spec.sheets < 1)
        throw Error("sheet count must be >= 1, got " + spec.sheets.str());
    const Int numerator = (spec.sheets * spec.sheets - 1) * spec.branch_square;
    const Int denominator = 3 * spec.sheets;
    if (numerator % denominator != 0)
        throw Error("inconsistent branch data: (n^2-1) * branch_square = " + numerator.str() +
                    " is not divisible by 3n = " + denominator.str());
    return spec.ambient_signature - numerator / denominator;
}

Int signature_quantum(const Int& sigma) {
    if (sigma % 4 != 0)
        throw Error("signature " + sigma.str() +
                    " is not divisible by 4 and cannot arise from a surface bundle");
    return sigma / 4;
}

} // namespace sbinv
