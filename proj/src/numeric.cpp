#include "sbinv/numeric.hpp"

#include <limits>

#include "sbinv/error.hpp"

namespace sbinv {

Int div_exact(const Int& a, const Int& b) {
    if (b == 0)
        throw Error("division by zero");
    if (a % b != 0)
        throw Error(b.str() + " does not divide " + a.str() + " exactly");
    return a / b;
}

Int int_pow(const Int& base, const Int& exp) {
    if (exp < 0)
        throw Error("negative exponent " + exp.str());
    if (exp > std::numeric_limits<unsigned>::max())
        throw Error("exponent " + exp.str() + " too large");
    return pow(base, exp.convert_to<unsigned>());
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace sbinv
