#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbinv/json_util.hpp"
#include "sbinv/numeric.hpp"

namespace sbinv {

enum class BoundKind { gf_upper, gf_lower, bfm_upper };

// Bounds either come from constructions realized in this library
// ("this_paper") or are quoted comparison values implemented exactly as
// quoted, without consulting their original sources.
enum class BoundSource { this_paper, ekkos_quoted, kotschick_quoted };

std::string to_string(BoundKind kind);
std::string to_string(BoundSource source);

/// Witnessing construction for a realized bound: the factorization
/// f = n * g (n, g >= 2) and, for signature-targeted bounds, the degree
/// k of the base pullback.
struct BoundWitness {
    Int n;
    Int g;
    std::optional<Int> k;
};

/// One bound on the minimal-base-genus quantities: either the asymptotic
/// genus-per-signature ratio (gf_upper / gf_lower) or a base-genus bound
/// at fixed signature (bfm_upper). Values are exact rationals.
struct BoundReport {
    Int f;
    BoundKind kind{BoundKind::gf_upper};
    Rat value;
    std::optional<BoundWitness> witness; // present iff source == this_paper
    BoundSource source{BoundSource::this_paper};
};

/// Best upper bound for the asymptotic base genus per unit signature at
/// fiber genus f: the minimum of 3n/(n^2 - 1) over factorizations
/// f = n * g with n, g >= 2, witness attached (smallest n on ties).
/// Empty when f has no such factorization (f < 4 or f prime).
/// Throws Error for f < 2.
std::optional<BoundReport> gf_upper(const Int& f);

/// The quoted comparison upper bound 16/(f - 2), defined for even
/// f >= 4 only; odd f throws Error.
BoundReport ekkos_upper(const Int& f);

/// The quoted lower bound 2/(f - 1), for f >= 2.
BoundReport kotschick_lower(const Int& f);

/// Best upper bound for the minimal base genus among fiber-genus-f
/// bundles of signature 4m, over the realized constructions and their
/// base pullbacks: for each factorization f = n * g with unit signature
/// m0 = g(g-1)(n^2-1)n^(2g-3)/3 and base b0 = g(g-1)n^(2g-2)+1, whenever
/// m0 | m the pullback of degree k = m/m0 gives b = k(b0-1)+1. Returns
/// the smallest such b with witness (n, g, k); empty when no
/// factorization divides m. Throws Error for f < 4 or m < 1.
std::optional<BoundReport> bfm_upper(const Int& f, const Int& m);

/// One table row; absent bounds stay empty.
struct BoundsRow {
    Int f;
    std::optional<BoundReport> gf;
    std::optional<BoundReport> ekkos;     // even f only
    std::optional<BoundReport> kotschick; // always present
};

/// Rows for f = 4..f_max in ascending order. Throws Error for f_max < 4.
std::vector<BoundsRow> bounds_table(const Int& f_max);

/// CSV with header f,gf_upper,gf_witness,ekkos_upper,kotschick_lower;
/// rationals as p/q, witnesses as "(n,g)" (quoted: the cell contains a
/// comma), absent bounds as empty cells.
std::string bounds_table_csv(const std::vector<BoundsRow>& rows);

/// JSON document with the same columns plus metadata notes; rationals
/// as "p/q" strings, absent bounds as null.
Json bounds_table_json(const Int& f_max, const std::vector<BoundsRow>& rows);

Json to_json(const BoundReport& report);

} // namespace sbinv
