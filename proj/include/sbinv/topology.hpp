#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>

#include "sbinv/error.hpp"
#include "sbinv/numeric.hpp"

namespace sbinv {

/// Genus of a closed oriented surface. Non-negative by construction.
class Genus {
public:
    Genus() = default;
    explicit Genus(Int v) : value_(std::move(v)) {
        if (value_ < 0)
            throw Error("genus must be non-negative, got " + value_.str());
    }

    const Int& value() const noexcept { return value_; }

    friend bool operator==(const Genus&, const Genus&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Genus& g) {
        return os << g.value_;
    }

private:
    Int value_{0};
};

/// Euler characteristic of a space. For a connected closed oriented
/// surface the value is even and at most 2; that constraint is enforced
/// where surfaces are reconstructed, not here.
struct EulerChar {
    Int value{0};

    friend bool operator==(const EulerChar&, const EulerChar&) = default;
    friend std::ostream& operator<<(std::ostream& os, const EulerChar& x) {
        return os << x.value;
    }
};

/// Branch data of a covering map as a multiset of ramification indices:
/// each entry (index, count) records `count` points where `index` sheets
/// come together. Point identities are never needed, only the
/// Riemann-Hurwitz sum.
class RamificationProfile {
public:
    RamificationProfile() = default;
    RamificationProfile(std::initializer_list<std::pair<Int, Int>> entries) {
        for (const auto& [index, count] : entries)
            add(index, count);
    }

    /// Record `count` further points of ramification index `index`.
    /// Entries with equal index merge; zero counts are dropped.
    void add(const Int& index, const Int& count);

    const std::map<Int, Int>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Sum of count * (index - 1): the total defect in the
    /// Riemann-Hurwitz formula.
    Int total_ramification() const;

    /// Largest ramification index present; 1 for the empty profile.
    Int max_index() const;

    friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

private:
    std::map<Int, Int> entries_;
};

/// chi = 2 - 2g.
EulerChar euler_from_genus(const Genus& g);

/// Inverse of euler_from_genus. Throws Error unless x is even and <= 2
/// (anything else is not a connected closed oriented surface).
Genus genus_from_euler(const EulerChar& x);

/// Genus of a connected degree-d branched cover of a closed surface of
/// the given genus, by Riemann-Hurwitz:
///   chi(cover) = d * chi(base) - sum count * (index - 1).
/// Throws Error when the data is inconsistent: any ramification index
/// exceeding the degree, or a resulting chi that is odd or greater
/// than 2 (a disconnected or impossible cover).
Genus rh_cover_genus(const Genus& base, const Int& degree, const RamificationProfile& ram);

/// Euler characteristic of an n-sheeted cyclic cover branched along a
/// curve of Euler characteristic branch_chi inside an ambient space of
/// Euler characteristic ambient_chi:
///   chi = n * ambient_chi - (n - 1) * branch_chi.
EulerChar branched_cover_euler(const Int& sheets, const EulerChar& ambient_chi,
                               const EulerChar& branch_chi);

} // namespace sbinv
