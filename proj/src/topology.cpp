#include "sbinv/topology.hpp"

namespace sbinv {

void RamificationProfile::add(const Int& index, const Int& count) {
    if (index < 2)
        throw Error("ramification index must be >= 2, got " + index.str());
    if (count < 0)
        throw Error("ramification point count must be >= 0, got " + count.str());
    if (count == 0)
        return;
    entries_[index] += count;
}

Int RamificationProfile::total_ramification() const {
    Int total = 0;
    for (const auto& [index, count] : entries_)
        total += count * (index - 1);
    return total;
}

Int RamificationProfile::max_index() const {
    if (entries_.empty())
        return 1;
    return entries_.rbegin()->first;
}

EulerChar euler_from_genus(const Genus& g) {
    return EulerChar{2 - 2 * g.value()};
}

Genus genus_from_euler(const EulerChar& x) {
    if (x.value > 2 || x.value % 2 != 0)
        throw Error("Euler characteristic " + x.value.str() +
                    " is not that of a connected closed oriented surface");
    return Genus((2 - x.value) / 2);
}

Genus rh_cover_genus(const Genus& base, const Int& degree, const RamificationProfile& ram) {
    if (degree < 1)
        throw Error("covering degree must be >= 1, got " + degree.str());
    if (ram.max_index() > degree)
        throw Error("ramification index " + ram.max_index().str() +
                    " exceeds covering degree " + degree.str());
    EulerChar chi{degree * (2 - 2 * base.value()) - ram.total_ramification()};
    try {
        return genus_from_euler(chi);
    } catch (const Error&) {
        throw Error("inconsistent cover data: covering Euler characteristic " + chi.value.str() +
                    " is not that of a connected closed surface");
    }
}

EulerChar branched_cover_euler(const Int& sheets, const EulerChar& ambient_chi,
                               const EulerChar& branch_chi) {
    if (sheets < 1)
        throw Error("sheet count must be >= 1, got " + sheets.str());
    return EulerChar{sheets * ambient_chi.value - (sheets - 1) * branch_chi.value};
}

} // namespace sbinv
