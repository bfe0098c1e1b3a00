#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sbinv/json_util.hpp"
#include "sbinv/topology.hpp"

namespace sbinv {

/// A permutation of {0, ..., d-1}, stored as its image list.
class Permutation {
public:
    Permutation() = default;
    /// Throws Error unless `images` is a bijection of {0, ..., d-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// i -> (i + shift) mod degree.
    static Permutation rotation(int degree, const Int& shift);
    /// Parse cycle notation on {0, ..., degree-1}, e.g. "(0 1 2)(3 4)".
    /// Fixed points may be omitted; an empty string is the identity.
    static Permutation from_cycles(int degree, const std::string& cycles);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& images() const noexcept { return images_; }

    /// Composition "this first, then next": (this.then(p))(i) = p(this(i)).
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Number of cycles on the full symbol set, fixed points included.
    Int cycle_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// A cover of a closed genus-h surface given by permutation monodromy:
/// one pair (a_i, b_i) per handle and one permutation z_j per branch
/// point, all acting on d sheets. The data describes a genuine cover
/// exactly when the surface-group relation
///   a_1 b_1 a_1^-1 b_1^-1 ... a_h b_h a_h^-1 b_h^-1 z_1 ... z_k = id
/// holds, with words applied left to right.
struct PermutationCover {
    Genus base_genus;
    int degree{1};
    std::vector<std::pair<Permutation, Permutation>> handles;
    std::vector<Permutation> branches;
};

/// True iff every permutation acts on `degree` symbols, there is one
/// handle pair per unit of base genus, and the surface-group relation
/// holds.
bool validate(const PermutationCover& pc);

/// Number of connected components of the cover = orbits of the group
/// generated by all handle and branch permutations. Throws Error on an
/// invalid cover.
Int component_count(const PermutationCover& pc);

/// Euler characteristic of the cover by cycle counting:
///   chi = d(2 - 2h) - sum_j (d - cycles(z_j)).
/// Branch cycles of length e close up to one point where e sheets meet.
/// Throws Error on an invalid cover.
EulerChar perm_cover_euler(const PermutationCover& pc);

/// One connected piece of a cover: its sheet count and invariants.
struct CoverComponent {
    int size{0};
    EulerChar euler;
    Genus genus;
};

/// Per-component invariants, ordered by smallest sheet label. Each orbit
/// is invariant under the whole monodromy group, so the restriction of
/// the data to it is itself a cover. Throws Error on an invalid cover.
std::vector<CoverComponent> cover_components(const PermutationCover& pc);

/// Monodromy of the n-fold cyclic cover of a genus-g curve branched at
/// two points with opposite full cycles: sheets are residues mod n, each
/// handle permutation is the rotation by the given residue, and the two
/// branch permutations are rotation by +1 and -1. Always valid, always
/// connected; handle_values must hold exactly 2g residues.
PermutationCover cyclic_cover_spec(const Genus& g, const Int& n,
                                   const std::vector<Int>& handle_values);

/// Cover-spec document: keys base_genus, degree, handles (list of
/// [a_i, b_i] pairs), branches (list), permutations as image arrays.
/// Parsing also accepts cycle strings for any permutation.
Json to_json(const PermutationCover& pc);
PermutationCover cover_from_json(const Json& j);

} // namespace sbinv
