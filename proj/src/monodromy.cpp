#include "sbinv/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace sbinv {

namespace {

// Union-find over sheet labels.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

std::vector<const Permutation*> generators(const PermutationCover& pc) {
    std::vector<const Permutation*> gens;
    for (const auto& [a, b] : pc.handles) {
        gens.push_back(&a);
        gens.push_back(&b);
    }
    for (const auto& z : pc.branches)
        gens.push_back(&z);
    return gens;
}

std::vector<int> orbit_labels(const PermutationCover& pc) {
    DisjointSets sets(pc.degree);
    for (const Permutation* p : generators(pc))
        for (int i = 0; i < pc.degree; ++i)
            sets.unite(i, p->apply(i));
    std::vector<int> labels(static_cast<std::size_t>(pc.degree));
    for (int i = 0; i < pc.degree; ++i)
        labels[static_cast<std::size_t>(i)] = sets.find(i);
    return labels;
}

void require_valid(const PermutationCover& pc) {
    if (!validate(pc))
        throw Error("invalid permutation cover: permutations must all act on the declared "
                    "degree, one handle pair per unit of base genus, and the surface-group "
                    "relation must hold");
}

// Number of cycles of z on one orbit (the orbit is z-invariant).
Int cycles_on_orbit(const Permutation& z, const std::vector<int>& labels, int label, int size) {
    std::vector<bool> seen(z.images().size(), false);
    Int cycles = 0;
    int visited = 0;
    for (int start = 0; start < z.degree() && visited < size; ++start) {
        if (labels[static_cast<std::size_t>(start)] != label ||
            seen[static_cast<std::size_t>(start)])
            continue;
        ++cycles;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = z.apply(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++visited;
        }
    }
    return cycles;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int image : images_) {
        if (image < 0 || static_cast<std::size_t>(image) >= images_.size() ||
            hit[static_cast<std::size_t>(image)])
            throw Error("permutation image list is not a bijection of 0.." +
                        std::to_string(images_.empty() ? 0 : images_.size() - 1));
        hit[static_cast<std::size_t>(image)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0)
        throw Error("permutation degree must be >= 0");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::rotation(int degree, const Int& shift) {
    if (degree < 1)
        throw Error("rotation degree must be >= 1");
    const Int reduced = ((shift % degree) + degree) % degree;
    const int s = reduced.convert_to<int>();
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        images[static_cast<std::size_t>(i)] = (i + s) % degree;
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::string& cycles) {
    if (degree < 0)
        throw Error("permutation degree must be >= 0");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);

    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < cycles.size() &&
               (std::isspace(static_cast<unsigned char>(cycles[pos])) || cycles[pos] == ','))
            ++pos;
    };
    skip_spaces();
    while (pos < cycles.size()) {
        if (cycles[pos] != '(')
            throw Error("bad cycle notation near \"" + cycles.substr(pos) + "\"");
        ++pos;
        std::vector<int> cycle;
        skip_spaces();
        while (pos < cycles.size() && cycles[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
                throw Error("bad cycle notation near \"" + cycles.substr(pos) + "\"");
            int symbol = 0;
            while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos]))) {
                symbol = symbol * 10 + (cycles[pos] - '0');
                if (symbol >= degree && degree > 0)
                    break;
                ++pos;
            }
            if (symbol >= degree)
                throw Error("cycle symbol " + std::to_string(symbol) + " out of range for degree " +
                            std::to_string(degree));
            if (used[static_cast<std::size_t>(symbol)])
                throw Error("cycle symbol " + std::to_string(symbol) + " repeated");
            used[static_cast<std::size_t>(symbol)] = true;
            cycle.push_back(symbol);
            skip_spaces();
        }
        if (pos >= cycles.size())
            throw Error("unterminated cycle in \"" + cycles + "\"");
        ++pos; // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        skip_spaces();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.degree() != degree())
        throw Error("cannot compose permutations of degrees " + std::to_string(degree()) +
                    " and " + std::to_string(next.degree()));
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        images[i] = next.images_[static_cast<std::size_t>(images_[i])];
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

Int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    Int cycles = 0;
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        ++cycles;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = apply(x))
            seen[static_cast<std::size_t>(x)] = true;
    }
    return cycles;
}

bool validate(const PermutationCover& pc) {
    if (pc.degree < 1)
        return false;
    if (Int(pc.handles.size()) != pc.base_genus.value())
        return false;
    for (const Permutation* p : generators(pc))
        if (p->degree() != pc.degree)
            return false;
    // a_1 b_1 a_1^-1 b_1^-1 ... z_1 ... z_k, applied left to right.
    Permutation word = Permutation::identity(pc.degree);
    for (const auto& [a, b] : pc.handles)
        word = word.then(a).then(b).then(a.inverse()).then(b.inverse());
    for (const auto& z : pc.branches)
        word = word.then(z);
    return word.is_identity();
}

Int component_count(const PermutationCover& pc) {
    require_valid(pc);
    const std::vector<int> labels = orbit_labels(pc);
    std::vector<int> roots = labels;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return Int(roots.size());
}

EulerChar perm_cover_euler(const PermutationCover& pc) {
    require_valid(pc);
    const Int d = pc.degree;
    const Int handle_count = Int(pc.handles.size());
    Int chi = d * (2 - 2 * handle_count);
    for (const auto& z : pc.branches)
        chi -= d - z.cycle_count();
    return EulerChar{chi};
}

std::vector<CoverComponent> cover_components(const PermutationCover& pc) {
    require_valid(pc);
    const std::vector<int> labels = orbit_labels(pc);
    const Int handle_count = Int(pc.handles.size());

    // Orbits keyed by root label, ordered by their smallest member.
    std::map<int, int> sizes; // root -> size
    std::vector<int> order;
    for (int i = 0; i < pc.degree; ++i) {
        const int label = labels[static_cast<std::size_t>(i)];
        if (sizes.emplace(label, 0).second)
            order.push_back(label);
        ++sizes[label];
    }

    std::vector<CoverComponent> result;
    for (const int label : order) {
        const int size = sizes[label];
        Int chi = Int(size) * (2 - 2 * handle_count);
        for (const auto& z : pc.branches)
            chi -= Int(size) - cycles_on_orbit(z, labels, label, size);
        CoverComponent component;
        component.size = size;
        component.euler = EulerChar{chi};
        component.genus = genus_from_euler(component.euler);
        result.push_back(std::move(component));
    }
    return result;
}

PermutationCover cyclic_cover_spec(const Genus& g, const Int& n,
                                   const std::vector<Int>& handle_values) {
    if (n < 2)
        throw Error("cyclic cover needs n >= 2 sheets, got " + n.str());
    if (n > 1000000)
        throw Error("cyclic cover degree " + n.str() + " too large to enumerate sheets");
    if (Int(handle_values.size()) != 2 * g.value())
        throw Error("expected " + Int(2 * g.value()).str() + " handle residues, got " +
                    std::to_string(handle_values.size()));
    const int degree = n.convert_to<int>();

    PermutationCover pc;
    pc.base_genus = g;
    pc.degree = degree;
    for (std::size_t i = 0; i + 1 < handle_values.size(); i += 2)
        pc.handles.emplace_back(Permutation::rotation(degree, handle_values[i]),
                                Permutation::rotation(degree, handle_values[i + 1]));
    pc.branches.push_back(Permutation::rotation(degree, 1));
    pc.branches.push_back(Permutation::rotation(degree, n - 1));
    return pc;
}

namespace {

Json perm_to_json(const Permutation& p) {
    Json j = Json::array();
    for (int image : p.images())
        j.push_back(image);
    return j;
}

Permutation perm_from_json(const Json& j, int degree) {
    if (j.is_string())
        return Permutation::from_cycles(degree, j.get_ref<const std::string&>());
    if (j.is_array()) {
        std::vector<int> images;
        images.reserve(j.size());
        for (const auto& entry : j) {
            if (!entry.is_number_integer() && !entry.is_number_unsigned())
                throw Error("permutation image must be an integer, got " + entry.dump());
            images.push_back(entry.get<int>());
        }
        if (static_cast<int>(images.size()) != degree)
            throw Error("permutation acts on " + std::to_string(images.size()) +
                        " symbols, expected " + std::to_string(degree));
        return Permutation(std::move(images));
    }
    throw Error("permutation must be an image array or a cycle string, got " + j.dump());
}

} // namespace

Json to_json(const PermutationCover& pc) {
    Json j;
    j["base_genus"] = int_to_json(pc.base_genus.value());
    j["degree"] = pc.degree;
    Json handles = Json::array();
    for (const auto& [a, b] : pc.handles)
        handles.push_back(Json::array({perm_to_json(a), perm_to_json(b)}));
    j["handles"] = std::move(handles);
    Json branches = Json::array();
    for (const auto& z : pc.branches)
        branches.push_back(perm_to_json(z));
    j["branches"] = std::move(branches);
    return j;
}

PermutationCover cover_from_json(const Json& j) {
    if (!j.is_object())
        throw Error("cover spec must be a JSON object");
    for (const char* key : {"base_genus", "degree", "handles", "branches"})
        if (!j.contains(key))
            throw Error(std::string("cover spec is missing \"") + key + "\"");

    PermutationCover pc;
    pc.base_genus = Genus(int_from_json(j.at("base_genus")));
    const Int degree = int_from_json(j.at("degree"));
    if (degree < 1 || degree > 1000000)
        throw Error("cover degree must be in 1..1000000, got " + degree.str());
    pc.degree = degree.convert_to<int>();

    const Json& handles = j.at("handles");
    if (!handles.is_array())
        throw Error("\"handles\" must be a list of [a_i, b_i] pairs");
    for (const auto& pair : handles) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error("each handle entry must be a [a_i, b_i] pair");
        pc.handles.emplace_back(perm_from_json(pair.at(0), pc.degree),
                                perm_from_json(pair.at(1), pc.degree));
    }
    const Json& branches = j.at("branches");
    if (!branches.is_array())
        throw Error("\"branches\" must be a list of permutations");
    for (const auto& z : branches)
        pc.branches.push_back(perm_from_json(z, pc.degree));
    return pc;
}

} // namespace sbinv
