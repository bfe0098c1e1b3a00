#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sbinv/bounds.hpp"
#include "sbinv/constructions.hpp"
#include "sbinv/cyclic_signature.hpp"
#include "sbinv/json_util.hpp"
#include "sbinv/monodromy.hpp"
#include "sbinv/surface_products.hpp"
#include "sbinv/topology.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as python ints,
// through their decimal form.
template <>
struct type_caster<sbinv::Int> {
    PYBIND11_TYPE_CASTER(sbinv::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = sbinv::Int(static_cast<std::string>(str(src)));
        return true;
    }

    static handle cast(const sbinv::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// Exact rationals map to fractions.Fraction.
template <>
struct type_caster<sbinv::Rat> {
    PYBIND11_TYPE_CASTER(sbinv::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = sbinv::Rat(sbinv::Int(static_cast<std::string>(str(src))));
            return true;
        }
        if (PyFloat_Check(src.ptr()))
            return false;
        if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
            const sbinv::Int num(static_cast<std::string>(str(src.attr("numerator"))));
            const sbinv::Int den(static_cast<std::string>(str(src.attr("denominator"))));
            if (den == 0)
                return false;
            value = sbinv::Rat(num, den);
            return true;
        }
        return false;
    }

    static handle cast(const sbinv::Rat& v, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(numerator(v).str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(denominator(v).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace sbinv;

RamificationProfile profile_from_pairs(const std::vector<std::pair<Int, Int>>& pairs) {
    RamificationProfile profile;
    for (const auto& [index, count] : pairs)
        profile.add(index, count);
    return profile;
}

std::vector<std::pair<Int, Int>> profile_to_pairs(const RamificationProfile& profile) {
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& [index, count] : profile.entries())
        pairs.emplace_back(index, count);
    return pairs;
}

Permutation perm_from_images(const std::vector<int>& images) {
    return Permutation(images);
}

py::object witness_to_py(const std::optional<BoundWitness>& witness) {
    if (!witness)
        return py::none();
    py::dict d;
    d["n"] = py::cast(witness->n);
    d["g"] = py::cast(witness->g);
    if (witness->k)
        d["k"] = py::cast(*witness->k);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants of surface bundles over surfaces: branched-cover "
              "constructions, signatures, monodromy, and minimal-base-genus bounds.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    // One-surface calculus.
    m.def(
        "euler_from_genus", [](const Int& g) { return euler_from_genus(Genus(g)).value; },
        py::arg("genus"), "Euler characteristic 2 - 2g of a closed oriented surface.");
    m.def(
        "genus_from_euler", [](const Int& chi) { return genus_from_euler(EulerChar{chi}).value(); },
        py::arg("euler"),
        "Genus of the closed oriented surface with the given Euler characteristic.");
    m.def(
        "rh_cover_genus",
        [](const Int& base_genus, const Int& degree, const std::vector<std::pair<Int, Int>>& ram) {
            return rh_cover_genus(Genus(base_genus), degree, profile_from_pairs(ram)).value();
        },
        py::arg("base_genus"), py::arg("degree"),
        py::arg("ramification") = std::vector<std::pair<Int, Int>>{},
        "Genus of a connected branched cover by Riemann-Hurwitz; ramification is a list of "
        "(index, count) pairs.");
    m.def(
        "branched_cover_euler",
        [](const Int& sheets, const Int& ambient_chi, const Int& branch_chi) {
            return branched_cover_euler(sheets, EulerChar{ambient_chi}, EulerChar{branch_chi})
                .value;
        },
        py::arg("sheets"), py::arg("ambient_chi"), py::arg("branch_chi"),
        "Euler characteristic n*ambient - (n-1)*branch of a cyclic branched cover.");

    // Graphs in a product of curves.
    m.def(
        "graph_self_intersection",
        [](const Int& domain_genus, const Int& target_genus, const Int& degree) {
            return graph_self_intersection({Genus(domain_genus), Genus(target_genus), degree});
        },
        py::arg("domain_genus"), py::arg("target_genus"), py::arg("degree"),
        "Self-intersection -degree*(2*target_genus - 2) of the graph of a map between curves.");
    m.def(
        "branch_class_square",
        [](const std::vector<std::tuple<Int, Int, Int>>& components, bool pairwise_disjoint) {
            BranchClass bc;
            bc.pairwise_disjoint = pairwise_disjoint;
            for (const auto& [domain, target, degree] : components)
                bc.components.push_back({Genus(domain), Genus(target), degree});
            return branch_class_square(bc);
        },
        py::arg("components"), py::arg("pairwise_disjoint") = true,
        "Square of a disjoint union of graphs, each given as (domain_genus, target_genus, "
        "degree).");

    // Signatures.
    m.def(
        "hirzebruch_signature",
        [](const Int& sheets, const Int& ambient_signature, const Int& branch_square) {
            return hirzebruch_signature({sheets, ambient_signature, branch_square});
        },
        py::arg("sheets"), py::arg("ambient_signature"), py::arg("branch_square"),
        "Signature of an n-fold cyclic branched cover: ambient - ((n^2-1)/(3n)) * "
        "branch_square, exact.");
    m.def("signature_quantum", &signature_quantum, py::arg("sigma"),
          "The integer m with sigma = 4m; raises unless sigma is divisible by 4.");

    // Construction records.
    py::class_<BundleRecord>(m, "BundleRecord",
                             "One fibration of a 4-manifold over a curve.")
        .def(py::init([](const Int& base_genus, const Int& fiber_genus, const Int& signature,
                         const std::string& provenance) {
                 return BundleRecord{Genus(base_genus), Genus(fiber_genus), signature, provenance};
             }),
             py::arg("base_genus"), py::arg("fiber_genus"), py::arg("signature"),
             py::arg("provenance") = std::string())
        .def_property_readonly("base_genus",
                               [](const BundleRecord& r) { return r.base_genus.value(); })
        .def_property_readonly("fiber_genus",
                               [](const BundleRecord& r) { return r.fiber_genus.value(); })
        .def_readonly("signature", &BundleRecord::signature)
        .def_readonly("provenance", &BundleRecord::provenance)
        .def("__repr__", [](const BundleRecord& r) {
            std::ostringstream os;
            os << "BundleRecord(base_genus=" << r.base_genus << ", fiber_genus=" << r.fiber_genus
               << ", signature=" << r.signature << ")";
            return os.str();
        });

    py::class_<CoverStep>(m, "CoverStep", "One covering map in a tower of curves.")
        .def_readonly("name", &CoverStep::name)
        .def_property_readonly("base_genus",
                               [](const CoverStep& s) { return s.base_genus.value(); })
        .def_readonly("degree", &CoverStep::degree)
        .def_property_readonly("ramification",
                               [](const CoverStep& s) { return profile_to_pairs(s.ram); })
        .def_property_readonly("total_genus",
                               [](const CoverStep& s) { return s.total_genus.value(); })
        .def("__repr__", [](const CoverStep& s) {
            std::ostringstream os;
            os << "CoverStep(" << s.name << ": genus " << s.base_genus << " -> " << s.total_genus
               << ", degree " << s.degree << ")";
            return os.str();
        });

    py::class_<CheckResult>(m, "CheckResult", "Outcome of one cross-validation check.")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail)
        .def("__repr__", [](const CheckResult& c) {
            return "CheckResult(" + c.name + ": " + (c.passed ? "passed" : "FAILED") + ")";
        });

    py::class_<ConstructionReport>(m, "ConstructionReport",
                                   "Full numerical record of one construction.")
        .def_readonly("construction", &ConstructionReport::construction)
        .def_property_readonly("g",
                               [](const ConstructionReport& r) -> std::optional<Int> {
                                   if (!r.params)
                                       return std::nullopt;
                                   return r.params->g;
                               })
        .def_property_readonly("n",
                               [](const ConstructionReport& r) -> std::optional<Int> {
                                   if (!r.params)
                                       return std::nullopt;
                                   return r.params->n;
                               })
        .def_readonly("sheets", &ConstructionReport::sheets)
        .def_readonly("tower", &ConstructionReport::tower)
        .def_property_readonly("graphs",
                               [](const ConstructionReport& r) {
                                   std::vector<std::tuple<Int, Int, Int>> graphs;
                                   for (const auto& gd : r.graphs.components)
                                       graphs.emplace_back(gd.domain_genus.value(),
                                                           gd.target_genus.value(), gd.degree);
                                   return graphs;
                               })
        .def_property_readonly("total_chi",
                               [](const ConstructionReport& r) { return r.total_chi.value; })
        .def_readonly("fibration1", &ConstructionReport::fibration1)
        .def_readonly("fibration2", &ConstructionReport::fibration2)
        .def_property_readonly(
            "signature", [](const ConstructionReport& r) { return r.fibration1.signature; })
        .def_readonly("note", &ConstructionReport::note)
        .def("to_json", [](const ConstructionReport& r) { return dump_json(to_json(r)); },
             "Canonical JSON document for this report, cross-checks included.")
        .def("__repr__", [](const ConstructionReport& r) {
            std::ostringstream os;
            os << "ConstructionReport(" << r.construction << ", signature "
               << r.fibration1.signature << ", fibrations (" << r.fibration1.base_genus << ","
               << r.fibration1.fiber_genus << ")/(" << r.fibration2.base_genus << ","
               << r.fibration2.fiber_genus << "))";
            return os.str();
        });

    m.def(
        "build_xgn",
        [](const Int& g, const Int& n) { return build_xgn({g, n}); }, py::arg("g"), py::arg("n"),
        "Build the doubly fibered 4-manifold X(g,n) for g, n >= 2.");
    m.def("build_simple_genus2", &build_simple_genus2,
          "Build the base-genus-2, fiber-genus-49, signature-32 double-cover example.");
    m.def("pullback", &pullback, py::arg("record"), py::arg("m"),
          "Pull a fibration back over an unramified degree-m cover of its base.");
    m.def("cross_validate", &cross_validate, py::arg("report"),
          "Re-derive the report's numbers along independent routes; returns check results.");

    // Permutation covers.
    py::class_<PermutationCover>(m, "PermutationCover",
                                 "A cover of a closed surface given by permutation monodromy.")
        .def(py::init([](const Int& base_genus, int degree,
                         const std::vector<std::pair<std::vector<int>, std::vector<int>>>& handles,
                         const std::vector<std::vector<int>>& branches) {
                 PermutationCover pc;
                 pc.base_genus = Genus(base_genus);
                 pc.degree = degree;
                 for (const auto& [a, b] : handles)
                     pc.handles.emplace_back(perm_from_images(a), perm_from_images(b));
                 for (const auto& z : branches)
                     pc.branches.push_back(perm_from_images(z));
                 return pc;
             }),
             py::arg("base_genus"), py::arg("degree"),
             py::arg("handles") = std::vector<std::pair<std::vector<int>, std::vector<int>>>{},
             py::arg("branches") = std::vector<std::vector<int>>{})
        .def_property_readonly("base_genus",
                               [](const PermutationCover& pc) { return pc.base_genus.value(); })
        .def_readonly("degree", &PermutationCover::degree)
        .def_property_readonly("handles",
                               [](const PermutationCover& pc) {
                                   std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
                                   for (const auto& [a, b] : pc.handles)
                                       out.emplace_back(a.images(), b.images());
                                   return out;
                               })
        .def_property_readonly("branches",
                               [](const PermutationCover& pc) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& z : pc.branches)
                                       out.push_back(z.images());
                                   return out;
                               })
        .def("validate", [](const PermutationCover& pc) { return validate(pc); },
             "True iff the data describes a genuine cover (surface-group relation holds).")
        .def("component_count", [](const PermutationCover& pc) { return component_count(pc); },
             "Number of connected components (orbits of the monodromy group).")
        .def("euler", [](const PermutationCover& pc) { return perm_cover_euler(pc).value; },
             "Euler characteristic of the cover by cycle counting.")
        .def(
            "genus",
            [](const PermutationCover& pc) -> std::optional<Int> {
                if (component_count(pc) != 1)
                    return std::nullopt;
                return genus_from_euler(perm_cover_euler(pc)).value();
            },
            "Genus of the cover when connected, None otherwise.")
        .def(
            "components",
            [](const PermutationCover& pc) {
                std::vector<std::tuple<int, Int, Int>> out;
                for (const auto& component : cover_components(pc))
                    out.emplace_back(component.size, component.euler.value,
                                     component.genus.value());
                return out;
            },
            "Per-component (sheets, euler, genus) triples.")
        .def("to_json", [](const PermutationCover& pc) { return dump_json(to_json(pc)); },
             "Canonical cover-spec document (permutations as image arrays).")
        .def("__repr__", [](const PermutationCover& pc) {
            std::ostringstream os;
            os << "PermutationCover(base_genus=" << pc.base_genus << ", degree=" << pc.degree
               << ", branches=" << pc.branches.size() << ")";
            return os.str();
        });

    m.def(
        "cyclic_cover_spec",
        [](const Int& g, const Int& n, const std::vector<Int>& handle_values) {
            return cyclic_cover_spec(Genus(g), n, handle_values);
        },
        py::arg("g"), py::arg("n"), py::arg("handle_values"),
        "Monodromy of the n-fold cyclic cover of a genus-g curve branched at two points; "
        "handle_values holds 2g residues mod n.");
    m.def(
        "cover_from_json",
        [](const std::string& text) {
            Json parsed;
            try {
                parsed = Json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw Error(std::string("cover spec is not valid JSON: ") + e.what());
            }
            return cover_from_json(parsed);
        },
        py::arg("text"), "Parse a cover-spec document (image arrays or cycle strings).");

    // Bounds.
    py::class_<BoundReport>(m, "BoundReport",
                            "One bound on the minimal-base-genus quantities; exact value.")
        .def_readonly("f", &BoundReport::f)
        .def_property_readonly("kind",
                               [](const BoundReport& r) { return to_string(r.kind); })
        .def_readonly("value", &BoundReport::value)
        .def_property_readonly("witness",
                               [](const BoundReport& r) { return witness_to_py(r.witness); })
        .def_property_readonly("source",
                               [](const BoundReport& r) { return to_string(r.source); })
        .def("__repr__", [](const BoundReport& r) {
            return "BoundReport(f=" + r.f.str() + ", " + to_string(r.kind) + " = " +
                   rat_to_string(r.value) + " [" + to_string(r.source) + "])";
        });

    m.def("gf_upper", &gf_upper, py::arg("f"),
          "Best asymptotic upper bound min 3n/(n^2-1) over factorizations f = n*g; None when "
          "f has no factorization with n, g >= 2.");
    m.def("ekkos_upper", &ekkos_upper, py::arg("f"),
          "Quoted comparison upper bound 16/(f-2), even f >= 4 only.");
    m.def("kotschick_lower", &kotschick_lower, py::arg("f"),
          "Quoted lower bound 2/(f-1), f >= 2.");
    m.def("bfm_upper", &bfm_upper, py::arg("f"), py::arg("m"),
          "Best realized base-genus bound at fiber genus f and signature 4m; None when no "
          "construction divides m.");
    m.def(
        "bounds_table_csv",
        [](const Int& f_max) { return bounds_table_csv(bounds_table(f_max)); }, py::arg("f_max"),
        "CSV table of the bounds for f = 4..f_max.");
    m.def(
        "bounds_table_json",
        [](const Int& f_max) { return dump_json(bounds_table_json(f_max, bounds_table(f_max))); },
        py::arg("f_max"), "JSON table of the bounds for f = 4..f_max.");

#ifdef SBINV_VERSION
    m.attr("__version__") = SBINV_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
