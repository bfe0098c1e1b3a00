#include "sbinv/constructions.hpp"

#include <sstream>

namespace sbinv {

namespace {

const char* kConnectivityNote =
    "connectivity of the top cover is assumed; a disconnected cover can be replaced by a "
    "connected one of the same degree without changing any number in this report";

std::string int_str(const Int& v) { return v.str(); }

CheckResult equality_check(std::string name, const Int& expected, const Int& actual,
                           const std::string& label) {
    CheckResult check;
    check.name = std::move(name);
    check.passed = expected == actual;
    std::ostringstream detail;
    detail << label << ": expected " << expected << ", got " << actual;
    check.detail = detail.str();
    return check;
}

} // namespace

Int signature_closed_form(const ConstructionParams& p) {
    if (p.g < 2 || p.n < 2)
        throw Error("construction parameters must satisfy g, n >= 2, got g=" + int_str(p.g) +
                    ", n=" + int_str(p.n));
    return div_exact(4 * p.g * (p.g - 1) * (p.n * p.n - 1) * int_pow(p.n, 2 * p.g - 3), 3);
}

ConstructionReport build_xgn(const ConstructionParams& p) {
    if (p.g < 2 || p.n < 2)
        throw Error("construction parameters must satisfy g, n >= 2, got g=" + int_str(p.g) +
                    ", n=" + int_str(p.n));
    const Int& g = p.g;
    const Int& n = p.n;
    const Int n_pow = int_pow(n, 2 * g - 2);

    ConstructionReport rep;
    rep.construction = "xgn";
    rep.params = p;
    rep.sheets = n;
    rep.note = kConnectivityNote;

    // Tower of curves: C is a g-fold cyclic cover of an elliptic curve
    // fully ramified over two points, D an unramified degree-g cover of
    // C, Dt an unramified cover of D of degree n^(2g-2).
    RamificationProfile two_full_points{{g, 2}};
    const Genus genus_c = rh_cover_genus(Genus(1), g, two_full_points);
    rep.tower.push_back({"C", Genus(1), g, two_full_points, genus_c});
    const Genus genus_d = rh_cover_genus(genus_c, g, {});
    rep.tower.push_back({"D", genus_c, g, {}, genus_d});
    const Genus genus_dt = rh_cover_genus(genus_d, n_pow, {});
    rep.tower.push_back({"Dt", genus_d, n_pow, {}, genus_dt});

    // Two disjoint graphs of degree g*n^(2g-2) maps Dt -> C inside
    // Dt x C. Disjointness holds because the two maps never agree at a
    // point: they lift maps D -> C whose images differ everywhere.
    const Int map_degree = g * n_pow;
    const GraphDivisor graph{genus_dt, genus_c, map_degree};
    rep.graphs = BranchClass{{graph, graph}, true};

    const EulerChar chi_c = euler_from_genus(genus_c);
    const EulerChar chi_dt = euler_from_genus(genus_dt);
    rep.total_chi = branched_cover_euler(n, EulerChar{chi_dt.value * chi_c.value},
                                         EulerChar{2 * chi_dt.value});

    const Int sigma = signature_closed_form(p);
    const Genus fiber1(g * (g * n - 1) * n_pow + 1);
    const Genus fiber2(g * n);
    rep.fibration1 = {genus_c, fiber1, sigma, "projection to C"};
    rep.fibration2 = {genus_dt, fiber2, sigma, "projection to Dt"};
    return rep;
}

ConstructionReport build_simple_genus2() {
    ConstructionReport rep;
    rep.construction = "simple_genus2";
    rep.sheets = 2;
    rep.note = kConnectivityNote;

    // Ct is the unramified cover of a genus-2 curve C classified by the
    // full mod-2 homology, one sheet per class: degree 2^4 = 16.
    const Genus genus_c(2);
    const Int cover_degree = 16;
    const Genus genus_ct = rh_cover_genus(genus_c, cover_degree, {});
    rep.tower.push_back({"Ct", genus_c, cover_degree, {}, genus_ct});

    // Branch class: the graphs of the cover map Ct -> C and of its
    // composition with a fixed-point-free automorphism of C. The two
    // maps never agree at a point, so the graphs are disjoint.
    const GraphDivisor graph{genus_ct, genus_c, cover_degree};
    rep.graphs = BranchClass{{graph, graph}, true};

    const EulerChar chi_c = euler_from_genus(genus_c);
    const EulerChar chi_ct = euler_from_genus(genus_ct);
    rep.total_chi = branched_cover_euler(rep.sheets, EulerChar{chi_ct.value * chi_c.value},
                                         EulerChar{2 * chi_ct.value});

    const Int sigma =
        hirzebruch_signature({rep.sheets, 0, branch_class_square(rep.graphs)});

    // Fibers: over a point of C, the double cover of Ct branched at the
    // 2 * 16 preimages; over a point of Ct, the double cover of C
    // branched at two points.
    const Genus fiber1 = rh_cover_genus(genus_ct, rep.sheets, {{2, 2 * cover_degree}});
    const Genus fiber2 = rh_cover_genus(genus_c, rep.sheets, {{2, 2}});
    rep.fibration1 = {genus_c, fiber1, sigma, "projection to C"};
    rep.fibration2 = {genus_ct, fiber2, sigma, "projection to Ct"};
    return rep;
}

BundleRecord pullback(const BundleRecord& rec, const Int& m) {
    if (m < 1)
        throw Error("pullback degree must be >= 1, got " + int_str(m));
    if (m == 1)
        return rec;
    BundleRecord pulled;
    pulled.base_genus = Genus(m * (rec.base_genus.value() - 1) + 1);
    pulled.fiber_genus = rec.fiber_genus;
    pulled.signature = m * rec.signature;
    pulled.provenance = rec.provenance + ", pulled back over a degree-" + int_str(m) + " cover";
    return pulled;
}

std::vector<CheckResult> cross_validate(const ConstructionReport& rep) {
    std::vector<CheckResult> checks;

    // (a) total chi against the product chi of each fibration.
    for (int which = 1; which <= 2; ++which) {
        const BundleRecord& fib = which == 1 ? rep.fibration1 : rep.fibration2;
        const Int product =
            euler_from_genus(fib.base_genus).value * euler_from_genus(fib.fiber_genus).value;
        checks.push_back(equality_check("chi_product_fibration" + std::to_string(which),
                                        rep.total_chi.value, product,
                                        "(2-2b)(2-2f) vs branched-cover chi"));
    }

    // (b) stored signature against the branched-cover signature formula
    // applied to the stored branch class.
    {
        CheckResult check;
        check.name = "signature_two_routes";
        try {
            const Int via_cover =
                hirzebruch_signature({rep.sheets, 0, branch_class_square(rep.graphs)});
            check = equality_check(check.name, rep.fibration1.signature, via_cover,
                                   "stored sigma vs branched-cover formula");
            check.passed = check.passed && rep.fibration1.signature == rep.fibration2.signature;
        } catch (const Error& e) {
            check.passed = false;
            check.detail = e.what();
        }
        checks.push_back(check);
    }

    // (c) sigma = 4m.
    {
        CheckResult check;
        check.name = "signature_divisible_by_4";
        try {
            const Int quantum = signature_quantum(rep.fibration1.signature);
            check.passed = true;
            check.detail = "sigma = " + int_str(rep.fibration1.signature) + " = 4 * " +
                           int_str(quantum);
        } catch (const Error& e) {
            check.passed = false;
            check.detail = e.what();
        }
        checks.push_back(check);
    }

    // (d)/(e) fiber genera re-derived by Riemann-Hurwitz. A fiber of
    // fibration 1 covers the top curve, branched where the graphs meet
    // the slice: one point per sheet of each graph map. A fiber of
    // fibration 2 covers the other factor, branched at one point per
    // graph.
    for (int which = 1; which <= 2; ++which) {
        const BundleRecord& fib = which == 1 ? rep.fibration1 : rep.fibration2;
        const BundleRecord& other = which == 1 ? rep.fibration2 : rep.fibration1;
        CheckResult check;
        check.name = "fibration" + std::to_string(which) + "_fiber_genus_rh";
        try {
            Int branch_points = 0;
            if (which == 1) {
                for (const auto& graph : rep.graphs.components)
                    branch_points += graph.degree;
            } else {
                branch_points = Int(rep.graphs.components.size());
            }
            RamificationProfile ram;
            ram.add(rep.sheets, branch_points);
            const Genus fiber = rh_cover_genus(other.base_genus, rep.sheets, ram);
            check = equality_check(check.name, fib.fiber_genus.value(), fiber.value(),
                                   "fiber genus vs Riemann-Hurwitz");
        } catch (const Error& e) {
            check.passed = false;
            check.detail = e.what();
        }
        checks.push_back(check);
    }

    return checks;
}

Json to_json(const BundleRecord& rec) {
    Json j;
    j["base_genus"] = int_to_json(rec.base_genus.value());
    j["fiber_genus"] = int_to_json(rec.fiber_genus.value());
    j["signature"] = int_to_json(rec.signature);
    j["provenance"] = rec.provenance;
    return j;
}

Json to_json(const CoverStep& step) {
    Json j;
    j["name"] = step.name;
    j["base_genus"] = int_to_json(step.base_genus.value());
    j["degree"] = int_to_json(step.degree);
    Json ram = Json::array();
    for (const auto& [index, count] : step.ram.entries())
        ram.push_back(Json::array({int_to_json(index), int_to_json(count)}));
    j["ramification"] = std::move(ram);
    j["total_genus"] = int_to_json(step.total_genus.value());
    return j;
}

Json to_json(const CheckResult& check) {
    Json j;
    j["name"] = check.name;
    j["passed"] = check.passed;
    j["detail"] = check.detail;
    return j;
}

Json to_json(const ConstructionReport& rep) {
    Json params;
    params["construction"] = rep.construction;
    if (rep.params) {
        params["g"] = int_to_json(rep.params->g);
        params["n"] = int_to_json(rep.params->n);
    }
    params["sheets"] = int_to_json(rep.sheets);

    Json j;
    j["params"] = std::move(params);
    Json tower = Json::array();
    for (const auto& step : rep.tower)
        tower.push_back(to_json(step));
    j["tower"] = std::move(tower);
    j["fibration1"] = to_json(rep.fibration1);
    j["fibration2"] = to_json(rep.fibration2);
    j["signature"] = int_to_json(rep.fibration1.signature);
    j["total_chi"] = int_to_json(rep.total_chi.value);
    Json checks = Json::array();
    for (const auto& check : cross_validate(rep))
        checks.push_back(to_json(check));
    j["checks"] = std::move(checks);
    j["note"] = rep.note;
    return j;
}

} // namespace sbinv
