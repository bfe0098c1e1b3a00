#include "sbinv/bounds.hpp"

#include <sstream>

#include "sbinv/error.hpp"

namespace sbinv {

std::string to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::gf_upper: return "gf_upper";
    case BoundKind::gf_lower: return "gf_lower";
    case BoundKind::bfm_upper: return "bfm_upper";
    }
    throw Error("unknown bound kind");
}

std::string to_string(BoundSource source) {
    switch (source) {
    case BoundSource::this_paper: return "this_paper";
    case BoundSource::ekkos_quoted: return "ekkos_quoted";
    case BoundSource::kotschick_quoted: return "kotschick_quoted";
    }
    throw Error("unknown bound source");
}

std::optional<BoundReport> gf_upper(const Int& f) {
    if (f < 2)
        throw Error("fiber genus must be >= 2, got " + f.str());
    std::optional<BoundReport> best;
    for (Int n = 2; n * 2 <= f; ++n) {
        if (f % n != 0)
            continue;
        const Rat value(3 * n, n * n - 1);
        if (!best || value < best->value) {
            BoundReport report;
            report.f = f;
            report.kind = BoundKind::gf_upper;
            report.value = value;
            report.witness = BoundWitness{n, f / n, std::nullopt};
            report.source = BoundSource::this_paper;
            best = std::move(report);
        }
    }
    return best;
}

BoundReport ekkos_upper(const Int& f) {
    if (f < 4 || f % 2 != 0)
        throw Error("the quoted comparison bound 16/(f-2) is used for even f >= 4 only, got " +
                    f.str());
    BoundReport report;
    report.f = f;
    report.kind = BoundKind::gf_upper;
    report.value = Rat(16, f - 2);
    report.source = BoundSource::ekkos_quoted;
    return report;
}

BoundReport kotschick_lower(const Int& f) {
    if (f < 2)
        throw Error("fiber genus must be >= 2, got " + f.str());
    BoundReport report;
    report.f = f;
    report.kind = BoundKind::gf_lower;
    report.value = Rat(2, f - 1);
    report.source = BoundSource::kotschick_quoted;
    return report;
}

std::optional<BoundReport> bfm_upper(const Int& f, const Int& m) {
    if (f < 4)
        throw Error("fiber genus must be >= 4, got " + f.str());
    if (m < 1)
        throw Error("signature quantum m must be >= 1, got " + m.str());
    std::optional<BoundReport> best;
    for (Int n = 2; n * 2 <= f; ++n) {
        if (f % n != 0)
            continue;
        const Int g = f / n;
        // Unit signature quantum and base genus of the realized bundle.
        const Int m0 = div_exact(g * (g - 1) * (n * n - 1) * int_pow(n, 2 * g - 3), 3);
        if (m % m0 != 0)
            continue;
        const Int k = m / m0;
        const Int base = k * (g * (g - 1) * int_pow(n, 2 * g - 2)) + 1;
        if (!best || Rat(base) < best->value) {
            BoundReport report;
            report.f = f;
            report.kind = BoundKind::bfm_upper;
            report.value = Rat(base);
            report.witness = BoundWitness{n, g, k};
            report.source = BoundSource::this_paper;
            best = std::move(report);
        }
    }
    return best;
}

std::vector<BoundsRow> bounds_table(const Int& f_max) {
    if (f_max < 4)
        throw Error("table needs f_max >= 4, got " + f_max.str());
    std::vector<BoundsRow> rows;
    for (Int f = 4; f <= f_max; ++f) {
        BoundsRow row;
        row.f = f;
        row.gf = gf_upper(f);
        if (f % 2 == 0)
            row.ekkos = ekkos_upper(f);
        row.kotschick = kotschick_lower(f);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string witness_cell(const BoundWitness& witness) {
    // The cell contains a comma, so it is quoted.
    return "\"(" + witness.n.str() + "," + witness.g.str() + ")\"";
}

} // namespace

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream csv;
    csv << "f,gf_upper,gf_witness,ekkos_upper,kotschick_lower\n";
    for (const auto& row : rows) {
        csv << row.f << ",";
        if (row.gf) {
            csv << rat_to_string(row.gf->value) << ",";
            csv << witness_cell(*row.gf->witness) << ",";
        } else {
            csv << ",,";
        }
        if (row.ekkos)
            csv << rat_to_string(row.ekkos->value);
        csv << ",";
        if (row.kotschick)
            csv << rat_to_string(row.kotschick->value);
        csv << "\n";
    }
    return csv.str();
}

Json to_json(const BoundReport& report) {
    Json j;
    j["f"] = int_to_json(report.f);
    j["kind"] = to_string(report.kind);
    j["value"] = rat_to_string(report.value);
    if (report.witness) {
        Json w;
        w["n"] = int_to_json(report.witness->n);
        w["g"] = int_to_json(report.witness->g);
        if (report.witness->k)
            w["k"] = int_to_json(*report.witness->k);
        j["witness"] = std::move(w);
    }
    j["source"] = to_string(report.source);
    return j;
}

Json bounds_table_json(const Int& f_max, const std::vector<BoundsRow>& rows) {
    Json j;
    j["f_max"] = int_to_json(f_max);
    j["columns"] = Json::array({"f", "gf_upper", "gf_witness", "ekkos_upper", "kotschick_lower"});
    Json notes;
    notes["gf_upper"] = "minimum of 3n/(n^2-1) over factorizations f = n*g with n, g >= 2; "
                        "empty when f has none";
    notes["ekkos_upper"] = "quoted comparison bound 16/(f-2), defined for even f only";
    notes["kotschick_lower"] = "quoted lower bound 2/(f-1)";
    j["notes"] = std::move(notes);
    Json out_rows = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["f"] = int_to_json(row.f);
        r["gf_upper"] = row.gf ? Json(rat_to_string(row.gf->value)) : Json(nullptr);
        if (row.gf) {
            Json w;
            w["n"] = int_to_json(row.gf->witness->n);
            w["g"] = int_to_json(row.gf->witness->g);
            r["gf_witness"] = std::move(w);
        } else {
            r["gf_witness"] = nullptr;
        }
        r["ekkos_upper"] = row.ekkos ? Json(rat_to_string(row.ekkos->value)) : Json(nullptr);
        r["kotschick_lower"] =
            row.kotschick ? Json(rat_to_string(row.kotschick->value)) : Json(nullptr);
        out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    return j;
}

} // namespace sbinv
