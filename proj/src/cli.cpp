#include "sbinv/cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sbinv/bounds.hpp"
#include "sbinv/constructions.hpp"
#include "sbinv/json_util.hpp"
#include "sbinv/monodromy.hpp"

namespace sbinv::cli {

namespace {

const CLI::Validator IntegerArg{
    [](std::string& s) -> std::string {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return "not an integer: '" + s + "'";
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return "not an integer: '" + s + "'";
        return {};
    },
    "INT"};

Json monodromy_report(const PermutationCover& pc) {
    Json report;
    const bool ok = validate(pc);
    report["valid"] = ok;
    report["base_genus"] = int_to_json(pc.base_genus.value());
    report["degree"] = pc.degree;
    if (!ok) {
        report["error"] = "the surface-group relation does not hold for this data";
        return report;
    }
    const auto components = cover_components(pc);
    report["component_count"] = components.size();
    report["euler"] = int_to_json(perm_cover_euler(pc).value);
    report["genus"] = components.size() == 1
                          ? int_to_json(components.front().genus.value())
                          : Json(nullptr);
    Json parts = Json::array();
    for (const auto& component : components) {
        Json part;
        part["size"] = component.size;
        part["euler"] = int_to_json(component.euler.value);
        part["genus"] = int_to_json(component.genus.value());
        parts.push_back(std::move(part));
    }
    report["components"] = std::move(parts);
    return report;
}

struct VerifySummary {
    Json document;
    bool all_passed{true};
};

VerifySummary run_verify(const Int& g_max, const Int& n_max) {
    if (g_max < 2 || n_max < 2)
        throw Error("verify needs g_max, n_max >= 2");

    long long constructions = 0;
    long long checks_run = 0;
    Json failures = Json::array();

    auto record = [&](const std::string& label, const std::vector<CheckResult>& checks) {
        ++constructions;
        for (const auto& check : checks) {
            ++checks_run;
            if (!check.passed) {
                Json failure;
                failure["construction"] = label;
                failure["check"] = check.name;
                failure["detail"] = check.detail;
                failures.push_back(std::move(failure));
            }
        }
    };

    for (Int g = 2; g <= g_max; ++g) {
        for (Int n = 2; n <= n_max; ++n) {
            const ConstructionReport rep = build_xgn({g, n});
            auto checks = cross_validate(rep);
            // Additional oracle: the fiber of the second fibration as a
            // permutation cover, genus via cycle counting.
            CheckResult monodromy_check;
            monodromy_check.name = "fibration2_fiber_genus_monodromy";
            try {
                const auto pc = cyclic_cover_spec(
                    Genus(g), n, std::vector<Int>(static_cast<std::size_t>(2 * g.convert_to<long long>()), 0));
                const Genus fiber = genus_from_euler(perm_cover_euler(pc));
                monodromy_check.passed = fiber == rep.fibration2.fiber_genus;
                monodromy_check.detail = "cycle-count genus " + fiber.value().str() +
                                         " vs stored " + rep.fibration2.fiber_genus.value().str();
            } catch (const Error& e) {
                monodromy_check.passed = false;
                monodromy_check.detail = e.what();
            }
            checks.push_back(std::move(monodromy_check));
            record("xgn(" + g.str() + "," + n.str() + ")", checks);
        }
    }
    record("simple_genus2", cross_validate(build_simple_genus2()));

    VerifySummary summary;
    summary.all_passed = failures.empty();
    Json j;
    j["g_max"] = int_to_json(g_max);
    j["n_max"] = int_to_json(n_max);
    j["constructions"] = constructions;
    j["checks_run"] = checks_run;
    j["failures"] = std::move(failures);
    j["summary"] = summary.all_passed
                       ? "all checks passed"
                       : std::to_string(j["failures"].size()) + " checks failed";
    summary.document = std::move(j);
    return summary;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of surface bundles over surfaces, built from cyclic "
                 "branched covers of products of curves"};
    app.name("sbinv");
    app.require_subcommand(1);

    std::string format;
    std::string out_path;
    std::string g_arg, n_arg, m_arg, f_arg, fmax_arg, cover_path;
    std::string gmax_arg = "5", nmax_arg = "5";

    auto add_io_options = [&](CLI::App* sub, bool csv_allowed) {
        sub->add_option("--format", format,
                        csv_allowed ? "output format (default csv)" : "output format (json)")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write the document to this path instead of stdout");
    };

    auto* construct = app.add_subcommand(
        "construct", "build the doubly fibered 4-manifold X(g,n) and emit its full report");
    construct->add_option("g", g_arg, "curve genus parameter, >= 2")->required()->check(IntegerArg);
    construct->add_option("n", n_arg, "cyclic cover degree, >= 2")->required()->check(IntegerArg);
    add_io_options(construct, false);

    auto* simple = app.add_subcommand(
        "simple", "build the base-genus-2, fiber-genus-49, signature-32 double-cover example");
    add_io_options(simple, false);

    auto* pullback_cmd = app.add_subcommand(
        "pullback", "pull both fibrations of X(g,n) back over an unramified degree-m cover");
    pullback_cmd->add_option("g", g_arg, "curve genus parameter, >= 2")->required()->check(IntegerArg);
    pullback_cmd->add_option("n", n_arg, "cyclic cover degree, >= 2")->required()->check(IntegerArg);
    pullback_cmd->add_option("m", m_arg, "pullback degree, >= 1")->required()->check(IntegerArg);
    add_io_options(pullback_cmd, false);

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "bounds on minimal base genus for fiber genus f (and signature 4m if given)");
    bounds_cmd->add_option("f", f_arg, "fiber genus, >= 2")->required()->check(IntegerArg);
    bounds_cmd->add_option("m", m_arg, "signature quantum, >= 1")->check(IntegerArg);
    add_io_options(bounds_cmd, false);

    auto* table_cmd =
        app.add_subcommand("table", "tabulate the bounds for every fiber genus 4..f_max");
    table_cmd->add_option("f_max", fmax_arg, "largest fiber genus, >= 4")->required()->check(IntegerArg);
    add_io_options(table_cmd, true);

    auto* verify_cmd = app.add_subcommand(
        "verify", "cross-validate every construction with 2 <= g <= g_max, 2 <= n <= n_max");
    verify_cmd->add_option("g_max", gmax_arg, "largest g (default 5)")->check(IntegerArg);
    verify_cmd->add_option("n_max", nmax_arg, "largest n (default 5)")->check(IntegerArg);
    add_io_options(verify_cmd, false);

    auto* monodromy_cmd = app.add_subcommand(
        "monodromy", "validate a permutation cover file and report components and genus");
    monodromy_cmd->add_option("path", cover_path, "cover spec file (JSON)")->required();
    add_io_options(monodromy_cmd, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const bool is_table = table_cmd->parsed();
    if (format.empty())
        format = is_table ? "csv" : "json";
    if (format == "csv" && !is_table) {
        err << "error: --format csv is only available for the 'table' subcommand\n";
        return exit_usage;
    }

    std::string document;
    int exit_code = exit_ok;
    try {
        if (construct->parsed()) {
            const Json j = to_json(build_xgn({Int(g_arg), Int(n_arg)}));
            for (const auto& check : j.at("checks"))
                if (!check.at("passed").get<bool>())
                    exit_code = exit_verification_failed;
            document = dump_json(j);
        } else if (simple->parsed()) {
            const Json j = to_json(build_simple_genus2());
            for (const auto& check : j.at("checks"))
                if (!check.at("passed").get<bool>())
                    exit_code = exit_verification_failed;
            document = dump_json(j);
        } else if (pullback_cmd->parsed()) {
            const ConstructionReport rep = build_xgn({Int(g_arg), Int(n_arg)});
            const Int m(m_arg);
            Json j;
            Json params;
            params["construction"] = rep.construction;
            params["g"] = int_to_json(rep.params->g);
            params["n"] = int_to_json(rep.params->n);
            params["sheets"] = int_to_json(rep.sheets);
            j["params"] = std::move(params);
            j["pullback_degree"] = int_to_json(m);
            j["fibration1"] = to_json(pullback(rep.fibration1, m));
            j["fibration2"] = to_json(pullback(rep.fibration2, m));
            document = dump_json(j);
        } else if (bounds_cmd->parsed()) {
            const Int f(f_arg);
            Json j;
            j["f"] = int_to_json(f);
            if (!m_arg.empty())
                j["m"] = int_to_json(Int(m_arg));
            Json reports = Json::array();
            if (const auto gf = gf_upper(f))
                reports.push_back(to_json(*gf));
            if (f >= 4 && f % 2 == 0)
                reports.push_back(to_json(ekkos_upper(f)));
            reports.push_back(to_json(kotschick_lower(f)));
            if (!m_arg.empty()) {
                if (const auto bfm = bfm_upper(f, Int(m_arg)))
                    reports.push_back(to_json(*bfm));
            }
            j["reports"] = std::move(reports);
            document = dump_json(j);
        } else if (table_cmd->parsed()) {
            const Int f_max(fmax_arg);
            const auto rows = bounds_table(f_max);
            document = format == "csv" ? bounds_table_csv(rows)
                                       : dump_json(bounds_table_json(f_max, rows));
        } else if (verify_cmd->parsed()) {
            const VerifySummary summary = run_verify(Int(gmax_arg), Int(nmax_arg));
            document = dump_json(summary.document);
            if (!summary.all_passed)
                exit_code = exit_verification_failed;
        } else if (monodromy_cmd->parsed()) {
            std::ifstream file(cover_path, std::ios::binary);
            if (!file)
                throw Error("cannot open cover spec file '" + cover_path + "'");
            Json parsed;
            try {
                parsed = Json::parse(file);
            } catch (const nlohmann::json::parse_error& e) {
                throw Error("cover spec file '" + cover_path + "' is not valid JSON: " + e.what());
            }
            const PermutationCover pc = cover_from_json(parsed);
            const Json report = monodromy_report(pc);
            if (!report.at("valid").get<bool>())
                exit_code = exit_invalid_input;
            document = dump_json(report);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output path '" << out_path << "'\n";
            return exit_invalid_input;
        }
        file << document;
    } else {
        out << document;
    }
    return exit_code;
}

} // namespace sbinv::cli
