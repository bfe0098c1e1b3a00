// Acceptance suite: exercises every headline guarantee of the library at
// its stated tolerance (exact equality throughout; wall-clock limits where
// noted) and prints one pass/fail line per criterion.
//
// Usage: sbinv_acceptance [--cli /path/to/sbinv]
// With --cli the output-determinism check also runs the installed binary
// twice and compares bytes; without it the check runs in-process only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sbinv/bounds.hpp"
#include "sbinv/cli.hpp"
#include "sbinv/constructions.hpp"
#include "sbinv/cyclic_signature.hpp"
#include "sbinv/monodromy.hpp"
#include "sbinv/surface_products.hpp"
#include "sbinv/topology.hpp"

using namespace sbinv;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

std::string run_in_process(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

std::string run_binary(const std::string& cli_path, const std::string& args) {
    const std::string command = "'" + cli_path + "' " + args + " 2>/dev/null";
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return output;
    char buffer[4096];
    std::size_t count = 0;
    while ((count = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, count);
    pclose(pipe);
    return output;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli_path = argv[i + 1];

    const auto suite_start = Clock::now();
    std::vector<Criterion> results;
    std::vector<Int> emitted_signatures;

    // 1: the (2,2) member, exact numbers, under a millisecond.
    {
        const auto start = Clock::now();
        const ConstructionReport rep = build_xgn({2, 2});
        const double elapsed = ms_since(start);
        const bool numbers_ok =
            rep.fibration1.signature == 16 && rep.fibration2.signature == 16 &&
            rep.fibration1.base_genus == Genus(2) && rep.fibration1.fiber_genus == Genus(25) &&
            rep.fibration2.base_genus == Genus(9) && rep.fibration2.fiber_genus == Genus(4);
        emitted_signatures.push_back(rep.fibration1.signature);
        std::ostringstream detail;
        detail << "signature 16, fibrations (2,25)/(9,4); " << elapsed << " ms (limit 1)";
        results.push_back(
            {1, "X(2,2) reproduction", numbers_ok && elapsed < 1.0, detail.str()});
    }

    // 2: the simple double-cover example, exact numbers, under a millisecond.
    {
        const auto start = Clock::now();
        const ConstructionReport rep = build_simple_genus2();
        const double elapsed = ms_since(start);
        const bool numbers_ok = rep.fibration1.base_genus == Genus(2) &&
                                rep.fibration1.fiber_genus == Genus(49) &&
                                rep.fibration1.signature == 32;
        emitted_signatures.push_back(rep.fibration1.signature);
        std::ostringstream detail;
        detail << "base 2, fiber 49, signature 32; " << elapsed << " ms (limit 1)";
        results.push_back(
            {2, "simple genus-2 example reproduction", numbers_ok && elapsed < 1.0, detail.str()});
    }

    // 3: signature by the branched-cover formula equals the closed form
    // on the whole 2 <= g,n <= 5 grid, within a second.
    {
        const auto start = Clock::now();
        int cases = 0;
        bool all_equal = true;
        for (Int g = 2; g <= 5; ++g)
            for (Int n = 2; n <= 5; ++n) {
                const ConstructionReport rep = build_xgn({g, n});
                const Int via_cover =
                    hirzebruch_signature({n, 0, branch_class_square(rep.graphs)});
                const Int closed = signature_closed_form({g, n});
                all_equal = all_equal && via_cover == closed &&
                            rep.fibration1.signature == closed;
                emitted_signatures.push_back(closed);
                ++cases;
            }
        const double elapsed = ms_since(start);
        std::ostringstream detail;
        detail << cases << " cases, exact; " << elapsed << " ms (limit 1000)";
        results.push_back({3, "two-route signature equality", all_equal && cases == 16 &&
                                                                  elapsed < 1000.0,
                           detail.str()});
    }

    // 4: Euler characteristic multiplicativity for both fibrations on the
    // same grid plus the simple example.
    {
        bool all_equal = true;
        int cases = 0;
        auto check_report = [&](const ConstructionReport& rep) {
            for (const BundleRecord* fib : {&rep.fibration1, &rep.fibration2}) {
                const Int product = euler_from_genus(fib->base_genus).value *
                                    euler_from_genus(fib->fiber_genus).value;
                all_equal = all_equal && product == rep.total_chi.value;
            }
            emitted_signatures.push_back(rep.fibration1.signature);
            ++cases;
        };
        for (Int g = 2; g <= 5; ++g)
            for (Int n = 2; n <= 5; ++n)
                check_report(build_xgn({g, n}));
        check_report(build_simple_genus2());
        results.push_back({4, "chi multiplicativity", all_equal && cases == 17,
                           "both fibration products equal the branched-cover count, 17 cases"});
    }

    // 5: every signature seen so far is 4m.
    {
        bool all_divisible = true;
        for (const Int& sigma : emitted_signatures) {
            try {
                signature_quantum(sigma);
            } catch (const Error&) {
                all_divisible = false;
            }
        }
        std::ostringstream detail;
        detail << emitted_signatures.size() << " signatures, all divisible by 4";
        results.push_back({5, "signature divisibility", all_divisible, detail.str()});
    }

    // 6: the asymptotic bound at even f equals 6f/(f^2-4) and improves the
    // quoted 16/(f-2), exact rational comparisons for f = 4..100.
    {
        bool all_ok = true;
        for (Int f = 4; f <= 100; f += 2) {
            const auto report = gf_upper(f);
            const Rat expected(6 * f, f * f - 4);
            all_ok = all_ok && report.has_value() && report->value == expected &&
                     expected < ekkos_upper(f).value;
        }
        results.push_back({6, "even-f bound and its improvement", all_ok,
                           "gf_upper = 6f/(f^2-4) < 16/(f-2) for even f in 4..100"});
    }

    // 7: pullback linearity on the (9,4,16) record for m = 1..10.
    {
        const BundleRecord seed{Genus(9), Genus(4), 16, ""};
        bool all_linear = true;
        for (Int m = 1; m <= 10; ++m) {
            const BundleRecord pulled = pullback(seed, m);
            all_linear = all_linear && pulled.signature == 16 * m &&
                         pulled.base_genus.value() - 1 == 8 * m &&
                         pulled.fiber_genus == Genus(4);
        }
        results.push_back({7, "pullback linearity", all_linear,
                           "signature 16m and base genus 8m+1 for m = 1..10"});
    }

    // 8: cycle-count genus of the standard cyclic cover equals the
    // Riemann-Hurwitz genus g*n for g in 2..4, n in 2..6.
    {
        bool all_equal = true;
        int cases = 0;
        for (Int g = 2; g <= 4; ++g)
            for (Int n = 2; n <= 6; ++n) {
                const std::vector<Int> zeros(static_cast<std::size_t>(2 * g.convert_to<int>()),
                                             0);
                const Genus via_cycles =
                    genus_from_euler(perm_cover_euler(cyclic_cover_spec(Genus(g), n, zeros)));
                all_equal = all_equal && via_cycles == rh_cover_genus(Genus(g), n, {{n, 2}}) &&
                            via_cycles == Genus(g * n);
                ++cases;
            }
        std::ostringstream detail;
        detail << cases << " cases, cycle counting vs Riemann-Hurwitz";
        results.push_back({8, "monodromy oracle equivalence", all_equal && cases == 15,
                           detail.str()});
    }

    // 9: property suite.
    {
        bool props_ok = true;
        std::string failure;

        // Adjunction squares ignore the domain genus.
        for (Int target = 0; target <= 6 && props_ok; ++target)
            for (Int degree = 1; degree <= 8 && props_ok; ++degree) {
                const Int reference =
                    graph_self_intersection({Genus(0), Genus(target), degree});
                for (Int domain = 0; domain <= 20; ++domain)
                    if (graph_self_intersection({Genus(domain), Genus(target), degree}) !=
                        reference) {
                        props_ok = false;
                        failure = "adjunction domain-genus independence";
                        break;
                    }
            }

        // Branched-cover Euler characteristics are linear.
        {
            std::mt19937 rng(424242);
            std::uniform_int_distribution<int> value(-500, 500);
            std::uniform_int_distribution<int> sheets(1, 12);
            for (int trial = 0; trial < 300 && props_ok; ++trial) {
                const Int n = sheets(rng);
                const Int a1 = value(rng), a2 = value(rng);
                const Int b1 = value(rng), b2 = value(rng);
                const Int sum =
                    branched_cover_euler(n, EulerChar{a1 + a2}, EulerChar{b1 + b2}).value;
                const Int parts = branched_cover_euler(n, EulerChar{a1}, EulerChar{b1}).value +
                                  branched_cover_euler(n, EulerChar{a2}, EulerChar{b2}).value;
                const bool zero_branch_multiplicative =
                    branched_cover_euler(n, EulerChar{a1}, EulerChar{0}).value == n * a1;
                if (sum != parts || !zero_branch_multiplicative) {
                    props_ok = false;
                    failure = "branched-cover chi linearity";
                }
            }
        }

        // Cycle-count chi is invariant under relabeling the sheets.
        {
            std::mt19937 rng(31415);
            std::uniform_int_distribution<int> degree_dist(1, 10);
            for (int trial = 0; trial < 60 && props_ok; ++trial) {
                const int degree = degree_dist(rng);
                std::vector<int> images(static_cast<std::size_t>(degree));
                std::iota(images.begin(), images.end(), 0);

                auto shuffled = [&] {
                    std::shuffle(images.begin(), images.end(), rng);
                    return Permutation(images);
                };
                PermutationCover pc;
                pc.base_genus = Genus(2);
                pc.degree = degree;
                Permutation word = Permutation::identity(degree);
                for (int i = 0; i < 2; ++i) {
                    Permutation a = shuffled();
                    Permutation b = shuffled();
                    word = word.then(a).then(b).then(a.inverse()).then(b.inverse());
                    pc.handles.emplace_back(std::move(a), std::move(b));
                }
                pc.branches.push_back(word.inverse());

                const Permutation t = shuffled();
                auto conj = [&](const Permutation& p) {
                    return t.inverse().then(p).then(t);
                };
                PermutationCover relabeled;
                relabeled.base_genus = pc.base_genus;
                relabeled.degree = pc.degree;
                for (const auto& [a, b] : pc.handles)
                    relabeled.handles.emplace_back(conj(a), conj(b));
                for (const auto& z : pc.branches)
                    relabeled.branches.push_back(conj(z));

                if (!validate(relabeled) ||
                    perm_cover_euler(relabeled) != perm_cover_euler(pc) ||
                    component_count(relabeled) != component_count(pc)) {
                    props_ok = false;
                    failure = "relabeling invariance";
                }
            }
        }

        // Identical command lines produce byte-identical documents.
        {
            const std::vector<std::vector<std::string>> invocations{
                {"construct", "3", "2"}, {"table", "12"}, {"verify", "2", "2"}};
            for (const auto& args : invocations) {
                if (run_in_process(args) != run_in_process(args)) {
                    props_ok = false;
                    failure = "in-process output determinism";
                }
            }
            if (!cli_path.empty()) {
                for (const std::string args : {"construct 3 2", "table 12"}) {
                    const std::string first = run_binary(cli_path, args);
                    if (first.empty() || first != run_binary(cli_path, args)) {
                        props_ok = false;
                        failure = "binary output determinism";
                    }
                }
            }
        }

        const double total = ms_since(suite_start);
        const bool within_budget = total < 10000.0;
        std::ostringstream detail;
        detail << "adjunction / chi linearity / relabeling / output determinism";
        if (!props_ok)
            detail << "; FAILED at " << failure;
        if (cli_path.empty())
            detail << "; determinism checked in-process only";
        detail << "; suite total " << total << " ms (limit 10000)";
        results.push_back({9, "property suite", props_ok && within_budget, detail.str()});
    }

    bool all_passed = true;
    for (const auto& criterion : results) {
        all_passed = all_passed && criterion.passed;
        std::cout << (criterion.passed ? "PASS" : "FAIL") << "  criterion " << criterion.id
                  << ": " << criterion.title << " -- " << criterion.detail << "\n";
    }
    std::cout << (all_passed ? "acceptance suite passed" : "acceptance suite FAILED") << " ("
              << results.size() << " criteria, " << ms_since(suite_start) << " ms)\n";
    return all_passed ? 0 : 1;
}
