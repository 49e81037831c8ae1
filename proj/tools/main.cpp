// cayley: exact verification of the e8 bracket model, Spin(7) linear
// algebra, and integral cellular cohomology, from the command line.
//
// Output is deterministic for a fixed (command, input, seed): timings are
// only emitted under --timings, and every report embeds the hash of the
// frozen convention ledger so results produced under different sign or
// basis choices can never be compared by accident.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cayley/cellcoh.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/ledger.hpp"
#include "cayley/spin7.hpp"
#include "cayley/verify.hpp"

namespace {

using cayley::json_io::json;

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& target, long samples, std::uint64_t seed,
               const std::string& format, bool timings) {
    std::vector<cayley::verify::RunReport> reports;
    auto append = [&](std::vector<cayley::verify::RunReport> part) {
        for (auto& r : part) reports.push_back(std::move(r));
    };
    if (target == "e8" || target == "all") append(cayley::verify::e8_suite(samples, seed));
    if (target == "spin7" || target == "all")
        append(cayley::verify::spin7_suite(samples, seed));
    if (target == "cellcoh" || target == "all")
        append(cayley::verify::cellcoh_suite(samples, seed));

    // Reports from one run must all carry the same convention fingerprint;
    // refuse to aggregate otherwise.
    const std::string hash = cayley::convention_ledger_hash();
    for (const auto& r : reports)
        if (r.ledger_hash != hash)
            throw cayley::ConventionError("suite " + r.check +
                                          " ran under a different convention ledger");

    bool passed = true;
    long checks = 0;
    for (const auto& r : reports) {
        passed = passed && r.passed();
        checks += r.population;
    }

    if (format == "json") {
        json out;
        out["command"] = "verify";
        out["target"] = target;
        out["samples"] = samples;
        out["seed"] = seed;
        out["conventionLedgerHash"] = hash;
        json suites = json::array();
        for (const auto& r : reports)
            suites.push_back(cayley::json_io::report_to_json(r, timings));
        out["suites"] = std::move(suites);
        out["checks"] = checks;
        out["passed"] = passed;
        emit(out);
    } else {
        for (const auto& r : reports) {
            std::printf("%s  %-28s population=%-9ld violations=%ld  seed=%llu",
                        r.passed() ? "PASS" : "FAIL", r.check.c_str(), r.population,
                        r.violations, static_cast<unsigned long long>(r.seed));
            if (timings)
                std::printf("  elapsed=%lldms", static_cast<long long>(r.elapsed_ms));
            std::printf("\n");
        }
        std::printf("ledger=%s\n", hash.c_str());
        std::printf("%s: %zu suites, %ld checks, target=%s samples=%ld seed=%llu\n",
                    passed ? "PASS" : "FAIL", reports.size(), checks, target.c_str(),
                    samples, static_cast<unsigned long long>(seed));
    }
    return passed ? 0 : 1;
}

// ---- decompose / instanton-check -------------------------------------------

int run_decompose(const std::string& path, bool verdict_only) {
    cayley::spin7::TwoForm8 f =
        cayley::json_io::two_form_from_json(cayley::json_io::load_json_file(path));
    cayley::spin7::InstantonResult res = cayley::spin7::instanton_check(f);

    json out;
    out["command"] = verdict_only ? "instanton-check" : "decompose";
    out["conventionLedgerHash"] = cayley::convention_ledger_hash();
    if (!verdict_only) {
        out["pi7"] = cayley::json_io::two_form_to_json(
            cayley::spin7::project(f, cayley::spin7::Part::seven));
        out["pi21"] = cayley::json_io::two_form_to_json(
            cayley::spin7::project(f, cayley::spin7::Part::twentyone));
    }
    out["isInstanton"] = res.is_instanton;
    out["residualNormSq"] = res.residual_norm_sq.get_str();
    emit(out);
    return 0;
}

// ---- cohomology -------------------------------------------------------------

cayley::cellcoh::CochainComplex resolve_complex(const std::string& input,
                                                std::string& resolved_as) {
    // Names without path syntax are tried as fixtures first.
    bool bare_name =
        input.find('/') == std::string::npos && input.find(".json") == std::string::npos;
    if (bare_name) {
        try {
            const cayley::cellcoh::Fixture& f = cayley::cellcoh::fixture(input);
            resolved_as = "fixture:" + f.name;
            return f.complex;
        } catch (const cayley::Error&) {
            // fall through to the file path route
        }
    }
    resolved_as = "file:" + input;
    try {
        return cayley::json_io::complex_from_json(cayley::json_io::load_json_file(input));
    } catch (const cayley::Error& e) {
        if (bare_name)
            throw cayley::Error(std::string(e.what()) +
                                " (and no fixture has that name; see `fixtures list`)");
        throw;
    }
}

int run_cohomology(const std::string& input, const std::string& report) {
    std::string resolved;
    cayley::cellcoh::CochainComplex c = resolve_complex(input, resolved);

    json out;
    out["command"] = "cohomology";
    out["input"] = resolved;
    out["conventionLedgerHash"] = cayley::convention_ledger_hash();
    out["report"] = report;

    if (report == "groups") {
        json groups = json::array();
        for (int k = 0; k <= c.dim(); ++k) {
            json g;
            g["degree"] = k;
            g.update(cayley::json_io::coh_group_to_json(cayley::cellcoh::cohomology(c, k)));
            groups.push_back(std::move(g));
        }
        out["groups"] = std::move(groups);
    } else if (report == "orientability") {
        out["verdict"] =
            cayley::json_io::verdict_to_json(cayley::cellcoh::orientability_verdict(c));
    } else if (report == "pi1") {
        cayley::cellcoh::Pi1Report p = cayley::cellcoh::pi1_config(c);
        json pj;
        pj["group"] = cayley::json_io::coh_group_to_json(p.group);
        pj["dimensionWarning"] = p.dimension_warning;
        out["pi1"] = std::move(pj);
    } else if (report.rfind("mapping:", 0) == 0) {
        int q = 0;
        try {
            q = std::stoi(report.substr(8));
        } catch (const std::exception&) {
            throw cayley::Error("report mapping:q needs an integer q, got \"" + report +
                                "\"");
        }
        json mj;
        mj["q"] = q;
        mj["group"] =
            cayley::json_io::coh_group_to_json(cayley::cellcoh::mapping_homotopy(c, q));
        out["mapping"] = std::move(mj);
    } else {
        throw cayley::Error("unknown report \"" + report +
                            "\" (expected groups, orientability, pi1, or mapping:q)");
    }
    emit(out);
    return 0;
}

// ---- fixtures ---------------------------------------------------------------

int run_fixtures(const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (const auto& f : cayley::cellcoh::fixtures()) {
            json fj;
            fj["name"] = f.name;
            fj["dim"] = f.complex.dim();
            fj["ranks"] = f.complex.ranks;
            fj["h3"] = cayley::json_io::coh_group_to_json(
                cayley::cellcoh::cohomology(f.complex, 3));
            fj["description"] = f.description;
            out.push_back(std::move(fj));
        }
        emit(out);
    } else {
        for (const auto& f : cayley::cellcoh::fixtures()) {
            std::string h3 = cayley::cellcoh::cohomology(f.complex, 3).str();
            std::printf("%-10s dim=%d  H^3=%-5s %s\n", f.name.c_str(), f.complex.dim(),
                        h3.c_str(), f.description.c_str());
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact e8 / Spin(7) / cellular-cohomology toolkit"};
    app.require_subcommand(1);

    // verify
    std::string target = "all";
    long samples = 1000;
    std::uint64_t seed = 7;
    std::string verify_format = "text";
    bool timings = false;
    CLI::App* verify = app.add_subcommand("verify", "run the exact verification suites");
    verify->add_option("target", target, "e8, spin7, cellcoh, or all")
        ->required()
        ->check(CLI::IsMember({"e8", "spin7", "cellcoh", "all"}));
    verify->add_option("--samples", samples, "randomized checks per sampled suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", timings,
                     "include elapsed milliseconds (off by default so identical runs "
                     "stay byte-identical)");

    // decompose
    std::string decompose_path;
    std::string decompose_format = "json";
    CLI::App* decompose = app.add_subcommand(
        "decompose", "split a 2-form on R^8 into its Lambda^2_7 and Lambda^2_21 parts");
    decompose->add_option("input", decompose_path, "path to a 2-form JSON file")
        ->required();
    decompose->add_option("--format", decompose_format, "json")
        ->check(CLI::IsMember({"json"}));

    // instanton-check
    std::string instanton_path;
    std::string instanton_format = "json";
    CLI::App* instanton = app.add_subcommand(
        "instanton-check", "verdict-only decompose: is pi7 of the 2-form zero?");
    instanton->add_option("input", instanton_path, "path to a 2-form JSON file")
        ->required();
    instanton->add_option("--format", instanton_format, "json")
        ->check(CLI::IsMember({"json"}));

    // cohomology
    std::string coh_input;
    std::string coh_report = "orientability";
    std::string coh_format = "json";
    CLI::App* cohomology = app.add_subcommand(
        "cohomology", "integral cohomology reports for a cochain complex");
    cohomology
        ->add_option("input", coh_input,
                     "fixture name (hp2, gr2c4, free-h3, torsion-3, torsion-2) or path "
                     "to a complex JSON file")
        ->required();
    cohomology->add_option("--report", coh_report,
                           "groups, orientability, pi1, or mapping:q (1 <= q <= 3)");
    cohomology->add_option("--format", coh_format, "json")
        ->check(CLI::IsMember({"json"}));

    // fixtures list
    std::string fixtures_format = "text";
    CLI::App* fixtures = app.add_subcommand("fixtures", "fixture catalogue");
    CLI::App* fixtures_list =
        fixtures->add_subcommand("list", "list the shipped cochain complexes");
    fixtures_list->add_option("--format", fixtures_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    fixtures->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(target, samples, seed, verify_format, timings);
        if (decompose->parsed()) return run_decompose(decompose_path, false);
        if (instanton->parsed()) return run_decompose(instanton_path, true);
        if (cohomology->parsed()) return run_cohomology(coh_input, coh_report);
        if (fixtures_list->parsed()) return run_fixtures(fixtures_format);
    } catch (const cayley::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
