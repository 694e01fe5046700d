// donsw: exact Donaldson / Seiberg-Witten invariant calculus over Q.
//
// Subcommands: compute, blowup, check-scst, examples, verify, report.
// JSON on stdout, diagnostics on stderr. Exit codes: 0 success, 1 malformed
// input or unknown suite, 2 violated precondition, 3 failed verification.

#include "donsw/invariants.hpp"
#include "donsw/json_io.hpp"
#include "donsw/manifold.hpp"
#include "donsw/suites.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace donsw;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open manifest: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ComputeArgs {
    std::string manifest;
    std::string w_spec;
    std::string lambda_spec;
    std::string h_spec;
    std::string mode = "both";
    unsigned delta = 0;
    unsigned m = 0;
    std::uint64_t seed = 1;
    unsigned max_delta = 60;
    std::string seeds_spec;  // report only
};

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto comma = spec.find(',', start);
        const std::string part = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!part.empty())
            seeds.push_back(std::stoull(part));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (seeds.empty())
        throw input_error("no seeds given");
    return seeds;
}

InvariantQuery build_query(const ManifoldFile& mf, const ComputeArgs& args) {
    const std::size_t rank = mf.x.lattice().rank();
    if (args.delta > args.max_delta)
        throw precondition_error(fmt::format("delta {} exceeds --max-delta {}", args.delta, args.max_delta));
    InvariantQuery q;
    q.w = parse_class_spec(args.w_spec, rank, mf.names);
    q.delta = args.delta;
    q.m = args.m;
    q.h = parse_h_vector(args.h_spec, rank);
    if (q.delta < 2 * q.m)
        throw precondition_error("invariant query requires delta - 2m >= 0");
    return q;
}

int cmd_compute(const ComputeArgs& args, bool full_report) {
    const ManifoldFile mf = manifold_from_json(slurp(args.manifest));
    const InvariantQuery q = build_query(mf, args);

    ComputeReport report;
    report.query = q;

    if (args.mode == "witten" && !full_report) {
        report.witten = witten_invariant(mf.x, q);
        std::cout << compute_report_to_json(report);
        return 0;
    }

    if (args.lambda_spec.empty())
        throw input_error("--lambda is required for cobordism evaluation");
    const Class lam = parse_class_spec(args.lambda_spec, mf.x.lattice().rank(), mf.names);
    report.lambda = lam;

    if (args.mode == "cobordism" && !full_report) {
        const auto cn = mf.x.char_numbers();
        const CoeffTable table(cn.chi_h, cn.c1sq - 1, mf.x.lattice().pair(lam, lam), q.m, args.seed);
        report.cobordism.push_back(SeedOutcome{args.seed, cobordism_invariant_blown(mf.x, q, lam, table), false});
        std::cout << compute_report_to_json(report);
        return 0;
    }

    if (args.mode != "both" && !full_report)
        throw input_error("unknown mode: " + args.mode + " (expected witten|cobordism|both)");

    const std::vector<std::uint64_t> seeds =
        full_report ? parse_seeds(args.seeds_spec.empty() ? "1,2,3,4,5" : args.seeds_spec)
                    : std::vector<std::uint64_t>{args.seed};
    const MainTheoremReport mt = main_theorem_check(mf.x, q, lam, seeds);
    report.witten = mt.witten;
    report.cobordism = mt.runs;
    report.equal = mt.all_equal;
    report.seed_independent = mt.seed_independent;
    report.scst = mt.scst;
    std::cout << compute_report_to_json(report);
    return 0;
}

int cmd_blowup(const std::string& manifest) {
    ManifoldFile mf = manifold_from_json(slurp(manifest));
    const FourManifold blown = mf.x.blow_up();
    std::map<std::string, Class> names;
    int exceptional = 0;
    for (const auto& [name, cls] : mf.names) {
        if (name.size() > 1 && name[0] == 'e')
            exceptional = std::max(exceptional, std::atoi(name.c_str() + 1));
        Class ext = cls;
        ext.c.push_back(0);
        names.emplace(name, std::move(ext));
    }
    names.emplace("e" + std::to_string(exceptional + 1),
                  Class::unit(blown.lattice().rank(), blown.lattice().rank() - 1));
    std::cout << manifold_to_json(blown, names);
    return 0;
}

int cmd_check_scst(const std::string& manifest, const std::string& w_spec) {
    const ManifoldFile mf = manifold_from_json(slurp(manifest));
    const Class w = parse_class_spec(w_spec, mf.x.lattice().rank(), mf.names);
    const bool scst = mf.x.is_scst(w);
    std::cout << fmt::format("{{\n  \"scst\": {},\n  \"c\": {}\n}}\n", scst ? "true" : "false",
                             mf.x.char_numbers().c);
    return 0;
}

int cmd_examples(int q, int n) {
    const ExampleManifold ex = example_xqn(q, n);
    std::cout << manifold_to_json(ex.x, ex.names);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials) {
    std::vector<std::string> to_run;
    if (suite == "all")
        to_run = suites::names();
    else
        to_run.push_back(suite);
    bool all_ok = true;
    for (const auto& name : to_run) {
        const suites::Result res = suites::run(name, seed, trials);
        for (const auto& check : res.checks) {
            fmt::print("[{}] {:<16} {}{}\n", check.passed ? "PASS" : "FAIL", res.suite, check.name,
                       check.detail.empty() ? "" : fmt::format("  ({})", check.detail));
            if (!check.passed && !check.detail.empty())
                fmt::print(stderr, "counterexample: {}: {}\n", check.name, check.detail);
        }
        fmt::print("{:<16} {} checks, {:.2f}s\n", res.suite, res.checks.size(), res.seconds);
        all_ok = all_ok && res.passed();
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Donaldson / Seiberg-Witten invariant identities over Q"};
    app.require_subcommand(1);

    ComputeArgs args;

    auto* compute = app.add_subcommand("compute", "evaluate invariants on a manifold manifest");
    compute->add_option("--manifest", args.manifest)->required();
    compute->add_option("--w", args.w_spec)->required();
    compute->add_option("--lambda", args.lambda_spec);
    compute->add_option("--delta", args.delta)->required();
    compute->add_option("--m", args.m);
    compute->add_option("--h", args.h_spec)->required();
    compute->add_option("--mode", args.mode)->check(CLI::IsMember({"witten", "cobordism", "both"}));
    compute->add_option("--seed", args.seed);
    compute->add_option("--max-delta", args.max_delta);

    std::string blowup_manifest;
    auto* blowup = app.add_subcommand("blowup", "emit the blow-up of a manifold manifest");
    blowup->add_option("--manifest", blowup_manifest)->required();

    std::string scst_manifest, scst_w;
    auto* scst = app.add_subcommand("check-scst", "test superconformal simple type");
    scst->add_option("--manifest", scst_manifest)->required();
    scst->add_option("--w", scst_w)->required();

    int ex_q = 2, ex_n = 0;
    auto* examples = app.add_subcommand("examples", "emit an example manifold as JSON");
    examples->add_option("--q", ex_q)->required();
    examples->add_option("--n", ex_n);

    std::string suite_name;
    std::uint64_t verify_seed = 7;
    int verify_trials = 0;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite_name)->required();
    verify->add_option("--seed", verify_seed);
    verify->add_option("--trials", verify_trials);

    auto* report = app.add_subcommand("report", "full multi-seed cobordism/Witten comparison");
    report->add_option("--manifest", args.manifest)->required();
    report->add_option("--w", args.w_spec)->required();
    report->add_option("--lambda", args.lambda_spec)->required();
    report->add_option("--delta", args.delta)->required();
    report->add_option("--m", args.m);
    report->add_option("--h", args.h_spec)->required();
    report->add_option("--seeds", args.seeds_spec);
    report->add_option("--max-delta", args.max_delta);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(args, false);
        if (blowup->parsed())
            return cmd_blowup(blowup_manifest);
        if (scst->parsed())
            return cmd_check_scst(scst_manifest, scst_w);
        if (examples->parsed())
            return cmd_examples(ex_q, ex_n);
        if (verify->parsed())
            return cmd_verify(suite_name, verify_seed, verify_trials);
        if (report->parsed())
            return cmd_compute(args, true);
    } catch (const donsw::input_error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    } catch (const donsw::precondition_error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const donsw::invariant_error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
