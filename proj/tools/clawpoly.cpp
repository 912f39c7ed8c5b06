#include <CLI11.hpp>

#include <iostream>

#include "clawpoly/commands.hpp"

using namespace clawpoly;

namespace {

struct ReportOptions {
    std::string format = "records";
    bool no_timing = false;
};

void add_report_flags(CLI::App* sub, ReportOptions& r)
{
    sub->add_option("--report-format", r.format, "Run report format")->check(CLI::IsMember({"records", "json"}));
    sub->add_flag("--no-timing", r.no_timing, "Omit wall time from the run report");
}

engine::Limits make_limits(bool allow_large, bool progress)
{
    auto limits = engine::Limits::from_environment();
    limits.allow_large = allow_large;
    if (progress)
        limits.progress = [](const engine::Progress& p) {
            std::cerr << "dd: row " << p.row << "/" << p.total_rows << " rays " << p.rays << "\n";
        };
    return limits;
}

int emit(const cli::CommandResult& r, const ReportOptions& ro)
{
    const std::string report = ro.format == "json" ? r.report.json(!ro.no_timing) : r.report.records(!ro.no_timing);
    if (r.artifact) {
        std::cout << *r.artifact;
        std::cerr << report;
    } else {
        std::cout << report;
    }
    return r.report.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Claw-tree Kimura-3 polytopes: V/H-representations and exact verification"};
    app.require_subcommand(1);
    ReportOptions ro;
    std::function<cli::CommandResult()> run;

    // vrep
    cli::VrepOptions vrep;
    std::string vrep_format = "cdd-ext";
    auto* v = app.add_subcommand("vrep", "Write the vertices of the claw-tree polytope of a group");
    v->add_option("--group", vrep.group, "Group, e.g. z2, z2z2, z3xz4");
    v->add_option("--leaves,-m", vrep.leaves, "Number of leaves")->required();
    v->add_option("--format", vrep_format, "cdd-ext, records or json");
    v->add_option("--out,-o", vrep.out, "Output path (default: stdout)");
    v->add_flag("--allow-large", vrep.allow_large, "Lift the vertex-count cap");
    add_report_flags(v, ro);
    v->callback([&] {
        vrep.format = io::parse_format(vrep_format);
        run = [&] { return cli::cmd_vrep(vrep); };
    });

    // hrep
    cli::HrepOptions hrep;
    std::string hrep_format = "cdd-ine";
    auto* h = app.add_subcommand("hrep", "Write an inequality system");
    h->add_option("--model", hrep.model, "binary, kimura3 or kimura3-prime")
        ->check(CLI::IsMember({"binary", "kimura3", "kimura3-prime"}));
    h->add_option("--leaves,-m", hrep.leaves, "Number of leaves")->required();
    h->add_option("--format", hrep_format, "cdd-ine, records or json");
    h->add_option("--out,-o", hrep.out, "Output path (default: stdout)");
    add_report_flags(h, ro);
    h->callback([&] {
        hrep.format = io::parse_format(hrep_format);
        run = [&] { return cli::cmd_hrep(hrep); };
    });

    // verify
    cli::VerifyOptions verify;
    bool verify_progress = false;
    auto* ve = app.add_subcommand("verify", "Run an exact verification task");
    ve->add_option("task", verify.task, "containment, equality, integrality or theorems")
        ->required()
        ->check(CLI::IsMember({"containment", "equality", "integrality", "theorems"}));
    ve->add_option("--leaves,-m", verify.leaves, "Number of leaves")->required();
    ve->add_option("--samples", verify.samples, "Sample count for the theorems task");
    ve->add_option("--seed", verify.seed, "RNG seed for the theorems task");
    ve->add_option("--counterexample", verify.counterexample, "Counterexample file written on failure");
    ve->add_flag("--allow-large", verify.allow_large, "Lift the engine and generation caps");
    ve->add_flag("--progress", verify_progress, "Report double-description progress on stderr");
    add_report_flags(ve, ro);
    ve->callback([&] {
        verify.limits = make_limits(verify.allow_large, verify_progress);
        run = [&] { return cli::cmd_verify(verify); };
    });

    // witness
    cli::WitnessOptions witness;
    std::string witness_format = "records";
    auto* w = app.add_subcommand("witness", "Produce a violation or segment-interior witness");
    w->add_option("kind", witness.kind, "violation or interior")
        ->required()
        ->check(CLI::IsMember({"violation", "interior"}));
    w->add_option("--labeling", witness.labeling, "Labeling such as 10,01,11");
    w->add_option("--group", witness.group, "Group of the labeling");
    w->add_option("--point", witness.point, "Matrix such as 1/2,1/2,0;1/2,1/2,0;0,0,0");
    w->add_option("--input,-i", witness.input, "Labeling file or single-point .ext file");
    w->add_option("--coords", witness.coords, "delta-prime (default) or delta")
        ->check(CLI::IsMember({"delta", "delta-prime"}));
    w->add_option("--format", witness_format, "records or json");
    w->add_option("--out,-o", witness.out, "Output path (default: stdout)");
    w->add_option("--counterexample", witness.counterexample, "Counterexample file written on failure");
    add_report_flags(w, ro);
    w->callback([&] {
        witness.format = io::parse_format(witness_format);
        run = [&] { return cli::cmd_witness(witness); };
    });

    // stats
    cli::StatsOptions stats;
    std::string stats_format = "cdd-ine";
    bool stats_large = false, stats_progress = false;
    auto* s = app.add_subcommand("stats", "Vertex, inequality and facet counts");
    s->add_option("--leaves,-m", stats.leaves, "Number of leaves")->required();
    s->add_flag("--f-vector", stats.f_vector, "Compute the f-vector of the hull");
    s->add_flag("--allow-large", stats_large, "Run the engine above the dimension cap");
    s->add_flag("--progress", stats_progress, "Report double-description progress on stderr");
    s->add_option("--format", stats_format, "Facet list format: cdd-ine, records or json");
    s->add_option("--out,-o", stats.out, "Write the facet list here");
    add_report_flags(s, ro);
    s->callback([&] {
        stats.format = io::parse_format(stats_format);
        stats.limits = make_limits(stats_large, stats_progress);
        run = [&] { return cli::cmd_stats(stats); };
    });

    // transform
    cli::TransformOptions transform;
    std::string transform_format = "cdd-ext";
    auto* t = app.add_subcommand("transform", "Apply f (Delta to Delta') or its inverse to a point file");
    t->add_option("--input,-i", transform.input, "Input .ext file")->required();
    t->add_flag("--inverse", transform.inverse, "Apply the inverse map");
    t->add_option("--format", transform_format, "cdd-ext, records or json");
    t->add_option("--out,-o", transform.out, "Output path (default: stdout)");
    add_report_flags(t, ro);
    t->callback([&] {
        transform.format = io::parse_format(transform_format);
        run = [&] { return cli::cmd_transform(transform); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    } catch (const Error& e) {
        std::cerr << "clawpoly: " << e.what() << "\n";
        return cli::exit_code_for(e.kind());
    }

    try {
        return emit(run(), ro);
    } catch (const Error& e) {
        std::cerr << "clawpoly: " << e.what() << "\n";
        return cli::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "clawpoly: " << e.what() << "\n";
        return cli::kExitUsage;
    }
}
