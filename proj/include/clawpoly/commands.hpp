#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clawpoly/engine.hpp"
#include "clawpoly/io.hpp"
#include "clawpoly/property_suite.hpp"
#include "clawpoly/transform.hpp"
#include "clawpoly/witness.hpp"

namespace clawpoly::cli {

enum class Outcome { Pass, Fail, Partial };

inline std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Partial: return "partial";
    }
    return "?";
}

/// Process exit codes.
enum ExitCode : int {
    kExitPass = 0,
    kExitVerificationFailure = 1,
    kExitUsage = 2,
    kExitResourceCap = 3,
};

inline int exit_code_for(ErrorKind kind)
{
    return kind == ErrorKind::ResourceCap ? kExitResourceCap : kExitUsage;
}

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    Outcome outcome = Outcome::Pass;
    std::vector<std::pair<std::string, std::string>> counts;
    std::vector<std::string> notices;
    std::vector<std::string> artifacts;
    double wall_ms = 0;

    RunReport& param(const std::string& k, const std::string& v)
    {
        parameters.emplace_back(k, v);
        return *this;
    }
    RunReport& count(const std::string& k, const std::string& v)
    {
        counts.emplace_back(k, v);
        return *this;
    }
    RunReport& count(const std::string& k, std::size_t v) { return count(k, std::to_string(v)); }

    int exit_code() const
    {
        switch (outcome) {
        case Outcome::Pass: return kExitPass;
        case Outcome::Fail: return kExitVerificationFailure;
        case Outcome::Partial: return kExitResourceCap;
        }
        return kExitUsage;
    }

    std::string records(bool timing = true) const
    {
        std::string out = io::Record().add("record", "run").add("command", command).add("outcome", to_string(outcome)).str() + "\n";
        for (const auto& [k, v] : parameters)
            out += io::Record().add("record", "parameter").add("name", k).add("value", v).str() + "\n";
        for (const auto& [k, v] : counts)
            out += io::Record().add("record", "count").add("name", k).add("value", v).str() + "\n";
        for (const auto& n : notices)
            out += io::Record().add("record", "notice").add("text", n).str() + "\n";
        for (const auto& a : artifacts)
            out += io::Record().add("record", "artifact").add("path", a).str() + "\n";
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", wall_ms);
            out += io::Record().add("record", "timing").add("wall_ms", buf).str() + "\n";
        }
        return out;
    }

    std::string json(bool timing = true) const
    {
        io::json j;
        j["command"] = command;
        j["outcome"] = to_string(outcome);
        j["parameters"] = io::json::object();
        for (const auto& [k, v] : parameters)
            j["parameters"][k] = v;
        j["counts"] = io::json::object();
        for (const auto& [k, v] : counts)
            j["counts"][k] = v;
        j["notices"] = notices;
        j["artifacts"] = artifacts;
        if (timing)
            j["wall_ms"] = wall_ms;
        return j.dump(2) + "\n";
    }
};

/// A report plus the command's primary output, when it has one and no
/// output path was given.
struct CommandResult {
    RunReport report;
    std::optional<std::string> artifact;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
}

/// Writes `text` to `path` (recorded as an artifact) or hands it back.
inline void deliver(CommandResult& r, const std::string& path, std::string text)
{
    if (path.empty() || path == "-") {
        r.artifact = std::move(text);
        return;
    }
    write_file(path, text);
    r.report.artifacts.push_back(path);
}

inline void ship_counterexample(RunReport& report, const std::string& path, const VertexSet& points,
                                const std::string& note)
{
    std::string text = io::write_ext(points);
    text.insert(text.find("begin\n"), "* " + note + "\n");
    write_file(path, text);
    report.artifacts.push_back(path);
    report.notices.push_back(note);
}

inline std::string csv(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string family_name(const Family& f)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, family::NonNeg>)
                return "nonneg";
            else if constexpr (std::is_same_v<T, family::ColumnSimplex>)
                return "column_simplex";
            else if constexpr (std::is_same_v<T, family::Box>)
                return "box";
            else if constexpr (std::is_same_v<T, family::ARow>)
                return "a_row";
            else
                return "b_column";
        },
        f);
}

inline std::vector<std::pair<std::string, std::size_t>> family_counts(const InequalitySystem& sys)
{
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& ineq : sys.inequalities) {
        const auto name = family_name(ineq.family);
        if (out.empty() || out.back().first != name)
            out.emplace_back(name, 0);
        ++out.back().second;
    }
    return out;
}

inline InequalitySystem build_model(const std::string& model, std::size_t m)
{
    if (model == "binary")
        return build_dh(m);
    if (model == "kimura3")
        return build_delta(m);
    if (model == "kimura3-prime")
        return build_delta_prime(m);
    throw Error(ErrorKind::Parse, "unknown model '" + model + "' (binary, kimura3, kimura3-prime)");
}

inline std::string format_output(const VertexSet& vs, io::Format f)
{
    switch (f) {
    case io::Format::Cdd: return io::write_ext(vs);
    case io::Format::Records: return io::write_records(vs);
    case io::Format::Json: return io::write_json(vs);
    }
    return {};
}

inline std::string format_output(const InequalitySystem& sys, io::Format f)
{
    switch (f) {
    case io::Format::Cdd: return io::write_ine(sys);
    case io::Format::Records: return io::write_records(sys);
    case io::Format::Json: return io::write_json(sys);
    }
    return {};
}

inline std::string format_output(const std::vector<engine::Halfspace>& hs, std::size_t rows, std::size_t cols,
                                 io::Format f)
{
    switch (f) {
    case io::Format::Cdd: return io::write_ine(hs, rows, cols);
    case io::Format::Records: return io::write_records(hs, rows, cols);
    case io::Format::Json: return io::write_json(hs, rows, cols);
    }
    return {};
}

inline std::string default_counterexample_path(const std::string& what, std::size_t m)
{
    return "counterexample-" + what + "-m" + std::to_string(m) + ".ext";
}

} // namespace detail

// ---------------------------------------------------------------------------
// vrep / hrep

struct VrepOptions {
    std::string group = "z2z2";
    std::size_t leaves = 0;
    io::Format format = io::Format::Cdd;
    std::string out;
    bool allow_large = false;
};

inline CommandResult cmd_vrep(const VrepOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    r.report.command = "vrep";
    r.report.param("group", o.group).param("leaves", std::to_string(o.leaves));
    const auto spec = parse_group_spec(o.group);
    GenerationLimits limits;
    limits.allow_large = o.allow_large;
    const auto vs = generate_vertices(spec, o.leaves, limits);
    r.report.count("vertices", vs.size()).count("dimension", vs.dimension());
    detail::deliver(r, o.out, detail::format_output(vs, o.format));
    r.report.wall_ms = sw.elapsed_ms();
    return r;
}

struct HrepOptions {
    std::string model = "kimura3";
    std::size_t leaves = 0;
    io::Format format = io::Format::Cdd;
    std::string out;
};

inline CommandResult cmd_hrep(const HrepOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    r.report.command = "hrep";
    r.report.param("model", o.model).param("leaves", std::to_string(o.leaves));
    const auto sys = detail::build_model(o.model, o.leaves);
    r.report.count("inequalities", sys.size()).count("dimension", sys.dimension());
    for (const auto& [name, n] : detail::family_counts(sys))
        r.report.count("family_" + name, n);
    detail::deliver(r, o.out, detail::format_output(sys, o.format));
    r.report.wall_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string task;
    std::size_t leaves = 0;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    engine::Limits limits;
    bool allow_large = false;
    std::string counterexample; // empty: counterexample-<task>-m<m>.ext
};

inline CommandResult cmd_verify(const VerifyOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    auto& rep = r.report;
    rep.command = "verify";
    rep.param("task", o.task).param("leaves", std::to_string(o.leaves));
    require_leaves(o.leaves);
    const std::size_t m = o.leaves;
    const std::string cx_path =
        o.counterexample.empty() ? detail::default_counterexample_path(o.task, m) : o.counterexample;
    engine::Limits limits = o.limits;
    limits.allow_large = limits.allow_large || o.allow_large;
    GenerationLimits glimits;
    glimits.allow_large = o.allow_large;

    if (o.task == "containment") {
        const auto c = witness::check_containment(m, glimits);
        rep.count("vertices_checked", c.checked).count("violations", c.pass() ? 0 : 1);
        if (!c.pass()) {
            rep.outcome = Outcome::Fail;
            const auto verts = generate_vertices(GroupSpec::z2z2(), m, glimits);
            VertexSet cx{3, m, {verts.points[*c.first_violation]}};
            detail::ship_counterexample(rep, cx_path, cx,
                                        "vertex outside Delta(" + std::to_string(m) + "), violated ids " +
                                            detail::csv(c.violated_ids));
        }
    } else if (o.task == "equality") {
        const auto verts = generate_vertices(GroupSpec::z2z2(), m, glimits);
        const auto delta = engine::polytope_from_inequalities(build_delta(m), limits);
        const auto hull = engine::hull_from_vertices(verts, limits);
        const auto cmp = engine::equal_polytopes(hull, delta);
        rep.count("vertices_k", hull.vertices.size())
            .count("vertices_delta", delta.vertices.size())
            .count("vertices_matched", hull.vertices.size() - cmp.only_in_first.size())
            .count("hull_facets", engine::facet_indices(hull).size())
            .count("violations", cmp.only_in_first.size() + cmp.only_in_second.size());
        if (!cmp.equal) {
            rep.outcome = Outcome::Fail;
            VertexSet cx{3, m, cmp.only_in_first};
            cx.points.insert(cx.points.end(), cmp.only_in_second.begin(), cmp.only_in_second.end());
            detail::ship_counterexample(rep, cx_path, cx,
                                        std::to_string(cmp.only_in_first.size()) + " points only in K, " +
                                            std::to_string(cmp.only_in_second.size()) + " only in Delta");
        }
    } else if (o.task == "integrality") {
        VertexSet bad{3, m, {}};
        for (const auto& [name, sys] : {std::pair{"delta", build_delta(m)}, std::pair{"delta_prime", build_delta_prime(m)}}) {
            const auto vs = engine::vertices_from_inequalities(sys, limits);
            std::size_t nonintegral = 0;
            for (const auto& p : vs.points)
                if (!is_integral(p)) {
                    ++nonintegral;
                    bad.points.push_back(p);
                }
            rep.count(std::string("vertices_") + name, vs.size());
            rep.count(std::string("nonintegral_") + name, nonintegral);
        }
        rep.count("violations", bad.size());
        if (bad.size() > 0) {
            rep.outcome = Outcome::Fail;
            detail::ship_counterexample(rep, cx_path, bad, "non-integral engine vertices");
        }
    } else if (o.task == "theorems") {
        rep.param("samples", std::to_string(o.samples)).param("seed", std::to_string(o.seed));
        const auto s = witness::run_property_suite(m, o.samples, o.seed);
        for (const auto& [name, c] : s.counts) {
            rep.count(name + "_checked", c.first);
            rep.count(name + "_failed", c.second);
        }
        rep.count("violations", s.failures());
        if (!s.pass()) {
            rep.outcome = Outcome::Fail;
            VertexSet cx{3, m, {s.counterexample->flat()}};
            detail::ship_counterexample(rep, cx_path, cx,
                                        "property " + s.failed_property + " fails" +
                                            (s.diagnostic.empty() ? "" : ": " + s.diagnostic));
        }
    } else {
        throw Error(ErrorKind::Parse, "unknown verify task '" + o.task +
                                          "' (containment, equality, integrality, theorems)");
    }
    rep.wall_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessOptions {
    std::string kind;
    std::string group = "z2z2";
    std::string labeling; // inline labeling text
    std::string point;    // inline matrix "a,b;c,d;..."
    std::string input;    // file: labeling text (violation) or .ext point (interior)
    std::string coords = "delta-prime";
    io::Format format = io::Format::Records;
    std::string out;
    std::string counterexample;
};

namespace detail {

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// First line of a labeling file that is neither blank nor a '#' comment.
inline std::string labeling_text(const std::string& file_text)
{
    std::istringstream in(file_text);
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        return line.substr(b);
    }
    throw Error(ErrorKind::EmptyInput, "no labeling in input");
}

inline std::string render_witness(const std::vector<std::pair<std::string, std::string>>& fields, io::Format f)
{
    if (f == io::Format::Json) {
        io::json j = io::json::object();
        for (const auto& [k, v] : fields)
            j[k] = v;
        return j.dump(2) + "\n";
    }
    io::Record rec;
    for (const auto& [k, v] : fields)
        rec.add(k, v);
    return rec.str() + "\n";
}

} // namespace detail

inline CommandResult cmd_witness(const WitnessOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    auto& rep = r.report;
    rep.command = "witness";
    rep.param("kind", o.kind);
    if (o.format == io::Format::Cdd)
        throw Error(ErrorKind::Parse, "witnesses are written as records or json");
    std::vector<std::pair<std::string, std::string>> fields;

    if (o.kind == "violation") {
        const auto spec = parse_group_spec(o.group);
        const std::string text = !o.labeling.empty() ? o.labeling
                                 : !o.input.empty() ? detail::labeling_text(detail::read_text(o.input))
                                                    : throw Error(ErrorKind::EmptyInput, "give --labeling or --input");
        const Labeling l = io::parse_labeling(spec, text);
        rep.param("group", spec.to_string()).param("labeling", text).param("leaves", std::to_string(l.leaves()));
        const auto w = witness::violation_witness(l);
        fields.emplace_back("witness", w ? "violation" : "none");
        if (w) {
            fields.emplace_back("subset", w->subset.to_string());
            fields.emplace_back("pair", "{" + std::to_string(w->pair[0]) + "," + std::to_string(w->pair[1]) + "}");
            fields.emplace_back("inequality_id", std::to_string(w->inequality_id));
            fields.emplace_back("lhs", w->lhs.get_str());
            fields.emplace_back("rhs", w->rhs.get_str());
        } else {
            rep.notices.push_back("labeling sums to the identity; its matrix is a vertex");
        }
        rep.count("violations", w ? 1 : 0);
    } else if (o.kind == "interior") {
        LeafMatrix p;
        if (!o.point.empty()) {
            p = io::parse_matrix(o.point);
        } else if (!o.input.empty()) {
            const auto vs = io::read_ext_file(o.input);
            if (vs.size() != 1)
                throw Error(ErrorKind::Parse, "interior witness input must hold exactly one point, found " +
                                                  std::to_string(vs.size()));
            p = vs.matrix(0);
        } else {
            throw Error(ErrorKind::EmptyInput, "give --point or --input");
        }
        if (o.coords == "delta")
            p = apply_f(p);
        else if (o.coords != "delta-prime")
            throw Error(ErrorKind::Parse, "unknown coordinates '" + o.coords + "' (delta, delta-prime)");
        rep.param("coords", o.coords).param("leaves", std::to_string(p.cols()));
        const auto inc = witness::incidence_report(p);
        rep.count("k", inc.k).count("omega", inc.omega).param("configuration", witness::to_string(inc.configuration));
        const auto out = witness::interior_witness(p);
        if (out.interior()) {
            const auto& w = *out.witness;
            fields.emplace_back("witness", "segment-interior");
            fields.emplace_back("method", w.method == witness::InteriorWitness::Method::Kernel ? "kernel" : "cycle");
            fields.emplace_back("direction", io::csv(w.direction));
            fields.emplace_back("epsilon", w.epsilon.get_str());
        } else {
            fields.emplace_back("witness", "none");
            fields.emplace_back("diagnostic", out.diagnostic);
            rep.outcome = Outcome::Fail;
            const std::string path =
                o.counterexample.empty() ? detail::default_counterexample_path("interior", p.cols()) : o.counterexample;
            detail::ship_counterexample(rep, path, VertexSet{3, p.cols(), {p.flat()}},
                                        "no segment-interior witness: " + out.diagnostic);
        }
        rep.count("violations", out.interior() ? 0 : 1);
    } else {
        throw Error(ErrorKind::Parse, "unknown witness kind '" + o.kind + "' (violation, interior)");
    }
    detail::deliver(r, o.out, detail::render_witness(fields, o.format));
    rep.wall_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// stats

struct StatsOptions {
    std::size_t leaves = 0;
    bool f_vector = false;
    engine::Limits limits;
    io::Format format = io::Format::Cdd;
    std::string out; // facet list of the hull, when computed
};

inline CommandResult cmd_stats(const StatsOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    auto& rep = r.report;
    rep.command = "stats";
    rep.param("leaves", std::to_string(o.leaves));
    require_leaves(o.leaves);
    const std::size_t m = o.leaves;
    const auto delta = build_delta(m);
    const auto delta_prime = build_delta_prime(m);
    rep.count("vertices", clawpoly::detail::checked_power(4, m - 1, std::numeric_limits<std::size_t>::max() / 4));
    rep.count("inequalities", delta.size());
    for (const auto& [name, n] : detail::family_counts(delta))
        rep.count("family_" + name, n);
    rep.count("inequalities_prime", delta_prime.size());

    const std::size_t d = 3 * m;
    if (d > o.limits.max_dimension && !o.limits.allow_large) {
        rep.outcome = Outcome::Partial;
        rep.notices.push_back("engine skipped: dimension " + std::to_string(d) + " exceeds the cap of " +
                              std::to_string(o.limits.max_dimension) + " (raise CLAWPOLY_MAX_DIM or pass --allow-large)");
        rep.wall_ms = sw.elapsed_ms();
        return r;
    }
    const auto verts = generate_vertices(GroupSpec::z2z2(), m);
    const auto hull = engine::hull_from_vertices(verts, o.limits);
    const auto facets = engine::facet_indices(hull);
    std::vector<engine::Halfspace> facet_list;
    for (auto k : facets)
        facet_list.push_back(hull.inequalities[k]);

    std::vector<engine::Halfspace> delta_normalized;
    for (const auto& h : engine::to_halfspaces(delta))
        delta_normalized.push_back(engine::normalized(h));
    std::size_t in_delta = 0;
    for (const auto& f : facet_list)
        in_delta += std::find(delta_normalized.begin(), delta_normalized.end(), engine::normalized(f)) !=
                    delta_normalized.end();
    rep.count("facets", facet_list.size()).count("facets_in_delta", in_delta);
    rep.count("dimension", static_cast<std::size_t>(std::max(0L, engine::polytope_dimension(hull))));

    if (o.f_vector) {
        const auto fv = engine::f_vector(hull);
        rep.count("f_vector", detail::csv(fv.counts));
        if (fv.partial) {
            rep.outcome = Outcome::Partial;
            rep.notices.push_back("f-vector truncated at the face cap");
        }
    }
    if (!o.out.empty())
        detail::deliver(r, o.out, detail::format_output(facet_list, 3, m, o.format));
    rep.wall_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// transform

struct TransformOptions {
    std::string input;
    bool inverse = false;
    io::Format format = io::Format::Cdd;
    std::string out;
};

inline CommandResult cmd_transform(const TransformOptions& o)
{
    detail::Stopwatch sw;
    CommandResult r;
    r.report.command = "transform";
    r.report.param("input", o.input).param("direction", o.inverse ? "inverse" : "forward");
    const auto vs = io::read_ext_file(o.input);
    const auto out = transform_points(vs, o.inverse);
    r.report.count("points", out.size());
    detail::deliver(r, o.out, detail::format_output(out, o.format));
    r.report.wall_ms = sw.elapsed_ms();
    return r;
}

} // namespace clawpoly::cli
