// Command-line front end: cycle census, Monte Carlo, orbits, walks, null model
// and correlation fit on signed edge lists.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/edge_list_io.hpp"
#include "cyclebal/errors.hpp"
#include "cyclebal/fixtures.hpp"
#include "cyclebal/monte_carlo.hpp"
#include "cyclebal/null_model.hpp"
#include "cyclebal/orbits.hpp"
#include "cyclebal/report.hpp"

using namespace cyclebal;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kNotConverged = 3, kInternal = 4 };

struct Options {
    std::string input;
    bool undirected = false;
    std::string duplicates = "reject";
    std::size_t max_length = 20;
    std::string format = "csv";
    std::string output;
    unsigned workers = 1;
    bool timing = false;
    std::optional<double> null_p;

    // Monte Carlo
    std::size_t samples = 1000;
    std::size_t batches = 10;
    std::size_t sample_size = 20;
    std::uint64_t seed = 0;
    std::string aggregation = "pooled";
    std::optional<double> target;
    std::size_t cap = 10'000'000;
    bool progress = false;

    // per command
    std::string engine = "exact";
    std::string orbit_method = "hashimoto";
    std::size_t dense_cap = 4096;
    std::size_t shuffles = 10;
    std::string fit_range;
    double amplitude = 0.5;
    std::string from_report;
    bool with_counts = false;
    std::size_t dense_vertex_cap = 4000;
};

struct Loaded {
    SignedDigraph graph;
    std::string name;
};

Loaded load_input(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    if (o.input == "builtin:triad") return {fixtures::triad(), "triad"};
    if (o.input == "builtin:gama") return {fixtures::gahuku_gama(), "gahuku-gama"};
    LoadOptions lo;
    lo.undirected = o.undirected;
    if (o.duplicates == "reject")
        lo.duplicates = DuplicatePolicy::Reject;
    else if (o.duplicates == "last")
        lo.duplicates = DuplicatePolicy::LastWins;
    else
        throw UsageError("--duplicates must be reject or last");
    if (!std::filesystem::exists(o.input)) throw DataError("input file not found: " + o.input);
    return {load_edge_list_file(o.input, lo), std::filesystem::path(o.input).stem().string()};
}

DatasetInfo dataset_info(const Loaded& in) {
    DatasetInfo d;
    d.name = in.name;
    d.vertices = in.graph.vertex_count();
    d.undirected = in.graph.origin() == Origin::Undirected;
    d.edges = d.undirected ? (in.graph.edge_count() + in.graph.self_loop_count()) / 2 : in.graph.edge_count();
    if (in.graph.edge_count() > 0) d.p = negative_edge_fraction(in.graph);
    return d;
}

Json base_config(const Options& o) {
    Json c;
    c["max_length"] = o.max_length;
    c["workers"] = o.workers;
    return c;
}

void add_symmetrization_note(AnalysisReport& r, const Loaded& in) {
    if (in.graph.origin() == Origin::Undirected)
        r.extras["notes"].push_back(
            "undirected input was symmetrized: each undirected edge is a reciprocal pair, so length-2 counts are "
            "backtracks over single edges and every longer cycle appears in both orientations");
}

double effective_p(const Options& o, const Loaded& in) {
    if (o.null_p) {
        if (*o.null_p < 0.0 || *o.null_p > 1.0) throw UsageError("--null-p must lie in [0, 1]");
        return *o.null_p;
    }
    return negative_edge_fraction(in.graph);
}

MonteCarloConfig mc_config(const Options& o) {
    MonteCarloConfig c;
    c.samples_per_batch = o.samples;
    c.batches = o.batches;
    c.sample_size = o.sample_size;
    c.max_length = o.max_length;
    c.master_seed = o.seed;
    c.workers = o.workers;
    if (o.aggregation == "pooled")
        c.aggregation = Aggregation::Pooled;
    else if (o.aggregation == "mean")
        c.aggregation = Aggregation::MeanOfRatios;
    else
        throw UsageError("--aggregation must be pooled or mean");
    c.validate();
    return c;
}

Json mc_config_json(const MonteCarloConfig& c) {
    Json j;
    j["samples_per_batch"] = c.samples_per_batch;
    j["batches"] = c.batches;
    j["sample_size"] = c.sample_size;
    j["max_length"] = c.max_length;
    j["seed"] = c.master_seed;
    j["aggregation"] = c.aggregation == Aggregation::Pooled ? "pooled" : "mean";
    j["sampler"] = "snowball";
    return j;
}

const char* status_name(LengthStatus s) {
    switch (s) {
        case LengthStatus::Converged: return "converged";
        case LengthStatus::NotConverged: return "not-converged";
        case LengthStatus::Undefined: return "undefined";
    }
    return "";
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--fit-range must look like A:B");
    try {
        const std::size_t a = std::stoul(text.substr(0, colon));
        const std::size_t b = std::stoul(text.substr(colon + 1));
        if (a > b) throw UsageError("--fit-range start exceeds its end");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--fit-range must look like A:B");
    }
}

Json fit_json(const CorrelationFit& f) {
    Json j;
    j["xi"] = std::isinf(f.xi) ? Json("inf") : Json(round_significant(f.xi));
    j["two_xi"] = std::isinf(f.two_xi) ? Json("inf") : Json(round_significant(f.two_xi));
    j["first"] = f.first;
    j["last"] = f.last;
    j["amplitude"] = round_significant(f.amplitude);
    j["rss"] = round_significant(f.rss);
    j["at_boundary"] = f.at_boundary;
    return j;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
    AnalysisReport report;
    int exit_code = kOk;
    /// Replaces the standard CSV rows (the fit table).
    std::optional<std::string> csv_override;
};

Outcome run_census(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "exact";
    r.config = base_config(o);
    const CycleCensus census = cycle_census(in.graph, o.max_length, EngineOptions{o.workers});
    r.rows = rows_from_table(balance_table(census));
    if (in.graph.edge_count() > 0) {
        const double p = effective_p(o, in);
        r.config["null_p"] = round_significant(p);
        attach_null_band(r.rows, null_band_table(p, balance_table(census)));
    }
    add_symmetrization_note(r, in);
    return out;
}

Outcome run_montecarlo(const Options& o) {
    const Loaded in = load_input(o);
    const MonteCarloConfig cfg = mc_config(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "monte-carlo";
    r.config = mc_config_json(cfg);
    MonteCarloReport mc;
    if (o.target) {
        r.config["target"] = *o.target;
        r.config["cap"] = o.cap;
        ProgressHook hook;
        if (o.progress)
            hook = [](const ConvergenceProgress& p) {
                std::cerr << "samples " << p.samples_done;
                for (std::size_t l = 0; l < p.stderr_r.size(); ++l)
                    if (p.stderr_r[l]) std::cerr << " R" << l + 1 << "±" << format_number(*p.stderr_r[l]);
                std::cerr << '\n';
            };
        mc = convergence_loop(in.graph, cfg, *o.target, o.cap, hook);
        r.config["samples_per_batch"] = mc.config.samples_per_batch;
    } else {
        mc = run_monte_carlo(in.graph, cfg);
    }
    r.rows = rows_from_table(mc.table);
    if (in.graph.edge_count() > 0) attach_null_band(r.rows, null_band_table(effective_p(o, in), mc.table));
    Json status = Json::array();
    for (auto s : mc.status) status.push_back(status_name(s));
    r.extras["status"] = status;
    r.extras["total_samples"] = mc.total_samples;
    r.extras["short_samples"] = mc.short_samples;
    r.extras["converged"] = mc.converged;
    if (o.target && !mc.converged) out.exit_code = kNotConverged;
    add_symmetrization_note(r, in);
    return out;
}

OrbitCensus orbit_census(const Options& o, const SignedDigraph& g) {
    if (o.orbit_method == "hashimoto") return primitive_orbit_counts(g, o.max_length, {o.dense_cap, o.workers});
    if (o.orbit_method == "stark-terras") {
        const OrbitWalks w = stark_terras_orbit_walks(g, o.max_length);
        HashimotoTraces t;
        t.signed_traces.assign(o.max_length + 1, 0);
        t.abs_traces.assign(o.max_length + 1, 0);
        for (std::size_t l = 1; l <= o.max_length; ++l) {
            t.signed_traces[l] = w.positive[l] - w.negative[l];
            t.abs_traces[l] = w.positive[l] + w.negative[l];
        }
        return orbits_from_traces(t);
    }
    throw UsageError("--method must be hashimoto or stark-terras");
}

Outcome run_orbits(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "orbits";
    r.config = base_config(o);
    r.config["method"] = o.orbit_method;
    SignedDigraph g = in.graph;
    if (g.has_self_loops()) {
        g = without_self_loops(g);
        r.extras["notes"].push_back("self-loops removed before building the Hashimoto matrix");
    }
    const OrbitCensus oc = orbit_census(o, g);
    r.rows = rows_from_table(oc.table());
    return out;
}

Outcome run_walks(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "walks";
    r.config = base_config(o);
    r.rows = rows_from_table(walk_ratios(in.graph, o.max_length, {o.dense_cap, o.workers}));
    if (in.graph.vertex_count() > 0 && in.graph.vertex_count() <= o.dense_vertex_cap) {
        const DegreeOfBalance d = weighted_degree_of_balance(in.graph, o.dense_vertex_cap);
        r.extras["degree_of_balance"] = {{"K", round_significant(d.k)}, {"U", round_significant(d.u)}};
    }
    return out;
}

Outcome run_lowexact(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "lowexact";
    r.config = Json::object();
    const LowOrderRatios low = exact_low_order_ratios(in.graph);
    r.rows = rows_from_table(low.table);
    Json traces;
    for (std::size_t i = 0; i < 3; ++i) {
        traces["signed"].push_back(low.signed_traces[i].str());
        traces["unsigned"].push_back(low.unsigned_traces[i].str());
    }
    r.extras["traces"] = traces;
    add_symmetrization_note(r, in);
    return out;
}

Outcome run_null(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "null";
    r.config = base_config(o);
    const double p = effective_p(o, in);
    r.config["null_p"] = round_significant(p);
    if (o.with_counts) {
        const BalanceTable table = balance_table(cycle_census(in.graph, o.max_length, EngineOptions{o.workers}));
        r.rows = rows_from_table(table);
        attach_null_band(r.rows, null_band_table(p, table));
    } else {
        for (std::size_t l = 1; l <= o.max_length; ++l) {
            ReportRow row;
            row.length = l;
            row.null_r = null_ratio(p, l);
            r.rows.push_back(row);
        }
    }
    return out;
}

Outcome run_shufflenull(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "shufflenull";
    r.config = base_config(o);
    ShuffleConfig sc;
    sc.shuffles = o.shuffles;
    sc.seed = o.seed;
    sc.max_length = o.max_length;
    sc.workers = o.workers;
    r.config["shuffles"] = o.shuffles;
    r.config["seed"] = o.seed;
    r.config["engine"] = o.engine;
    if (o.engine == "montecarlo") {
        MonteCarloConfig mc = mc_config(o);
        sc.monte_carlo = mc;
        r.config["monte_carlo"] = mc_config_json(mc);
    } else if (o.engine != "exact") {
        throw UsageError("--engine must be exact or montecarlo");
    }
    const ShuffleNullResult res = shuffle_null(in.graph, sc);
    r.rows = rows_from_table(res.table);
    if (in.graph.edge_count() > 0) {
        // Band widths use the cycle totals of one shuffle (the structure is fixed).
        BalanceTable per_shuffle = res.table;
        for (auto& row : per_shuffle.rows) {
            row.n_pos /= o.shuffles;
            row.n_neg /= o.shuffles;
        }
        attach_null_band(r.rows, null_band_table(effective_p(o, in), per_shuffle));
    }
    return out;
}

BalanceTable table_from_report(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open report " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("report is not valid JSON: ") + e.what());
    }
    const AnalysisReport rep = report_from_json(j);
    BalanceTable t;
    for (const auto& row : rep.rows) {
        BalanceRow b;
        b.length = row.length;
        b.n_pos = row.n_pos.value_or(0);
        b.n_neg = row.n_neg.value_or(0);
        b.r = row.r;
        b.u = row.u;
        b.k = row.k;
        b.stderr_r = row.stderr_r;
        t.rows.push_back(b);
    }
    return t;
}

Outcome run_fit(const Options& o) {
    Outcome out;
    auto& r = out.report;
    r.method = "fit";
    r.config = base_config(o);
    BalanceTable table;
    if (!o.from_report.empty()) {
        table = table_from_report(o.from_report);
        r.dataset.name = std::filesystem::path(o.from_report).stem().string();
        r.config["from_report"] = r.dataset.name;
    } else {
        const Loaded in = load_input(o);
        r.dataset = dataset_info(in);
        table = balance_table(cycle_census(in.graph, o.max_length, EngineOptions{o.workers}));
    }
    std::optional<std::pair<std::size_t, std::size_t>> range;
    if (!o.fit_range.empty()) range = parse_range(o.fit_range);
    const CorrelationFit fit = fit_correlation_length(table, range, o.amplitude);
    r.config["amplitude"] = round_significant(o.amplitude);
    r.extras["fit"] = fit_json(fit);
    for (const auto& row : rows_from_table(table))
        if (row.length >= fit.first && row.length <= fit.last) r.rows.push_back(row);
    std::ostringstream csv;
    const Json fj = r.extras["fit"];
    csv << "xi,two_xi,first,last,amplitude,rss,at_boundary\n";
    csv << (std::isinf(fit.xi) ? "inf" : format_number(fit.xi)) << ','
        << (std::isinf(fit.two_xi) ? "inf" : format_number(fit.two_xi)) << ',' << fit.first << ',' << fit.last << ','
        << format_number(fit.amplitude) << ',' << format_number(fit.rss) << ',' << (fit.at_boundary ? "true" : "false")
        << '\n';
    out.csv_override = csv.str();
    return out;
}

Outcome run_report(const Options& o) {
    const Loaded in = load_input(o);
    Outcome out;
    auto& r = out.report;
    r.dataset = dataset_info(in);
    r.method = "report";
    r.config = base_config(o);
    r.config["engine"] = o.engine;
    BalanceTable table;
    if (o.engine == "exact") {
        table = balance_table(cycle_census(in.graph, o.max_length, EngineOptions{o.workers}));
    } else if (o.engine == "montecarlo") {
        const MonteCarloConfig cfg = mc_config(o);
        r.config["monte_carlo"] = mc_config_json(cfg);
        table = run_monte_carlo(in.graph, cfg).table;
    } else {
        throw UsageError("--engine must be exact or montecarlo");
    }
    r.rows = rows_from_table(table);
    if (in.graph.edge_count() > 0) {
        const double p = effective_p(o, in);
        r.config["null_p"] = round_significant(p);
        attach_null_band(r.rows, null_band_table(p, table));
    }

    auto r_series = [](const BalanceTable& t) {
        Json a = Json::array();
        for (const auto& row : t.rows) a.push_back(row.r ? Json(round_significant(*row.r)) : Json(nullptr));
        return a;
    };
    r.extras["walks_R"] = r_series(walk_ratios(in.graph, o.max_length, {o.dense_cap, o.workers}));
    const SignedDigraph loop_free = in.graph.has_self_loops() ? without_self_loops(in.graph) : in.graph;
    if (o.max_length >= 3) {
        Options oo = o;
        r.extras["orbits_R"] = r_series(orbit_census(oo, loop_free).table());
    }
    try {
        const CorrelationFit fit =
            fit_correlation_length(table, o.fit_range.empty() ? std::nullopt : std::optional(parse_range(o.fit_range)),
                                   o.amplitude);
        r.extras["fit"] = fit_json(fit);
    } catch (const DataError& e) {
        r.extras["fit"] = {{"error", e.what()}};
    }
    if (in.graph.vertex_count() > 0 && in.graph.vertex_count() <= o.dense_vertex_cap) {
        const DegreeOfBalance d = weighted_degree_of_balance(in.graph, o.dense_vertex_cap);
        r.extras["degree_of_balance"] = {{"K", round_significant(d.k)}, {"U", round_significant(d.u)}};
    }
    add_symmetrization_note(r, in);
    return out;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.input, "Signed edge list, or builtin:triad / builtin:gama");
    cmd->add_flag("--undirected", o.undirected, "Read every line as an undirected edge");
    cmd->add_option("--duplicates", o.duplicates, "Conflicting repeated edges: reject or last")
        ->check(CLI::IsMember({"reject", "last"}));
    cmd->add_option("--max-length", o.max_length, "Longest cycle length L")->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "Write here instead of standard output");
    cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", o.timing, "Include wall time (makes output run dependent)");
    cmd->add_option("--null-p", o.null_p, "Negative-edge fraction for the null model (default: measured)");
}

void add_monte_carlo(CLI::App* cmd, Options& o) {
    cmd->add_option("--samples", o.samples, "Samples per batch")->check(CLI::PositiveNumber);
    cmd->add_option("--batches", o.batches, "Number of batches");
    cmd->add_option("--sample-size", o.sample_size, "Vertices per sample");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--aggregation", o.aggregation, "pooled or mean")->check(CLI::IsMember({"pooled", "mean"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed cycle balance of networks"};
    app.require_subcommand(1);
    Options o;

    auto* census = app.add_subcommand("census", "Exact per-length cycle census");
    add_common(census, o);

    auto* mc = app.add_subcommand("montecarlo", "Monte Carlo estimate from sampled subgraphs");
    add_common(mc, o);
    add_monte_carlo(mc, o);
    mc->add_option("--target", o.target, "Run until every length has 2 sigma below this");
    mc->add_option("--cap", o.cap, "Largest total sample count for --target");
    mc->add_flag("--progress", o.progress, "Print progress to standard error");

    auto* orbits = app.add_subcommand("orbits", "Primitive orbit balance");
    add_common(orbits, o);
    orbits->add_option("--method", o.orbit_method, "hashimoto or stark-terras")
        ->check(CLI::IsMember({"hashimoto", "stark-terras"}));
    orbits->add_option("--dense-cap", o.dense_cap, "Dense sweep up to this matrix dimension");

    auto* walks = app.add_subcommand("walks", "Closed-walk balance and the weighted degree of balance");
    add_common(walks, o);
    walks->add_option("--dense-cap", o.dense_cap, "Dense sweep up to this matrix dimension");
    walks->add_option("--max-dense-vertices", o.dense_vertex_cap, "Largest graph for the exponential trace");

    auto* low = app.add_subcommand("lowexact", "Exact loops, backtracks and triangles from traces");
    add_common(low, o);

    auto* null = app.add_subcommand("null", "Uncorrelated-sign null model");
    add_common(null, o);
    null->add_flag("--with-counts", o.with_counts, "Also count cycles exactly for the confidence band");

    auto* shuffle = app.add_subcommand("shufflenull", "Null model from random sign permutations");
    add_common(shuffle, o);
    add_monte_carlo(shuffle, o);
    shuffle->add_option("--shuffles", o.shuffles, "Number of sign permutations")->check(CLI::PositiveNumber);
    shuffle->add_option("--engine", o.engine, "exact or montecarlo")->check(CLI::IsMember({"exact", "montecarlo"}));

    auto* fit = app.add_subcommand("fit", "Correlation length from the balance ratios");
    add_common(fit, o);
    fit->add_option("--fit-range", o.fit_range, "Lengths A:B to fit (default 3 to the last below 0.45)");
    fit->add_option("--amplitude", o.amplitude, "Model amplitude (0.5 saturates at the null value)");
    fit->add_option("--from-report", o.from_report, "Fit the rows of a JSON report instead of --input");

    auto* report = app.add_subcommand("report", "Census, null band, walks, orbits and fit together");
    add_common(report, o);
    add_monte_carlo(report, o);
    report->add_option("--engine", o.engine, "exact or montecarlo")->check(CLI::IsMember({"exact", "montecarlo"}));
    report->add_option("--fit-range", o.fit_range, "Lengths A:B to fit");
    report->add_option("--amplitude", o.amplitude, "Model amplitude");
    report->add_option("--method", o.orbit_method, "Orbit method: hashimoto or stark-terras")
        ->check(CLI::IsMember({"hashimoto", "stark-terras"}));
    report->add_option("--dense-cap", o.dense_cap, "Dense sweep up to this matrix dimension");
    report->add_option("--max-dense-vertices", o.dense_vertex_cap, "Largest graph for the exponential trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Timer timer;
        Outcome out;
        if (*census) out = run_census(o);
        else if (*mc) out = run_montecarlo(o);
        else if (*orbits) out = run_orbits(o);
        else if (*walks) out = run_walks(o);
        else if (*low) out = run_lowexact(o);
        else if (*null) out = run_null(o);
        else if (*shuffle) out = run_shufflenull(o);
        else if (*fit) out = run_fit(o);
        else out = run_report(o);
        if (o.timing) out.report.wall_seconds = timer.seconds();

        const ReportFormat format = o.format == "json" ? ReportFormat::Json : ReportFormat::Csv;
        std::ofstream file;
        if (!o.output.empty()) {
            file.open(o.output, std::ios::binary);
            if (!file) throw DataError("cannot write " + o.output);
        }
        std::ostream& sink = o.output.empty() ? std::cout : file;
        if (format == ReportFormat::Csv && out.csv_override)
            sink << *out.csv_override;
        else
            emit_report(out.report, format, sink);
        sink.flush();
        if (!sink) throw DataError("failed to write the report");
        if (o.timing && format == ReportFormat::Csv)
            std::cerr << "wall_seconds " << format_number(*out.report.wall_seconds) << '\n';
        if (out.exit_code == kNotConverged) std::cerr << "not every length reached the target\n";
        return out.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
