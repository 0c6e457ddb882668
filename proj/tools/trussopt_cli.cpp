// trussopt: run, verify and compare truss sizing optimizations from the shell.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trussopt/benchmarks.hpp"
#include "trussopt/constraints.hpp"
#include "trussopt/hybrid.hpp"
#include "trussopt/model_io.hpp"

namespace fs = std::filesystem;
using namespace trussopt;

namespace {

enum Exit { kOk = 0, kUsage = 1, kModelError = 2, kRuntimeError = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedModel {
    TrussModel model;
    const BenchmarkEntry* entry = nullptr;  // set for builtin:NAME
};

LoadedModel load(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string name = spec.substr(prefix.size());
        for (const BenchmarkEntry& e : builtin_models()) {
            if (e.id == name) return {e.model, &e};
        }
        throw ParseError(spec, "unknown built-in model (try `trussopt list`)");
    }
    return {load_model_file(spec), nullptr};
}

DesignVector parse_areas(const std::string& text) {
    std::vector<double> areas;
    std::string cleaned = text;
    for (char& c : cleaned) {
        if (c == '[' || c == ']' || c == ',' || c == ';') c = ' ';
    }
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw UsageError("--areas: cannot read \"" + token + "\" as a number");
        areas.push_back(v);
    }
    return DesignVector(std::move(areas));
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct RunOptions {
    std::string model;
    std::uint64_t seed = 0;
    std::size_t generations = GaParams{}.max_generations;
    std::size_t population = GaParams{}.population_size;
    std::size_t tsa = HybridParams{}.t_sa;
    bool no_sa = false;
    std::string out = ".";
};

HybridParams hybrid_params(const RunOptions& o) {
    HybridParams p;
    p.ga.max_generations = o.generations;
    p.ga.population_size = o.population;
    p.t_sa = o.no_sa ? HybridParams::kNever : o.tsa;
    return p;
}

void add_run_options(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--model", o.model, "Model file or builtin:NAME")->required();
    cmd->add_option("--generations", o.generations, "Maximum number of generations")->check(CLI::PositiveNumber);
    cmd->add_option("--population", o.population, "Population size (>= 10)")->check(CLI::Range(10, 1000000));
    cmd->add_option("--tsa", o.tsa, "Generations between SA runs")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-sa", o.no_sa, "Plain GA (never run SA)");
    cmd->add_option("--out", o.out, "Output directory");
}

int cmd_run(const RunOptions& o) {
    const LoadedModel m = load(o.model);
    const RunRecord record = run(m.model, hybrid_params(o), o.seed);
    fs::create_directories(o.out);
    write_file(fs::path(o.out) / "result.json", run_result_document(m.model, record, o.seed));
    write_file(fs::path(o.out) / "convergence.csv", convergence_csv(record));

    std::printf("model: %s\n", m.model.name.c_str());
    std::printf("generations: %zu  evaluations: %zu  sa runs: %zu  time: %.2f s\n", record.generations.size(),
                record.total_evaluations, record.sa_runs, record.wall_seconds);
    if (record.best_feasible) {
        std::printf("best feasible weight: %.4f lb\n", record.best_feasible->weight);
        std::printf("areas:");
        for (double a : record.best_feasible->design.areas) std::printf(" %.4f", a);
        std::printf("\n");
    } else {
        std::printf("no feasible design found; best penalized objective %.4f\n", record.best.penalized);
    }
    std::printf("wrote %s and %s\n", (fs::path(o.out) / "result.json").c_str(),
                (fs::path(o.out) / "convergence.csv").c_str());
    return kOk;
}

int cmd_verify(const std::string& model_spec, const std::string& areas_text, double slack, bool json) {
    const LoadedModel m = load(model_spec);
    DesignVector design;
    if (!areas_text.empty()) {
        design = parse_areas(areas_text);
    } else if (m.entry) {
        design = m.entry->reference_areas;
    } else {
        throw UsageError("--areas is required for a model file");
    }
    if (design.size() != m.model.groups.size()) {
        throw UsageError("--areas has " + std::to_string(design.size()) + " values, model has " +
                         std::to_string(m.model.groups.size()) + " groups");
    }
    if (json) {
        std::cout << design_report(m.model, design, slack);
        return kOk;
    }
    const AnalysisResult result = analyze(m.model, design);
    const ConstraintReport report = evaluate_constraints(m.model, result);
    std::printf("model: %s\n", m.model.name.c_str());
    std::printf("weight: %.4f lb\n", result.weight);
    if (m.entry && areas_text.empty()) {
        std::printf("reference weight: %.2f lb (%s), difference %+.4f lb\n", m.entry->reference_weight,
                    m.entry->source_table.c_str(), result.weight - m.entry->reference_weight);
    }
    std::printf("max constraint ratio: %.6f\n", report.max_ratio());
    std::printf("feasible: %s\n", report.feasible ? "yes" : "no");
    std::printf("feasible within %.2f%% slack: %s\n", 100.0 * slack, report.feasible_within(slack) ? "yes" : "no");
    return kOk;
}

int cmd_compare(const RunOptions& o, std::size_t n_seeds) {
    const LoadedModel m = load(o.model);
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < n_seeds; ++i) seeds.push_back(o.seed + i);
    const ComparisonSummary s = compare_plain_ga(m.model, hybrid_params(o), seeds);

    std::string csv = "seed,hybrid_weight,ga_weight,hybrid_evaluations,ga_evaluations,hybrid_reaches_first\n";
    std::printf("%-8s %14s %14s %12s %12s\n", "seed", "H-SAGA [lb]", "GA [lb]", "H evals", "GA evals");
    for (const ComparisonEntry& e : s.entries) {
        std::printf("%-8llu %14.4f %14.4f %12zu %12zu\n", static_cast<unsigned long long>(e.seed), e.hybrid_weight,
                    e.ga_weight, e.hybrid_evaluations, e.ga_evaluations);
        csv += std::to_string(e.seed) + "," + std::to_string(e.hybrid_weight) + "," + std::to_string(e.ga_weight) +
               "," + std::to_string(e.hybrid_evaluations) + "," + std::to_string(e.ga_evaluations) + "," +
               (e.hybrid_reaches_first ? "1" : "0") + "\n";
    }
    std::printf("median H-SAGA %.4f lb, median GA %.4f lb\n", s.median_hybrid, s.median_ga);
    std::printf("H-SAGA reached the GA median first in %zu of %zu seeds\n", s.hybrid_reaches_first_count,
                s.entries.size());
    fs::create_directories(o.out);
    write_file(fs::path(o.out) / "compare.csv", csv);
    return kOk;
}

int cmd_list() {
    std::printf("%-14s %8s %8s %14s  %s\n", "name", "groups", "members", "ref weight", "source");
    for (const BenchmarkEntry& e : builtin_models()) {
        std::printf("%-14s %8zu %8zu %14.2f  %s\n", e.id.c_str(), e.model.groups.size(), e.model.elements.size(),
                    e.reference_weight, e.source_table.c_str());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truss sizing optimization with a hybrid SA/GA"};
    app.require_subcommand(1);

    RunOptions run_opts;
    CLI::App* run_cmd = app.add_subcommand("run", "Optimize a model");
    add_run_options(run_cmd, run_opts);
    run_cmd->add_option("--seed", run_opts.seed, "Random seed");

    std::string verify_model;
    std::string verify_areas;
    double verify_slack = 0.005;
    bool verify_json = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Analyze one design");
    verify_cmd->add_option("--model", verify_model, "Model file or builtin:NAME")->required();
    verify_cmd->add_option("--areas", verify_areas, "Comma-separated areas (default: reference design)");
    verify_cmd->add_option("--slack", verify_slack, "Normalized constraint slack")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--json", verify_json, "Print the full constraint report as JSON");

    RunOptions cmp_opts;
    std::size_t n_seeds = 10;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "H-SAGA against plain GA at equal evaluation budget");
    add_run_options(cmp_cmd, cmp_opts);
    cmp_cmd->add_option("--seed", cmp_opts.seed, "First seed");
    cmp_cmd->add_option("--seeds", n_seeds, "Number of seeds (>= 5)")->check(CLI::Range(5, 100000));
    cmp_opts.seed = 1;

    app.add_subcommand("list", "List built-in models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_opts);
        if (*verify_cmd) return cmd_verify(verify_model, verify_areas, verify_slack, verify_json);
        if (*cmp_cmd) return cmd_compare(cmp_opts, n_seeds);
        return cmd_list();
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "model error: %s\n", e.what());
        return kModelError;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "model error: %s\n", e.what());
        return kModelError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kRuntimeError;
    }
}
