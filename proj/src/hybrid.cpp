#include "trussopt/hybrid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace trussopt {

void HybridParams::check() const {
    if (t_sa < 1) throw std::invalid_argument("t_sa must be >= 1");
    ga.check();
    sa.check();
}

std::optional<std::size_t> RunRecord::evaluations_to_reach(double target) const {
    for (const GenerationRecord& g : generations) {
        if (g.best_feasible_weight && *g.best_feasible_weight <= target) return g.evaluations;
    }
    return std::nullopt;
}

bool RunRecord::operator==(const RunRecord& other) const {
    return generations == other.generations && best == other.best && best_feasible == other.best_feasible &&
           total_evaluations == other.total_evaluations && sa_runs == other.sa_runs;
}

std::vector<double> removal_weights(std::span<const Individual> individuals,
                                    std::optional<std::size_t> excluded) {
    const std::size_t n = individuals.size();
    std::vector<double> w(n, 0.0);
    // F_min for the fitness transform is over the whole population.
    double f_min = std::numeric_limits<double>::infinity();
    for (const Individual& ind : individuals) {
        if (std::isfinite(ind.penalized)) f_min = std::min(f_min, ind.penalized);
    }
    bool any_infinite = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(excluded && *excluded == i) && !std::isfinite(individuals[i].penalized)) any_infinite = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (excluded && *excluded == i) continue;
        const double f = individuals[i].penalized;
        if (any_infinite) {
            w[i] = std::isfinite(f) ? 0.0 : 1.0;
        } else {
            w[i] = 1.0 + f - f_min;
        }
    }
    return w;
}

std::size_t remove_victim_index(const Population& pop, bool protect_best, Rng& rng) {
    std::optional<std::size_t> excluded;
    if (protect_best && pop.individuals.size() > 1) excluded = pop.best_index();
    return roulette_draw(removal_weights(pop.individuals, excluded), rng);
}

namespace {

GenerationRecord summarize(const Population& pop, const Evaluator& evaluator, bool sa_ran) {
    GenerationRecord r;
    r.generation = pop.generation;
    r.best_f = pop.individuals[pop.best_index()].penalized;
    double sum = 0.0;
    std::size_t count = 0;
    for (const Individual& ind : pop.individuals) {
        if (!std::isfinite(ind.penalized)) continue;
        sum += ind.penalized;
        ++count;
    }
    r.mean_f = count ? sum / static_cast<double>(count) : std::numeric_limits<double>::infinity();
    if (evaluator.best_feasible()) r.best_feasible_weight = evaluator.best_feasible()->weight;
    r.evaluations = evaluator.evaluations();
    r.sa_ran = sa_ran;
    return r;
}

}  // namespace

RunRecord run(const TrussModel& model, const HybridParams& params, std::uint64_t seed) {
    params.check();
    const auto started = std::chrono::steady_clock::now();

    GaParams ga = params.ga;
    ga.seed = seed;
    Evaluator evaluator(model, params.penalty.value_or(PenaltyParams::defaults_for(model)));
    Population pop = init_population(evaluator, ga);

    RunRecord record;
    double best_seen = pop.individuals[pop.best_index()].penalized;
    std::size_t stale = 0;

    const std::size_t per_generation = ga.population_size - std::min(ga.elite_count, ga.population_size);
    for (std::size_t g = 1; g <= ga.max_generations; ++g) {
        if (params.max_evaluations && evaluator.evaluations() + per_generation > *params.max_evaluations) break;
        step_generation(pop, evaluator, ga);

        bool sa_ran = false;
        SaParams sa_params = params.sa;
        if (params.max_evaluations) {
            const std::size_t left = *params.max_evaluations - evaluator.evaluations();
            const std::size_t own = sa_params.max_iterations.value_or(200 * model.groups.size());
            sa_params.max_iterations = std::min(own, left);
        }
        if (params.t_sa != HybridParams::kNever && g % params.t_sa == 0 && sa_params.max_iterations != 0u) {
            const std::vector<std::size_t> order = pop.ranking();
            std::vector<DesignVector> top10;
            for (std::size_t k = 0; k < 10; ++k) top10.push_back(pop.individuals[order[k]].design);
            SaResult sa = sa_run(pop.individuals[order[0]], top10, evaluator, sa_params, g, pop.rng);
            const std::size_t victim = remove_victim_index(pop, params.protect_best, pop.rng);
            pop.individuals[victim] = std::move(sa.best);
            sa_ran = true;
            ++record.sa_runs;
        }

        record.generations.push_back(summarize(pop, evaluator, sa_ran));

        if (params.stagnation_generations) {
            const double best_now = record.generations.back().best_f;
            if (best_now < best_seen - params.stagnation_tolerance) {
                best_seen = best_now;
                stale = 0;
            } else if (++stale >= *params.stagnation_generations) {
                break;
            }
        }
    }

    record.best = pop.individuals[pop.best_index()];
    record.best_feasible = evaluator.best_feasible();
    record.total_evaluations = evaluator.evaluations();
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty list");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

ComparisonSummary compare_plain_ga(const TrussModel& model, const HybridParams& params,
                                   std::span<const std::uint64_t> seeds) {
    if (seeds.size() < 5) throw std::invalid_argument("compare_plain_ga needs at least 5 seeds");
    constexpr double kInf = std::numeric_limits<double>::infinity();

    std::vector<RunRecord> hybrid_runs;
    std::vector<RunRecord> ga_runs;
    ComparisonSummary summary;
    for (std::uint64_t seed : seeds) {
        RunRecord h = run(model, params, seed);
        HybridParams plain = params;
        plain.t_sa = HybridParams::kNever;
        plain.max_evaluations = h.total_evaluations;
        plain.ga.max_generations = std::numeric_limits<std::size_t>::max();
        plain.stagnation_generations.reset();
        RunRecord p = run(model, plain, seed);

        ComparisonEntry e;
        e.seed = seed;
        e.hybrid_weight = h.best_feasible ? h.best_feasible->weight : kInf;
        e.ga_weight = p.best_feasible ? p.best_feasible->weight : kInf;
        e.hybrid_evaluations = h.total_evaluations;
        e.ga_evaluations = p.total_evaluations;
        summary.entries.push_back(e);
        hybrid_runs.push_back(std::move(h));
        ga_runs.push_back(std::move(p));
    }

    std::vector<double> hw;
    std::vector<double> gw;
    for (const ComparisonEntry& e : summary.entries) {
        hw.push_back(e.hybrid_weight);
        gw.push_back(e.ga_weight);
    }
    summary.median_hybrid = median(hw);
    summary.median_ga = median(gw);

    for (std::size_t i = 0; i < summary.entries.size(); ++i) {
        ComparisonEntry& e = summary.entries[i];
        e.hybrid_evaluations_to_target = hybrid_runs[i].evaluations_to_reach(summary.median_ga);
        e.ga_evaluations_to_target = ga_runs[i].evaluations_to_reach(summary.median_ga);
        const std::size_t ga_count = e.ga_evaluations_to_target.value_or(e.ga_evaluations);
        e.hybrid_reaches_first = e.hybrid_evaluations_to_target && *e.hybrid_evaluations_to_target <= ga_count;
        if (e.hybrid_reaches_first) ++summary.hybrid_reaches_first_count;
    }
    return summary;
}

}  // namespace trussopt
