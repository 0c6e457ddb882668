#include "trussopt/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace trussopt {

double GaParams::mutation_rate_for(std::size_t n_variables) const {
    if (mutation_rate) return *mutation_rate;
    return n_variables == 0 ? 0.0 : 1.0 / static_cast<double>(n_variables);
}

void GaParams::check() const {
    if (population_size < 10) throw std::invalid_argument("population_size must be at least 10");
    if (elite_count > population_size) throw std::invalid_argument("elite_count exceeds population_size");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw std::invalid_argument("crossover_rate not in [0,1]");
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation_rate not in [0,1]");
    }
    if (!(mutation_sigma_fraction >= 0.0)) throw std::invalid_argument("mutation_sigma_fraction must be >= 0");
}

std::size_t Population::best_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < individuals.size(); ++i) {
        if (individuals[i].penalized < individuals[best].penalized) best = i;
    }
    return best;
}

std::vector<std::size_t> Population::ranking() const {
    std::vector<std::size_t> order(individuals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return individuals[a].penalized < individuals[b].penalized;
    });
    return order;
}

Population init_population(Evaluator& evaluator, const GaParams& params) {
    params.check();
    const TrussModel& model = evaluator.model();
    Population pop;
    pop.rng.seed(params.seed);
    std::vector<DesignVector> designs(params.population_size);
    for (DesignVector& d : designs) {
        d.areas.resize(model.groups.size());
        for (std::size_t g = 0; g < model.groups.size(); ++g) {
            const MemberGroup& group = model.groups[g];
            d.areas[g] = group.area_min + (group.area_max - group.area_min) * uniform01(pop.rng);
        }
    }
    pop.individuals.reserve(designs.size());
    for (DesignVector& d : designs) pop.individuals.push_back(evaluator.evaluate(std::move(d), 1));
    return pop;
}

std::vector<double> fitness_values(std::span<const Individual> individuals) {
    double f_min = std::numeric_limits<double>::infinity();
    for (const Individual& ind : individuals) f_min = std::min(f_min, ind.penalized);
    std::vector<double> fit(individuals.size(), 1.0);
    if (!std::isfinite(f_min)) return fit;
    for (std::size_t i = 0; i < individuals.size(); ++i) {
        const double f = individuals[i].penalized;
        fit[i] = std::isfinite(f) ? 1.0 / (1.0 + f - f_min) : 0.0;
    }
    return fit;
}

std::vector<double> selection_probabilities(std::span<const Individual> individuals) {
    std::vector<double> p = fitness_values(individuals);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p) v /= sum;
    return p;
}

std::size_t roulette_draw(std::span<const double> weights, Rng& rng) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double target = uniform01(rng) * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        cumulative += weights[i];
        last_positive = i;
        if (target < cumulative) return i;
    }
    return last_positive;  // rounding at the top end
}

std::vector<std::size_t> select_mating_pool(std::span<const Individual> individuals, std::size_t pool_size,
                                            Rng& rng) {
    const std::vector<double> fit = fitness_values(individuals);
    std::vector<std::size_t> pool(pool_size);
    for (std::size_t& p : pool) p = roulette_draw(fit, rng);
    return pool;
}

std::pair<DesignVector, DesignVector> crossover(const TrussModel& model, const DesignVector& parent_a,
                                                const DesignVector& parent_b, double crossover_rate, Rng& rng) {
    if (parent_a.size() != parent_b.size()) throw DimensionMismatch("crossover parents differ in size");
    std::pair<DesignVector, DesignVector> kids{parent_a, parent_b};
    if (!(uniform01(rng) < crossover_rate)) return kids;
    for (std::size_t i = 0; i < parent_a.size(); ++i) {
        const double a = parent_a[i];
        const double b = parent_b[i];
        const double ext = 0.5 * std::abs(a - b);
        const double lo = std::min(a, b) - ext;
        const double hi = std::max(a, b) + ext;
        kids.first.areas[i] = lo + (hi - lo) * uniform01(rng);
        kids.second.areas[i] = lo + (hi - lo) * uniform01(rng);
    }
    kids.first = clamp_to_bounds(model, std::move(kids.first));
    kids.second = clamp_to_bounds(model, std::move(kids.second));
    return kids;
}

DesignVector mutate(const TrussModel& model, DesignVector design, double mutation_rate, double sigma_fraction,
                    Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < design.size(); ++i) {
        if (!(uniform01(rng) < mutation_rate)) continue;
        const MemberGroup& g = model.groups[i];
        design.areas[i] += sigma_fraction * (g.area_max - g.area_min) * normal(rng);
    }
    return clamp_to_bounds(model, std::move(design));
}

void step_generation(Population& pop, Evaluator& evaluator, const GaParams& params) {
    const TrussModel& model = evaluator.model();
    const std::size_t n = pop.individuals.size();
    const std::size_t iteration = pop.generation + 1;
    const double mutation_rate = params.mutation_rate_for(model.groups.size());

    std::vector<Individual> next;
    next.reserve(n);
    const std::vector<std::size_t> order = pop.ranking();
    for (std::size_t e = 0; e < params.elite_count && e < n; ++e) {
        next.push_back(pop.individuals[order[e]]);
        evaluator.rescore(next.back(), iteration);
    }

    // All random draws happen before any evaluation so the generator stream
    // does not depend on how offspring are evaluated.
    const std::vector<std::size_t> pool = select_mating_pool(pop.individuals, n, pop.rng);
    std::vector<DesignVector> offspring;
    offspring.reserve(n - next.size());
    for (std::size_t k = 0; offspring.size() < n - next.size(); k += 2) {
        const DesignVector& a = pop.individuals[pool[k % n]].design;
        const DesignVector& b = pop.individuals[pool[(k + 1) % n]].design;
        auto [c1, c2] = crossover(model, a, b, params.crossover_rate, pop.rng);
        offspring.push_back(mutate(model, std::move(c1), mutation_rate, params.mutation_sigma_fraction, pop.rng));
        if (offspring.size() < n - next.size()) {
            offspring.push_back(mutate(model, std::move(c2), mutation_rate, params.mutation_sigma_fraction, pop.rng));
        }
    }
    for (DesignVector& d : offspring) next.push_back(evaluator.evaluate(std::move(d), iteration));

    pop.individuals = std::move(next);
    pop.generation = iteration;
}

}  // namespace trussopt
