#include <doctest.h>

#include <cmath>
#include <vector>

#include "trussopt/benchmarks.hpp"
#include "trussopt/hybrid.hpp"

using namespace trussopt;

namespace {

Individual with_f(double f) {
    Individual ind;
    ind.penalized = f;
    return ind;
}

HybridParams quick(std::size_t generations, std::size_t t_sa) {
    HybridParams p;
    p.ga.max_generations = generations;
    p.t_sa = t_sa;
    return p;
}

}  // namespace

TEST_CASE("removal weights") {
    std::vector<Individual> equal(6, with_f(4.0));
    const std::vector<double> w = removal_weights(equal, std::size_t{0});
    CHECK(w[0] == 0.0);
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] == 1.0);

    std::vector<Individual> mixed{with_f(10.0), with_f(12.5), with_f(11.0), with_f(30.0)};
    const std::vector<double> m = removal_weights(mixed, std::nullopt);
    CHECK(m == std::vector<double>{1.0, 3.5, 2.0, 21.0});

    std::vector<Individual> with_inf{with_f(10.0), with_f(INFINITY), with_f(11.0)};
    CHECK(removal_weights(with_inf, std::size_t{0}) == std::vector<double>{0.0, 1.0, 0.0});
}

TEST_CASE("victim frequencies match inverse fitness") {
    Population pop;
    for (double f : {5.0, 5.5, 6.0, 7.0, 9.0, 12.0, 5.1, 8.0, 15.0, 6.6}) pop.individuals.push_back(with_f(f));
    const std::vector<double> w = removal_weights(pop.individuals, pop.best_index());
    double total = 0.0;
    for (double x : w) total += x;

    Rng rng(77);
    const std::size_t draws = 100000;
    std::vector<std::size_t> counts(w.size(), 0);
    for (std::size_t k = 0; k < draws; ++k) ++counts[remove_victim_index(pop, true, rng)];
    CHECK(counts[0] == 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double p = w[i] / total;
        const double sigma = std::sqrt(draws * p * (1.0 - p));
        CAPTURE(i);
        CHECK(std::abs(static_cast<double>(counts[i]) - draws * p) <= 3.0 * sigma + 1e-12);
    }

    SUBCASE("equal objectives: uniform over everyone but the best") {
        Population flat;
        flat.individuals.assign(5, with_f(3.0));
        std::vector<std::size_t> c(5, 0);
        for (int k = 0; k < 40000; ++k) ++c[remove_victim_index(flat, true, rng)];
        CHECK(c[0] == 0);
        for (std::size_t i = 1; i < 5; ++i) CHECK(std::abs(static_cast<double>(c[i]) - 10000.0) <= 3.0 * std::sqrt(40000 * 0.25 * 0.75));
    }
    SUBCASE("one far worse individual is nearly always removed") {
        Population skew;
        skew.individuals = {with_f(1.0), with_f(1.1), with_f(1.2), with_f(1e6), with_f(1.05)};
        int hits = 0;
        for (int k = 0; k < 1000; ++k) hits += remove_victim_index(skew, true, rng) == 3;
        CHECK(hits >= 999);
    }
}

TEST_CASE("hybrid run") {
    const TrussModel& m = builtin("10bar-case1").model;

    SUBCASE("determinism") {
        const RunRecord a = run(m, quick(60, 20), 9);
        const RunRecord b = run(m, quick(60, 20), 9);
        CHECK(a == b);
        CHECK(a.generations.size() == 60);
        CHECK(a.sa_runs == 3);
        CHECK_FALSE(a == run(m, quick(60, 20), 10));
    }
    SUBCASE("SA that never triggers is plain GA") {
        const RunRecord late = run(m, quick(40, 41), 3);
        const RunRecord never = run(m, quick(40, HybridParams::kNever), 3);
        CHECK(late == never);
        CHECK(never.sa_runs == 0);
        CHECK(never.total_evaluations == 50 + 40 * 49);
    }
    SUBCASE("best feasible trace is non-increasing") {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const RunRecord r = run(m, quick(80, 20), seed);
            std::optional<double> last;
            std::size_t evals = 0;
            for (const GenerationRecord& g : r.generations) {
                CHECK(g.evaluations >= evals);
                evals = g.evaluations;
                if (last) {
                    REQUIRE(g.best_feasible_weight.has_value());
                    CHECK(*g.best_feasible_weight <= *last);
                }
                if (g.best_feasible_weight) last = g.best_feasible_weight;
            }
            CHECK(evals == r.total_evaluations);
            if (r.best_feasible) {
                CHECK(r.best_feasible->feasible());
                CHECK(r.best_feasible->weight == *r.generations.back().best_feasible_weight);
            }
        }
    }
    SUBCASE("evaluation cap") {
        HybridParams p = quick(500, 20);
        p.max_evaluations = 3000;
        const RunRecord r = run(m, p, 4);
        CHECK(r.total_evaluations <= 3000);
        CHECK(r.generations.size() < 500);
    }
    SUBCASE("evaluations to reach a target") {
        const RunRecord r = run(m, quick(50, 20), 6);
        REQUIRE(r.best_feasible);
        const std::optional<std::size_t> at = r.evaluations_to_reach(r.best_feasible->weight);
        REQUIRE(at);
        CHECK(*at <= r.total_evaluations);
        CHECK_FALSE(r.evaluations_to_reach(1.0));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(run(m, quick(10, 0), 1), std::invalid_argument);
    }
}

TEST_CASE("paired comparison") {
    const TrussModel& m = builtin("10bar-case1").model;
    const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};

    const ComparisonSummary s = compare_plain_ga(m, quick(40, 20), seeds);
    REQUIRE(s.entries.size() == seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        CHECK(s.entries[i].seed == seeds[i]);
        CHECK(s.entries[i].ga_evaluations <= s.entries[i].hybrid_evaluations);
    }
    CHECK(s.hybrid_reaches_first_count <= seeds.size());

    const ComparisonSummary same = compare_plain_ga(m, quick(30, HybridParams::kNever), seeds);
    for (const ComparisonEntry& e : same.entries) {
        CHECK(e.hybrid_weight == e.ga_weight);
        CHECK(e.hybrid_evaluations == e.ga_evaluations);
    }
    CHECK(same.median_hybrid == same.median_ga);

    const std::vector<std::uint64_t> few{1, 2, 3};
    CHECK_THROWS_AS(compare_plain_ga(m, quick(10, 20), few), std::invalid_argument);

    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
}
