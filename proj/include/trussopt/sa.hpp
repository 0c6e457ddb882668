#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "trussopt/evaluation.hpp"

namespace trussopt {

/// Unset optionals are filled from the problem size and starting objective
/// when a run starts (see SaParams::resolve).
struct SaParams {
    double initial_temperature_fraction = 0.1;
    double cooling_alpha = 0.95;
    std::optional<double> t_min;                     // 1e-4 * T0
    std::optional<double> epsilon;                   // 1e-6 * F(start)
    std::optional<std::size_t> stagnation_window;    // 50 * n
    std::optional<std::size_t> radius_beta;          // 2 * n
    double radius_gamma = 2.0;
    std::optional<std::size_t> max_iterations;       // 200 * n

    void check() const;
};

struct SaSettings {
    double t0 = 0.0;
    double cooling_alpha = 0.0;
    double t_min = 0.0;
    double epsilon = 0.0;
    std::size_t stagnation_window = 0;
    std::size_t radius_beta = 0;
    double radius_gamma = 0.0;
    std::size_t max_iterations = 0;
    std::size_t cooling_interval = 0;  // iterations per temperature step (= n)
};

SaSettings resolve(const SaParams& params, std::size_t n_variables, double f_start);

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    static Bounds of(const TrussModel& model);
    std::size_t size() const { return lower.size(); }
};

/// Per-variable max - min over exactly 10 designs; zero spreads are floored
/// to 1% of the bound range.
std::vector<double> initial_radii(std::span<const DesignVector> top10, const Bounds& bounds);
std::vector<double> initial_radii(std::span<const DesignVector> top10, const TrussModel& model);

/// 1 when the candidate is no worse, else exp((f_current - f_candidate) / T).
double acceptance_probability(double f_current, double f_candidate, double temperature);

/// Uniform in [c - r, c + r] per variable, clamped to bounds.
DesignVector sample_neighbor(const DesignVector& center, std::span<const double> radii, const Bounds& bounds,
                             Rng& rng);

struct SaTracePoint {
    std::size_t iteration = 0;
    double temperature = 0.0;
    double radii_norm = 0.0;
    double best_f = 0.0;
    bool operator==(const SaTracePoint&) const = default;
};

enum class SaStop { Temperature, Stagnation, MaxIterations, NonFiniteStart };
const char* to_string(SaStop stop);

struct AnnealOutcome {
    DesignVector best;
    double best_f = 0.0;
    std::size_t iterations = 0;
    std::size_t contractions = 0;
    SaStop stop = SaStop::MaxIterations;
    std::vector<double> final_radii;
    std::vector<SaTracePoint> trace;
};

using Objective = std::function<double(const DesignVector&)>;

/// Annealing with dynamic neighborhood search over an arbitrary objective.
AnnealOutcome anneal(const DesignVector& start, double start_f, std::vector<double> radii, const Bounds& bounds,
                     const SaSettings& settings, const Objective& objective, Rng& rng);

struct SaResult {
    Individual best;
    std::size_t iterations = 0;
    std::size_t contractions = 0;
    SaStop stop = SaStop::MaxIterations;
    std::vector<SaTracePoint> trace;
};

/// SA from `start` with radii from `top10`; every candidate is penalized at
/// `frozen_iteration`.
SaResult sa_run(const Individual& start, std::span<const DesignVector> top10, Evaluator& evaluator,
                const SaParams& params, std::size_t frozen_iteration, Rng& rng);

}  // namespace trussopt
