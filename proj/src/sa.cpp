#include "trussopt/sa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trussopt {

void SaParams::check() const {
    if (!(cooling_alpha > 0.0 && cooling_alpha < 1.0)) throw std::invalid_argument("cooling_alpha not in (0,1)");
    if (!(radius_gamma > 1.0)) throw std::invalid_argument("radius_gamma must exceed 1");
    if (!(initial_temperature_fraction > 0.0)) throw std::invalid_argument("initial_temperature_fraction must be > 0");
    for (const auto& count : {stagnation_window, radius_beta, max_iterations}) {
        if (count && *count < 1) throw std::invalid_argument("SA iteration counts must be >= 1");
    }
}

SaSettings resolve(const SaParams& params, std::size_t n_variables, double f_start) {
    params.check();
    const std::size_t n = std::max<std::size_t>(n_variables, 1);
    const double scale = std::abs(f_start);
    SaSettings s;
    s.t0 = params.initial_temperature_fraction * scale;
    if (!(s.t0 > 0.0) || !std::isfinite(s.t0)) s.t0 = params.initial_temperature_fraction;
    s.cooling_alpha = params.cooling_alpha;
    s.t_min = params.t_min.value_or(1e-4 * s.t0);
    s.epsilon = params.epsilon.value_or(std::isfinite(scale) ? 1e-6 * scale : 0.0);
    s.stagnation_window = params.stagnation_window.value_or(50 * n);
    s.radius_beta = params.radius_beta.value_or(2 * n);
    s.radius_gamma = params.radius_gamma;
    s.max_iterations = params.max_iterations.value_or(200 * n);
    s.cooling_interval = n;
    return s;
}

Bounds Bounds::of(const TrussModel& model) { return {lower_bounds(model).areas, upper_bounds(model).areas}; }

std::vector<double> initial_radii(std::span<const DesignVector> top10, const Bounds& bounds) {
    if (top10.size() != 10) throw DimensionMismatch("initial_radii needs exactly 10 designs");
    const std::size_t n = bounds.size();
    for (const DesignVector& d : top10) {
        if (d.size() != n) throw DimensionMismatch("design size does not match bounds");
    }
    std::vector<double> radii(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = top10[0][i];
        double hi = lo;
        for (const DesignVector& d : top10) {
            lo = std::min(lo, d[i]);
            hi = std::max(hi, d[i]);
        }
        radii[i] = hi - lo;
        if (radii[i] == 0.0) radii[i] = 0.01 * (bounds.upper[i] - bounds.lower[i]);
    }
    return radii;
}

std::vector<double> initial_radii(std::span<const DesignVector> top10, const TrussModel& model) {
    return initial_radii(top10, Bounds::of(model));
}

double acceptance_probability(double f_current, double f_candidate, double temperature) {
    if (!(temperature > 0.0)) throw NonPositiveTemperature("temperature must be positive");
    if (f_candidate <= f_current) return 1.0;
    return std::exp((f_current - f_candidate) / temperature);
}

DesignVector sample_neighbor(const DesignVector& center, std::span<const double> radii, const Bounds& bounds,
                             Rng& rng) {
    if (center.size() != radii.size() || center.size() != bounds.size()) {
        throw DimensionMismatch("center, radii and bounds differ in size");
    }
    DesignVector out = center;
    for (std::size_t i = 0; i < center.size(); ++i) {
        const double x = center[i] + radii[i] * (2.0 * uniform01(rng) - 1.0);
        out.areas[i] = std::clamp(x, bounds.lower[i], bounds.upper[i]);
    }
    return out;
}

const char* to_string(SaStop stop) {
    switch (stop) {
        case SaStop::Temperature: return "temperature";
        case SaStop::Stagnation: return "stagnation";
        case SaStop::MaxIterations: return "max_iterations";
        case SaStop::NonFiniteStart: return "non_finite_start";
    }
    return "unknown";
}

namespace {

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

AnnealOutcome anneal(const DesignVector& start, double start_f, std::vector<double> radii, const Bounds& bounds,
                     const SaSettings& settings, const Objective& objective, Rng& rng) {
    AnnealOutcome out;
    out.best = start;
    out.best_f = start_f;
    double temperature = settings.t0;
    out.trace.push_back({0, temperature, norm(radii), start_f});
    if (!std::isfinite(start_f)) {
        out.stop = SaStop::NonFiniteStart;
        out.final_radii = std::move(radii);
        return out;
    }

    DesignVector center = start;
    double f_center = start_f;
    std::size_t since_improvement = 0;
    std::vector<double> best_history{start_f};
    out.stop = SaStop::MaxIterations;

    for (std::size_t it = 1; it <= settings.max_iterations; ++it) {
        DesignVector candidate = sample_neighbor(center, radii, bounds, rng);
        const double f_candidate = objective(candidate);
        const double u = uniform01(rng);
        const bool improved = f_candidate < out.best_f;
        // An improvement on the best is also an improvement on the center,
        // so it is always accepted.
        if (improved) out.best = candidate;
        if (u < acceptance_probability(f_center, f_candidate, temperature)) {
            f_center = f_candidate;
            center = std::move(candidate);
        }
        if (improved) {
            out.best_f = f_candidate;
            since_improvement = 0;
        } else if (++since_improvement >= settings.radius_beta) {
            for (double& r : radii) r /= settings.radius_gamma;
            ++out.contractions;
            since_improvement = 0;
        }
        if (it % settings.cooling_interval == 0) temperature *= settings.cooling_alpha;

        out.iterations = it;
        best_history.push_back(out.best_f);
        out.trace.push_back({it, temperature, norm(radii), out.best_f});

        if (temperature < settings.t_min) {
            out.stop = SaStop::Temperature;
            break;
        }
        const std::size_t w = settings.stagnation_window;
        if (it >= w && (best_history[it - w] - out.best_f) / static_cast<double>(w) < settings.epsilon) {
            out.stop = SaStop::Stagnation;
            break;
        }
    }
    out.final_radii = std::move(radii);
    return out;
}

SaResult sa_run(const Individual& start, std::span<const DesignVector> top10, Evaluator& evaluator,
                const SaParams& params, std::size_t frozen_iteration, Rng& rng) {
    const TrussModel& model = evaluator.model();
    const Bounds bounds = Bounds::of(model);

    Individual best = start;
    evaluator.rescore(best, frozen_iteration);
    const SaSettings settings = resolve(params, model.groups.size(), best.penalized);

    auto objective = [&](const DesignVector& d) {
        Individual ind = evaluator.evaluate(d, frozen_iteration);
        if (ind.penalized < best.penalized) best = ind;
        return ind.penalized;
    };
    const DesignVector origin = best.design;
    AnnealOutcome outcome =
        anneal(origin, best.penalized, initial_radii(top10, bounds), bounds, settings, objective, rng);
    return {std::move(best), outcome.iterations, outcome.contractions, outcome.stop, std::move(outcome.trace)};
}

}  // namespace trussopt
