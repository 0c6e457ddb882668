#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "trussopt/benchmarks.hpp"
#include "trussopt/constraints.hpp"

using namespace trussopt;

TEST_CASE("violations are normalized exceedances") {
    TrussModel bar = fixtures::single_bar(1e4, 1.0, 100.0, 30.0);
    bar.groups[0].stress_tension_limit = 25.0;
    bar.groups[0].stress_compression_limit = 25.0;

    const ConstraintReport over = evaluate_constraints(bar, analyze(bar, DesignVector({1.0})));
    CHECK(over.total == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_FALSE(over.feasible);
    CHECK(over.max_ratio() == doctest::Approx(1.2).epsilon(1e-12));

    bar.load_cases[0].point_loads[0].force = {-30.0, 0.0, 0.0};
    CHECK(evaluate_constraints(bar, analyze(bar, DesignVector({1.0}))).total == doctest::Approx(0.2));

    bar.load_cases[0].point_loads[0].force = {20.0, 0.0, 0.0};
    const ConstraintReport inside = evaluate_constraints(bar, analyze(bar, DesignVector({1.0})));
    CHECK(inside.total == 0.0);
    CHECK(inside.feasible);
    for (double s : inside.violations) CHECK(s == 0.0);
}

TEST_CASE("displacement and buckling constraints") {
    TrussModel bar = fixtures::single_bar(1e4, 1.0, 100.0, -10.0);
    bar.displacement_limits = {{{1}, AxisSet{true, false, false}, 0.05}};
    bar.groups[0].buckling = Buckling{4.0};
    // u = -0.1 in against 0.05; sigma = -10 against the Euler bound -4.
    const ConstraintReport r = evaluate_constraints(bar, analyze(bar, DesignVector({1.0})));
    CHECK(r.total == doctest::Approx(1.0 + 1.5).epsilon(1e-12));
    bool saw_buckling = false;
    for (const ConstraintInstance& c : r.instances) {
        if (c.kind == ConstraintKind::Buckling) {
            saw_buckling = true;
            CHECK(c.limit == doctest::Approx(-4.0));
            CHECK(c.ratio == doctest::Approx(2.5));
        }
    }
    CHECK(saw_buckling);
    CHECK(violation_total(bar, analyze(bar, DesignVector({1.0}))) == doctest::Approx(r.total).epsilon(1e-15));
}

TEST_CASE("10-bar published design is feasible within rounding slack") {
    const BenchmarkEntry& e = builtin("10bar-case1");
    const AnalysisResult r = analyze(e.model, e.reference_areas);
    const ConstraintReport report = evaluate_constraints(e.model, r);
    CHECK(report.feasible_within(0.005));
    double max_v = 0.0;
    double max_s = 0.0;
    for (const Vec3& u : r.cases[0].displacements) max_v = std::max(max_v, std::abs(u[1]));
    for (double s : r.cases[0].stresses) max_s = std::max(max_s, std::abs(s));
    CHECK(max_v <= 2.0 * 1.005);
    CHECK(max_s <= 25.0 * 1.005);
}

TEST_CASE("penalty examples") {
    CHECK(penalty(0.0, {3.0, 2.0}, 7) == 0.0);
    CHECK(penalty(0.5, {1.0, 1.0}, 10) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(penalty(0.5, {2.0, 2.0}, 3) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(penalized_objective(5058.66, 0.0, {1.0, 1.0}, 50) == 5058.66);
    CHECK(penalized_objective(100.0, 0.5, {1.0, 1.0}, 10) == doctest::Approx(105.0));
    CHECK(penalized_objective(100.0, 0.0, {1.0, 1.0}, 1) < penalized_objective(100.0, 1e-9, {1.0, 1.0}, 1));
}

TEST_CASE("penalty laws") {
    const PenaltyParams params{2.5, 1.0};
    for (double s : {0.0, 1e-12, 0.01, 0.3, 4.0}) {
        CAPTURE(s);
        CHECK((penalty(s, params, 5) == 0.0) == (s == 0.0));
        double last = 0.0;
        for (std::size_t it = 1; it <= 100; ++it) {
            const double p = penalty(s, params, it);
            CHECK(p >= last);
            if (s > 0.0 && it > 1) CHECK(p > last);
            last = p;
        }
    }
    const ConstraintReport feasible;
    CHECK(penalty(feasible, params, 99) == 0.0);
}

TEST_CASE("default penalty scale is the heaviest design") {
    const TrussModel& m = builtin("25bar").model;
    const PenaltyParams p = PenaltyParams::defaults_for(m);
    CHECK(p.alpha == doctest::Approx(structure_weight(m, upper_bounds(m))));
    CHECK(p.beta_exp == 1.0);
}
