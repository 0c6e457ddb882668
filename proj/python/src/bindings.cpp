#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trussopt/benchmarks.hpp"
#include "trussopt/hybrid.hpp"
#include "trussopt/model_io.hpp"

namespace py = pybind11;
using namespace trussopt;

namespace {

DesignVector to_design(const TrussModel& model, const std::vector<double>& areas) {
    if (areas.size() != model.groups.size()) {
        throw DimensionMismatch("expected " + std::to_string(model.groups.size()) + " areas, got " +
                                std::to_string(areas.size()));
    }
    return DesignVector(areas);
}

HybridParams make_params(std::size_t generations, std::size_t population, std::optional<std::size_t> t_sa,
                         std::optional<std::size_t> max_evaluations) {
    HybridParams p;
    p.ga.max_generations = generations;
    p.ga.population_size = population;
    p.t_sa = t_sa.value_or(HybridParams::kNever);
    p.max_evaluations = max_evaluations;
    return p;
}

py::dict analysis_dict(const AnalysisResult& r) {
    py::list cases;
    for (const LoadCaseResult& c : r.cases) {
        py::dict d;
        d["displacements"] = c.displacements;
        d["stresses"] = c.stresses;
        cases.append(d);
    }
    py::dict out;
    out["weight"] = r.weight;
    out["cases"] = cases;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truss sizing optimization: FEM analysis, GA, SA and the hybrid driver";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SingularStructure>(m, "SingularStructure", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

    py::class_<TrussModel>(m, "TrussModel")
        .def_readonly("name", &TrussModel::name)
        .def_property_readonly("num_variables", &TrussModel::num_variables)
        .def_property_readonly("num_nodes", [](const TrussModel& t) { return t.nodes.size(); })
        .def_property_readonly("num_elements", [](const TrussModel& t) { return t.elements.size(); })
        .def_property_readonly("num_load_cases", [](const TrussModel& t) { return t.load_cases.size(); })
        .def_property_readonly("lower_bounds", [](const TrussModel& t) { return lower_bounds(t).areas; })
        .def_property_readonly("upper_bounds", [](const TrussModel& t) { return upper_bounds(t).areas; })
        .def("to_json", &serialize_model)
        .def_static("from_json", [](const std::string& text) { return parse_model(text); }, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_model_file(path); }, py::arg("path"))
        .def("__eq__", [](const TrussModel& a, const TrussModel& b) { return a == b; })
        .def("__repr__", [](const TrussModel& t) {
            return "<TrussModel " + t.name + ": " + std::to_string(t.elements.size()) + " members, " +
                   std::to_string(t.groups.size()) + " groups>";
        });

    py::class_<BenchmarkEntry>(m, "Benchmark")
        .def_readonly("id", &BenchmarkEntry::id)
        .def_readonly("model", &BenchmarkEntry::model)
        .def_property_readonly("reference_areas", [](const BenchmarkEntry& e) { return e.reference_areas.areas; })
        .def_readonly("reference_weight", &BenchmarkEntry::reference_weight)
        .def_readonly("source_table", &BenchmarkEntry::source_table)
        .def_readonly("geometry_provenance", &BenchmarkEntry::geometry_provenance);

    m.def("builtin_ids", [] {
        std::vector<std::string> ids;
        for (const BenchmarkEntry& e : builtin_models()) ids.push_back(e.id);
        return ids;
    });
    m.def("builtin", [](const std::string& id) { return builtin(id); }, py::arg("id"));

    m.def("structure_weight",
          [](const TrussModel& model, const std::vector<double>& areas) {
              return structure_weight(model, to_design(model, areas));
          },
          py::arg("model"), py::arg("areas"));
    m.def("analyze",
          [](const TrussModel& model, const std::vector<double>& areas) {
              return analysis_dict(analyze(model, to_design(model, areas)));
          },
          py::arg("model"), py::arg("areas"));
    m.def("design_report_json",
          [](const TrussModel& model, const std::vector<double>& areas, double slack) {
              return design_report(model, to_design(model, areas), slack);
          },
          py::arg("model"), py::arg("areas"), py::arg("slack") = 0.0);
    m.def("acceptance_probability", &acceptance_probability, py::arg("f_current"), py::arg("f_candidate"),
          py::arg("temperature"));
    m.def("penalty", py::overload_cast<double, const PenaltyParams&, std::size_t>(&penalty), py::arg("violation"),
          py::arg("params"), py::arg("iteration"));

    py::class_<PenaltyParams>(m, "PenaltyParams")
        .def(py::init([](double alpha, double beta_exp) { return PenaltyParams{alpha, beta_exp}; }),
             py::arg("alpha") = 1.0, py::arg("beta_exp") = 1.0)
        .def_readwrite("alpha", &PenaltyParams::alpha)
        .def_readwrite("beta_exp", &PenaltyParams::beta_exp)
        .def_static("defaults_for", &PenaltyParams::defaults_for);

    py::class_<GenerationRecord>(m, "GenerationRecord")
        .def_readonly("generation", &GenerationRecord::generation)
        .def_readonly("best_f", &GenerationRecord::best_f)
        .def_readonly("mean_f", &GenerationRecord::mean_f)
        .def_readonly("best_feasible_weight", &GenerationRecord::best_feasible_weight)
        .def_readonly("evaluations", &GenerationRecord::evaluations)
        .def_readonly("sa_ran", &GenerationRecord::sa_ran);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("generations", &RunRecord::generations)
        .def_readonly("total_evaluations", &RunRecord::total_evaluations)
        .def_readonly("sa_runs", &RunRecord::sa_runs)
        .def_readonly("wall_seconds", &RunRecord::wall_seconds)
        .def_property_readonly("best_feasible_weight",
                               [](const RunRecord& r) -> std::optional<double> {
                                   if (r.best_feasible) return r.best_feasible->weight;
                                   return std::nullopt;
                               })
        .def_property_readonly("best_feasible_areas",
                               [](const RunRecord& r) -> std::optional<std::vector<double>> {
                                   if (r.best_feasible) return r.best_feasible->design.areas;
                                   return std::nullopt;
                               })
        .def_property_readonly("best_penalized", [](const RunRecord& r) { return r.best.penalized; })
        .def("evaluations_to_reach", &RunRecord::evaluations_to_reach, py::arg("target"))
        .def("convergence_csv", [](const RunRecord& r) { return convergence_csv(r); })
        .def("__eq__", [](const RunRecord& a, const RunRecord& b) { return a == b; });

    m.def("run",
          [](const TrussModel& model, std::uint64_t seed, std::size_t generations, std::size_t population,
             std::optional<std::size_t> t_sa, std::optional<std::size_t> max_evaluations) {
              const HybridParams p = make_params(generations, population, t_sa, max_evaluations);
              py::gil_scoped_release release;
              return run(model, p, seed);
          },
          py::arg("model"), py::arg("seed") = 0, py::arg("generations") = 300, py::arg("population") = 50,
          py::arg("t_sa") = HybridParams{}.t_sa, py::arg("max_evaluations") = py::none(),
          "Run H-SAGA; t_sa=None gives a plain GA.");

    py::class_<ComparisonEntry>(m, "ComparisonEntry")
        .def_readonly("seed", &ComparisonEntry::seed)
        .def_readonly("hybrid_weight", &ComparisonEntry::hybrid_weight)
        .def_readonly("ga_weight", &ComparisonEntry::ga_weight)
        .def_readonly("hybrid_evaluations", &ComparisonEntry::hybrid_evaluations)
        .def_readonly("ga_evaluations", &ComparisonEntry::ga_evaluations)
        .def_readonly("hybrid_reaches_first", &ComparisonEntry::hybrid_reaches_first);

    py::class_<ComparisonSummary>(m, "ComparisonSummary")
        .def_readonly("entries", &ComparisonSummary::entries)
        .def_readonly("median_hybrid", &ComparisonSummary::median_hybrid)
        .def_readonly("median_ga", &ComparisonSummary::median_ga)
        .def_readonly("hybrid_reaches_first_count", &ComparisonSummary::hybrid_reaches_first_count);

    m.def("compare_plain_ga",
          [](const TrussModel& model, const std::vector<std::uint64_t>& seeds, std::size_t generations,
             std::size_t population, std::optional<std::size_t> t_sa) {
              const HybridParams p = make_params(generations, population, t_sa, std::nullopt);
              py::gil_scoped_release release;
              return compare_plain_ga(model, p, seeds);
          },
          py::arg("model"), py::arg("seeds"), py::arg("generations") = 300, py::arg("population") = 50,
          py::arg("t_sa") = HybridParams{}.t_sa);
}
