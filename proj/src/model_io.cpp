#include "trussopt/model_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace trussopt {

using nlohmann::json;

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, std::string_view key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(child(path, key), "missing required field \"" + std::string(key) + "\"");
    return *it;
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
}

const json& require_array(const json& obj, std::string_view key, const std::string& path) {
    const json& a = require(obj, key, path);
    if (!a.is_array()) throw ParseError(child(path, key), "expected an array");
    return a;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (std::string_view a : allowed) known = known || it.key() == a;
        if (!known) throw ParseError(child(path, it.key()), "unknown field \"" + it.key() + "\"");
    }
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path, "expected a number");
    return j.get<double>();
}

double number_field(const json& obj, std::string_view key, const std::string& path) {
    return number(require(obj, key, path), child(path, key));
}

std::size_t index_value(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw ParseError(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::size_t index_field(const json& obj, std::string_view key, const std::string& path) {
    return index_value(require(obj, key, path), child(path, key));
}

AxisSet axes(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of axis names");
    AxisSet s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = child(path, i);
        if (!j[i].is_string()) throw ParseError(p, "expected \"x\", \"y\" or \"z\"");
        const std::string a = j[i].get<std::string>();
        if (a == "x") {
            s.x = true;
        } else if (a == "y") {
            s.y = true;
        } else if (a == "z") {
            s.z = true;
        } else {
            throw ParseError(p, "unknown axis \"" + a + "\"");
        }
    }
    return s;
}

json axes_json(const AxisSet& s) {
    json a = json::array();
    if (s.x) a.push_back("x");
    if (s.y) a.push_back("y");
    if (s.z) a.push_back("z");
    return a;
}

TrussModel model_from_json(const json& doc) {
    expect_object(doc, "");
    reject_unknown(doc,
                   {"name", "material", "nodes", "supports", "groups", "elements", "load_cases",
                    "displacement_limits"},
                   "");
    TrussModel m;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("/name", "expected a string");
        m.name = it->get<std::string>();
    }

    const json& mat = require(doc, "material", "");
    expect_object(mat, "/material");
    reject_unknown(mat, {"elastic_modulus", "weight_density"}, "/material");
    m.material.elastic_modulus = number_field(mat, "elastic_modulus", "/material");
    m.material.weight_density = number_field(mat, "weight_density", "/material");

    const json& nodes = require_array(doc, "nodes", "");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string p = child("/nodes", i);
        expect_object(nodes[i], p);
        reject_unknown(nodes[i], {"id", "x", "y", "z"}, p);
        Node n;
        n.id = index_field(nodes[i], "id", p);
        n.coords[0] = number_field(nodes[i], "x", p);
        n.coords[1] = number_field(nodes[i], "y", p);
        if (nodes[i].contains("z")) n.coords[2] = number_field(nodes[i], "z", p);
        m.nodes.push_back(n);
    }

    if (doc.contains("supports")) {
        const json& sup = require_array(doc, "supports", "");
        for (std::size_t i = 0; i < sup.size(); ++i) {
            const std::string p = child("/supports", i);
            expect_object(sup[i], p);
            reject_unknown(sup[i], {"node", "fixed"}, p);
            m.supports.push_back({index_field(sup[i], "node", p), axes(require(sup[i], "fixed", p), p + "/fixed")});
        }
    }

    const json& groups = require_array(doc, "groups", "");
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const std::string p = child("/groups", i);
        expect_object(groups[i], p);
        reject_unknown(groups[i], {"id", "area_min", "area_max", "stress_tension", "stress_compression", "buckling_k"},
                       p);
        MemberGroup g;
        g.id = index_field(groups[i], "id", p);
        g.area_min = number_field(groups[i], "area_min", p);
        g.area_max = number_field(groups[i], "area_max", p);
        g.stress_tension_limit = number_field(groups[i], "stress_tension", p);
        g.stress_compression_limit = number_field(groups[i], "stress_compression", p);
        if (groups[i].contains("buckling_k")) g.buckling = Buckling{number_field(groups[i], "buckling_k", p)};
        m.groups.push_back(g);
    }

    const json& elements = require_array(doc, "elements", "");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const std::string p = child("/elements", i);
        expect_object(elements[i], p);
        reject_unknown(elements[i], {"id", "a", "b", "group"}, p);
        m.elements.push_back({index_field(elements[i], "id", p), index_field(elements[i], "a", p),
                              index_field(elements[i], "b", p), index_field(elements[i], "group", p)});
    }

    const json& cases = require_array(doc, "load_cases", "");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const std::string p = child("/load_cases", i);
        expect_object(cases[i], p);
        reject_unknown(cases[i], {"id", "loads"}, p);
        LoadCase lc;
        lc.id = index_field(cases[i], "id", p);
        const json& loads = require_array(cases[i], "loads", p);
        for (std::size_t k = 0; k < loads.size(); ++k) {
            const std::string q = child(p + "/loads", k);
            expect_object(loads[k], q);
            reject_unknown(loads[k], {"node", "fx", "fy", "fz"}, q);
            PointLoad pl;
            pl.node = index_field(loads[k], "node", q);
            const char* keys[3] = {"fx", "fy", "fz"};
            for (std::size_t a = 0; a < 3; ++a) {
                if (loads[k].contains(keys[a])) pl.force[a] = number_field(loads[k], keys[a], q);
            }
            lc.point_loads.push_back(pl);
        }
        m.load_cases.push_back(std::move(lc));
    }

    if (doc.contains("displacement_limits")) {
        const json& dls = require_array(doc, "displacement_limits", "");
        for (std::size_t i = 0; i < dls.size(); ++i) {
            const std::string p = child("/displacement_limits", i);
            expect_object(dls[i], p);
            reject_unknown(dls[i], {"nodes", "dofs", "limit"}, p);
            DisplacementLimit dl;
            const json& ns = require_array(dls[i], "nodes", p);
            for (std::size_t k = 0; k < ns.size(); ++k) dl.nodes.push_back(index_value(ns[k], child(p + "/nodes", k)));
            dl.dofs = axes(require(dls[i], "dofs", p), p + "/dofs");
            dl.limit = number_field(dls[i], "limit", p);
            m.displacement_limits.push_back(std::move(dl));
        }
    }
    return m;
}

json model_to_json(const TrussModel& m) {
    json doc;
    doc["name"] = m.name;
    doc["material"] = {{"elastic_modulus", m.material.elastic_modulus},
                       {"weight_density", m.material.weight_density}};
    json nodes = json::array();
    for (const Node& n : m.nodes) {
        nodes.push_back({{"id", n.id}, {"x", n.coords[0]}, {"y", n.coords[1]}, {"z", n.coords[2]}});
    }
    doc["nodes"] = std::move(nodes);
    json sup = json::array();
    for (const SupportSpec& s : m.supports) sup.push_back({{"node", s.node}, {"fixed", axes_json(s.fixed)}});
    doc["supports"] = std::move(sup);
    json groups = json::array();
    for (const MemberGroup& g : m.groups) {
        json jg = {{"id", g.id},
                   {"area_min", g.area_min},
                   {"area_max", g.area_max},
                   {"stress_tension", g.stress_tension_limit},
                   {"stress_compression", g.stress_compression_limit}};
        if (g.buckling) jg["buckling_k"] = g.buckling->k;
        groups.push_back(std::move(jg));
    }
    doc["groups"] = std::move(groups);
    json elements = json::array();
    for (const Element& e : m.elements) {
        elements.push_back({{"id", e.id}, {"a", e.node_a}, {"b", e.node_b}, {"group", e.group}});
    }
    doc["elements"] = std::move(elements);
    json cases = json::array();
    for (const LoadCase& lc : m.load_cases) {
        json loads = json::array();
        for (const PointLoad& p : lc.point_loads) {
            loads.push_back({{"node", p.node}, {"fx", p.force[0]}, {"fy", p.force[1]}, {"fz", p.force[2]}});
        }
        cases.push_back({{"id", lc.id}, {"loads", std::move(loads)}});
    }
    doc["load_cases"] = std::move(cases);
    json dls = json::array();
    for (const DisplacementLimit& dl : m.displacement_limits) {
        dls.push_back({{"nodes", dl.nodes}, {"dofs", axes_json(dl.dofs)}, {"limit", dl.limit}});
    }
    doc["displacement_limits"] = std::move(dls);
    return doc;
}

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// JSON has no infinity; absent values are written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json constraints_json(const TrussModel& model, const DesignVector& design, double slack) {
    json out;
    try {
        const AnalysisResult result = analyze(model, design);
        const ConstraintReport report = evaluate_constraints(model, result);
        out["weight"] = result.weight;
        out["feasible"] = report.feasible;
        out["max_ratio"] = report.max_ratio();
        out["slack"] = slack;
        out["feasible_within_slack"] = report.feasible_within(slack);
        out["violation_total"] = report.total;
        json list = json::array();
        for (const ConstraintInstance& c : report.instances) {
            json jc = {{"kind", to_string(c.kind)},
                       {"load_case", model.load_cases[c.load_case].id},
                       {c.kind == ConstraintKind::Displacement ? "node" : "element", c.index},
                       {"value", c.value},
                       {"limit", c.limit},
                       {"ratio", c.ratio},
                       {"margin", 1.0 - c.ratio}};
            if (c.kind == ConstraintKind::Displacement) {
                jc["axis"] = std::string(1, "xyz"[static_cast<int>(c.axis)]);
            }
            list.push_back(std::move(jc));
        }
        out["constraints"] = std::move(list);
    } catch (const SingularStructure& e) {
        out["weight"] = structure_weight(model, design);
        out["feasible"] = false;
        out["error"] = e.what();
    }
    return out;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "inf";
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

}  // namespace

TrussModel parse_model(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(line_column(text, at), "malformed JSON");
    }
    TrussModel m = model_from_json(doc);
    validate(m);
    return m;
}

TrussModel load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "file not found or unreadable");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::string serialize_model(const TrussModel& model) { return model_to_json(model).dump(2) + "\n"; }

std::string design_report(const TrussModel& model, const DesignVector& design, double slack) {
    json doc;
    doc["model"] = model.name;
    doc["areas"] = design.areas;
    doc.update(constraints_json(model, design, slack));
    return doc.dump(2) + "\n";
}

std::string run_result_document(const TrussModel& model, const RunRecord& record, std::uint64_t seed) {
    const Individual& chosen = record.best_feasible ? *record.best_feasible : record.best;
    json doc;
    doc["model"] = model.name;
    doc["seed"] = seed;
    doc["generations"] = record.generations.size();
    doc["evaluations"] = record.total_evaluations;
    doc["sa_runs"] = record.sa_runs;
    doc["wall_seconds"] = record.wall_seconds;
    doc["found_feasible"] = record.best_feasible.has_value();
    doc["penalized"] = finite_or_null(chosen.penalized);
    doc["areas"] = chosen.design.areas;
    doc.update(constraints_json(model, chosen.design, 0.0));
    return doc.dump(2) + "\n";
}

std::string convergence_csv(const RunRecord& record) {
    std::string out = "generation,best_F,mean_F,best_feasible_weight,evaluations,sa_ran\n";
    for (const GenerationRecord& g : record.generations) {
        out += std::to_string(g.generation) + "," + format_double(g.best_f) + "," + format_double(g.mean_f) + ",";
        if (g.best_feasible_weight) out += format_double(*g.best_feasible_weight);
        out += "," + std::to_string(g.evaluations) + "," + (g.sa_ran ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace trussopt
