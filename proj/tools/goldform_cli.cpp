#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldform/builders.hpp"
#include "goldform/errors.hpp"
#include "goldform/graph_io.hpp"
#include "goldform/two_form.hpp"
#include "goldform/verify.hpp"

namespace {

using namespace gf;

enum Exit { kOk = 0, kFail = 1, kError = 2 };

struct Options {
    std::string graph, point, scenario, output, path;
    std::string format = "text";
    int samples = 50;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw GraphError("cannot write " + o.output);
    out << text;
}

// {"name": [re, im] | re, ...}
Point load_point(const CoordinateSystem& cs, const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path));
    if (!j.is_object()) throw GraphError("point file must be a JSON object");
    std::map<std::string, cplx> bound;
    for (auto& [k, v] : j.items()) {
        if (v.is_number())
            bound[k] = v.get<double>();
        else if (v.is_array() && v.size() == 2)
            bound[k] = cplx(v[0].get<double>(), v[1].get<double>());
        else
            throw GraphError("coordinate " + k + " must be a number or [re, im]");
    }
    return complete_point(cs, bound);
}

Gamma2 catalog_graph(const std::string& name) {
    if (name == "sep-g2") return build_gamma2(sep_g2_spec());
    if (name == "nonsep-g2") return build_gamma2(nonsep_g2_spec());
    if (name == "two-contour-g2") return build_gamma2(two_contour_g2_spec());
    if (name == "trinion-g2-theta") return build_trinion_decomposition(theta_graph());
    if (name == "trinion-g2-theta-prime") return build_trinion_decomposition(theta_prime_graph());
    if (name == "trinion-g2-dumbbell") return build_trinion_decomposition(dumbbell_graph());
    for (int m = 1; m <= 4; ++m)
        if (name == "multicontour-g3-m" + std::to_string(m)) return build_multicontour(multicontour_g3_spec(m));
    throw GraphError("unknown graph case " + name);
}

const char* kGraphCases =
    "sep-g2 nonsep-g2 two-contour-g2 trinion-g2-theta trinion-g2-theta-prime trinion-g2-dumbbell "
    "multicontour-g3-m1 .. multicontour-g3-m4";

int cmd_omega(const Options& o) {
    GraphDocument d = load_document(read_file(o.graph));
    Point x = load_point(d.cs, o.point);
    AdmissibilityReport a = validate_admissible(d.pair, x);
    if (!a.admissible) {
        std::fprintf(stderr, "graph is not admissible at the point (residual %.3e)\n", a.max_residual);
        return kFail;
    }
    TwoFormMatrix m = omega_matrix(d.pair, d.cs, x);
    emit(o, o.format == "csv" ? to_csv(m) : o.format == "json" ? to_json(m) + "\n" : to_text(m));
    return kOk;
}

std::string report_csv(const std::vector<Report>& rs) {
    std::string s = "scenario,check,value,relation,threshold,pass\n";
    char buf[320];
    for (const auto& r : rs)
        for (const auto& c : r.checks) {
            std::snprintf(buf, sizeof buf, "%s,%s,%.6e,%s,%.3e,%d\n", r.scenario.c_str(), c.name.c_str(), c.value,
                          c.below ? "<" : ">", c.threshold, c.pass ? 1 : 0);
            s += buf;
        }
    return s;
}

int cmd_verify(const Options& o) {
    std::vector<std::string> names;
    if (o.scenario == "all")
        for (const auto& s : list_scenarios()) names.push_back(s.name);
    else if (has_scenario(o.scenario))
        names.push_back(o.scenario);
    else
        throw GraphError("unknown scenario " + o.scenario);
    std::vector<std::future<Report>> jobs;
    for (const auto& n : names)
        jobs.push_back(std::async(std::launch::async, run_scenario, n, o.seed, o.samples, o.tol));
    std::vector<Report> rs;
    for (auto& j : jobs) rs.push_back(j.get());
    bool ok = true;
    for (const auto& r : rs) ok = ok && r.pass;
    std::string out;
    if (o.format == "json") {
        if (rs.size() == 1) {
            out = to_json(rs[0]) + "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rs) arr.push_back(nlohmann::json::parse(to_json(r)));
            out = arr.dump(2) + "\n";
        }
    } else if (o.format == "csv") {
        out = report_csv(rs);
    } else {
        for (const auto& r : rs) out += to_text(r);
        if (rs.size() > 1) {
            int passed = 0;
            for (const auto& r : rs) passed += r.pass;
            out += std::to_string(passed) + "/" + std::to_string(rs.size()) + " scenarios passed\n";
        }
    }
    emit(o, out);
    return ok ? kOk : kFail;
}

int cmd_validate(const Options& o) {
    if (!o.scenario.empty()) {
        Gamma2 g = catalog_graph(o.scenario);
        emit(o, serialize(g.pair, g.cs));
        return kOk;
    }
    if (o.graph.empty()) throw GraphError("validate needs --graph or --case");
    GraphDocument d = load_document(read_file(o.graph));
    std::ostringstream s;
    s << "graph ok: " << d.pair.graph.vertices.size() << " vertices, " << d.pair.graph.edges.size() << " edges, "
      << d.cs.names.size() << " coordinates, " << d.cs.free.size() << " free\n";
    int code = kOk;
    if (!o.point.empty()) {
        Point x = load_point(d.cs, o.point);
        AdmissibilityReport a = validate_admissible(d.pair, x);
        for (size_t v = 0; v < a.residual.size(); ++v)
            s << "  " << d.pair.graph.vertices[v].name << " residual " << a.residual[v] << "\n";
        s << (a.admissible ? "admissible" : "not admissible") << " (max residual " << a.max_residual << ")\n";
        s << "relation residual " << relation_residual(d.cs, x) << "\n";
        if (!a.admissible) code = kFail;
    }
    emit(o, s.str());
    return code;
}

int cmd_monodromy(const Options& o) {
    GraphDocument d = load_document(read_file(o.graph));
    Point x = load_point(d.cs, o.point);
    Mat2c m = path_monodromy(d.pair, parse_path(d.pair.graph, o.path), x);
    std::string out;
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (cplx z : {m.a, m.b, m.c, m.d}) j.push_back({z.real(), z.imag()});
        nlohmann::json r = {{"path", o.path}, {"matrix", j}, {"trace", {m.trace().real(), m.trace().imag()}}};
        out = r.dump(2) + "\n";
    } else {
        char buf[512];
        auto f = [](cplx z) {
            char b[64];
            std::snprintf(b, sizeof b, "%.15g%+.15gi", z.real(), z.imag());
            return std::string(b);
        };
        const char* sep = o.format == "csv" ? "," : "  ";
        std::snprintf(buf, sizeof buf, "%s%s%s\n%s%s%s\n", f(m.a).c_str(), sep, f(m.b).c_str(), f(m.c).c_str(), sep,
                      f(m.d).c_str());
        out = buf;
    }
    emit(o, out);
    return kOk;
}

int cmd_list(const Options& o) {
    std::string s;
    for (const auto& sc : list_scenarios()) s += sc.name + "  " + sc.description + "\n";
    s += std::string("graph cases: ") + kGraphCases + "\n";
    emit(o, s);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic form on moduli of flat SL(2, C) connections from admissible ribbon graphs"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
        c->add_option("--output", o.output, "write to a file instead of stdout");
    };

    auto* omega = app.add_subcommand("omega", "evaluate the form at a point in the free coordinates");
    omega->add_option("--graph", o.graph, "graph or surface document")->required()->check(CLI::ExistingFile);
    omega->add_option("--point", o.point, "JSON object of coordinate values")->required()->check(CLI::ExistingFile);
    fmt(omega);

    auto* verify = app.add_subcommand("verify", "run a verification scenario");
    verify->add_option("--case", o.scenario, "scenario name or all")->required();
    verify->add_option("--samples", o.samples, "points per scenario")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--tol", o.tol, "tolerance for the target comparison")->check(CLI::PositiveNumber);
    fmt(verify);

    auto* validate = app.add_subcommand("validate", "check a graph document, or write a catalog graph");
    validate->add_option("--graph", o.graph, "graph or surface document")->check(CLI::ExistingFile);
    validate->add_option("--point", o.point, "also check admissibility at this point")->check(CLI::ExistingFile);
    validate->add_option("--case", o.scenario, "catalog graph to serialize");
    fmt(validate);

    auto* mono = app.add_subcommand("monodromy", "monodromy along a path of edge crossings");
    mono->add_option("--graph", o.graph, "graph or surface document")->required()->check(CLI::ExistingFile);
    mono->add_option("--point", o.point, "JSON object of coordinate values")->required()->check(CLI::ExistingFile);
    mono->add_option("--path", o.path, "crossings such as \"a+ b- a-\"")->required();
    fmt(mono);

    auto* list = app.add_subcommand("list", "list scenarios and catalog graphs");
    fmt(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }
    try {
        if (*omega) return cmd_omega(o);
        if (*verify) return cmd_verify(o);
        if (*validate) return cmd_validate(o);
        if (*mono) return cmd_monodromy(o);
        return cmd_list(o);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error at %s\n", e.what());
    } catch (const NotAdmissibleError& e) {
        std::fprintf(stderr, "not admissible: %s\n", e.what());
        return kFail;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    }
    return kError;
}
