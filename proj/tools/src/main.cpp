#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatpants/assembly.hpp"
#include "flatpants/development.hpp"
#include "flatpants/metric_graph.hpp"
#include "flatpants/params.hpp"
#include "flatpants/svg.hpp"
#include "flatpants/teich.hpp"

using json = nlohmann::ordered_json;
using namespace flatpants;

namespace {

constexpr const char* kSchemaVersion = "1";

// exit codes: 0 ok, 1 domain/constraint failure, 2 usage/parse failure
enum { kOk = 0, kDomainError = 1, kUsageError = 2 };

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Doc {
    std::string mode;  // "lr" | "la"
    std::array<double, 6> values{};
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseFailure("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseFailure(std::string("malformed JSON: ") + e.what());
    }
}

Doc doc_from_json(const json& j) {
    if (!j.is_object()) throw ParseFailure("document must be a JSON object");
    if (j.value("schema_version", "") != kSchemaVersion)
        throw ParseFailure("unsupported schema_version (expected \"1\")");
    Doc d;
    d.mode = j.value("mode", "");
    if (d.mode != "lr" && d.mode != "la")
        throw ParseFailure("mode must be \"lr\" or \"la\"");
    if (!j.contains("values") || !j["values"].is_array() || j["values"].size() != 6)
        throw ParseFailure("values must be an array of 6 numbers");
    for (int i = 0; i < 6; ++i) {
        if (!j["values"][i].is_number())
            throw ParseFailure("values must be an array of 6 numbers");
        d.values[i] = j["values"][i].get<double>();
    }
    return d;
}

Doc load_doc(const std::string& path) { return doc_from_json(parse_json(read_input(path))); }

json doc_json(const Doc& d) {
    return json{{"schema_version", kSchemaVersion}, {"mode", d.mode}, {"values", d.values}};
}

LengthRadiusParams lr_of(const Doc& d) {
    if (d.mode == "lr")
        return {{d.values[0], d.values[1], d.values[2]}, {d.values[3], d.values[4], d.values[5]}};
    return la_to_lr({{d.values[0], d.values[1], d.values[2]}, {d.values[3], d.values[4], d.values[5]}});
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"name", v.name}, {"index", v.index}});
    return out;
}

json degeneracy_json(const DegeneracyReport& rep) {
    json rects = json::array();
    for (int i : rep.degenerate_rectangles()) rects.push_back(i + 1);
    json out{{"triangle_degenerate", rep.triangle_degenerate},
             {"triangle_witness", nullptr},
             {"degenerate_rectangles", rects},
             {"pants_degenerate", rep.pants_degenerate}};
    if (rep.triangle_degenerate) out["triangle_witness"] = rep.triangle_witness + 1;
    return out;
}

json singularity_json(const DegeneracyReport& rep) {
    const bool boundary = rep.location == DegeneracyReport::Location::Boundary;
    json out{{"location", boundary ? "boundary" : "interior"}, {"boundary", nullptr}};
    if (boundary) out["boundary"] = rep.boundary_index + 1;
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

json development_json(const Development& d) {
    json tri = json::array();
    for (int i = 0; i < 3; ++i) tri.push_back(point_json(d.s[i]));

    json rects = json::array();
    for (const Rectangle& r : d.rect) {
        json corners = json::array();
        for (Vec2 c : r.corner) corners.push_back(point_json(c));
        rects.push_back({{"corners", corners},
                         {"height", r.height},
                         {"collapsed", r.collapsed},
                         {"outward_normal", point_json(r.normal)}});
    }

    json idents = json::array();
    for (const Identification& id : d.ident)
        idents.push_back({{"a", point_json(id.a)},
                          {"b", point_json(id.b)},
                          {"direction", point_json(id.normal)},
                          {"length", id.length}});

    json boundary = json::array();
    for (const auto& edge : d.boundary)
        boundary.push_back(json::array({point_json(edge[0]), point_json(edge[1])}));

    return json{{"triangle", tri},
                {"rectangles", rects},
                {"identifications", idents},
                {"boundary", boundary}};
}

json cone_json(const ConePoint& c) {
    json out{{"total_angle", c.total_angle},
             {"curvature", c.curvature},
             {"location", c.on_boundary ? "boundary" : "interior"},
             {"boundary", nullptr}};
    if (c.on_boundary) out["boundary"] = c.boundary_index + 1;
    return out;
}

int domain_error(const json& input, const std::string& msg) {
    emit(json{{"schema_version", kSchemaVersion}, {"input", input}, {"error", msg}});
    return kDomainError;
}

int cmd_validate(const std::string& file, double eps) {
    const Doc doc = load_doc(file);
    json out{{"schema_version", kSchemaVersion}, {"input", doc_json(doc)}};

    Verdict verdict;
    if (doc.mode == "lr") {
        const LengthRadiusParams p{{doc.values[0], doc.values[1], doc.values[2]},
                                   {doc.values[3], doc.values[4], doc.values[5]}};
        verdict = validate_lr(p, eps);
        const DegeneracyReport rep = classify(p, eps);
        out["valid"] = verdict.valid;
        out["violations"] = violations_json(verdict.violations);
        out["degeneracy"] = degeneracy_json(rep);
        out["singularity"] = singularity_json(rep);
    } else {
        const DistanceParams p{{doc.values[0], doc.values[1], doc.values[2]},
                               {doc.values[3], doc.values[4], doc.values[5]}};
        verdict = validate_la(p, eps);
        out["valid"] = verdict.valid;
        out["violations"] = violations_json(verdict.violations);
        out["degeneracy"] = nullptr;
        out["singularity"] = nullptr;
        if (verdict.valid) {
            const DegeneracyReport rep = classify(la_to_lr(p, eps), eps);
            out["degeneracy"] = degeneracy_json(rep);
            out["singularity"] = singularity_json(rep);
        }
    }
    emit(out);
    return verdict.valid ? kOk : kDomainError;
}

int cmd_convert(const std::string& file, double eps) {
    const Doc doc = load_doc(file);
    const json input = doc_json(doc);
    Doc other;
    try {
        if (doc.mode == "lr") {
            const DistanceParams la = lr_to_la(
                {{doc.values[0], doc.values[1], doc.values[2]},
                 {doc.values[3], doc.values[4], doc.values[5]}},
                eps);
            other.mode = "la";
            other.values = {la.l[0], la.l[1], la.l[2], la.a[0], la.a[1], la.a[2]};
        } else {
            const LengthRadiusParams lr = la_to_lr(
                {{doc.values[0], doc.values[1], doc.values[2]},
                 {doc.values[3], doc.values[4], doc.values[5]}},
                eps);
            other.mode = "lr";
            other.values = {lr.l[0], lr.l[1], lr.l[2], lr.r[0], lr.r[1], lr.r[2]};
        }
    } catch (const std::invalid_argument& e) {
        return domain_error(input, e.what());
    }
    emit(json{{"schema_version", kSchemaVersion}, {"input", input}, {"output", doc_json(other)}});
    return kOk;
}

int cmd_build(const std::string& file, const std::string& svg_path, const std::string& json_path,
              double eps) {
    const Doc doc = load_doc(file);
    const json input = doc_json(doc);

    Development dev;
    try {
        dev = build(lr_of(doc), eps);
    } catch (const std::invalid_argument& e) {
        return domain_error(input, e.what());
    }

    json out{{"schema_version", kSchemaVersion},
             {"input", input},
             {"development", development_json(dev)},
             {"cone", cone_json(cone_angle(dev))}};

    if (!svg_path.empty()) {
        std::ofstream f(svg_path, std::ios::binary);
        if (!f) throw ParseFailure("cannot write SVG file: " + svg_path);
        f << emit_svg(dev);
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw ParseFailure("cannot write JSON file: " + json_path);
        f << out.dump(2) << "\n";
    }
    emit(out);
    return kOk;
}

int cmd_measure(const std::string& file, double h, std::uint64_t seed, double eps, double tol) {
    const Doc doc = load_doc(file);
    const json input = doc_json(doc);

    LengthRadiusParams p;
    Development dev;
    MetricGraph graph;
    try {
        p = lr_of(doc);
        dev = build(p, eps);
        if (h <= 0.0) h = default_resolution(p);
        graph = build_graph(dev, h);
    } catch (const std::invalid_argument& e) {
        return domain_error(input, e.what());
    }

    const std::vector<double> from_s = shortest_paths(graph, graph.singularity);
    bool ok = true;
    auto rel = [](double measured, double declared) {
        return declared > 0.0 ? std::abs(measured - declared) / declared : std::abs(measured);
    };

    json to_boundary = json::array();
    for (int i = 0; i < 3; ++i) {
        double measured = std::numeric_limits<double>::infinity();
        for (int n : graph.boundary_nodes[i]) measured = std::min(measured, from_s[n]);
        const double err = rel(measured, p.r[i]);
        ok = ok && err <= tol;
        to_boundary.push_back({{"boundary", i + 1},
                               {"declared", p.r[i]},
                               {"measured", measured},
                               {"relative_error", err}});
    }

    json between = json::array();
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double declared = p.r[j] + p.r[k];
        const double measured = distance_between_boundaries(graph, j, k);
        const double err = rel(measured, declared);
        ok = ok && err <= tol;
        between.push_back({{"pair", json::array({j + 1, k + 1})},
                           {"declared", declared},
                           {"measured", measured},
                           {"relative_error", err}});
    }

    emit(json{{"schema_version", kSchemaVersion},
              {"input", input},
              {"h", h},
              {"seed", seed},
              {"tolerance", tol},
              {"nodes", graph.nodes.size()},
              {"singularity_to_boundary", to_boundary},
              {"between_boundaries", between},
              {"within_tolerance", ok}});
    return ok ? kOk : kDomainError;
}

TeichPoint teich_point(const std::vector<double>& v, std::size_t offset = 0) {
    TeichPoint x;
    for (int i = 0; i < 6; ++i) x.coords[i] = v[offset + i];
    return x;
}

json stratum_json(const Stratum& s) {
    json l = json::array(), a = json::array();
    for (int i : s.l_walls) l.push_back(i + 1);
    for (int i : s.a_walls) a.push_back(i + 1);
    return json{{"l_walls", l}, {"a_walls", a}};
}

const char* region_name(Region r) {
    switch (r) {
        case Region::Interior: return "interior";
        case Region::Boundary: return "boundary";
        default: return "outside";
    }
}

int cmd_teich_membership(const std::vector<double>& coords, double eps) {
    const TeichPoint x = teich_point(coords);
    const Membership m = membership(x, eps);
    emit(json{{"schema_version", kSchemaVersion},
              {"coords", x.coords},
              {"region", region_name(m.region)},
              {"stratum", stratum_json(m.stratum)},
              {"violations", violations_json(m.violations)}});
    return m.region == Region::Outside ? kDomainError : kOk;
}

int cmd_teich_stratum(const std::vector<double>& coords, double eps) {
    const TeichPoint x = teich_point(coords);
    const Membership m = membership(x, eps);
    json out{{"schema_version", kSchemaVersion},
             {"coords", x.coords},
             {"region", region_name(m.region)}};
    out.update(stratum_json(m.stratum));
    out["violations"] = violations_json(m.violations);
    emit(out);
    return m.region == Region::Outside ? kDomainError : kOk;
}

int cmd_teich_segment(const std::vector<double>& coords, int n, double eps) {
    const TeichPoint x = teich_point(coords, 0), y = teich_point(coords, 6);
    bool inside = false;
    try {
        inside = segment_in_B(x, y, n, eps);
    } catch (const std::invalid_argument& e) {
        emit(json{{"schema_version", kSchemaVersion}, {"error", e.what()}});
        return kDomainError;
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"x", x.coords},
              {"y", y.coords},
              {"samples", n},
              {"inside", inside}});
    return inside ? kOk : kDomainError;
}

int cmd_teich_contract(const std::vector<double>& coords, double t,
                       const std::vector<double>& base_coords, double eps) {
    const TeichPoint x = teich_point(coords);
    TeichPoint base = kBasepoint;
    if (!base_coords.empty()) base = teich_point(base_coords);
    TeichPoint z;
    try {
        z = contract(x, t, base, eps);
    } catch (const std::invalid_argument& e) {
        emit(json{{"schema_version", kSchemaVersion}, {"error", e.what()}});
        return kDomainError;
    }
    const Membership m = membership(z, eps);
    emit(json{{"schema_version", kSchemaVersion},
              {"x", x.coords},
              {"base", base.coords},
              {"t", t},
              {"point", z.coords},
              {"region", region_name(m.region)}});
    return kOk;
}

GluingSpec gluing_from_json(const json& j) {
    if (!j.is_object()) throw ParseFailure("gluing spec must be a JSON object");
    if (j.value("schema_version", "") != kSchemaVersion)
        throw ParseFailure("unsupported schema_version (expected \"1\")");
    if (!j.contains("pants") || !j["pants"].is_array())
        throw ParseFailure("gluing spec needs a \"pants\" array");
    if (!j.contains("pairings") || !j["pairings"].is_array())
        throw ParseFailure("gluing spec needs a \"pairings\" array");

    GluingSpec spec;
    for (const json& pj : j["pants"]) {
        Doc d = doc_from_json(pj);
        spec.pants.push_back(lr_of(d));  // may throw invalid_argument -> domain error
    }
    for (const json& pr : j["pairings"]) {
        if (!pr.is_array() || pr.size() != 2)
            throw ParseFailure("each pairing must be a pair of [pants, boundary] slots");
        Pairing pairing;
        BoundaryRef* refs[2] = {&pairing.first, &pairing.second};
        for (int s = 0; s < 2; ++s) {
            const json& slot = pr[s];
            if (!slot.is_array() || slot.size() != 2 || !slot[0].is_number_integer() ||
                !slot[1].is_number_integer())
                throw ParseFailure("each slot must be [pants, boundary] with 1-based integers");
            refs[s]->pants = slot[0].get<int>() - 1;
            refs[s]->boundary = slot[1].get<int>() - 1;
        }
        spec.pairings.push_back(pairing);
    }
    return spec;
}

int cmd_glue(const std::string& file) {
    const json input = parse_json(read_input(file));
    GluingSpec spec;
    GlueResult result;
    try {
        spec = gluing_from_json(input);
        result = glue(spec);
    } catch (const ParseFailure&) {
        throw;
    } catch (const std::invalid_argument& e) {
        return domain_error(input, e.what());
    }

    const double residual = gauss_bonnet_closed(result.spec);
    const FeasibilityVerdict f =
        decomposition_feasible(result.spec.genus, static_cast<int>(result.spec.interior_cones.size()));
    emit(json{{"schema_version", kSchemaVersion},
              {"pants_count", spec.pants.size()},
              {"pairing_count", spec.pairings.size()},
              {"genus", result.spec.genus},
              {"cone_angles", result.spec.interior_cones},
              {"gauss_bonnet_residual", residual},
              {"glued_lengths", result.glued_lengths},
              {"feasibility",
               {{"verdict", f.kind == Feasibility::Infeasible ? "INFEASIBLE" : "NOT_RULED_OUT"},
                {"pants_needed", f.pants_needed},
                {"singularity_capacity", f.singularity_capacity},
                {"reason", f.reason}}}});
    return std::abs(residual) < 1e-9 ? kOk : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "flatpants: flat pairs of pants with one conical singularity.\n"
        "Documents are JSON {\"schema_version\":\"1\",\"mode\":\"lr\"|\"la\",\"values\":[6 numbers]}\n"
        "with values ordered (l1,l2,l3,r1,r2,r3) in lr mode and (l1,l2,l3,a1,a2,a3) in la mode."};
    app.require_subcommand(1);

    double eps = kDefaultEpsFactor;
    app.add_option("--eps", eps, "wall tolerance factor (default 1e-9)")
        ->check(CLI::PositiveNumber);

    std::string in_file = "-";
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", in_file, "input document path, or - for stdin");
    };

    CLI::App* validate = app.add_subcommand("validate", "check parameter constraints");
    add_input(validate);

    CLI::App* convert = app.add_subcommand("convert", "convert between lr and la parameters");
    add_input(convert);

    std::string svg_path, json_path;
    CLI::App* build_cmd = app.add_subcommand("build", "lay out the planar development");
    add_input(build_cmd);
    build_cmd->add_option("--svg", svg_path, "write an SVG rendering to this path");
    build_cmd->add_option("--json", json_path, "write the development document to this path");

    double h = 0.0, tol = 0.05;
    std::uint64_t seed = 0;
    CLI::App* measure = app.add_subcommand("measure", "verify declared distances on a sampled graph");
    measure->set_help_flag("--help", "print this help message and exit");
    add_input(measure);
    measure->add_option("--h", h, "sample spacing (default min(l, positive r)/20)")
        ->check(CLI::PositiveNumber);
    measure->add_option("--seed", seed, "seed echoed into the report");
    measure->add_option("--tol", tol, "relative tolerance for the verdict (default 0.05)")
        ->check(CLI::PositiveNumber);

    CLI::App* teich = app.add_subcommand("teich", "parameter-set queries (coordinates l1 l2 l3 a1 a2 a3)");
    teich->require_subcommand(1);

    std::vector<double> coords, seg_coords, base_coords;
    CLI::App* membership_cmd = teich->add_subcommand("membership", "classify a 6-tuple");
    membership_cmd->add_option("coords", coords, "l1 l2 l3 a1 a2 a3")->expected(6);

    CLI::App* stratum_cmd = teich->add_subcommand("stratum", "boundary walls of a member");
    stratum_cmd->add_option("coords", coords, "l1 l2 l3 a1 a2 a3")->expected(6);

    int n_samples = 100;
    CLI::App* segment_cmd = teich->add_subcommand("segment", "sample the segment between two members");
    segment_cmd->add_option("coords", seg_coords, "x1..x6 y1..y6")->expected(12);
    segment_cmd->add_option("--n", n_samples, "sample count (default 100)")
        ->check(CLI::PositiveNumber);

    double t_param = 0.0;
    CLI::App* contract_cmd = teich->add_subcommand("contract", "straight-line contraction toward a base point");
    contract_cmd->add_option("coords", coords, "l1 l2 l3 a1 a2 a3")->expected(6);
    contract_cmd->add_option("--t", t_param, "contraction parameter in [0,1]")->required();
    contract_cmd->add_option("--base", base_coords, "base point (default 1 1 1 2 2 2)")->expected(6);

    CLI::App* glue_cmd = app.add_subcommand("glue", "assemble pants into a closed surface");
    add_input(glue_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*validate) return cmd_validate(in_file, eps);
        if (*convert) return cmd_convert(in_file, eps);
        if (*build_cmd) return cmd_build(in_file, svg_path, json_path, eps);
        if (*measure) return cmd_measure(in_file, h, seed, eps, tol);
        if (*membership_cmd) return cmd_teich_membership(coords, eps);
        if (*stratum_cmd) return cmd_teich_stratum(coords, eps);
        if (*segment_cmd) return cmd_teich_segment(seg_coords, n_samples, eps);
        if (*contract_cmd) return cmd_teich_contract(coords, t_param, base_coords, eps);
        if (*glue_cmd) return cmd_glue(in_file);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}
