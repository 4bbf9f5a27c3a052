// normvol: compute constructions and functionals of normed spaces, run
// seeded verification suites, and draw 2D overlays.
//
// Exit codes: 0 ok / all checks pass, 1 a check failed, 2 bad input,
// 3 numeric failure.

#include "normvol/constructions.hpp"
#include "normvol/error.hpp"
#include "normvol/functionals.hpp"
#include "normvol/girth.hpp"
#include "normvol/io.hpp"
#include "normvol/suites.hpp"
#include "normvol/volume_definition.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <stdexcept>

using namespace normvol;
using json = nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string def = "busemann";
    std::vector<std::string> bodies;
    int dim = 2;
    int resolution = 0;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::string out;
    std::string csv;
    std::string svg;
    bool serial = false;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GridPtr grid_for(const RunConfig& c, int dim) {
    return c.resolution > 0 ? make_sphere_grid(dim, c.resolution) : default_grid(dim);
}

ConvexBody as_convex(const Body& b, const std::string& role) {
    if (const auto* k = std::get_if<ConvexBody>(&b)) return *k;
    if (const auto& e = std::get<StarBody>(b).exact()) return *e;
    throw InputError(role + " must be a polytope or ellipsoid");
}

std::vector<Body> load_bodies(const RunConfig& c, std::size_t min_count) {
    if (c.bodies.size() < min_count) throw InputError("missing --body");
    std::vector<Body> out;
    for (const auto& path : c.bodies) out.push_back(io::read_body(path));
    for (const auto& b : out)
        if (dim(b) != dim(out.front())) throw InputError("bodies have different dimensions");
    return out;
}

json header(const RunConfig& c, int body_dim) {
    json j;
    j["command"] = c.command;
    j["definition"] = std::string(VolumeDefinition::parse(c.def).name());
    j["dim"] = body_dim;
    j["resolution"] = c.resolution > 0 ? c.resolution : default_resolution(body_dim);
    j["seed"] = c.seed;
    return j;
}

json provenance(const std::string& what, const RunConfig& c, const Body& input) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(body_hash(input)));
    return {{"construction", what}, {"definition", std::string(VolumeDefinition::parse(c.def).name())}, {"input_hash", hex}};
}

int cmd_compute(const RunConfig& c, const std::string& what) {
    const VolumeDefinition def = VolumeDefinition::parse(c.def);
    const auto bodies = load_bodies(c, 1);
    const Body& first = bodies.front();
    const int n = dim(first);
    const GridPtr grid = grid_for(c, n);
    json j = header(c, n);

    if (what == "volume") {
        j["volume"] = best_volume(first);
        if (const auto* k = std::get_if<ConvexBody>(&first)) j["definition_volume"] = eval_V(def, *k);
        j["provenance"] = provenance(what, c, first);
    } else if (what == "polar") {
        j["body"] = io::body_to_json(as_convex(first, "--body").polar());
        j["provenance"] = provenance(what, c, first);
    } else if (what == "intersection-body" || what == "projection-body" || what == "isoperimetrix" ||
               what == "dual-isoperimetrix") {
        ConstructionResult r;
        if (what == "intersection-body")
            r = intersection_body(first, grid);
        else if (what == "projection-body")
            r = projection_body(as_convex(first, "--body"), grid);
        else if (what == "isoperimetrix")
            r = isoperimetrix(def, as_convex(first, "--body"), grid);
        else
            r = dual_isoperimetrix(def, as_convex(first, "--body"), grid);
        j.update(io::construction_to_json(r));
    } else if (what == "surface-area") {
        // surface-area --body K [--body B]; B defaults to K.
        const ConvexBody k = as_convex(first, "K");
        const ConvexBody b = bodies.size() > 1 ? as_convex(bodies[1], "B") : k;
        j["surface_area"] = surface_area(def, k, b, grid);
        j["provenance"] = provenance(what, c, first);
    } else if (what == "dual-surface-area") {
        // dual-surface-area --body S [--body B]; B defaults to S.
        const ConvexBody b = as_convex(bodies.size() > 1 ? bodies[1] : first, "B");
        const DualSurfaceArea a = dual_surface_area(def, first, b, grid);
        j["dual_surface_area"] = a.direct;
        j["identity_route"] = a.identity;
        j["relative_gap"] = a.relative_gap();
        j["provenance"] = provenance(what, c, first);
    } else if (what == "girth") {
        const ConvexBody b = as_convex(first, "--body");
        const GirthResult g = quotient_girth(b);
        j["girth"] = g.length;
        j["graph_length"] = g.graph_length;
        j["mesh_level"] = g.mesh_level;
        j["smoothing_iterations"] = g.smoothing_iterations;
        j["provenance"] = provenance(what, c, first);
    } else {
        throw InputError("unknown compute target: " + what);
    }
    emit(c.out, dump(j));
    return 0;
}

int cmd_verify(const RunConfig& c, const std::string& check) {
    SuiteConfig s;
    s.check = check;
    s.def = VolumeDefinition::parse(c.def);
    s.dim = c.dim;
    s.trials = c.trials;
    s.seed = c.seed;
    s.tol = c.tol;
    s.resolution = c.resolution;
    const VerificationReport report = run_suite(s);

    emit(c.csv, io::report_to_csv(report));
    if (!c.out.empty()) {
        json j = header(c, c.dim);
        j["trials"] = c.trials;
        j.update(io::report_to_json(report));
        io::write_text(c.out, dump(j));
    }
    std::fprintf(stderr, "%s: %zu trials, %zu failed, worst margin %.3e (tol %.1e)\n", check.c_str(),
                 report.trials.size(), report.failures(), report.worst_margin(), report.tolerance);
    return report.passed() ? 0 : 1;
}

int cmd_plot(const RunConfig& c) {
    const VolumeDefinition def = VolumeDefinition::parse(c.def);
    const auto bodies = load_bodies(c, 1);
    if (dim(bodies.front()) != 2) throw InputError("plot supports 2D bodies only");
    const ConvexBody b = as_convex(bodies.front(), "--body");
    const GridPtr grid = grid_for(c, 2);
    std::vector<io::PlotLayer> layers{{"B", "#1f4e9c", b}};
    const auto iso = isoperimetrix(def, b, grid);
    layers.push_back({"isoperimetrix", "#c0392b", iso.body});
    const auto dual_iso = dual_isoperimetrix(def, b, grid);
    layers.push_back({"dual isoperimetrix", "#27864a", dual_iso.body});
    emit(c.svg.empty() ? c.out : c.svg, io::plot_svg(layers));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normvol: volumes and surface areas in finite-dimensional normed spaces"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--def", c.def, "volume definition: busemann, holmes-thompson, mass, mass-star, ivanov, "
                                        "dual-ivanov, or dual:<id>");
        sub->add_option("--resolution", c.resolution, "sphere grid resolution (2D angles, 3D icosphere level)");
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--out", c.out, "output file (default stdout)");
        sub->add_flag("--serial", c.serial, "disable OpenMP kernels");
    };

    std::string target;
    auto* compute = app.add_subcommand("compute", "compute a construction or functional");
    compute->add_option("target", target, "volume | polar | intersection-body | projection-body | isoperimetrix | "
                                          "dual-isoperimetrix | surface-area | dual-surface-area | girth")
        ->required();
    compute->add_option("--body", c.bodies, "body JSON file (repeatable)");
    add_common(compute);

    std::string check;
    auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
    verify->add_option("check", check, "check id")->required();
    verify->add_option("--dim", c.dim, "dimension (2 or 3)");
    verify->add_option("--trials", c.trials, "number of trials");
    verify->add_option("--tol", c.tol, "tolerance override");
    verify->add_option("--csv", c.csv, "CSV report file (default stdout)");
    add_common(verify);

    auto* plot = app.add_subcommand("plot", "SVG overlay of B and its isoperimetrices");
    plot->add_option("--body", c.bodies, "2D body JSON file")->required();
    plot->add_option("--svg", c.svg, "SVG output file (default stdout)");
    add_common(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c.serial) set_default_exec(Exec::serial);
        if (compute->parsed()) {
            c.command = "compute " + target;
            return cmd_compute(c, target);
        }
        if (verify->parsed()) {
            c.command = "verify " + check;
            return cmd_verify(c, check);
        }
        c.command = "plot";
        return cmd_plot(c);
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const DegeneracyError& e) {
        std::fprintf(stderr, "degenerate input: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "malformed JSON: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
