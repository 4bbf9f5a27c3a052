#include "normvol/io.hpp"

#include "normvol/error.hpp"
#include "normvol/polytope.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace normvol::io {

namespace {

double number(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite number");
    return v;
}

Vec vector_from(const json& j, const char* what) {
    if (!j.is_array() || j.empty() || j.size() > 3) throw InputError(std::string(what) + ": expected an array of 1..3 numbers");
    Vec v(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = number(j[i], what);
    return v;
}

json vector_to(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

// Shortest round-trip formatting, independent of locale and stream state.
std::string fmt(double v) {
    char buf[40];
    for (int prec = 6; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string fixed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

Body body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw InputError("body: missing \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "polytope") {
        if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("polytope: missing \"vertices\"");
        std::vector<Vec> pts;
        for (const auto& v : j["vertices"]) pts.push_back(vector_from(v, "polytope vertex"));
        if (pts.empty()) throw InputError("polytope: no vertices");
        for (const auto& p : pts) {
            if (p.size() != pts.front().size()) throw InputError("polytope: mixed vertex dimensions");
        }
        return ConvexBody(convex_hull(pts));
    }
    if (kind == "ellipsoid") {
        if (!j.contains("Q") || !j["Q"].is_array()) throw InputError("ellipsoid: missing \"Q\"");
        const auto& rows = j["Q"];
        const auto n = static_cast<int>(rows.size());
        if (n < 1 || n > 3) throw InputError("ellipsoid: Q must be 1x1 .. 3x3");
        Mat q(n, n);
        for (int r = 0; r < n; ++r) {
            const Vec row = vector_from(rows[static_cast<std::size_t>(r)], "ellipsoid Q row");
            if (row.size() != n) throw InputError("ellipsoid: Q must be square");
            q.row(r) = row.transpose();
        }
        return ConvexBody(Ellipsoid(q));
    }
    if (kind == "star") {
        if (!j.contains("grid") || !j["grid"].is_object()) throw InputError("star: missing \"grid\"");
        const auto& g = j["grid"];
        if (!g.contains("dim") || !g.contains("resolution") || !g["dim"].is_number_integer() || !g["resolution"].is_number_integer()) {
            throw InputError("star: grid needs integer \"dim\" and \"resolution\"");
        }
        const auto grid = make_sphere_grid(g["dim"].get<int>(), g["resolution"].get<int>());
        if (!j.contains("rho") || !j["rho"].is_array()) throw InputError("star: missing \"rho\"");
        std::vector<double> rho;
        for (const auto& r : j["rho"]) rho.push_back(number(r, "star rho"));
        StarBody star(grid, std::move(rho));
        if (j.contains("exact")) {
            const Body exact = body_from_json(j["exact"]);
            const auto* k = std::get_if<ConvexBody>(&exact);
            if (!k || k->dim() != star.dim()) throw InputError("star: \"exact\" must be a convex body of the same dimension");
            return star.with_exact(*k);
        }
        return star;
    }
    throw InputError("body: unknown kind \"" + kind + "\"");
}

json body_to_json(const Body& body) {
    json j;
    if (const auto* c = std::get_if<ConvexBody>(&body)) {
        if (c->is_polytope()) {
            j["kind"] = "polytope";
            j["vertices"] = json::array();
            for (const auto& v : c->polytope().vertices()) j["vertices"].push_back(vector_to(v));
        } else {
            j["kind"] = "ellipsoid";
            const Mat& q = c->ellipsoid().q();
            j["Q"] = json::array();
            for (int r = 0; r < q.rows(); ++r) j["Q"].push_back(vector_to(q.row(r).transpose()));
        }
        return j;
    }
    const auto& s = std::get<StarBody>(body);
    j["kind"] = "star";
    j["grid"] = {{"dim", s.dim()}, {"resolution", s.grid().resolution()}};
    j["rho"] = json::array();
    for (double r : s.rho()) j["rho"].push_back(r);
    if (s.exact()) j["exact"] = body_to_json(*s.exact());
    return j;
}

Body read_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read body file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return body_from_json(j);
}

json construction_to_json(const ConstructionResult& result) {
    json j = body_to_json(result.body);
    j["space"] = result.space == Space::primal ? "primal" : "dual";
    switch (result.convexity) {
        case Convexity::verified: j["convexity"] = "verified"; break;
        case Convexity::failed: j["convexity"] = "failed"; break;
        case Convexity::not_checked: j["convexity"] = "not-checked"; break;
    }
    j["violation"] = result.violation;
    if (result.witness) j["witness"] = vector_to(*result.witness);
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(result.provenance.input_hash));
    j["provenance"] = {{"construction", result.provenance.construction},
                       {"definition", result.provenance.definition},
                       {"input_hash", hash}};
    return j;
}

std::string report_to_csv(const VerificationReport& report) {
    std::string out = "check,trial,seed,lhs,rhs,margin,pass\n";
    for (const auto& t : report.trials) {
        out += report.check + "," + std::to_string(t.trial) + "," + std::to_string(t.seed) + "," + fmt(t.lhs) + "," + fmt(t.rhs) + "," +
               fmt(t.margin) + "," + (t.exploratory ? "exploratory" : (t.pass ? "true" : "false")) + "\n";
    }
    return out;
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["check"] = report.check;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed();
    j["failures"] = report.failures();
    j["trials"] = json::array();
    for (const auto& t : report.trials) {
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(t.input_hash));
        j["trials"].push_back({{"trial", t.trial},
                               {"seed", t.seed},
                               {"input_hash", hash},
                               {"lhs", t.lhs},
                               {"rhs", t.rhs},
                               {"margin", t.margin},
                               {"pass", t.pass},
                               {"exploratory", t.exploratory}});
    }
    if (report.witness) {
        j["witness"] = body_to_json(*report.witness);
        j["witness_trial"] = *report.witness_trial;
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string plot_svg(const std::vector<PlotLayer>& layers, int samples) {
    const int size = 480;
    const int legend = 24 * static_cast<int>(layers.size()) + 40;
    std::vector<std::vector<Vec>> outlines;
    double extent = 0.0;
    for (const auto& layer : layers) {
        if (dim(layer.body) != 2) throw InputError("plot: only planar bodies can be drawn");
        std::vector<Vec> pts;
        for (int k = 0; k < samples; ++k) {
            const double a = 2.0 * std::numbers::pi * k / samples;
            const Vec u = vec2(std::cos(a), std::sin(a));
            const double r = radial(layer.body, u);
            pts.push_back(r * u);
            extent = std::max(extent, r);
        }
        outlines.push_back(std::move(pts));
    }
    if (!(extent > 0.0)) extent = 1.0;
    const double half = 0.5 * size;
    const double scale = 0.9 * half / extent;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + legend << "\" viewBox=\"0 0 "
        << size << " " << size + legend << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"0\" y1=\"" << half << "\" x2=\"" << size << "\" y2=\"" << half << "\" stroke=\"#ccc\"/>\n";
    svg << "<line x1=\"" << half << "\" y1=\"0\" x2=\"" << half << "\" y2=\"" << size << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t l = 0; l < layers.size(); ++l) {
        svg << "<polygon fill=\"none\" stroke=\"" << layers[l].color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < outlines[l].size(); ++k) {
            const Vec& p = outlines[l][k];
            svg << (k ? " " : "") << fixed(half + scale * p[0]) << "," << fixed(half - scale * p[1]);
        }
        svg << "\"/>\n";
    }
    // Scale bar of one unit.
    const double y = size + 16;
    svg << "<line x1=\"20\" y1=\"" << y << "\" x2=\"" << fixed(20 + scale) << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fixed(26 + scale) << "\" y=\"" << y + 4 << "\" font-family=\"sans-serif\" font-size=\"12\">1 unit</text>\n";
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const double ly = size + 40 + 24.0 * static_cast<double>(l);
        svg << "<line x1=\"20\" y1=\"" << ly << "\" x2=\"44\" y2=\"" << ly << "\" stroke=\"" << layers[l].color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"52\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"12\">" << layers[l].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace normvol::io
