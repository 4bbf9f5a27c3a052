#pragma once

#include "normvol/body.hpp"
#include "normvol/constructions.hpp"
#include "normvol/report.hpp"

#include <json.hpp>

#include <string>

namespace normvol::io {

using nlohmann::json;

/// Parses {"kind":"polytope","vertices":[...]}, {"kind":"ellipsoid","Q":[...]}
/// or {"kind":"star","grid":{"dim":..,"resolution":..},"rho":[...]}.
/// Throws InputError on malformed input.
Body body_from_json(const json& j);
json body_to_json(const Body& body);

/// Reads and parses a body file; InputError on unreadable files or bad JSON.
Body read_body(const std::string& path);

/// Body JSON of the result plus "space", "convexity", "witness",
/// "violation" and "provenance".
json construction_to_json(const ConstructionResult& result);

/// Header check,trial,seed,lhs,rhs,margin,pass then one row per trial.
std::string report_to_csv(const VerificationReport& report);
json report_to_json(const VerificationReport& report);

/// Writes text to a file; InputError when the file cannot be opened.
void write_text(const std::string& path, const std::string& text);

struct PlotLayer {
    std::string label;
    std::string color;
    Body body;
};

/// Deterministic SVG with the outlines of planar bodies, a legend and a
/// scale bar. Throws InputError for bodies that are not two-dimensional.
std::string plot_svg(const std::vector<PlotLayer>& layers, int samples = 720);

}  // namespace normvol::io
