#include "normvol/volume_definition.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"
#include "normvol/extremal.hpp"

#include <cmath>

namespace normvol {

namespace {

constexpr std::array<std::pair<VolumeId, std::string_view>, 6> kNames{{
    {VolumeId::busemann, "busemann"},
    {VolumeId::holmes_thompson, "holmes-thompson"},
    {VolumeId::mass, "mass"},
    {VolumeId::mass_star, "mass-star"},
    {VolumeId::ivanov, "ivanov"},
    {VolumeId::dual_ivanov, "dual-ivanov"},
}};

}  // namespace

VolumeDefinition VolumeDefinition::parse(std::string_view text) {
    constexpr std::string_view prefix = "dual:";
    if (text.substr(0, prefix.size()) == prefix) return parse(text.substr(prefix.size())).dual();
    for (const auto& [id, name] : kNames) {
        if (name == text) return VolumeDefinition(id);
    }
    throw InputError("unknown volume definition '" + std::string(text) + "'");
}

std::array<VolumeDefinition, 6> VolumeDefinition::all() {
    return {VolumeId::busemann, VolumeId::holmes_thompson, VolumeId::mass,
            VolumeId::mass_star, VolumeId::ivanov, VolumeId::dual_ivanov};
}

std::string_view VolumeDefinition::name() const {
    for (const auto& [id, name] : kNames) {
        if (id == id_) return name;
    }
    return "?";
}

VolumeDefinition VolumeDefinition::dual() const {
    switch (id_) {
        case VolumeId::busemann: return VolumeId::holmes_thompson;
        case VolumeId::holmes_thompson: return VolumeId::busemann;
        case VolumeId::mass: return VolumeId::mass_star;
        case VolumeId::mass_star: return VolumeId::mass;
        case VolumeId::ivanov: return VolumeId::dual_ivanov;
        case VolumeId::dual_ivanov: return VolumeId::ivanov;
    }
    return id_;
}

bool VolumeDefinition::is_convex() const {
    return id_ != VolumeId::mass && id_ != VolumeId::dual_ivanov;
}

VolumeDefinition dual_def(VolumeDefinition def) { return def.dual(); }

double polar_volume(const ConvexBody& body) {
    if (body.is_ellipsoid()) return body.ellipsoid().polar().volume();
    const Polytope& p = body.polytope();
    if (p.dim() == 1) return 2.0 / p.facets()[0].offset;
    if (p.dim() == 2) {
        // Polar vertices normal_f / offset_f, already in counter-clockwise order.
        const auto facets = p.facets();
        double area = 0.0;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const Vec a = facets[i].normal / facets[i].offset;
            const Vec b = facets[(i + 1) % facets.size()].normal / facets[(i + 1) % facets.size()].offset;
            area += 0.5 * (a[0] * b[1] - a[1] * b[0]);
        }
        return area;
    }
    return polytope_volume(polar(p));
}

double volume_product(const ConvexBody& body) { return body.volume() * polar_volume(body); }

double volume_ratio(VolumeDefinition def, const ConvexBody& body) {
    const int k = body.dim();
    if (k == 1) return 2.0 / body.volume();
    switch (def.id()) {
        case VolumeId::busemann: return omega(k) / body.volume();
        case VolumeId::holmes_thompson: return polar_volume(body) / omega(k);
        case VolumeId::mass: return std::pow(2.0, k) / factorial(k) / max_inscribed_cross_polytope(body).volume;
        case VolumeId::mass_star: return std::pow(2.0, k) / min_circumscribed_parallelotope(body).volume;
        case VolumeId::ivanov: return omega(k) / john_ellipsoid(body).ellipsoid.volume();
        case VolumeId::dual_ivanov: return omega(k) / loewner_ellipsoid(body).ellipsoid.volume();
    }
    return 0.0;
}

double eval_V(VolumeDefinition def, const ConvexBody& body) {
    if (body.dim() == 1) return 2.0;
    if (def.id() == VolumeId::busemann) return omega(body.dim());
    return volume_ratio(def, body) * body.volume();
}

double eval_dual_generic(VolumeDefinition def, const ConvexBody& body) {
    return volume_product(body) / eval_V(def, body.polar());
}

double density_factor(VolumeDefinition def, const ConvexBody& b, const Vec& normal) {
    if (b.dim() == 2) return 1.0 / b.radial(complement_basis(normal.normalized()).col(0));
    return volume_ratio(def, section(b, normal));
}

double quotient_density_factor(VolumeDefinition def, const ConvexBody& b, const Vec& p) {
    if (b.dim() == 2) return 1.0 / b.support(complement_basis(p.normalized()).col(0));
    return volume_ratio(def, shadow(b, p));
}

}  // namespace normvol
