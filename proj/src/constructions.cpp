#include "normvol/constructions.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace normvol {

namespace {

struct Fnv {
    std::uint64_t h = 1469598103934665603ull;
    void add(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
};

std::vector<Vec> zonotope_facet_normals(std::span<const Vec> generators) {
    std::vector<Vec> normals;
    const int n = static_cast<int>(generators.front().size());
    if (n == 2) {
        for (const auto& g : generators) {
            const Vec perp = vec2(-g[1], g[0]).normalized();
            normals.push_back(perp);
            normals.push_back(-perp);
        }
        return normals;
    }
    for (std::size_t a = 0; a < generators.size(); ++a) {
        for (std::size_t b = a + 1; b < generators.size(); ++b) {
            const Eigen::Vector3d c = to3(generators[a]).cross(to3(generators[b]));
            if (c.norm() < 1e-12 * generators[a].norm() * generators[b].norm()) continue;
            const Vec nrm = Vec(c.normalized());
            normals.push_back(nrm);
            normals.push_back(-nrm);
        }
    }
    return normals;
}

}  // namespace

std::uint64_t body_hash(const Body& body) {
    Fnv fnv;
    if (const auto* c = std::get_if<ConvexBody>(&body)) {
        if (c->is_polytope()) {
            for (const auto& v : c->polytope().vertices()) {
                for (int i = 0; i < v.size(); ++i) fnv.add(v[i]);
            }
        } else {
            const Mat& q = c->ellipsoid().q();
            for (int i = 0; i < q.size(); ++i) fnv.add(q.data()[i]);
        }
    } else {
        const auto& s = std::get<StarBody>(body);
        fnv.add(s.dim());
        fnv.add(s.grid().resolution());
        for (double r : s.rho()) fnv.add(r);
    }
    return fnv.h;
}

ConvexBody body_from_support(const DirectionGrid& grid, std::span<const double> support) {
    if (support.size() != grid.size()) throw InputError("body_from_support: sample count does not match the grid");
    // Roundoff can make nearly parallel constraints resolve differently at
    // antipodal nodes, so the vertex set is closed under negation explicitly.
    std::vector<double> h(support.begin(), support.end());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = 0.5 * (support[i] + support[grid.antipode(i)]);
    const Polytope p = halfspace_intersection(grid.nodes(), h);
    std::vector<Vec> pts(p.vertices().begin(), p.vertices().end());
    for (const auto& v : p.vertices()) pts.push_back(-v);
    return ConvexBody(convex_hull(pts));
}

ConstructionResult intersection_body(const Body& s, const GridPtr& grid, Exec exec) {
    if (dim(s) != grid->dim()) throw InputError("intersection_body: dimension mismatch");
    auto rho = map_indices(
        grid->size(),
        [&](std::size_t i) {
            const Vec& xi = grid->node(i);
            return std::visit([&](const auto& b) { return section_volume(b, xi); }, s);
        },
        exec);
    ConstructionResult out{StarBody(grid, std::move(rho)), Space::dual, Convexity::not_checked, std::nullopt, 0.0,
                           {"intersection-body", "", body_hash(s)}};
    return out;
}

ConstructionResult projection_body(const ConvexBody& k, const GridPtr& grid, Exec exec) {
    if (k.dim() != grid->dim()) throw InputError("projection_body: dimension mismatch");
    const int n = k.dim();
    std::optional<ConvexBody> exact;
    if (k.is_ellipsoid()) {
        const Mat& q = k.ellipsoid().q();
        const double c = omega(n - 1) / std::sqrt(determinant_of_columns(q));
        exact = ConvexBody(Ellipsoid(Mat(q.inverse() / (c * c))));
    } else {
        // One generator per antipodal facet pair.
        std::vector<Vec> generators;
        for (const auto& f : k.polytope().facets()) {
            bool paired = false;
            for (const auto& g : generators) {
                if ((g.normalized() + f.normal).norm() < 1e-9) {
                    paired = true;
                    break;
                }
            }
            if (!paired) generators.push_back(f.area * f.normal);
        }
        const auto normals = zonotope_facet_normals(generators);
        std::vector<double> offsets;
        offsets.reserve(normals.size());
        for (const auto& u : normals) {
            double h = 0.0;
            for (const auto& g : generators) h += std::abs(g.dot(u));
            offsets.push_back(h);
        }
        exact = ConvexBody(halfspace_intersection(normals, offsets));
    }
    // Cross-check against directly measured shadows.
    auto shadows = map_indices(grid->size(), [&](std::size_t i) { return shadow_volume(k, grid->node(i)); }, exec);
    double worst = 0.0;
    std::size_t worst_at = 0;
    double scale = 0.0;
    for (std::size_t i = 0; i < shadows.size(); ++i) {
        scale = std::max(scale, shadows[i]);
        const double d = std::abs(shadows[i] - exact->support(grid->node(i)));
        if (d > worst) {
            worst = d;
            worst_at = i;
        }
    }
    if (worst > 1e-9 * scale) {
        throw std::logic_error("projection_body: support of the zonotope disagrees with shadow volumes by " + std::to_string(worst));
    }
    ConstructionResult out{*exact, Space::dual, Convexity::verified, std::nullopt, worst, {"projection-body", "", body_hash(k)}};
    (void)worst_at;
    return out;
}

std::vector<double> isoperimetrix_support(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    if (b.dim() != grid->dim()) throw InputError("isoperimetrix: dimension mismatch");
    return map_indices(grid->size(), [&](std::size_t i) { return density_factor(def, b, grid->node(i)); }, exec);
}

namespace {

struct Canonical {
    std::optional<ConvexBody> body;
    double violation = 0.0;
    std::size_t worst = 0;
};

Canonical canonicalize(const DirectionGrid& grid, std::span<const double> h, Exec exec) {
    Canonical out;
    ConvexBody body = body_from_support(grid, h);
    const auto slack = map_indices(grid.size(), [&](std::size_t i) { return h[i] - body.support(grid.node(i)); }, exec);
    double scale = *std::max_element(h.begin(), h.end());
    for (std::size_t i = 0; i < slack.size(); ++i) {
        if (slack[i] > out.violation) {
            out.violation = slack[i];
            out.worst = i;
        }
    }
    out.violation /= scale;
    if (out.violation <= 1e-6) out.body = std::move(body);
    return out;
}

}  // namespace

ConstructionResult isoperimetrix(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    auto h = isoperimetrix_support(def, b, grid, exec);
    Canonical c = canonicalize(*grid, h, exec);
    Provenance prov{"isoperimetrix", std::string(def.name()), body_hash(b)};
    if (c.body) return {*c.body, Space::primal, Convexity::verified, std::nullopt, c.violation, prov};
    return {StarBody(grid, std::move(h)), Space::primal, Convexity::failed, grid->node(c.worst), c.violation, prov};
}

std::vector<double> dual_isoperimetrix_radial(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    const ConvexBody polar_b = b.polar();
    auto h = isoperimetrix_support(def.dual(), polar_b, grid, exec);
    for (double& v : h) v = 1.0 / v;
    return h;
}

ConstructionResult dual_isoperimetrix(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    const ConvexBody polar_b = b.polar();
    auto h = isoperimetrix_support(def.dual(), polar_b, grid, exec);
    std::vector<double> rho(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) rho[i] = 1.0 / h[i];
    StarBody star(grid, std::move(rho));
    ConstructionResult out{star, Space::primal, Convexity::not_checked, std::nullopt, 0.0,
                           {"dual-isoperimetrix", std::string(def.name()), body_hash(b)}};
    if (def.dual().is_convex()) {
        Canonical c = canonicalize(*grid, h, exec);
        out.violation = c.violation;
        if (c.body) {
            out.body = star.with_exact(c.body->polar());
            out.convexity = Convexity::verified;
        } else {
            out.convexity = Convexity::failed;
            out.witness = grid->node(c.worst);
        }
    }
    return out;
}

}  // namespace normvol
