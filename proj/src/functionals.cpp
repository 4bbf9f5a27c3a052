#include "normvol/functionals.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"
#include "normvol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace normvol {

namespace {

const Polytope& require_polytope(const ConvexBody& k, const char* what) {
    if (!k.is_polytope()) throw InputError(std::string(what) + ": polytope required");
    return k.polytope();
}

const GridPtr& grid_or_default(const GridPtr& grid, int dim) {
    if (grid) {
        if (grid->dim() != dim) throw InputError("grid dimension does not match the body");
        return grid;
    }
    static thread_local GridPtr fallback;
    fallback = default_grid(dim);
    return fallback;
}

// One normal per antipodal pair of facets of B: the planes across which the
// quotient density of B is not smooth.
std::vector<Vec> kink_normals(const ConvexBody& b) {
    std::vector<Vec> out;
    if (!b.is_polytope()) return out;
    for (const auto& f : b.polytope().facets()) {
        bool seen = false;
        for (const auto& g : out) {
            if (std::abs(std::abs(g.dot(f.normal)) - 1.0) < 1e-12) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(f.normal);
    }
    return out;
}

double polytope_dual_area_2d(VolumeDefinition def, const Polytope& s, const ConvexBody& b, Exec exec, int points) {
    const auto kinks = kink_normals(b);
    const Rule1d& rule = gauss_legendre(points);
    const auto& facets = s.facets();
    return reduce_indices(
        facets.size(),
        [&](std::size_t fi) {
            const Facet& f = facets[fi];
            const Vec a = s.vertices()[f.vertices[0]];
            const Vec d = s.vertices()[f.vertices[1]] - a;
            std::vector<double> cuts{0.0, 1.0};
            for (const auto& nu : kinks) {
                const double den = nu.dot(d);
                if (den == 0.0) continue;
                const double t = -nu.dot(a) / den;
                if (t > 1e-14 && t < 1.0 - 1e-14) cuts.push_back(t);
            }
            std::sort(cuts.begin(), cuts.end());
            const double len = d.norm();
            double sum = 0.0;
            for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
                const double t0 = cuts[c];
                const double span = cuts[c + 1] - t0;
                for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                    const Vec p = a + (t0 + span * rule.nodes[q]) * d;
                    const double r = p.norm();
                    sum += rule.weights[q] * span * quotient_density_factor(def, b, p) * std::abs(f.normal.dot(p)) / r;
                }
            }
            return sum * len;
        },
        exec);
}

double polytope_dual_area_3d(VolumeDefinition def, const Polytope& s, const ConvexBody& b, Exec exec, int subdivisions) {
    const auto kinks = kink_normals(b);
    struct Triangle {
        Vec a, b, c, normal;
    };
    std::vector<Triangle> tris;
    for (const auto& f : s.facets()) {
        std::vector<std::vector<Vec>> pieces(1);
        for (auto idx : f.vertices) pieces[0].push_back(s.vertices()[idx]);
        for (const auto& nu : kinks) {
            std::vector<std::vector<Vec>> next;
            for (const auto& piece : pieces) {
                for (auto& part : split_polygon(piece, nu)) next.push_back(std::move(part));
            }
            pieces = std::move(next);
        }
        for (const auto& piece : pieces) {
            for (std::size_t i = 1; i + 1 < piece.size(); ++i) tris.push_back({piece[0], piece[i], piece[i + 1], f.normal});
        }
    }
    const TriangleRule& rule = triangle_rule7();
    const int m = 1 << subdivisions;
    return reduce_indices(
        tris.size(),
        [&](std::size_t ti) {
            const Triangle& t = tris[ti];
            const Vec e1 = (t.b - t.a) / m;
            const Vec e2 = (t.c - t.a) / m;
            const double area = 0.5 * to3(e1).cross(to3(e2)).norm();
            double sum = 0.0;
            // Regular refinement into m^2 congruent sub-triangles.
            for (int i = 0; i < m; ++i) {
                for (int j = 0; i + j < m; ++j) {
                    for (int up = 0; up < 2; ++up) {
                        if (up == 1 && i + j + 1 >= m) continue;
                        Vec p0, p1, p2;
                        if (up == 0) {
                            p0 = t.a + i * e1 + j * e2;
                            p1 = p0 + e1;
                            p2 = p0 + e2;
                        } else {
                            p0 = t.a + (i + 1) * e1 + (j + 1) * e2;
                            p1 = p0 - e1;
                            p2 = p0 - e2;
                        }
                        for (std::size_t q = 0; q < rule.weights.size(); ++q) {
                            const auto& l = rule.bary[q];
                            const Vec p = l[0] * p0 + l[1] * p1 + l[2] * p2;
                            sum += rule.weights[q] * quotient_density_factor(def, b, p) * std::abs(t.normal.dot(p)) / p.norm();
                        }
                    }
                }
            }
            return sum * area;
        },
        exec);
}

double sampled_dual_area(VolumeDefinition def, const Body& s, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    const int n = b.dim();
    const auto w = grid->weights();
    return reduce_indices(
        grid->size(),
        [&](std::size_t i) {
            const Vec& u = grid->node(i);
            const double r = radial(s, u);
            return w[i] * std::pow(r, n - 1) * quotient_density_factor(def, b, u);
        },
        exec);
}

}  // namespace

double mixed_volume_hyper(const ConvexBody& k, const ConvexBody& l) {
    const Polytope& p = require_polytope(k, "mixed_volume_hyper");
    if (l.dim() != k.dim()) throw InputError("mixed_volume_hyper: dimension mismatch");
    std::vector<double> terms;
    for (const auto& f : p.facets()) terms.push_back(l.support(f.normal) * f.area);
    return ordered_sum(terms) / k.dim();
}

double dual_mixed_volume(std::span<const StarBody* const> bodies) {
    if (bodies.empty()) throw InputError("dual_mixed_volume: no bodies");
    const DirectionGrid& grid = bodies.front()->grid();
    if (static_cast<int>(bodies.size()) != grid.dim()) throw InputError("dual_mixed_volume: need exactly n bodies");
    for (const auto* s : bodies) {
        if (!s->grid().same_as(grid)) throw InputError("dual_mixed_volume: bodies live on different grids");
    }
    const auto w = grid.weights();
    std::vector<double> terms(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double prod = w[i];
        for (const auto* s : bodies) prod *= s->rho_at(i);
        terms[i] = prod;
    }
    return ordered_sum(terms) / grid.dim();
}

double dual_mixed_volume_hyper(const StarBody& s, const StarBody& t) {
    std::vector<const StarBody*> slots(static_cast<std::size_t>(s.dim()), &s);
    slots.back() = &t;
    return dual_mixed_volume(slots);
}

double best_volume(const Body& body) {
    if (const auto* s = std::get_if<StarBody>(&body); s && s->exact()) return s->exact()->volume();
    return volume(body);
}

double surface_area(VolumeDefinition def, const ConvexBody& k, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    if (k.dim() != b.dim()) throw InputError("surface_area: dimension mismatch");
    if (k.is_polytope()) {
        std::vector<double> terms;
        for (const auto& f : k.polytope().facets()) terms.push_back(density_factor(def, b, f.normal) * f.area);
        return ordered_sum(terms);
    }
    const GridPtr& g = grid_or_default(grid, k.dim());
    const Mat& q = k.ellipsoid().q();
    const int n = k.dim();
    const auto w = g->weights();
    return reduce_indices(
        g->size(),
        [&](std::size_t i) {
            const Vec& u = g->node(i);
            const double r = k.radial(u);
            const Vec nu = (q * u).normalized();
            return w[i] * std::pow(r, n - 1) * density_factor(def, b, nu) / nu.dot(u);
        },
        exec);
}

double dual_surface_area_direct(VolumeDefinition def, const Body& s, const ConvexBody& b, Exec exec, const DirectOptions& options) {
    if (dim(s) != b.dim()) throw InputError("dual_surface_area: dimension mismatch");
    const ConvexBody* convex = std::get_if<ConvexBody>(&s);
    if (const auto* star = std::get_if<StarBody>(&s); star && star->exact()) convex = &*star->exact();
    if (convex && convex->is_polytope()) {
        if (b.dim() == 2) return polytope_dual_area_2d(def, convex->polytope(), b, exec, options.edge_points);
        return polytope_dual_area_3d(def, convex->polytope(), b, exec,
                                     b.is_polytope() ? options.subdivisions : options.smooth_subdivisions);
    }
    GridPtr grid = options.grid;
    if (!grid) {
        if (const auto* star = std::get_if<StarBody>(&s)) {
            grid = star->grid_ptr();
        } else {
            grid = default_grid(b.dim());
        }
    }
    return sampled_dual_area(def, s, b, grid, exec);
}

double dual_surface_area_identity(const Body& s, const StarBody& dual_iso) {
    if (const auto* star = std::get_if<StarBody>(&s); star && star->grid().same_as(dual_iso.grid())) {
        return dual_iso.dim() * dual_mixed_volume_hyper(*star, dual_iso);
    }
    const auto& grid = dual_iso.grid_ptr();
    std::vector<double> rho(grid->size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = radial(s, grid->node(i));
    return dual_iso.dim() * dual_mixed_volume_hyper(StarBody(grid, std::move(rho)), dual_iso);
}

double DualSurfaceArea::relative_gap() const { return std::abs(direct - identity) / std::abs(identity); }

DualSurfaceArea dual_surface_area(VolumeDefinition def, const Body& s, const ConvexBody& b, const GridPtr& grid, Exec exec) {
    const GridPtr& g = grid_or_default(grid, b.dim());
    const auto iso = dual_isoperimetrix(def, b, g, exec);
    DualSurfaceArea out;
    out.direct = dual_surface_area_direct(def, s, b, exec);
    out.identity = dual_surface_area_identity(s, iso.star());
    return out;
}

VerificationReport check_dual_minkowski(const StarBody& k, const StarBody& l, double tol) {
    const int n = k.dim();
    const double lhs = std::pow(dual_mixed_volume_hyper(k, l), n);
    const double rhs = std::pow(k.volume(), n - 1) * l.volume();
    return single_trial("dual-minkowski", tol, lhs, rhs, (rhs - lhs) / rhs, k);
}

VerificationReport check_petty(const ConvexBody& k, double tol) {
    const int n = k.dim();
    const auto pi = projection_body(k, default_grid(n), Exec::serial);
    const double lhs = std::pow(k.volume(), n - 1) * pi.convex().polar().volume();
    const double rhs = std::pow(omega(n), n) / std::pow(omega(n - 1), n);
    return single_trial("petty", tol, lhs, rhs, rhs - lhs, k);
}

VerificationReport check_busemann_bounds(const ConvexBody& b, double tol, Exec exec) {
    const int n = b.dim();
    const double a = dual_surface_area_direct(VolumeDefinition(VolumeId::busemann), b, b, exec);
    const double upper = n * omega(n);
    double margin = upper - a;
    if (n == 2) margin = std::min(margin, a - std::numbers::sqrt2 * std::numbers::pi);
    return single_trial("thm2", tol, a, upper, margin, b);
}

VerificationReport check_isoperimetric(VolumeDefinition def, const ConvexBody& k, const ConvexBody& b, const ConvexBody& iso,
                                       double tol) {
    const int n = k.dim();
    const double lhs = std::pow(surface_area(def, k, b), n) / std::pow(k.volume(), n - 1);
    const double rhs = std::pow(surface_area(def, iso, b), n) / std::pow(iso.volume(), n - 1);
    return single_trial("isoperimetric", tol, lhs, rhs, (lhs - rhs) / rhs, k);
}

VerificationReport check_dual_isoperimetric(VolumeDefinition def, const Body& s, const ConvexBody& b, const StarBody& dual_iso,
                                            double tol, Exec exec) {
    const int n = b.dim();
    const double lhs = dual_surface_area_direct(def, s, b, exec);
    const double rhs = n * std::pow(best_volume(s), (n - 1.0) / n) * std::pow(best_volume(dual_iso), 1.0 / n);
    return single_trial("dual-isoperimetric", tol, lhs, rhs, (rhs - lhs) / rhs, s);
}

VerificationReport check_convexity_monotonicity(VolumeDefinition def, const ConvexBody& k, const ConvexBody& l,
                                                const ConvexBody& b, double tol) {
    const double ak = surface_area(def, k, b);
    const double al = surface_area(def, l, b);
    return single_trial("convexity-monotonicity", tol, ak, al, (al - ak) / al, k, !def.is_convex());
}

VerificationReport check_route_agreement(VolumeDefinition def, const Body& s, const ConvexBody& b, const StarBody& dual_iso,
                                         double tol, Exec exec) {
    const double direct = dual_surface_area_direct(def, s, b, exec);
    const double identity = dual_surface_area_identity(s, dual_iso);
    return single_trial("route-agreement", tol, direct, identity, -std::abs(direct - identity) / identity, s);
}

VerificationReport check_ht_self_duality(const ConvexBody& b, double tol) {
    const VolumeDefinition ht(VolumeId::holmes_thompson);
    const ConvexBody bp = b.polar();
    const double lhs = surface_area(ht, b, b);
    const double rhs = surface_area(ht, bp, bp);
    return single_trial("ht-self-dual", tol, lhs, rhs, -std::abs(lhs - rhs) / rhs, b);
}

VerificationReport check_dual_isoperimetrix_duality(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, double tol,
                                                    Exec exec) {
    if (!def.dual().is_convex()) throw InputError("duality check needs a definition whose dual is convex");
    const auto iso = isoperimetrix(def.dual(), b.polar(), grid, exec);
    if (!iso.is_convex_body()) {
        return single_trial("duality-thm13", tol, iso.violation, 0.0, -std::numeric_limits<double>::infinity(), b);
    }
    const ConvexBody& body = iso.convex();
    const auto dev = map_indices(
        grid->size(),
        [&](std::size_t i) {
            const Vec& u = grid->node(i);
            return std::abs(quotient_density_factor(def, b, u) * body.support(u) - 1.0);
        },
        exec);
    const double sup = *std::max_element(dev.begin(), dev.end());
    return single_trial("duality-thm13", tol, sup, 0.0, -sup, b);
}

VerificationReport check_quotient_duality(const ConvexBody& b, const Vec& v, double tol) {
    const double d = duality_check_quotient(b, v);
    return single_trial("quotient-duality", tol, d, 0.0, -d, b);
}

}  // namespace normvol
