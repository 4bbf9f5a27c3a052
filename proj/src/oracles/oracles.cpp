#include "normvol/oracles.hpp"

#include "normvol/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace normvol::oracles {

namespace {

double bounding_radius(const Body& body) {
    if (const auto* c = std::get_if<ConvexBody>(&body)) return c->circumradius();
    const auto& s = std::get<StarBody>(body);
    double r = 0.0;
    for (double v : s.rho()) r = std::max(r, v);
    return r;
}

bool contains(const Body& body, const Vec& x) {
    if (x.norm() == 0.0) return true;
    if (const auto* c = std::get_if<ConvexBody>(&body)) return c->gauge(x) <= 1.0;
    return std::get<StarBody>(body).radial(x) >= 1.0;
}

std::vector<Vec> half_sphere_directions(int dim, int resolution) {
    std::vector<Vec> out;
    if (dim == 2) {
        for (int i = 0; i < resolution; ++i) {
            const double a = std::numbers::pi * i / resolution;
            out.push_back(vec2(std::cos(a), std::sin(a)));
        }
        return out;
    }
    for (int i = 0; i < resolution; ++i) {
        const double theta = 0.5 * std::numbers::pi * (i + 0.5) / resolution;
        for (int j = 0; j < 2 * resolution; ++j) {
            const double phi = std::numbers::pi * j / resolution;
            out.push_back(vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
        }
    }
    return out;
}

double det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

McEstimate mc_volume(const Body& body, std::size_t samples, std::uint64_t seed) {
    if (samples < 10000) throw InputError("mc_volume: at least 10^4 samples");
    const int n = dim(body);
    const double r = bounding_radius(body) * (1.0 + 1e-9);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-r, r);
    std::size_t hits = 0;
    Vec x(n);
    for (std::size_t i = 0; i < samples; ++i) {
        for (int k = 0; k < n; ++k) x[k] = coord(rng);
        if (contains(body, x)) ++hits;
    }
    const double box = std::pow(2.0 * r, n);
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

double brute_quotient_norm(const ConvexBody& b, const Vec& p, const Vec& w, int points) {
    if (points < 100) throw InputError("brute_quotient_norm: at least 100 points");
    if (w.norm() == 0.0) return 0.0;
    const double t_max = 4.0 * b.gauge(w) / b.gauge(p);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        const double t = -t_max + 2.0 * t_max * i / (points - 1);
        const Vec x = w + t * p;
        best = std::min(best, x.norm() == 0.0 ? 0.0 : b.gauge(x));
    }
    return best;
}

double brute_cross_polytope(const ConvexBody& k, int resolution) {
    const int n = k.dim();
    if (n == 1) return 2.0 * k.radial(unit_axis(1, 0));
    const auto dirs = half_sphere_directions(n, resolution);
    std::vector<Vec> pts;
    for (const auto& u : dirs) pts.push_back(k.radial(u) * u);
    double best = 0.0;
    const std::size_t m = pts.size();
    if (n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) best = std::max(best, std::abs(det2(pts[i], pts[j])));
        }
        return 2.0 * best;
    }
    // The third point is optimal in closed form: max_x |<c, x>| over K is h_K(c).
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Eigen::Vector3d c = to3(pts[i]).cross(to3(pts[j]));
            if (c.norm() > 0.0) best = std::max(best, k.support(Vec(c)));
        }
    }
    return 8.0 / 6.0 * best;
}

double brute_parallelotope(const ConvexBody& k, int resolution) {
    const int n = k.dim();
    if (n == 1) return 2.0 * k.support(unit_axis(1, 0));
    const auto dirs = half_sphere_directions(n, resolution);
    std::vector<double> h;
    for (const auto& u : dirs) h.push_back(k.support(u));
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = dirs.size();
    if (n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double d = std::abs(det2(dirs[i], dirs[j]));
                if (d > 1e-9) best = std::min(best, 4.0 * h[i] * h[j] / d);
            }
        }
        return best;
    }
    // Third normal in closed form: min_xi h(xi) / |<c, xi>| = 1 / gauge_K(c).
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Eigen::Vector3d c = to3(dirs[i]).cross(to3(dirs[j]));
            if (c.norm() > 1e-9) best = std::min(best, 8.0 * h[i] * h[j] / k.gauge(Vec(c)));
        }
    }
    return best;
}

}  // namespace normvol::oracles
