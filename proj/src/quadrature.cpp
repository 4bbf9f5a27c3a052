#include "normvol/quadrature.hpp"

#include "normvol/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace normvol {

namespace {

Rule1d build_gauss_legendre(int n) {
    Rule1d rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const auto k = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[k] = 0.5 * (x + 1.0);
        rule.weights[k] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const Rule1d& gauss_legendre(int points) {
    if (points < 1 || points > 64) throw InputError("gauss_legendre: 1..64 points");
    static std::mutex mutex;
    static std::map<int, Rule1d> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(points);
    if (it == cache.end()) it = cache.emplace(points, build_gauss_legendre(points)).first;
    return it->second;
}

const TriangleRule& triangle_rule7() {
    static const TriangleRule rule = [] {
        const double s = std::sqrt(15.0);
        const double a1 = (6.0 - s) / 21.0;
        const double b1 = (9.0 + 2.0 * s) / 21.0;
        const double a2 = (6.0 + s) / 21.0;
        const double b2 = (9.0 - 2.0 * s) / 21.0;
        const double w1 = (155.0 - s) / 1200.0;
        const double w2 = (155.0 + s) / 1200.0;
        TriangleRule r;
        r.bary = {{{1.0 / 3, 1.0 / 3, 1.0 / 3}, {a1, a1, b1}, {a1, b1, a1}, {b1, a1, a1}, {a2, a2, b2}, {a2, b2, a2}, {b2, a2, a2}}};
        r.weights = {9.0 / 40, w1, w1, w1, w2, w2, w2};
        return r;
    }();
    return rule;
}

std::vector<std::vector<Vec>> split_polygon(const std::vector<Vec>& polygon, const Vec& plane_normal) {
    double scale = 0.0;
    for (const auto& p : polygon) scale = std::max(scale, p.norm());
    const double tol = 1e-13 * scale * plane_normal.norm();
    std::vector<double> side(polygon.size());
    bool pos = false;
    bool neg = false;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        side[i] = plane_normal.dot(polygon[i]);
        if (std::abs(side[i]) <= tol) side[i] = 0.0;
        pos = pos || side[i] > 0;
        neg = neg || side[i] < 0;
    }
    if (!(pos && neg)) return {polygon};
    std::vector<Vec> above;
    std::vector<Vec> below;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const std::size_t j = (i + 1) % polygon.size();
        const double si = side[i];
        const double sj = side[j];
        if (si >= 0) above.push_back(polygon[i]);
        if (si <= 0) below.push_back(polygon[i]);
        if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) {
            const double t = si / (si - sj);
            const Vec x = polygon[i] + t * (polygon[j] - polygon[i]);
            above.push_back(x);
            below.push_back(x);
        }
    }
    std::vector<std::vector<Vec>> out;
    if (above.size() >= 3) out.push_back(std::move(above));
    if (below.size() >= 3) out.push_back(std::move(below));
    return out;
}

}  // namespace normvol
