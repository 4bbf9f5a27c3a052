#include "normvol/sphere_grid.hpp"

#include "normvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>

namespace normvol {

namespace {

using V3 = Eigen::Vector3d;
using Tri = std::array<std::size_t, 3>;

double spherical_triangle_area(const V3& a, const V3& b, const V3& c) {
    const double num = std::abs(a.dot(b.cross(c)));
    const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    return 2.0 * std::atan2(num, den);
}

std::vector<std::size_t> antipode_map(const std::vector<Vec>& nodes) {
    auto key = [](const Vec& v) {
        std::array<long long, 3> k{0, 0, 0};
        for (int i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = std::llround(v[i] * 1e9);
        return k;
    };
    std::map<std::array<long long, 3>, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(key(nodes[i]), i);
    std::vector<std::size_t> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto it = index.find(key(-nodes[i]));
        if (it == index.end()) throw NumericError("sphere grid is not antipodally symmetric");
        out[i] = it->second;
    }
    return out;
}

}  // namespace

int default_resolution(int dim) { return dim == 3 ? 5 : 720; }

GridPtr default_grid(int dim) {
    static const GridPtr g2 = make_sphere_grid(2, 720);
    static const GridPtr g3 = make_sphere_grid(3, 5);
    if (dim == 2) return g2;
    if (dim == 3) return g3;
    return make_sphere_grid(dim, default_resolution(dim));
}

GridPtr make_sphere_grid(int dim, int resolution) {
    std::shared_ptr<DirectionGrid> grid(new DirectionGrid());
    grid->dim_ = dim;
    grid->resolution_ = resolution;

    if (dim == 1) {
        grid->nodes_ = {unit_axis(1, 0), -unit_axis(1, 0)};
        grid->weights_ = {1.0, 1.0};
        grid->antipode_ = {1, 0};
        grid->edges_ = {{0, 1}};
        return grid;
    }

    if (dim == 2) {
        if (resolution < 4 || resolution % 2 != 0) {
            throw InputError("2D sphere grid needs an even resolution >= 4, got " + std::to_string(resolution));
        }
        const auto n = static_cast<std::size_t>(resolution);
        const double step = 2.0 * std::numbers::pi / resolution;
        grid->nodes_.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double theta = step * static_cast<double>(k);
            grid->nodes_.push_back(vec2(std::cos(theta), std::sin(theta)));
        }
        grid->weights_.assign(n, step);
        grid->antipode_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            grid->antipode_[k] = (k + n / 2) % n;
            grid->edges_.emplace_back(k, (k + 1) % n);
        }
        return grid;
    }

    if (dim != 3) throw InputError("sphere grid dimension must be 1, 2 or 3");
    if (resolution < 0 || resolution > 7) {
        throw InputError("3D icosphere level must be in 0..7, got " + std::to_string(resolution));
    }

    std::vector<V3> pts;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-1.0, 1.0}) {
            pts.emplace_back(0.0, s1, s2 * phi);
            pts.emplace_back(s1, s2 * phi, 0.0);
            pts.emplace_back(s2 * phi, 0.0, s1);
        }
    }
    std::vector<Tri> faces;
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = i + 1; j < 12; ++j) {
            for (std::size_t k = j + 1; k < 12; ++k) {
                auto edge = [&](std::size_t a, std::size_t b) { return std::abs((pts[a] - pts[b]).norm() - 2.0) < 1e-9; };
                if (edge(i, j) && edge(j, k) && edge(i, k)) {
                    if (pts[i].dot(pts[j].cross(pts[k])) > 0) {
                        faces.push_back({i, j, k});
                    } else {
                        faces.push_back({i, k, j});
                    }
                }
            }
        }
    }
    for (auto& p : pts) p.normalize();

    grid->levels_.push_back(faces);
    for (int level = 0; level < resolution; ++level) {
        std::unordered_map<std::size_t, std::size_t> midpoint;
        auto mid = [&](std::size_t a, std::size_t b) {
            const std::size_t key = std::min(a, b) * 1000003u + std::max(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            pts.push_back((pts[a] + pts[b]).normalized());
            midpoint.emplace(key, pts.size() - 1);
            return pts.size() - 1;
        };
        std::vector<Tri> next;
        next.reserve(grid->levels_.back().size() * 4);
        for (const Tri& t : grid->levels_.back()) {
            const std::size_t ab = mid(t[0], t[1]);
            const std::size_t bc = mid(t[1], t[2]);
            const std::size_t ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({ab, t[1], bc});
            next.push_back({ca, bc, t[2]});
            next.push_back({ab, bc, ca});
        }
        grid->levels_.push_back(std::move(next));
    }

    grid->nodes_.reserve(pts.size());
    for (const auto& p : pts) grid->nodes_.push_back(vec3(p[0], p[1], p[2]));

    grid->weights_.assign(pts.size(), 0.0);
    for (const Tri& t : grid->levels_.back()) {
        const V3& a = pts[t[0]];
        const V3& b = pts[t[1]];
        const V3& c = pts[t[2]];
        const V3 g = (a + b + c).normalized();
        const V3 mab = (a + b).normalized();
        const V3 mbc = (b + c).normalized();
        const V3 mca = (c + a).normalized();
        grid->weights_[t[0]] += spherical_triangle_area(a, mab, g) + spherical_triangle_area(a, g, mca);
        grid->weights_[t[1]] += spherical_triangle_area(b, mbc, g) + spherical_triangle_area(b, g, mab);
        grid->weights_[t[2]] += spherical_triangle_area(c, mca, g) + spherical_triangle_area(c, g, mbc);
    }

    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const Tri& t : grid->levels_.back()) {
        for (int e = 0; e < 3; ++e) {
            const std::size_t a = t[static_cast<std::size_t>(e)];
            const std::size_t b = t[static_cast<std::size_t>((e + 1) % 3)];
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            if (seen.emplace(key, 0).second) grid->edges_.push_back(key);
        }
    }

    grid->antipode_ = antipode_map(grid->nodes_);
    return grid;
}

Stencil DirectionGrid::locate(const Vec& direction) const {
    Stencil s;
    if (dim_ == 1) {
        s.size = 1;
        s.index[0] = direction[0] >= 0 ? 0 : 1;
        s.weight[0] = 1.0;
        return s;
    }
    if (dim_ == 2) {
        const double step = 2.0 * std::numbers::pi / resolution_;
        double theta = std::atan2(direction[1], direction[0]);
        if (theta < 0) theta += 2.0 * std::numbers::pi;
        double pos = theta / step;
        auto k = static_cast<std::size_t>(std::floor(pos));
        double frac = pos - static_cast<double>(k);
        const auto n = nodes_.size();
        k %= n;
        s.size = 2;
        s.index = {k, (k + 1) % n, 0};
        s.weight = {1.0 - frac, frac, 0.0};
        return s;
    }

    const V3 u = to3(direction).normalized();
    auto score = [&](const Tri& t) {
        const V3& a = to3(nodes_[t[0]]);
        const V3& b = to3(nodes_[t[1]]);
        const V3& c = to3(nodes_[t[2]]);
        return std::min({a.cross(b).dot(u), b.cross(c).dot(u), c.cross(a).dot(u)});
    };
    std::size_t best = 0;
    double best_score = -1e300;
    for (std::size_t t = 0; t < levels_[0].size(); ++t) {
        const double sc = score(levels_[0][t]);
        if (sc > best_score) {
            best_score = sc;
            best = t;
        }
    }
    for (std::size_t level = 1; level < levels_.size(); ++level) {
        std::size_t child_best = 4 * best;
        best_score = -1e300;
        for (std::size_t c = 4 * best; c < 4 * best + 4; ++c) {
            const double sc = score(levels_[level][c]);
            if (sc > best_score) {
                best_score = sc;
                child_best = c;
            }
        }
        best = child_best;
    }
    const Tri& t = levels_.back()[best];
    Eigen::Matrix3d m;
    m.col(0) = to3(nodes_[t[0]]);
    m.col(1) = to3(nodes_[t[1]]);
    m.col(2) = to3(nodes_[t[2]]);
    V3 lambda = m.partialPivLu().solve(u);
    for (int i = 0; i < 3; ++i) lambda[i] = std::max(lambda[i], 0.0);
    lambda /= lambda.sum();
    s.size = 3;
    s.index = t;
    s.weight = {lambda[0], lambda[1], lambda[2]};
    return s;
}

}  // namespace normvol
