#include "normvol/polytope.hpp"

#include "normvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace normvol {

namespace {

using V3 = Eigen::Vector3d;

double cloud_scale(std::span<const Vec> points) {
    double s = 0.0;
    for (const auto& p : points) s = std::max(s, p.norm());
    return s;
}

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Indices of the strictly convex hull vertices in counter-clockwise order.
/// Points are ordered by angle around their centroid and scanned from the
/// farthest point, which is always a hull vertex; a final circular pass drops
/// flat or reflex corners. Unlike a lexicographic sort this is insensitive to
/// rounding noise along edges parallel to a coordinate axis.
std::vector<std::size_t> angular_scan(std::span<const Eigen::Vector2d> pts, double tol) {
    if (pts.size() < 3) {
        std::vector<std::size_t> all(pts.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    std::size_t far = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if ((pts[i] - c).squaredNorm() > (pts[far] - c).squaredNorm()) far = i;
    }
    const double a0 = std::atan2(pts[far][1] - c[1], pts[far][0] - c[0]);
    auto angle = [&](std::size_t i) {
        if (i == far) return 0.0;
        double a = std::atan2(pts[i][1] - c[1], pts[i][0] - c[0]) - a0;
        while (a < 0.0) a += 2.0 * std::numbers::pi;
        while (a >= 2.0 * std::numbers::pi) a -= 2.0 * std::numbers::pi;
        return a;
    };
    std::vector<std::size_t> order;
    std::vector<double> key(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        key[i] = angle(i);
        if (i != far) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return (pts[a] - c).squaredNorm() > (pts[b] - c).squaredNorm();
    });
    std::vector<std::size_t> hull{far};
    for (std::size_t i : order) {
        while (hull.size() >= 2 && cross2(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) <= tol) hull.pop_back();
        hull.push_back(i);
    }
    bool changed = true;
    while (changed && hull.size() >= 3) {
        changed = false;
        for (std::size_t j = 0; j < hull.size() && hull.size() >= 3; ++j) {
            const std::size_t m = hull.size();
            if (cross2(pts[hull[(j + m - 1) % m]], pts[hull[j]], pts[hull[(j + 1) % m]]) <= tol) {
                hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
        }
    }
    return hull;
}

Polytope hull_1d(std::span<const Vec> points) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : points) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
    }
    const double scale = std::max(std::abs(lo), std::abs(hi));
    if (!(lo < -1e-12 * scale && hi > 1e-12 * scale) || scale == 0.0) {
        throw DegeneracyError("1D hull does not contain the origin in its interior");
    }
    std::vector<Vec> verts{Vec::Constant(1, hi), Vec::Constant(1, lo)};
    std::vector<Facet> facets(2);
    facets[0] = Facet{Vec::Constant(1, 1.0), hi, 1.0, {0}};
    facets[1] = Facet{Vec::Constant(1, -1.0), -lo, 1.0, {1}};
    return Polytope(1, std::move(verts), std::move(facets));
}

Polytope hull_2d(std::span<const Vec> points) {
    const double scale = cloud_scale(points);
    if (scale == 0.0) throw DegeneracyError("2D hull of points at the origin");
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.emplace_back(p[0], p[1]);
    const auto idx = angular_scan(pts, 1e-13 * scale * scale);
    if (idx.size() < 3) throw DegeneracyError("2D hull is lower dimensional");
    std::vector<Vec> verts;
    for (std::size_t i : idx) verts.push_back(vec2(pts[i][0], pts[i][1]));
    std::vector<Facet> facets;
    const std::size_t m = verts.size();
    double area = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& a = verts[i];
        const Vec& b = verts[(i + 1) % m];
        const Vec d = b - a;
        const double len = d.norm();
        Vec n = vec2(d[1], -d[0]) / len;
        const double off = n.dot(a);
        area += 0.5 * off * len;
        facets.push_back(Facet{n, off, len, {i, (i + 1) % m}});
    }
    if (area < 1e-12 * scale * scale) throw DegeneracyError("2D hull has (near) zero area");
    for (const auto& f : facets) {
        if (f.offset <= 1e-12 * scale) throw DegeneracyError("origin is not strictly inside the 2D hull");
    }
    return Polytope(2, std::move(verts), std::move(facets));
}

// ---------------------------------------------------------------------------
// 3D quickhull
// ---------------------------------------------------------------------------

struct QFace {
    std::array<int, 3> v{};
    V3 n;
    double d = 0.0;
    bool alive = true;
    std::vector<int> outside;
};

class QuickHull3 {
  public:
    QuickHull3(std::span<const Vec> points) {
        pts_.reserve(points.size());
        for (const auto& p : points) pts_.push_back(to3(p));
        scale_ = 0.0;
        for (const auto& p : pts_) scale_ = std::max(scale_, p.norm());
        eps_ = 1e-11 * std::max(scale_, 1e-300);
    }

    Polytope run() {
        if (pts_.size() < 4 || scale_ == 0.0) throw DegeneracyError("3D hull needs at least four points");
        build_simplex();
        assign_initial();
        while (!pending_.empty()) {
            const int f = pending_.back();
            pending_.pop_back();
            if (!faces_[static_cast<std::size_t>(f)].alive || faces_[static_cast<std::size_t>(f)].outside.empty()) continue;
            add_point(f);
        }
        return extract();
    }

  private:
    static std::uint64_t key(int a, int b) { return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b); }

    double dist(const QFace& f, int p) const { return f.n.dot(pts_[static_cast<std::size_t>(p)]) - f.d; }

    int make_face(int a, int b, int c) {
        QFace f;
        f.v = {a, b, c};
        const V3& pa = pts_[static_cast<std::size_t>(a)];
        V3 n = (pts_[static_cast<std::size_t>(b)] - pa).cross(pts_[static_cast<std::size_t>(c)] - pa);
        const double len = n.norm();
        f.n = len > 0 ? V3(n / len) : V3::Zero();
        f.d = f.n.dot(pa);
        faces_.push_back(std::move(f));
        const int id = static_cast<int>(faces_.size()) - 1;
        for (int e = 0; e < 3; ++e) edge_face_[key(faces_.back().v[e], faces_.back().v[(e + 1) % 3])] = id;
        return id;
    }

    void build_simplex() {
        const auto n = static_cast<int>(pts_.size());
        int i0 = 0;
        for (int i = 1; i < n; ++i) {
            if (pts_[static_cast<std::size_t>(i)][0] < pts_[static_cast<std::size_t>(i0)][0]) i0 = i;
        }
        auto P = [&](int i) -> const V3& { return pts_[static_cast<std::size_t>(i)]; };
        int i1 = i0;
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = (P(i) - P(i0)).norm();
            if (d > best) {
                best = d;
                i1 = i;
            }
        }
        const double tol = 1e-9 * scale_;
        if (best < tol) throw DegeneracyError("3D hull: all points coincide");
        const V3 dir = (P(i1) - P(i0)).normalized();
        int i2 = i0;
        best = 0.0;
        for (int i = 0; i < n; ++i) {
            const V3 w = P(i) - P(i0);
            const double d = (w - w.dot(dir) * dir).norm();
            if (d > best) {
                best = d;
                i2 = i;
            }
        }
        if (best < tol) throw DegeneracyError("3D hull: points are collinear");
        const V3 nrm = (P(i1) - P(i0)).cross(P(i2) - P(i0)).normalized();
        int i3 = i0;
        best = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = std::abs(nrm.dot(P(i) - P(i0)));
            if (d > best) {
                best = d;
                i3 = i;
            }
        }
        if (best < tol) throw DegeneracyError("3D hull: points are coplanar");
        if (nrm.dot(P(i3) - P(i0)) > 0) std::swap(i1, i2);
        // Orientation: i3 lies below the face (i0, i1, i2).
        make_face(i0, i1, i2);
        make_face(i0, i3, i1);
        make_face(i1, i3, i2);
        make_face(i2, i3, i0);
        used_ = {i0, i1, i2, i3};
    }

    void assign(const std::vector<int>& candidates, const std::vector<int>& targets) {
        for (int p : candidates) {
            int best_face = -1;
            double best = eps_;
            for (int f : targets) {
                const double d = dist(faces_[static_cast<std::size_t>(f)], p);
                if (d > best) {
                    best = d;
                    best_face = f;
                }
            }
            if (best_face >= 0) faces_[static_cast<std::size_t>(best_face)].outside.push_back(p);
        }
        for (int f : targets) {
            if (!faces_[static_cast<std::size_t>(f)].outside.empty()) pending_.push_back(f);
        }
    }

    void assign_initial() {
        std::vector<int> cand;
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (std::find(used_.begin(), used_.end(), i) == used_.end()) cand.push_back(i);
        }
        assign(cand, {0, 1, 2, 3});
    }

    void add_point(int start) {
        QFace& sf = faces_[static_cast<std::size_t>(start)];
        int apex = sf.outside.front();
        double far = dist(sf, apex);
        for (int p : sf.outside) {
            const double d = dist(sf, p);
            if (d > far) {
                far = d;
                apex = p;
            }
        }
        // Visible region by flood fill from the start face.
        std::vector<int> visible{start};
        std::vector<char> mark(faces_.size(), 0);
        mark[static_cast<std::size_t>(start)] = 1;
        std::vector<std::pair<int, int>> horizon;
        for (std::size_t k = 0; k < visible.size(); ++k) {
            const QFace& f = faces_[static_cast<std::size_t>(visible[k])];
            for (int e = 0; e < 3; ++e) {
                const int a = f.v[e];
                const int b = f.v[(e + 1) % 3];
                const int g = edge_face_.at(key(b, a));
                if (mark[static_cast<std::size_t>(g)] == 1) continue;
                if (mark[static_cast<std::size_t>(g)] == 0 && dist(faces_[static_cast<std::size_t>(g)], apex) > eps_) {
                    mark[static_cast<std::size_t>(g)] = 1;
                    visible.push_back(g);
                } else {
                    mark[static_cast<std::size_t>(g)] = 2;
                }
            }
        }
        // Horizon edges are edges of visible faces whose twin face is not visible.
        for (int fi : visible) {
            const QFace& f = faces_[static_cast<std::size_t>(fi)];
            for (int e = 0; e < 3; ++e) {
                const int a = f.v[e];
                const int b = f.v[(e + 1) % 3];
                if (mark[static_cast<std::size_t>(edge_face_.at(key(b, a)))] != 1) horizon.emplace_back(a, b);
            }
        }
        std::vector<int> orphans;
        for (int fi : visible) {
            QFace& f = faces_[static_cast<std::size_t>(fi)];
            f.alive = false;
            for (int p : f.outside) {
                if (p != apex) orphans.push_back(p);
            }
            f.outside.clear();
            for (int e = 0; e < 3; ++e) edge_face_.erase(key(f.v[e], f.v[(e + 1) % 3]));
        }
        std::vector<int> created;
        created.reserve(horizon.size());
        for (auto [a, b] : horizon) created.push_back(make_face(a, b, apex));
        assign(orphans, created);
    }

    Polytope extract() const {
        std::vector<int> alive;
        for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
            if (faces_[static_cast<std::size_t>(i)].alive) alive.push_back(i);
        }
        std::unordered_map<int, int> pos;
        for (std::size_t k = 0; k < alive.size(); ++k) pos[alive[k]] = static_cast<int>(k);

        auto tri_area = [&](const QFace& f) {
            return 0.5 * (pts_[static_cast<std::size_t>(f.v[1])] - pts_[static_cast<std::size_t>(f.v[0])])
                             .cross(pts_[static_cast<std::size_t>(f.v[2])] - pts_[static_cast<std::size_t>(f.v[0])])
                             .norm();
        };
        // Coplanar faces are grouped by region growing from the largest
        // faces, each neighbour tested against the seed plane. Chaining
        // pairwise tests would let sliver triangles glue together faces of
        // different planes.
        const double tol = 1e-9 * scale_;
        std::vector<std::size_t> order(alive.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> areas(alive.size());
        for (std::size_t k = 0; k < alive.size(); ++k) areas[k] = tri_area(faces_[static_cast<std::size_t>(alive[k])]);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return areas[a] > areas[b]; });
        std::vector<int> group_of(alive.size(), -1);
        std::vector<std::vector<int>> group_list;
        for (std::size_t seed : order) {
            if (group_of[seed] >= 0) continue;
            const int gid = static_cast<int>(group_list.size());
            group_list.emplace_back();
            const QFace& plane = faces_[static_cast<std::size_t>(alive[seed])];
            std::vector<std::size_t> queue{seed};
            group_of[seed] = gid;
            for (std::size_t q = 0; q < queue.size(); ++q) {
                const QFace& f = faces_[static_cast<std::size_t>(alive[queue[q]])];
                group_list.back().push_back(alive[queue[q]]);
                for (int e = 0; e < 3; ++e) {
                    const int g = edge_face_.at(key(f.v[(e + 1) % 3], f.v[e]));
                    const std::size_t gk = static_cast<std::size_t>(pos.at(g));
                    if (group_of[gk] >= 0) continue;
                    const QFace& h = faces_[static_cast<std::size_t>(g)];
                    bool coplanar = true;
                    for (int v : h.v) {
                        if (std::abs(dist(plane, v)) > tol) coplanar = false;
                    }
                    if (coplanar) {
                        group_of[gk] = gid;
                        queue.push_back(gk);
                    }
                }
            }
        }

        std::vector<Vec> verts;
        std::unordered_map<int, std::size_t> vert_index;
        std::vector<Facet> facets;
        for (const auto& members : group_list) {
            V3 n = V3::Zero();
            std::set<int> ids;
            for (int fi : members) {
                const QFace& f = faces_[static_cast<std::size_t>(fi)];
                n += tri_area(f) * f.n;
                ids.insert(f.v.begin(), f.v.end());
            }
            if (n.norm() == 0.0) continue;
            n.normalize();
            double off = -std::numeric_limits<double>::infinity();
            for (int v : ids) off = std::max(off, n.dot(pts_[static_cast<std::size_t>(v)]));
            Vec nv = vec3(n[0], n[1], n[2]);
            const Basis basis = complement_basis(nv);
            std::vector<int> idv(ids.begin(), ids.end());
            std::vector<Eigen::Vector2d> plane;
            for (int v : idv) {
                const V3& p = pts_[static_cast<std::size_t>(v)];
                plane.emplace_back(basis.col(0).dot(Vec(p)), basis.col(1).dot(Vec(p)));
            }
            const auto ring = angular_scan(plane, 1e-13 * scale_ * scale_);
            if (ring.size() < 3) continue;
            double group_area = 0.0;
            for (int fi : members) group_area += tri_area(faces_[static_cast<std::size_t>(fi)]);
            // Slivers between nearly coincident points carry no facet.
            if (group_area < 1e-14 * scale_ * scale_) continue;
            double area = 0.0;
            for (std::size_t i = 0; i < ring.size(); ++i) {
                const auto& a = plane[ring[i]];
                const auto& b = plane[ring[(i + 1) % ring.size()]];
                area += 0.5 * (a[0] * b[1] - a[1] * b[0]);
            }
            Facet facet;
            facet.normal = nv;
            facet.offset = off;
            facet.area = area;
            for (std::size_t r : ring) {
                const int v = idv[r];
                auto it = vert_index.find(v);
                if (it == vert_index.end()) {
                    const V3& p = pts_[static_cast<std::size_t>(v)];
                    verts.push_back(vec3(p[0], p[1], p[2]));
                    it = vert_index.emplace(v, verts.size() - 1).first;
                }
                facet.vertices.push_back(it->second);
            }
            facets.push_back(std::move(facet));
        }
        for (const auto& f : facets) {
            if (f.offset <= 1e-12 * scale_) throw DegeneracyError("origin is not strictly inside the 3D hull");
        }
        return Polytope(3, std::move(verts), std::move(facets));
    }

    std::vector<V3> pts_;
    std::vector<QFace> faces_;
    std::unordered_map<std::uint64_t, int> edge_face_;
    std::vector<int> pending_;
    std::vector<int> used_;
    double scale_ = 0.0;
    double eps_ = 0.0;
};

}  // namespace

Polytope::Polytope(int dim, std::vector<Vec> vertices, std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

double Polytope::support(const Vec& xi) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) best = std::max(best, v.dot(xi));
    return best;
}

double Polytope::gauge(const Vec& x) const {
    double best = 0.0;
    for (const auto& f : facets_) best = std::max(best, f.normal.dot(x) / f.offset);
    return best;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
    std::set<std::pair<std::size_t, std::size_t>> out;
    if (dim_ == 2) {
        for (const auto& f : facets_) out.emplace(std::min(f.vertices[0], f.vertices[1]), std::max(f.vertices[0], f.vertices[1]));
    } else if (dim_ == 3) {
        for (const auto& f : facets_) {
            for (std::size_t i = 0; i < f.vertices.size(); ++i) {
                const std::size_t a = f.vertices[i];
                const std::size_t b = f.vertices[(i + 1) % f.vertices.size()];
                out.emplace(std::min(a, b), std::max(a, b));
            }
        }
    }
    return {out.begin(), out.end()};
}

double Polytope::max_vertex_norm() const {
    double s = 0.0;
    for (const auto& v : vertices_) s = std::max(s, v.norm());
    return s;
}

bool Polytope::is_centrally_symmetric(double tol) const {
    const double t = tol * std::max(max_vertex_norm(), 1e-300);
    std::vector<std::size_t> order(vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices_[a][0] < vertices_[b][0]; });
    std::vector<double> xs;
    for (auto i : order) xs.push_back(vertices_[i][0]);
    for (const auto& v : vertices_) {
        auto lo = std::lower_bound(xs.begin(), xs.end(), -v[0] - t);
        bool found = false;
        for (auto it = lo; it != xs.end() && *it <= -v[0] + t; ++it) {
            const auto& w = vertices_[order[static_cast<std::size_t>(it - xs.begin())]];
            if ((v + w).norm() <= t) {
                found = true;
                break;
            }
        }
        if (found) continue;
        // -v may have been absorbed into a facet as a near-coplanar point.
        for (const auto& f : facets_) {
            if (-f.normal.dot(v) - f.offset > t) return false;
        }
    }
    return true;
}

namespace {

// Drops points within rel_tol * (max norm) of an earlier point.
std::vector<Vec> distinct_points(std::span<const Vec> points, double rel_tol) {
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, p.norm());
    const double t = rel_tol * scale;
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a][0] < points[b][0] || (points[a][0] == points[b][0] && a < b);
    });
    std::vector<char> drop(points.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (drop[order[i]]) continue;
        const Vec& p = points[order[i]];
        for (std::size_t j = i + 1; j < order.size() && points[order[j]][0] - p[0] <= t; ++j) {
            if (!drop[order[j]] && (points[order[j]] - p).norm() <= t) drop[order[j]] = 1;
        }
    }
    std::vector<Vec> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!drop[i]) out.push_back(points[i]);
    }
    return out;
}

}  // namespace

Polytope convex_hull(std::span<const Vec> points) {
    if (points.empty()) throw DegeneracyError("convex hull of an empty point set");
    const auto dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw InputError("convex hull: mixed point dimensions");
        if (!p.allFinite()) throw InputError("convex hull: non-finite coordinate");
    }
    switch (dim) {
        case 1: return hull_1d(points);
        case 2: return hull_2d(points);
        case 3: return QuickHull3(distinct_points(points, 1e-10)).run();
        default: throw InputError("convex hull supports dimensions 1..3");
    }
}

Polytope halfspace_intersection(std::span<const Vec> normals, std::span<const double> offsets) {
    if (normals.size() != offsets.size()) throw InputError("halfspace intersection: size mismatch");
    std::vector<Vec> dual;
    dual.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (!(offsets[i] > 0.0) || !std::isfinite(offsets[i])) {
            throw DegeneracyError("halfspace intersection: origin must satisfy every constraint strictly");
        }
        dual.push_back(normals[i] / offsets[i]);
    }
    Polytope dual_hull;
    try {
        dual_hull = convex_hull(dual);
    } catch (const DegeneracyError&) {
        throw DegeneracyError("halfspace intersection is unbounded or lower dimensional");
    }
    return polar(dual_hull);
}

double polytope_volume(const Polytope& p) {
    double vol = 0.0;
    for (const auto& f : p.facets()) vol += f.offset * f.area;
    return vol / p.dim();
}

Polytope transform(const Polytope& p, const Mat& a) {
    std::vector<Vec> pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back(a * v);
    return convex_hull(pts);
}

Polytope polar(const Polytope& p) {
    std::vector<Vec> pts;
    pts.reserve(p.facets().size());
    for (const auto& f : p.facets()) pts.push_back(f.normal / f.offset);
    return convex_hull(pts);
}

}  // namespace normvol
