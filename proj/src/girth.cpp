#include "normvol/girth.hpp"

#include "normvol/error.hpp"
#include "normvol/minimize.hpp"
#include "normvol/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace normvol {

double quotient_norm(const ConvexBody& b, const Vec& p, const Vec& w) {
    if (p.norm() == 0.0) throw InputError("quotient_norm: base point must be nonzero");
    if (w.norm() == 0.0) return 0.0;
    const double gw = b.gauge(w);
    const double bound = 2.0 * gw / b.gauge(p);
    const auto f = [&](double t) {
        const Vec x = w + t * p;
        return x.norm() == 0.0 ? 0.0 : b.gauge(x);
    };
    const Minimum m = golden_section(f, -bound, bound, 1e-12 * bound);
    return std::min(m.value, gw);
}

BoundaryCurve boundary_curve(const ConvexBody& b, const std::vector<Vec>& directions, bool closed) {
    BoundaryCurve c;
    c.closed = closed;
    c.points.reserve(directions.size());
    for (const auto& d : directions) c.points.push_back(d / b.gauge(d));
    return c;
}

namespace {

Vec on_boundary(const ConvexBody& b, const Vec& x) { return x / b.gauge(x); }

double segment_length(const ConvexBody& b, const Vec& x, const Vec& y) {
    const Vec step = y - x;
    if (step.norm() == 0.0) return 0.0;
    const Vec mid = 0.5 * (x + y);
    if (mid.norm() < 1e-14 * step.norm()) throw InputError("curve segment passes through the origin");
    // The chord pushed radially onto the boundary has velocity step / g(c)
    // plus a radial part, and the quotient norm ignores the radial part.
    const double g = b.gauge(mid);
    return quotient_norm(b, mid / g, step) / g;
}

GirthResult girth_2d(const ConvexBody& b, const GirthOptions& opt) {
    std::vector<double> angles;
    for (int k = 0; k < opt.boundary_points; ++k) angles.push_back(2.0 * std::numbers::pi * k / opt.boundary_points);
    if (b.is_polytope()) {
        for (const auto& v : b.polytope().vertices()) {
            double a = std::atan2(v[1], v[0]);
            if (a < 0) a += 2.0 * std::numbers::pi;
            angles.push_back(a);
        }
    }
    std::sort(angles.begin(), angles.end());
    std::vector<Vec> dirs;
    double last = -1.0;
    for (double a : angles) {
        if (a - last < 1e-12) continue;
        last = a;
        dirs.push_back(vec2(std::cos(a), std::sin(a)));
    }
    GirthResult out;
    out.curve = boundary_curve(b, dirs);
    out.length = curve_length_quotient(b, out.curve);
    out.graph_length = out.length;
    return out;
}

struct Graph {
    std::vector<Vec> points;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::vector<std::size_t> antipode;
};

Graph build_graph(const ConvexBody& b, int level, int rings, Exec exec) {
    const auto grid = make_sphere_grid(3, level);
    Graph g;
    for (const auto& u : grid->nodes()) g.points.push_back(on_boundary(b, u));
    g.adj.resize(grid->size());
    g.antipode.resize(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) g.antipode[i] = grid->antipode(i);
    // Mesh edges plus links to every node within `rings` mesh steps: the extra
    // directions cut the metrication error of graph paths in anisotropic norms.
    std::vector<std::vector<std::size_t>> nbr(grid->size());
    for (auto [a, c] : grid->edges()) {
        nbr[a].push_back(c);
        nbr[c].push_back(a);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < nbr.size(); ++a) {
        std::vector<std::size_t> reach(nbr[a]);
        for (int r = 1; r < rings; ++r) {
            const std::size_t size = reach.size();
            for (std::size_t i = 0; i < size; ++i) reach.insert(reach.end(), nbr[reach[i]].begin(), nbr[reach[i]].end());
            std::sort(reach.begin(), reach.end());
            reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
        }
        for (auto c : reach) {
            if (c > a) edges.emplace_back(a, c);
        }
    }
    const auto w = map_indices(
        edges.size(), [&](std::size_t e) { return segment_length(b, g.points[edges[e].first], g.points[edges[e].second]); }, exec);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        g.adj[edges[e].first].emplace_back(edges[e].second, w[e]);
        g.adj[edges[e].second].emplace_back(edges[e].first, w[e]);
    }
    return g;
}

// Shortest path from s to its antipode; returns the distance and, when
// requested, the node sequence.
double shortest_to_antipode(const Graph& g, std::size_t s, std::vector<std::size_t>* path) {
    const std::size_t target = g.antipode[s];
    std::vector<double> dist(g.points.size(), std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(g.points.size(), s);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        if (v == target) break;
        for (auto [u, w] : g.adj[v]) {
            if (d + w < dist[u]) {
                dist[u] = d + w;
                parent[u] = v;
                heap.emplace(dist[u], u);
            }
        }
    }
    if (path) {
        path->clear();
        for (std::size_t v = target; v != s; v = parent[v]) path->push_back(v);
        path->push_back(s);
        std::reverse(path->begin(), path->end());
    }
    return dist[target];
}

// Uniform resampling of the half curve from h[0] to -h[0] (exclusive) by
// Euclidean arclength, pushed back onto the boundary.
std::vector<Vec> resample_half(const ConvexBody& b, const std::vector<Vec>& half, int count) {
    std::vector<Vec> poly = half;
    poly.push_back(-half.front());
    std::vector<double> cum{0.0};
    for (std::size_t i = 1; i < poly.size(); ++i) cum.push_back(cum.back() + (poly[i] - poly[i - 1]).norm());
    std::vector<Vec> out;
    std::size_t seg = 0;
    for (int k = 0; k < count; ++k) {
        const double s = cum.back() * k / count;
        while (seg + 2 < cum.size() && cum[seg + 1] < s) ++seg;
        const double len = cum[seg + 1] - cum[seg];
        const double t = len > 0 ? (s - cum[seg]) / len : 0.0;
        out.push_back(on_boundary(b, poly[seg] + t * (poly[seg + 1] - poly[seg])));
    }
    return out;
}

double half_length(const ConvexBody& b, const std::vector<Vec>& half) {
    double sum = 0.0;
    for (std::size_t i = 0; i < half.size(); ++i) {
        const Vec& next = i + 1 < half.size() ? half[i + 1] : Vec(-half.front());
        sum += segment_length(b, half[i], next);
    }
    return sum;
}

// Dynamic programming through a tube around the half curve. Layer k holds
// points displaced from half[k] along the binormal, the closing layer is the
// negated first one, and arcs may skip layers. The shortest symmetric path
// through the tube replaces the curve, resampled to the same count.
void tube_refine(const ConvexBody& b, std::vector<Vec>& half, double width, int offsets, int skip, Exec exec) {
    const long m = static_cast<long>(half.size());
    const int lanes = 2 * offsets + 1;
    auto at = [&](long k) -> Vec {
        const long w = ((k % (2 * m)) + 2 * m) % (2 * m);
        return w < m ? half[static_cast<std::size_t>(w)] : Vec(-half[static_cast<std::size_t>(w - m)]);
    };
    std::vector<Vec> pts(static_cast<std::size_t>((m + 1) * lanes));
    auto node = [&](long k, int j) -> Vec& { return pts[static_cast<std::size_t>(k * lanes + j)]; };
    for (long k = 0; k < m; ++k) {
        const Eigen::Vector3d u = to3(at(k)).normalized();
        Eigen::Vector3d n = u.cross(to3(at(k + 1) - at(k - 1)));
        if (n.norm() > 0.0) n.normalize();
        for (int j = 0; j < lanes; ++j) {
            const Eigen::Vector3d x = u + (width * (j - offsets) / offsets) * n;
            node(k, j) = on_boundary(b, Vec(x));
        }
    }
    for (int j = 0; j < lanes; ++j) node(m, j) = -node(0, j);

    // Arc (k, i) -> (k + s, j) for s = 1..skip.
    struct Arc {
        long k;
        int s, i, j;
    };
    std::vector<Arc> arcs;
    for (long k = 0; k < m; ++k) {
        for (int s = 1; s <= skip && k + s <= m; ++s) {
            for (int i = 0; i < lanes; ++i) {
                for (int j = 0; j < lanes; ++j) arcs.push_back({k, s, i, j});
            }
        }
    }
    const auto w = map_indices(
        arcs.size(), [&](std::size_t a) { return segment_length(b, node(arcs[a].k, arcs[a].i), node(arcs[a].k + arcs[a].s, arcs[a].j)); },
        exec);

    const double inf = std::numeric_limits<double>::infinity();
    double best = inf;
    std::vector<std::size_t> best_path;
    std::vector<double> dist(pts.size());
    std::vector<std::size_t> parent(pts.size());
    for (int start = 0; start < lanes; ++start) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[static_cast<std::size_t>(start)] = 0.0;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const auto from = static_cast<std::size_t>(arcs[a].k * lanes + arcs[a].i);
            const auto to = static_cast<std::size_t>((arcs[a].k + arcs[a].s) * lanes + arcs[a].j);
            if (dist[from] + w[a] < dist[to]) {
                dist[to] = dist[from] + w[a];
                parent[to] = from;
            }
        }
        const auto end = static_cast<std::size_t>(m * lanes + start);
        if (dist[end] < best) {
            best = dist[end];
            best_path.clear();
            for (std::size_t v = end; v != static_cast<std::size_t>(start); v = parent[v]) best_path.push_back(v);
            best_path.push_back(static_cast<std::size_t>(start));
            std::reverse(best_path.begin(), best_path.end());
        }
    }
    std::vector<Vec> next;
    for (std::size_t i = 0; i + 1 < best_path.size(); ++i) next.push_back(pts[best_path[i]]);
    if (best < half_length(b, half)) half = resample_half(b, next, static_cast<int>(m));
}

// Line searches that displace windows of points across the curve. Window
// moves with a hat profile let the curve escape creases of a polytopal
// metric where single-point moves stall; single points also try oblique
// directions for the same reason.
int smooth(const ConvexBody& b, std::vector<Vec>& half, double tol, int max_sweeps) {
    const long m = static_cast<long>(half.size());
    auto wrap = [&](long k) { return ((k % (2 * m)) + 2 * m) % (2 * m); };
    auto at = [&](long k) -> Vec {
        const long w = wrap(k);
        return w < m ? half[static_cast<std::size_t>(w)] : Vec(-half[static_cast<std::size_t>(w - m)]);
    };
    auto put = [&](long k, const Vec& y) {
        const long w = wrap(k);
        if (w < m) {
            half[static_cast<std::size_t>(w)] = y;
        } else {
            half[static_cast<std::size_t>(w - m)] = -y;
        }
    };
    double length = half_length(b, half);
    const double spacing = 2.0 * std::numbers::pi / (2.0 * static_cast<double>(m));
    std::vector<long> widths;
    for (long w = std::max<long>(1, m / 4); w > 1; w /= 2) widths.push_back(w);
    widths.push_back(1);
    int sweeps = 0;
    while (sweeps < max_sweeps) {
        ++sweeps;
        for (long width : widths) {
            const long stride = std::max<long>(1, width / 2);
            const int turns = width == 1 ? 4 : 1;
            for (long c = 0; c < m; c += stride) {
                for (int turn = 0; turn < turns; ++turn) {
                    const long lo = c - width + 1;
                    const long hi = c + width - 1;
                    std::vector<Eigen::Vector3d> u;
                    std::vector<Eigen::Vector3d> d;
                    std::vector<double> profile;
                    for (long k = lo; k <= hi; ++k) {
                        const Eigen::Vector3d uk = to3(at(k)).normalized();
                        const Eigen::Vector3d tangent = to3(at(k + 1) - at(k - 1));
                        Eigen::Vector3d bin = uk.cross(tangent);
                        if (bin.norm() == 0.0) bin = Eigen::Vector3d::Zero();
                        else bin.normalize();
                        Eigen::Vector3d dir = bin;
                        if (turn > 0) {
                            const double a = std::numbers::pi * turn / 4.0;
                            const Eigen::Vector3d t = bin.cross(uk);
                            dir = std::cos(a) * bin + std::sin(a) * t;
                        }
                        u.push_back(uk);
                        d.push_back(dir);
                        profile.push_back(1.0 - static_cast<double>(std::abs(k - c)) / static_cast<double>(width));
                    }
                    auto moved = [&](std::size_t j, double s) { return on_boundary(b, Vec(u[j] + s * profile[j] * d[j])); };
                    auto cost = [&](double s) {
                        double sum = 0.0;
                        Vec prev = at(lo - 1);
                        for (std::size_t j = 0; j < u.size(); ++j) {
                            const Vec x = moved(j, s);
                            sum += segment_length(b, prev, x);
                            prev = x;
                        }
                        return sum + segment_length(b, prev, at(hi + 1));
                    };
                    const double h = 0.5 * spacing * static_cast<double>(width);
                    const double base = cost(0.0);
                    const Minimum best = golden_section(cost, -h, h, 1e-3 * h);
                    if (best.value < base) {
                        for (std::size_t j = 0; j < u.size(); ++j) put(lo + static_cast<long>(j), moved(j, best.argmin));
                    }
                }
            }
        }
        const double updated = half_length(b, half);
        const double gain = (length - updated) / length;
        length = updated;
        if (gain < tol) break;
    }
    return sweeps;
}

// Shortest paths from the best sources of distinct families: a source is
// skipped when it lies near a path already chosen, or near its antipodal copy.
std::vector<std::vector<std::size_t>> candidate_paths(const Graph& g, const std::vector<std::size_t>& sources,
                                                      const std::vector<std::size_t>& order, const GirthOptions& opt) {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<Eigen::Vector3d> covered;
    const double near = std::cos(opt.family_separation);
    for (std::size_t k = 0; k < order.size() && static_cast<int>(paths.size()) < opt.candidates; ++k) {
        const Eigen::Vector3d u = to3(g.points[sources[order[k]]]).normalized();
        bool seen = false;
        for (const auto& c : covered) {
            if (std::abs(u.dot(c)) > near) {
                seen = true;
                break;
            }
        }
        if (seen) continue;
        std::vector<std::size_t> path;
        shortest_to_antipode(g, sources[order[k]], &path);
        for (auto v : path) covered.push_back(to3(g.points[v]).normalized());
        paths.push_back(std::move(path));
    }
    return paths;
}

bool upper(const Vec& x) { return x[2] > 0.0 || (x[2] == 0.0 && (x[1] > 0.0 || (x[1] == 0.0 && x[0] > 0.0))); }

// Sources sorted by their distance to the antipode. A symmetric loop joins the
// upper half to the lower one, so it passes through an upper node with a
// lower neighbour, and the half loop from that node ends at its antipode:
// those nodes are the only sources needed.
void rank_sources(const Graph& g, Exec exec, std::vector<std::size_t>& sources, std::vector<double>& d,
                  std::vector<std::size_t>& order) {
    sources.clear();
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        if (!upper(g.points[i])) continue;
        for (const auto& [j, w] : g.adj[i]) {
            if (!upper(g.points[j])) {
                sources.push_back(i);
                break;
            }
        }
    }
    d = map_indices(sources.size(), [&](std::size_t k) { return shortest_to_antipode(g, sources[k], nullptr); }, exec);
    order.resize(sources.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return d[a] < d[c]; });
}

GirthResult girth_3d(const ConvexBody& b, const GirthOptions& opt) {
    const Graph g = build_graph(b, opt.mesh_level, opt.neighbour_rings, opt.exec);
    std::vector<std::size_t> sources, order;
    std::vector<double> d;
    rank_sources(g, opt.exec, sources, d, order);

    GirthResult out;
    out.mesh_level = opt.mesh_level;
    out.graph_length = 2.0 * d[order.front()];
    out.length = std::numeric_limits<double>::infinity();
    const auto paths = candidate_paths(g, sources, order, opt);
    struct Candidate {
        double length;
        int sweeps;
        std::vector<Vec> half;
    };
    const int screen_n = opt.screen_points;
    std::vector<std::vector<Vec>> seeds;
    for (const auto& path : paths) {
        std::vector<Vec> half;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) half.push_back(g.points[path[k]]);
        seeds.push_back(std::move(half));
    }
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < opt.plane_seeds; ++k) {
        const double z = 1.0 - (k + 0.5) / opt.plane_seeds;
        const double r = std::sqrt(1.0 - z * z);
        const Eigen::Vector3d n(r * std::cos(golden * k), r * std::sin(golden * k), z);
        Eigen::Vector3d u = std::abs(n[0]) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
        u = (u - u.dot(n) * n).normalized();
        const Eigen::Vector3d v = n.cross(u);
        std::vector<Vec> half;
        for (int j = 0; j < 16; ++j) {
            const double t = std::numbers::pi * j / 16;
            half.push_back(on_boundary(b, Vec(std::cos(t) * u + std::sin(t) * v)));
        }
        seeds.push_back(std::move(half));
    }
    auto refine = [&](std::vector<Vec>& half, int from, int to, bool smoothing) {
        int sweeps = 0;
        for (int n = from; n <= to; n *= 2) {
            half = resample_half(b, half, n);
            const double spacing = std::numbers::pi / n;
            for (double width : {4.0 * spacing, spacing}) tube_refine(b, half, width, opt.tube_offsets, 2, Exec::serial);
            if (smoothing) sweeps += smooth(b, half, opt.smoothing_tol, 400);
        }
        return sweeps;
    };
    auto screened = map_indices_as<Candidate>(
        seeds.size(),
        [&](std::size_t c) {
            std::vector<Vec> half = seeds[c];
            refine(half, 16, screen_n, false);
            return Candidate{2.0 * half_length(b, half), 0, half};
        },
        opt.exec);
    std::vector<std::size_t> rank(screened.size());
    for (std::size_t k = 0; k < rank.size(); ++k) rank[k] = k;
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) { return screened[x].length < screened[y].length; });
    rank.resize(std::min<std::size_t>(rank.size(), static_cast<std::size_t>(opt.finalists)));
    const auto smoothed = map_indices_as<Candidate>(
        rank.size(),
        [&](std::size_t c) {
            Candidate cand = screened[rank[c]];
            cand.sweeps = refine(cand.half, 2 * screen_n, opt.curve_points / 2, true);
            cand.length = 2.0 * half_length(b, cand.half);
            return cand;
        },
        opt.exec);
    for (const auto& c : smoothed) {
        out.smoothing_iterations += c.sweeps;
        if (c.length < out.length) {
            out.length = c.length;
            std::vector<Vec> pts = c.half;
            for (const auto& p : c.half) pts.push_back(-p);
            out.curve = BoundaryCurve{std::move(pts), true, true};
        }
    }
    return out;
}

}  // namespace

double curve_length_quotient(const ConvexBody& b, const BoundaryCurve& curve) {
    const auto& pts = curve.points;
    if (pts.size() < 2) return 0.0;
    std::vector<double> terms;
    const std::size_t segments = curve.closed ? pts.size() : pts.size() - 1;
    for (std::size_t i = 0; i < segments; ++i) terms.push_back(segment_length(b, pts[i], pts[(i + 1) % pts.size()]));
    return ordered_sum(terms);
}

GirthResult quotient_girth(const ConvexBody& b, const GirthOptions& options) {
    if (b.dim() == 2) return girth_2d(b, options);
    if (b.dim() == 3) return girth_3d(b, options);
    throw InputError("quotient_girth: dimension must be 2 or 3");
}

}  // namespace normvol
