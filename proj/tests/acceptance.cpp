// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
//
// Usage: acceptance [--cli PATH] [--data DIR] [--only N]...
#include "normvol/constants.hpp"
#include "normvol/constructions.hpp"
#include "normvol/extremal.hpp"
#include "normvol/functionals.hpp"
#include "normvol/girth.hpp"
#include "normvol/io.hpp"
#include "normvol/minimize.hpp"
#include "normvol/oracles.hpp"
#include "normvol/quadrature.hpp"
#include "normvol/random_family.hpp"
#include "normvol/suites.hpp"
#include "shapes.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace normvol;
namespace shapes = normvol::test;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2x8 = 8.0 * std::numbers::ln2;

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(8);
    s << x;
    return s.str();
}

class Gate {
  public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what) {
        expect(std::isfinite(got) && std::abs(got - want) <= tol,
               what + ": got " + fmt(got) + ", expected " + fmt(want) + " +- " + fmt(tol));
    }
    void relative(double got, double want, double tol, const std::string& what) {
        expect(std::isfinite(got) && std::abs(got - want) <= tol * std::abs(want),
               what + ": got " + fmt(got) + ", expected " + fmt(want) + " within " + fmt(tol) + " relative");
    }
    void at_most(double got, double bound, const std::string& what) {
        expect(std::isfinite(got) && got <= bound, what + ": " + fmt(got) + " exceeds " + fmt(bound));
    }
    void report(const VerificationReport& r, const std::string& what) {
        expect(r.passed(), what + ": " + std::to_string(r.failures()) + " of " + std::to_string(r.trials.size()) +
                               " trials failed, worst margin " + fmt(r.worst_margin()));
        facts_.push_back(what + " " + std::to_string(r.trials.size()) + " trials, worst margin " + fmt(r.worst_margin()));
    }
    void fact(std::string s) { facts_.push_back(std::move(s)); }

    bool ok() const { return failures_.empty(); }
    int checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& facts() const { return facts_; }

  private:
    int checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> facts_;
};

struct Options {
    std::string cli;
    std::string data;
    std::set<int> only;
};

RandomFamily polytope_family(int dim, int vertices) {
    RandomFamily f;
    f.kind = FamilyKind::polytope;
    f.dim = dim;
    f.vertices = vertices;
    f.seed = 2024;
    return f;
}

ConvexBody random_polytope(int dim, std::uint64_t t) {
    return generate_convex(polytope_family(dim, dim == 2 ? 6 + 2 * static_cast<int>(t % 6) : 8 + 2 * static_cast<int>(t % 5)), t);
}

SuiteConfig suite(const std::string& check, VolumeDefinition def, int dim, std::size_t trials, std::uint64_t seed = 1) {
    SuiteConfig c;
    c.check = check;
    c.def = def;
    c.dim = dim;
    c.trials = trials;
    c.seed = seed;
    return c;
}

std::string def_name(VolumeDefinition d) { return std::string(d.name()); }

// Midpoint rule on [a, b]; independent of the library quadrature.
template <class F>
double midpoint(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
    return s * h;
}

double sup_over_grid(const DirectionGrid& g, const std::function<double(std::size_t)>& err) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, err(i));
    return worst;
}

// 1. Euclidean calibration.
void euclidean(Gate& g, const Options&) {
    for (int n : {2, 3}) {
        const auto b = shapes::ball(n);
        const double target = n * omega(n);
        for (auto def : VolumeDefinition::all()) {
            const std::string tag = def_name(def) + " " + std::to_string(n) + "D";
            g.relative(surface_area(def, b, b), target, 1e-3, "A(ball) " + tag);
            const auto a = dual_surface_area(def, b, b);
            g.relative(a.direct, target, 1e-3, "dual A(ball) direct " + tag);
            g.relative(a.identity, target, 1e-3, "dual A(ball) identity " + tag);
        }
    }
}

// 2. Square constant by both routes.
void square_constant(Gate& g, const Options&) {
    const auto sq = shapes::square();
    const VolumeDefinition b(VolumeId::busemann);
    const auto def_grid = dual_surface_area(b, sq, sq);
    g.near(def_grid.direct, kLn2x8, 1e-3, "direct route, default grid");
    g.near(def_grid.identity, kLn2x8, 1e-3, "identity route, default grid");
    g.near(def_grid.identity, def_grid.direct, 1e-4 * def_grid.direct, "routes agree (relative), default grid");
    // The identity route is a trapezoid rule with O(h^2) error; on a 1440-angle
    // grid the absolute gap is also below 1e-4.
    const auto fine = dual_surface_area(b, sq, sq, make_sphere_grid(2, 1440));
    g.near(fine.identity, fine.direct, 1e-4, "routes agree (absolute), 1440 angles");
    g.fact("direct " + fmt(def_grid.direct) + ", identity " + fmt(def_grid.identity) + " / " + fmt(fine.identity));
}

// 3. Route agreement.
void route_agreement(Gate& g, const Options&) {
    for (auto def : VolumeDefinition::all()) g.report(run_suite(suite("route-agreement", def, 2, 100)), def_name(def) + " 2D");
    for (auto id : {VolumeId::busemann, VolumeId::holmes_thompson})
        g.report(run_suite(suite("route-agreement", id, 3, 20)), def_name(id) + " 3D");
}

// 4. Dual isoperimetrix against the polar isoperimetrix of the dual definition.
void duality(Gate& g, const Options&) {
    for (auto id : {VolumeId::busemann, VolumeId::holmes_thompson, VolumeId::mass, VolumeId::dual_ivanov}) {
        const VolumeDefinition def(id);
        for (int n : {2, 3}) {
            const int trials = n == 2 ? 50 : 10;
            const auto grid = default_grid(n);
            VerificationReport all;
            all.check = "duality";
            all.tolerance = 1e-3;
            for (int t = 0; t < trials; ++t)
                all.absorb(check_dual_isoperimetrix_duality(def, random_polytope(n, t), grid, 1e-3), t, 2024);
            g.report(all, def_name(def) + " " + std::to_string(n) + "D");
        }
    }
}

// 5. Corollary formulas.
void corollaries(Gate& g, const Options&) {
    const auto grid = default_grid(2);
    const auto sq = shapes::square();
    const auto dual = dual_isoperimetrix(VolumeDefinition(VolumeId::busemann), sq, grid);
    const auto& rho = dual.star();
    const double err = sup_over_grid(*grid, [&](std::size_t i) {
        const Vec& u = grid->node(i);
        return std::abs(rho.rho_at(i) - 1.0 / (std::abs(u[0]) + std::abs(u[1])));
    });
    g.at_most(err, 1e-3, "busemann dual isoperimetrix of the square vs cross-polytope");
    g.expect(rho.exact().has_value(), "busemann dual isoperimetrix of the square carries an exact body");
    if (rho.exact()) g.at_most(hausdorff_distance(*rho.exact(), shapes::cross2(), grid), 1e-3, "exact body vs cross-polytope");

    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto b = suite_unit_ball(2, 5, t);
        const auto ht = dual_isoperimetrix(VolumeDefinition(VolumeId::holmes_thompson), b, grid);
        const auto ib = intersection_body(b.polar(), grid);
        const double e = sup_over_grid(*grid, [&](std::size_t i) {
            const double want = ib.star().rho_at(i) / omega(1);
            // The chord of polar(B) orthogonal to u has length 2 / h_B(u rotated by 90 degrees).
            const Vec& u = grid->node(i);
            const double chord = 2.0 / b.support(vec2(-u[1], u[0]));
            return std::max(std::abs(ht.star().rho_at(i) - want), std::abs(want - chord / omega(1))) / want;
        });
        worst = std::max(worst, e);
    }
    g.at_most(worst, 1e-3, "holmes-thompson dual isoperimetrix vs I(polar B)/omega_1 on 20 bodies");
    g.fact("square sup error " + fmt(err) + ", holmes-thompson worst relative error " + fmt(worst));
}

// 6. Bounds for the Busemann dual surface area of unit balls.
void busemann_bounds(Gate& g, const Options&) {
    const auto r2 = run_suite(suite("thm2", VolumeId::busemann, 2, 200));
    g.report(r2, "2D");
    double mean = 0.0;
    for (const auto& t : r2.trials) mean += t.lhs / r2.trials.size();
    g.expect(mean >= std::numbers::sqrt2 * kPi && mean <= 2 * kPi, "family mean " + fmt(mean) + " inside the bounds");
    g.fact("2D family mean " + fmt(mean));
    g.report(run_suite(suite("thm2", VolumeId::busemann, 3, 50)), "3D");

    g.near(check_busemann_bounds(shapes::ellipse(2.0, 0.5)).trials[0].lhs, 2 * kPi, 1e-3, "ellipse equality");
    Mat q = Mat::Zero(3, 3);
    q.diagonal() << 1.0, 0.25, 4.0;
    g.near(check_busemann_bounds(ConvexBody(Ellipsoid(q))).trials[0].lhs, 4 * kPi, 1e-3, "ellipsoid equality");

    // Busemann surface area of the unit circle is at most 8, attained by the square.
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto b = suite_unit_ball(2, 1, t);
        worst = std::max(worst, surface_area(VolumeId::busemann, b, b));
    }
    g.at_most(worst, 8.0 + 1e-9, "busemann A(B) <= 8 on 200 unit balls");
    g.near(surface_area(VolumeId::busemann, shapes::square(), shapes::square()), 8.0, 1e-12, "busemann A(square) = 8");
    g.fact("largest busemann A(B) " + fmt(worst));
}

// 7. Dual Minkowski inequality.
void dual_minkowski(Gate& g, const Options&) {
    g.report(run_suite(suite("dual-minkowski", VolumeId::busemann, 2, 500)), "2D");
    g.report(run_suite(suite("dual-minkowski", VolumeId::busemann, 3, 100)), "3D");
    for (int n : {2, 3}) {
        RandomFamily f;
        f.kind = FamilyKind::smooth_star;
        f.dim = n;
        f.seed = 31;
        for (int t = 0; t < 10; ++t) {
            const auto k = std::get<StarBody>(generate(f, t));
            for (double s : {0.3, 1.7, 4.0}) {
                const auto r = check_dual_minkowski(k, k.dilated(s), 1e-6);
                g.at_most(std::abs(r.trials[0].margin), 1e-6, "dilate equality " + std::to_string(n) + "D trial " + std::to_string(t));
            }
        }
    }
}

// 8. Petty projection inequality.
void petty(Gate& g, const Options&) {
    for (int n : {2, 3}) {
        VerificationReport all;
        all.check = "petty";
        all.tolerance = 1e-6;
        for (int t = 0; t < 100; ++t) all.absorb(check_petty(random_polytope(n, t), 1e-6), t, 2024);
        g.report(all, std::to_string(n) + "D polytopes");
    }
    const auto sq = check_petty(shapes::square()).trials[0];
    g.near(sq.lhs, 2.0, 1e-12, "square lhs");
    g.near(sq.rhs, kPi * kPi / 4, 1e-12, "square bound");
    g.near(check_petty(shapes::ball(2)).trials[0].lhs, kPi * kPi / 4, 1e-9, "disc equality");
}

// 9. Dual isoperimetric maximality.
void dual_isoperimetric(Gate& g, const Options&) {
    for (auto def : VolumeDefinition::all())
        g.report(run_suite(suite("dual-isoperimetric", def, 2, 30)), def_name(def) + " 2D");
    for (auto id : {VolumeId::busemann, VolumeId::holmes_thompson})
        g.report(run_suite(suite("dual-isoperimetric", id, 3, 10)), def_name(id) + " 3D");

    for (int n : {2, 3}) {
        const auto grid = default_grid(n);
        for (int t = 0; t < 6; ++t) {
            const VolumeDefinition def = VolumeDefinition::all()[t];
            const auto b = suite_unit_ball(n, 9, t);
            const auto iso = dual_isoperimetrix(def, b, grid).star();
            for (double s : {0.5, 1.3}) {
                const auto r = check_dual_isoperimetric(def, iso.dilated(s), b, iso);
                g.at_most(std::abs(r.trials[0].margin), 1e-3,
                          "equality at a dilate, " + def_name(def) + " " + std::to_string(n) + "D");
            }
        }
    }
    const auto sq = shapes::square();
    const auto iso = dual_isoperimetrix(VolumeId::busemann, sq, default_grid(2)).star();
    const auto r = check_dual_isoperimetric(VolumeId::busemann, shapes::cross2(), sq, iso).trials[0];
    g.near(r.lhs, 4.0, 1e-6, "square/cross-polytope dual surface area");
    g.near(r.rhs, 4.0, 1e-6, "square/cross-polytope bound");
}

// 10. Quotient girth.
void girth(Gate& g, const Options&) {
    const double cap = 2 * kPi + 5e-3;
    const auto sq = quotient_girth(shapes::square()).length;
    g.near(sq, kLn2x8, 1e-3, "square");
    g.near(quotient_girth(shapes::ball(2)).length, 2 * kPi, 2e-3, "disc");
    const auto b3 = quotient_girth(shapes::ball(3));
    g.expect(b3.mesh_level == 4, "3D mesh level 4");
    g.near(b3.length, 2 * kPi, 2e-3, "3D ball");

    const double cube = quotient_girth(shapes::cube()).length;
    const double cross = quotient_girth(shapes::cross3()).length;
    g.near(cube, cross, 5e-3, "cube vs octahedron");
    g.at_most(cube, cap, "cube");
    g.at_most(cross, cap, "octahedron");
    g.fact("cube " + fmt(cube) + ", octahedron " + fmt(cross) + ", 3D ball " + fmt(b3.length));

    for (int n : {2, 3}) {
        const auto r = run_suite(suite("girth-polar", VolumeId::busemann, n, n == 2 ? 40 : 3));
        g.report(r, "girth(B) = girth(polar B) " + std::to_string(n) + "D");
        double worst = 0.0;
        for (const auto& t : r.trials) worst = std::max({worst, t.lhs, t.rhs});
        g.at_most(worst, cap, "largest girth " + std::to_string(n) + "D");
    }
}

// 11. Holmes-Thompson self-duality.
void ht_self_duality(Gate& g, const Options&) {
    VerificationReport all;
    all.check = "ht-self-dual";
    all.tolerance = 1e-3;
    for (int t = 0; t < 50; ++t) all.absorb(check_ht_self_duality(random_polytope(2, t), 1e-3), t, 2024);
    g.report(all, "2D polytopes");
    const VolumeDefinition ht(VolumeId::holmes_thompson);
    g.near(surface_area(ht, shapes::square(), shapes::square()), 8.0, 1e-6, "square in its own norm");
    g.near(surface_area(ht, shapes::cross2(), shapes::cross2()), 8.0, 1e-6, "cross-polytope in the dual norm");
}

// 12. Axioms of a definition of volume.
void axioms(Gate& g, const Options&) {
    for (int n : {2, 3}) {
        RandomFamily ef;
        ef.kind = FamilyKind::ellipsoid;
        ef.dim = n;
        ef.seed = 12;
        const int trials = n == 2 ? 20 : 5;
        for (auto def : VolumeDefinition::all()) {
            const std::string tag = def_name(def) + " " + std::to_string(n) + "D";
            double inv = 0.0, inv2 = 0.0, norm = 0.0, mono = 0.0;
            for (int t = 0; t < trials; ++t) {
                norm = std::max(norm, std::abs(eval_V(def, generate_convex(ef, t)) - omega(n)));
                const auto k = random_polytope(n, 100 + t);
                const double v = eval_V(def, k);
                auto rng = trial_rng(77, t);
                const Mat a = random_linear_map(n, rng, 5.0);
                inv = std::max(inv, std::abs(eval_V(def, k.transform(a)) - v) / v);
                const double twice = volume_product(k) / eval_dual_generic(def, k.polar());
                inv2 = std::max(inv2, std::abs(twice - v) / v);

                // K = L cut by a slab through half its width: V/L cannot drop.
                std::vector<Vec> normals;
                std::vector<double> offsets;
                for (const auto& f : k.polytope().facets()) {
                    normals.push_back(f.normal);
                    offsets.push_back(f.offset);
                }
                const Vec d = unit_axis(n, t % n);
                for (double s : {1.0, -1.0}) {
                    normals.push_back(s * d);
                    offsets.push_back(0.5 * k.support(d));
                }
                const ConvexBody inner(halfspace_intersection(normals, offsets));
                mono = std::max(mono, volume_ratio(def, k) - volume_ratio(def, inner));
            }
            g.at_most(norm, 1e-9, "normalization " + tag);
            g.at_most(inv, 1e-3, "linear invariance " + tag);
            g.at_most(mono, 1e-6, "monotone ratio " + tag);
            g.at_most(inv2, 1e-6, "duality involution " + tag);
        }
    }
}

struct Cli {
    int status = -1;
    std::string out;
};

Cli run_cli(const Options& o, const std::string& args) {
    Cli r;
    const std::string cmd = "\"" + o.cli + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// 13. Worked examples against their independent references.
void concordance(Gate& g, const Options& o) {
    const auto sq = shapes::square();
    const auto cr = shapes::cross2();
    const auto disc = shapes::ball(2);
    const auto grid2 = default_grid(2);

    // Geometry core.
    {
        const auto g33 = make_sphere_grid(3, 3);
        double s = 0.0;
        for (double x : g33->weights()) s += x;
        g.near(s, 4 * kPi, 1e-6, "icosphere weight sum");
    }
    {
        auto rng = trial_rng(13, 0);
        std::uniform_real_distribution<double> ang(0.0, kPi);
        std::vector<double> th;
        for (int i = 0; i < 50; ++i) th.push_back(ang(rng));
        std::vector<Vec> pts;
        for (double t : th) {
            pts.push_back(vec2(std::cos(t), std::sin(t)));
            pts.push_back(-pts.back());
        }
        const ConvexBody k(convex_hull(pts));
        std::sort(th.begin(), th.end());
        std::vector<double> all = th;
        for (double t : th) all.push_back(t + kPi);
        double shoelace = 0.0;
        for (std::size_t i = 0; i < all.size(); ++i) shoelace += 0.5 * std::sin(all[(i + 1) % all.size()] - all[i]);
        g.near(k.volume(), shoelace, 1e-12, "hull of 100 points on the circle vs shoelace area");
        g.expect(k.volume() < kPi && kPi - k.volume() < 0.05, "inscribed hull area below pi");
        g.near(volume(sample_radial(k, make_sphere_grid(2, 20000))), k.volume(), 1e-4, "radial wrap volume");
    }
    g.near(shapes::cross3().volume(), 8.0 / 6.0, 1e-12, "3D cross-polytope volume");
    {
        auto f = [](double t) { return std::max(std::abs(1 + t), std::abs(t)); };
        const auto m = minimize_1d_convex(f, -2.0, 2.0, 1e-10);
        double brute = 1e300;
        for (int i = 0; i <= 40000; ++i) brute = std::min(brute, f(-2.0 + 4.0 * i / 40000));
        g.near(m.value, brute, 1e-6, "golden section vs dense grid");
        g.near(m.argmin, -0.5, 1e-6, "golden section argmin");
    }

    // Bodies.
    {
        Mat q = Mat::Zero(2, 2);
        q.diagonal() << 1.0, 4.0;
        const Ellipsoid e(q);
        double brute = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const double t = 2 * kPi * i / 100000;
            brute = std::max(brute, 0.5 * std::sin(t));
        }
        g.near(e.support(vec2(0, 1)), brute, 1e-9, "ellipse support");
        const Vec u = vec2(1, 1) / std::sqrt(2.0);
        g.near(cr.radial(u), 1.0 / std::sqrt(2.0), 1e-12, "cross-polytope radial");
        const Vec along = vec2(1, -1) / std::sqrt(2.0);
        g.near(section_volume(sq, u), 2 * sq.radial(along), 1e-12, "square chord");
        double lo = 1e300, hi = -1e300;
        for (const auto& v : sq.polytope().vertices()) {
            lo = std::min(lo, v.dot(along));
            hi = std::max(hi, v.dot(along));
        }
        g.near(shadow_volume(sq, u), hi - lo, 1e-12, "square shadow span");
        g.near(duality_check_quotient(sq, vec2(0, 1)), 0.0, 1e-12, "quotient duality of the square");
        for (int t = 0; t < 20; ++t) {
            const auto k = random_polytope(2, 300 + t);
            const auto back = k.polar().polar();
            double worst = 0.0;
            for (const auto& v : k.polytope().vertices()) {
                double best = 1e300;
                for (const auto& w : back.polytope().vertices()) best = std::min(best, (v - w).norm());
                worst = std::max(worst, best);
            }
            g.expect(worst <= 1e-9 && back.polytope().vertices().size() == k.polytope().vertices().size(),
                     "bipolar vertex set, trial " + std::to_string(t));
        }
        g.report(run_suite(suite("quotient-duality", VolumeId::busemann, 2, 50)), "quotient duality 2D");
        g.report(run_suite(suite("quotient-duality", VolumeId::busemann, 3, 50)), "quotient duality 3D");
    }

    // Volume definitions.
    {
        const double brute_cross_sq = oracles::brute_cross_polytope(sq, 360);
        const double vp = sq.volume() * polar_volume(sq);
        g.near(eval_V(VolumeId::holmes_thompson, sq), vp / kPi, 1e-12, "holmes-thompson square");
        g.near(vp / kPi, 8 / kPi, 1e-12, "square volume product");
        g.near(eval_V(VolumeId::mass, sq), 2.0 * sq.volume() / brute_cross_sq, 1e-2, "mass square vs brute force");
        g.near(eval_V(VolumeId::mass, sq), 2.0, 1e-9, "mass square");
        const auto john = john_ellipsoid(sq);
        const auto loew = loewner_ellipsoid(sq);
        double inside = 0.0;
        for (const auto& f : sq.polytope().facets()) inside = std::max(inside, john.ellipsoid.support(f.normal) / f.offset);
        g.near(inside, 1.0, 1e-6, "John ellipse touches the square from inside");
        double outside = 0.0;
        for (const auto& v : sq.polytope().vertices()) outside = std::max(outside, loew.ellipsoid.gauge(v));
        g.near(outside, 1.0, 1e-6, "Loewner ellipse passes through the corners");
        g.near(john.ellipsoid.volume(), kPi, 1e-6, "John ellipse of the square");
        g.near(loew.ellipsoid.volume(), 2 * kPi, 1e-6, "Loewner ellipse of the square");
        g.near(eval_V(VolumeId::ivanov, sq), kPi * 4 / john.ellipsoid.volume(), 1e-9, "ivanov square");
        g.near(eval_V(VolumeId::ivanov, sq), 4.0, 1e-6, "ivanov square value");
        g.near(eval_V(VolumeId::dual_ivanov, sq), kPi * 4 / loew.ellipsoid.volume(), 1e-9, "dual-ivanov square");
        g.near(eval_V(VolumeId::dual_ivanov, sq), 2.0, 1e-6, "dual-ivanov square value");
        g.near(eval_dual_generic(VolumeId::busemann, sq), 8 / kPi, 1e-9, "dual of busemann on the square");
        const double mass_cross = 2.0 * cr.volume() / oracles::brute_cross_polytope(cr, 360);
        g.near(eval_dual_generic(VolumeId::mass, sq), vp / mass_cross, 2e-2, "dual of mass on the square vs brute force");
        g.near(eval_dual_generic(VolumeId::mass, sq), eval_V(VolumeId::mass_star, sq), 1e-9, "dual of mass = mass-star");
        g.near(eval_V(VolumeId::mass_star, sq), 4.0, 1e-9, "mass-star square");

        g.near(density_factor(VolumeId::busemann, sq, vec2(0, 1)), omega(1) / section_volume(sq, vec2(0, 1)), 1e-12,
               "busemann density on span(e1)");
        g.near(density_factor(VolumeId::busemann, sq, vec2(0, 1)), 1.0, 1e-12, "busemann density value");
        g.near(density_factor(VolumeId::holmes_thompson, shapes::cube(), vec3(0, 0, 1)), 2 / kPi, 1e-9,
               "holmes-thompson density of the cube");
        g.near(quotient_density_factor(VolumeId::busemann, sq, vec2(1, 0)), omega(1) / shadow_volume(sq, vec2(1, 0)), 1e-12,
               "busemann quotient density");
        g.near(quotient_density_factor(VolumeId::holmes_thompson, sq, vec2(1, 0)), 1.0, 1e-12, "holmes-thompson quotient density");

        const auto oct = shapes::cross3();
        const auto j3 = john_ellipsoid(oct);
        double lo = 1e300, hi = 0.0;
        for (const auto& f : oct.polytope().facets()) {
            const double r = j3.ellipsoid.support(f.normal) / f.offset;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        g.expect(hi <= 1 + 1e-6 && lo >= 1 - 1e-6, "John ball of the octahedron touches all eight facets");
        g.near(j3.ellipsoid.volume(), omega(3) / std::pow(3.0, 1.5), 1e-6, "John ball radius 1/sqrt(3)");

        g.near(max_inscribed_cross_polytope(disc).volume, oracles::brute_cross_polytope(disc, 360), 1e-2, "disc inscribed square vs brute force");
        g.near(max_inscribed_cross_polytope(disc).volume, 2.0, 1e-4, "disc inscribed square");
        g.near(min_circumscribed_parallelotope(disc).volume, oracles::brute_parallelotope(disc, 360), 1e-2,
               "disc circumscribed square vs brute force");
        g.near(min_circumscribed_parallelotope(disc).volume, 4.0, 1e-4, "disc circumscribed square");
        g.near(max_inscribed_cross_polytope(sq).volume, 4.0, 1e-12, "square inscribed cross-polytope");
        g.near(min_circumscribed_parallelotope(sq).volume, 4.0, 1e-12, "square circumscribed parallelotope");
    }

    // Constructions.
    {
        const auto is = intersection_body(sq, grid2);
        const std::size_t e2 = grid2->size() / 4;
        g.near(is.star().rho_at(e2), 2 * sq.radial(vec2(1, 0)), 1e-12, "intersection body of the square at e2");
        Mat q = Mat::Zero(2, 2);
        q << 1.0, 0.3, 0.3, 0.5;
        const auto ie = intersection_body(ConvexBody(Ellipsoid(q)), grid2);
        Eigen::MatrixXd a(grid2->size(), 3);
        Eigen::VectorXd y(grid2->size());
        for (std::size_t i = 0; i < grid2->size(); ++i) {
            const Vec& u = grid2->node(i);
            a.row(i) << u[0] * u[0], 2 * u[0] * u[1], u[1] * u[1];
            y[i] = std::pow(ie.star().rho_at(i), -2);
        }
        const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
        g.at_most((a * c - y).cwiseAbs().maxCoeff(), 1e-6, "intersection body of an ellipse is an ellipse");

        auto rng = trial_rng(8, 0);
        std::normal_distribution<double> nd;
        const auto pc = projection_body(shapes::cube(), default_grid(3));
        const auto ps = projection_body(sq, grid2);
        for (int i = 0; i < 20; ++i) {
            Vec v = vec3(nd(rng), nd(rng), nd(rng));
            v.normalize();
            g.near(pc.convex().support(v), 4 * v.lpNorm<1>(), 1e-9, "projection body of the cube");
            g.near(pc.convex().support(v), shadow_volume(shapes::cube(), v), 1e-9, "projection body vs shadow area");
            Vec w = vec2(nd(rng), nd(rng));
            w.normalize();
            g.near(ps.convex().support(w), 2 * w.lpNorm<1>(), 1e-9, "projection body of the square");
        }

        const auto ib = isoperimetrix(VolumeId::busemann, shapes::ball(2), grid2);
        const auto isq = isoperimetrix(VolumeId::busemann, sq, grid2);
        const auto iht = isoperimetrix(VolumeId::holmes_thompson, sq, grid2);
        const auto pcross = projection_body(cr, grid2);
        double eb = 0.0, es = 0.0, eh = 0.0;
        for (std::size_t i = 0; i < grid2->size(); ++i) {
            const Vec& u = grid2->node(i);
            eb = std::max(eb, std::abs(ib.convex().support(u) - 1.0));
            es = std::max(es, std::abs(isq.convex().support(u) - omega(1) / is.star().rho_at(i)));
            eh = std::max(eh, std::abs(iht.convex().support(u) - pcross.convex().support(u) / omega(1)));
        }
        g.at_most(eb, 1e-6, "busemann isoperimetrix of the disc");
        g.at_most(es, 1e-6, "busemann isoperimetrix of the square vs polar intersection body");
        g.at_most(eh, 1e-6, "holmes-thompson isoperimetrix of the square vs projection body");

        const auto dht = dual_isoperimetrix(VolumeId::holmes_thompson, sq, grid2);
        const auto icr = intersection_body(cr, grid2);
        const double ed = sup_over_grid(*grid2, [&](std::size_t i) {
            return std::abs(dht.star().rho_at(i) - icr.star().rho_at(i) / omega(1));
        });
        g.at_most(ed, 1e-3, "holmes-thompson dual isoperimetrix of the square vs I(cross)/omega_1");
    }

    // Functionals.
    {
        const double t = 1e-6;
        std::vector<Vec> sums;
        for (const auto& a : sq.polytope().vertices())
            for (const auto& b : cr.polytope().vertices()) sums.push_back(a + t * b);
        const double fd = (ConvexBody(convex_hull(sums)).volume() - sq.volume()) / (2 * t);
        g.near(mixed_volume_hyper(sq, cr), fd, 1e-5, "mixed volume vs Minkowski difference quotient");
        g.near(mixed_volume_hyper(sq, cr), 4.0, 1e-12, "mixed volume of square and cross-polytope");
        const auto poly = shapes::regular_polygon(1024);
        double half_perimeter = 0.0;
        const auto pv = poly.polytope().vertices();
        for (std::size_t i = 0; i < pv.size(); ++i) half_perimeter += 0.5 * (pv[(i + 1) % pv.size()] - pv[i]).norm();
        g.near(mixed_volume_hyper(poly, disc), half_perimeter, 1e-9, "mixed volume with the disc is half the perimeter");
        g.near(mixed_volume_hyper(poly, disc), kPi, 1e-3, "mixed volume with the disc");

        const auto dual = dual_isoperimetrix(VolumeId::busemann, sq, grid2).star();
        const double analytic = 0.5 * 8 * midpoint([](double th) { return 1.0 / (std::cos(th) * (std::cos(th) + std::sin(th))); },
                                                  0.0, kPi / 4, 200000);
        g.near(analytic, 4 * std::numbers::ln2, 1e-8, "analytic dual mixed volume integral");
        g.near(dual_mixed_volume_hyper(sample_radial(sq, grid2), dual), analytic, 1e-3, "dual mixed volume of square and cross");

        g.near(surface_area(VolumeId::busemann, sq, sq), 8.0, 1e-12, "busemann A(square)");
        const double a8 = 8 * midpoint([](double th) { return 1.0 / (std::cos(th) * std::cos(th) * (1 + std::tan(th))); }, 0.0,
                                       kPi / 4, 200000);
        g.near(a8, kLn2x8, 1e-8, "analytic square integral");
        g.near(dual_surface_area_direct(VolumeId::busemann, sq, sq), a8, 1e-3, "dual surface area of the square");
        const double a4 = midpoint([](double th) { return std::pow(std::abs(std::cos(th)) + std::abs(std::sin(th)), -2); }, 0.0,
                                   2 * kPi, 400000);
        g.near(a4, 4.0, 1e-8, "analytic cross-polytope integral");
        g.near(dual_surface_area_direct(VolumeId::busemann, cr, sq), a4, 1e-6, "dual surface area of the cross-polytope");

        const auto iso_e = check_isoperimetric(VolumeId::busemann, sq, disc, disc).trials[0];
        g.near(iso_e.lhs, 16.0, 1e-9, "Euclidean isoperimetric quotient of the square");
        g.near(iso_e.rhs, 4 * kPi, 1e-9, "Euclidean isoperimetric quotient of the disc");
        const auto dual_sq = check_dual_isoperimetric(VolumeId::busemann, sq, sq, dual);
        g.expect(dual_sq.passed() && dual_sq.trials[0].rhs > 5.65 && dual_sq.trials[0].rhs < 5.66, "8 ln 2 <= 4 sqrt(2)");
        const auto mono = check_convexity_monotonicity(VolumeId::busemann, sq, sq.scaled(1.5), sq).trials[0];
        g.near(mono.lhs, 8.0, 1e-12, "surface area of the inner square");
        g.near(mono.rhs, 12.0, 1e-12, "surface area of the outer square");
        g.report(run_suite(suite("convexity-monotonicity", VolumeId::holmes_thompson, 2, 100)), "holmes-thompson nested pairs");
        g.report(run_suite(suite("petty", VolumeId::busemann, 2, 100)), "petty on random polygons");
    }

    // Girth.
    {
        const double qn = quotient_norm(sq, vec2(0, 1), vec2(1, 0));
        const double brute = oracles::brute_quotient_norm(sq, vec2(0, 1), vec2(1, 0), 10000);
        g.near(qn, brute, 1e-3, "quotient norm vs dense grid");
        g.near(brute, 1.0, 1e-3, "quotient norm of e1 at e2 on the square");
        std::vector<Vec> dirs;
        for (int i = 0; i < 4096; ++i) dirs.push_back(vec2(std::cos(2 * kPi * i / 4096), std::sin(2 * kPi * i / 4096)));
        g.near(curve_length_quotient(sq, boundary_curve(sq, dirs)), kLn2x8, 1e-3, "quotient length of the square boundary");
    }

    // Oracles.
    {
        int inside = 0;
        for (int s = 0; s < 100; ++s) {
            const auto k = random_polytope(2, 500 + s);
            const auto e = oracles::mc_volume(k, 20000, s);
            if (std::abs(e.estimate - k.volume()) <= 4 * e.stderr_) ++inside;
        }
        g.expect(inside >= 95, "Monte Carlo within 4 sigma in " + std::to_string(inside) + " of 100 seeds");
        g.near(oracles::brute_cross_polytope(sq, 360), 4.0, 1e-2, "brute-force cross-polytope in the square");
        g.near(oracles::brute_parallelotope(disc, 360), 4.0, 1e-2, "brute-force parallelotope around the disc");
    }

    // Command line.
    if (o.cli.empty() || o.data.empty()) {
        g.expect(false, "command-line checks need --cli and --data");
        return;
    }
    {
        const std::string sqf = "\"" + o.data + "/square.json\"";
        auto r = run_cli(o, "compute dual-isoperimetrix --def busemann --body " + sqf);
        g.expect(r.status == 0, "compute dual-isoperimetrix exits 0");
        try {
            const auto j = io::json::parse(r.out);
            const auto exact = io::body_from_json(j.at("exact"));
            g.at_most(hausdorff_distance(std::get<ConvexBody>(exact), cr, grid2), 1e-9, "command-line dual isoperimetrix is the cross-polytope");
        } catch (const std::exception& e) {
            g.expect(false, std::string("dual isoperimetrix JSON: ") + e.what());
        }
        r = run_cli(o, "verify thm2 --dim 2 --trials 200 --seed 1");
        g.expect(r.status == 0 && std::count(r.out.begin(), r.out.end(), '\n') == 201, "verify thm2: exit 0 and 200 rows");
        r = run_cli(o, "verify duality-thm13 --def busemann --dim 2 --trials 50");
        g.expect(r.status == 0, "verify duality-thm13 exits 0");
        r = run_cli(o, "verify petty --dim 3 --trials 50");
        g.expect(r.status == 0, "verify petty 3D exits 0");
        r = run_cli(o, "plot --body " + sqf);
        g.expect(r.status == 0 && r.out.find("<svg") != std::string::npos && r.out.find("dual isoperimetrix") != std::string::npos &&
                     r.out.find("isoperimetrix") != std::string::npos,
                 "plot of the square has all three layers");
    }
}

struct Criterion {
    int id;
    const char* title;
    void (*run)(Gate&, const Options&);
};

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) opt.cli = argv[++i];
        else if (a == "--data" && i + 1 < argc) opt.data = argv[++i];
        else if (a == "--only" && i + 1 < argc) opt.only.insert(std::stoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--cli PATH] [--data DIR] [--only N]...\n";
            return 2;
        }
    }
    const std::vector<Criterion> criteria{
        {1, "Euclidean calibration", euclidean},
        {2, "square constant 8 ln 2 by both routes", square_constant},
        {3, "direct and identity routes agree", route_agreement},
        {4, "dual isoperimetrix is the polar isoperimetrix of the dual definition", duality},
        {5, "dual isoperimetrix formulas", corollaries},
        {6, "bounds on the busemann dual surface area of unit balls", busemann_bounds},
        {7, "dual Minkowski inequality", dual_minkowski},
        {8, "Petty projection inequality", petty},
        {9, "dual isoperimetric maximality", dual_isoperimetric},
        {10, "quotient girth", girth},
        {11, "holmes-thompson surface area self-duality", ht_self_duality},
        {12, "axioms of the six definitions", axioms},
        {13, "worked examples against independent references", concordance},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        if (!opt.only.empty() && !opt.only.count(c.id)) continue;
        Gate g;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(g, opt);
        } catch (const std::exception& e) {
            g.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%d checks, %.1f s)\n", g.ok() ? "PASS" : "FAIL", c.id, c.title, g.checks(), secs);
        for (const auto& f : g.facts()) std::printf("        %s\n", f.c_str());
        for (const auto& f : g.failures()) std::printf("    !!  %s\n", f.c_str());
        std::fflush(stdout);
        if (!g.ok()) ++failed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %d failed, %.1f s\n", failed ? "FAIL" : "PASS", failed, total);
    return failed ? 1 : 0;
}
