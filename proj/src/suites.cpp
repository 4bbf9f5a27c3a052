#include "normvol/suites.hpp"

#include "normvol/constants.hpp"
#include "normvol/constructions.hpp"
#include "normvol/error.hpp"
#include "normvol/functionals.hpp"
#include "normvol/girth.hpp"
#include "normvol/random_family.hpp"

#include <cmath>
#include <numbers>

namespace normvol {

namespace {

// Distinct sub-seeds for the different roles bodies play inside one trial.
constexpr std::uint64_t kBallStream = 0x5eed0001;
constexpr std::uint64_t kBodyStream = 0x5eed0002;
constexpr std::uint64_t kStarStream = 0x5eed0003;
constexpr std::uint64_t kDirStream = 0x5eed0004;

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) { return seed * 0x9E3779B97F4A7C15ull ^ stream; }

GridPtr suite_grid(const SuiteConfig& c) {
    return c.resolution > 0 ? make_sphere_grid(c.dim, c.resolution) : default_grid(c.dim);
}

StarBody suite_star(const SuiteConfig& c, std::uint64_t trial, std::uint64_t stream, const GridPtr& grid) {
    RandomFamily f;
    f.kind = FamilyKind::smooth_star;
    f.dim = c.dim;
    f.seed = mix(c.seed, stream);
    return std::get<StarBody>(generate(f, trial, grid));
}

ConvexBody suite_polytope(int dim, std::uint64_t seed, std::uint64_t trial) {
    RandomFamily f;
    f.kind = FamilyKind::polytope;
    f.dim = dim;
    f.seed = seed;
    f.vertices = 2 * (dim + 1 + static_cast<int>(trial % 5));
    return generate_convex(f, trial);
}

Vec random_direction(int dim, std::uint64_t seed, std::uint64_t trial) {
    auto rng = trial_rng(seed, trial, kDirStream);
    std::normal_distribution<double> normal;
    Vec v(dim);
    do {
        for (int i = 0; i < dim; ++i) v[i] = normal(rng);
    } while (v.norm() < 1e-6);
    return v.normalized();
}

}  // namespace

ConvexBody suite_unit_ball(int dim, std::uint64_t seed, std::uint64_t trial) {
    if (trial % 7 == 6) {
        RandomFamily f;
        f.kind = FamilyKind::ellipsoid;
        f.dim = dim;
        f.seed = mix(seed, kBallStream);
        return generate_convex(f, trial);
    }
    return suite_polytope(dim, mix(seed, kBallStream), trial);
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"dual-minkowski", "petty",         "thm2",         "isoperimetric",
                                              "dual-isoperimetric", "duality-thm13", "route-agreement", "ht-self-dual",
                                              "girth-polar",    "quotient-duality", "convexity-monotonicity"};
    return ids;
}

double default_tolerance(const std::string& check, int dim) {
    if (check == "dual-minkowski") return 1e-9;
    if (check == "petty" || check == "quotient-duality" || check == "convexity-monotonicity") return 1e-6;
    if (check == "thm2") return dim == 3 ? 5e-3 : 1e-3;
    if (check == "girth-polar") return 5e-3;
    return 1e-3;
}

VerificationReport run_suite(const SuiteConfig& c) {
    const auto& ids = suite_ids();
    if (std::find(ids.begin(), ids.end(), c.check) == ids.end()) throw InputError("unknown check id: " + c.check);
    if (c.dim != 2 && c.dim != 3) throw InputError("suites run in dimension 2 or 3");
    const double tol = c.tol.value_or(default_tolerance(c.check, c.dim));
    VerificationReport report;
    report.check = c.check;
    report.tolerance = tol;
    const GridPtr grid = suite_grid(c);

    for (std::size_t t = 0; t < c.trials; ++t) {
        VerificationReport one;
        const ConvexBody b = suite_unit_ball(c.dim, c.seed, t);
        if (c.check == "dual-minkowski") {
            const StarBody k = suite_star(c, t, kStarStream, grid);
            // Every tenth trial pairs K with a dilate of itself (equality case).
            const StarBody l = t % 10 == 9 ? k.dilated(1.7) : suite_star(c, t, kBodyStream, grid);
            one = check_dual_minkowski(k, l, tol);
        } else if (c.check == "petty") {
            one = check_petty(b, tol);
        } else if (c.check == "thm2") {
            one = check_busemann_bounds(b, tol, c.exec);
        } else if (c.check == "isoperimetric") {
            if (!c.def.is_convex()) throw InputError("isoperimetric check needs a convex definition");
            const auto iso = isoperimetrix(c.def, b, grid, c.exec);
            if (!iso.is_convex_body()) throw NumericError("isoperimetrix failed the convexity check", iso.violation);
            const ConvexBody k = suite_polytope(c.dim, mix(c.seed, kBodyStream), t);
            one = check_isoperimetric(c.def, k, b, iso.convex(), tol);
        } else if (c.check == "dual-isoperimetric") {
            const auto iso = dual_isoperimetrix(c.def, b, grid, c.exec);
            // Every fifth trial uses a dilate of the dual isoperimetrix itself.
            const Body s = t % 5 == 4 ? Body(iso.star().dilated(0.8)) : Body(suite_star(c, t, kStarStream, grid));
            one = check_dual_isoperimetric(c.def, s, b, iso.star(), tol, c.exec);
        } else if (c.check == "duality-thm13") {
            one = check_dual_isoperimetrix_duality(c.def, b, grid, tol, c.exec);
        } else if (c.check == "route-agreement") {
            const auto iso = dual_isoperimetrix(c.def, b, grid, c.exec);
            Body s;
            switch (t % 3) {
                case 0: s = suite_polytope(c.dim, mix(c.seed, kBodyStream), t); break;
                case 1: s = suite_star(c, t, kStarStream, grid); break;
                default: {
                    RandomFamily f;
                    f.kind = FamilyKind::ellipsoid;
                    f.dim = c.dim;
                    f.seed = mix(c.seed, kBodyStream);
                    s = generate_convex(f, t);
                }
            }
            one = check_route_agreement(c.def, s, b, iso.star(), tol, c.exec);
        } else if (c.check == "ht-self-dual") {
            one = check_ht_self_duality(b.is_polytope() ? b : suite_polytope(c.dim, mix(c.seed, kBallStream), t), tol);
        } else if (c.check == "girth-polar") {
            GirthOptions opt;
            opt.exec = c.exec;
            const double g = quotient_girth(b, opt).length;
            const double gp = quotient_girth(b.polar(), opt).length;
            one = single_trial("girth-polar", tol, g, gp, -std::abs(g - gp), b);
        } else if (c.check == "quotient-duality") {
            one = check_quotient_duality(b, random_direction(c.dim, c.seed, t), tol);
        } else if (c.check == "convexity-monotonicity") {
            // K = L shrunk towards the origin and cut by a random slab stays inside L.
            const ConvexBody l = suite_polytope(c.dim, mix(c.seed, kBodyStream), t);
            const Vec v = random_direction(c.dim, c.seed, t);
            const double h = 0.6 * l.support(v);
            std::vector<Vec> normals;
            std::vector<double> offsets;
            for (const auto& f : l.polytope().facets()) {
                normals.push_back(f.normal);
                offsets.push_back(0.9 * f.offset);
            }
            normals.push_back(v);
            offsets.push_back(h);
            normals.push_back(-v);
            offsets.push_back(h);
            const ConvexBody k(halfspace_intersection(normals, offsets));
            one = check_convexity_monotonicity(c.def, k, l, b, tol);
        }
        one.check = c.check;
        one.tolerance = tol;
        for (auto& r : one.trials) r.pass = r.exploratory || (std::isfinite(r.margin) && r.margin >= -tol);
        report.absorb(one, t, c.seed);
    }
    return report;
}

}  // namespace normvol
