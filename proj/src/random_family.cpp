#include "normvol/random_family.hpp"

#include "normvol/error.hpp"
#include "normvol/polytope.hpp"
#include "normvol/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace normvol {

FamilyKind parse_family_kind(std::string_view text) {
    if (text == "polytope") return FamilyKind::polytope;
    if (text == "smooth-star") return FamilyKind::smooth_star;
    if (text == "ellipsoid") return FamilyKind::ellipsoid;
    throw InputError("unknown body family: " + std::string(text));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

namespace {

Vec random_unit(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec v(dim);
    do {
        for (int i = 0; i < dim; ++i) v[i] = normal(rng);
    } while (v.norm() < 1e-6);
    return v.normalized();
}

Mat random_rotation(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Mat> qr(g);
    return qr.householderQ();
}

ConvexBody random_polytope(const RandomFamily& f, std::mt19937_64& rng) {
    if (f.vertices < 2 * f.dim) throw InputError("polytope family needs at least 2*dim vertices");
    std::uniform_real_distribution<double> jitter(-f.perturbation, f.perturbation);
    const Mat a = random_linear_map(f.dim, rng, 4.0);
    std::vector<Vec> pts;
    for (int i = 0; i < f.vertices / 2; ++i) {
        const Vec p = a * (random_unit(f.dim, rng) * (1.0 + jitter(rng)));
        pts.push_back(p);
        pts.push_back(-p);
    }
    return ConvexBody(convex_hull(pts));
}

double harmonic_2d(const std::vector<double>& c, double theta, int degree) {
    double s = 0.0;
    std::size_t k = 0;
    for (int j = 2; j <= degree; j += 2) {
        s += c[k++] * std::cos(j * theta);
        s += c[k++] * std::sin(j * theta);
    }
    return s;
}

double harmonic_3d(const std::vector<double>& c, const Vec& u, int degree) {
    const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
    const double phi = std::atan2(u[1], u[0]);
    double s = 0.0;
    std::size_t k = 0;
    for (int l = 2; l <= degree; l += 2) {
        for (int m = 0; m <= l; ++m) {
            const double y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(m), theta);
            s += c[k++] * y * std::cos(m * phi);
            if (m > 0) s += c[k++] * y * std::sin(m * phi);
        }
    }
    return s;
}

StarBody random_star(const RandomFamily& f, std::mt19937_64& rng, const GridPtr& grid) {
    std::uniform_real_distribution<double> coef(-f.amplitude, f.amplitude);
    std::size_t count = 0;
    for (int l = 2; l <= f.degree; l += 2) count += f.dim == 2 ? 2 : static_cast<std::size_t>(2 * l + 1);
    std::vector<double> c(count);
    for (auto& x : c) x = coef(rng);
    const double offset = coef(rng);
    std::vector<double> rho(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec& u = grid->node(i);
        const double s = f.dim == 2 ? harmonic_2d(c, std::atan2(u[1], u[0]), f.degree) : harmonic_3d(c, u, f.degree);
        rho[i] = std::exp(offset + s);
    }
    // Even harmonics are antipodally symmetric in exact arithmetic; make the
    // samples agree bit for bit.
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const std::size_t j = grid->antipode(i);
        if (i < j) {
            const double avg = 0.5 * (rho[i] + rho[j]);
            rho[i] = avg;
            rho[j] = avg;
        }
    }
    return StarBody(grid, std::move(rho));
}

}  // namespace

Mat random_linear_map(int dim, std::mt19937_64& rng, double max_condition) {
    std::uniform_real_distribution<double> sv(0.0, std::log(max_condition));
    std::uniform_real_distribution<double> scale(std::log(0.5), std::log(2.0));
    const Mat u = random_rotation(dim, rng);
    const Mat v = random_rotation(dim, rng);
    Mat s = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) s(i, i) = std::exp(sv(rng));
    const double min_sv = s.diagonal().minCoeff();
    s /= min_sv;
    return std::exp(scale(rng)) * u * s * v.transpose();
}

Body generate(const RandomFamily& family, std::uint64_t trial, const GridPtr& grid) {
    if (family.dim < 2 || family.dim > 3) throw InputError("random families support dimensions 2 and 3");
    if (family.kind == FamilyKind::smooth_star) {
        if (family.degree < 0 || family.degree > 6) throw InputError("smooth-star degree must be in 0..6");
        auto rng = trial_rng(family.seed, trial);
        return random_star(family, rng, grid ? grid : default_grid(family.dim));
    }
    return generate_convex(family, trial);
}

ConvexBody generate_convex(const RandomFamily& family, std::uint64_t trial) {
    if (family.dim < 2 || family.dim > 3) throw InputError("random families support dimensions 2 and 3");
    if (family.kind == FamilyKind::ellipsoid) {
        auto rng = trial_rng(family.seed, trial);
        const Mat a = random_linear_map(family.dim, rng);
        const Mat ainv = a.inverse();
        Mat q = ainv.transpose() * ainv;
        q = 0.5 * (q + q.transpose()).eval();
        return ConvexBody(Ellipsoid(q));
    }
    if (family.kind != FamilyKind::polytope) throw InputError("generate_convex: family is not convex");
    for (std::uint64_t attempt = 0; attempt <= 10; ++attempt) {
        auto rng = trial_rng(family.seed, trial, attempt);
        try {
            return random_polytope(family, rng);
        } catch (const DegeneracyError&) {
        }
    }
    throw DegeneracyError("random polytope stayed degenerate after 10 redraws");
}

}  // namespace normvol
