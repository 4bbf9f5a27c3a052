#include "normvol/body.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"
#include "normvol/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace normvol {

namespace {

void require_nonzero(const Vec& x, const char* what) {
    if (!(x.norm() > 0.0) || !x.allFinite()) throw InputError(std::string(what) + ": direction must be a finite nonzero vector");
}

}  // namespace

ConvexBody::ConvexBody(Polytope p) {
    if (!p.is_centrally_symmetric(1e-9)) throw InputError("convex body: polytope is not centrally symmetric");
    if (polytope_volume(p) < 1e-12) throw DegeneracyError("convex body: volume below 1e-12");
    rep_ = std::move(p);
}

ConvexBody::ConvexBody(Ellipsoid e) {
    if (e.volume() < 1e-12) throw DegeneracyError("convex body: volume below 1e-12");
    rep_ = std::move(e);
}

int ConvexBody::dim() const {
    return std::visit([](const auto& r) { return r.dim(); }, rep_);
}

double ConvexBody::support(const Vec& xi) const {
    require_nonzero(xi, "support");
    return std::visit([&](const auto& r) { return r.support(xi); }, rep_);
}

double ConvexBody::gauge(const Vec& x) const {
    require_nonzero(x, "radial");
    return std::visit([&](const auto& r) { return r.gauge(x); }, rep_);
}

double ConvexBody::radial(const Vec& x) const { return 1.0 / gauge(x); }

double ConvexBody::volume() const {
    if (is_polytope()) return polytope_volume(polytope());
    return ellipsoid().volume();
}

double ConvexBody::circumradius() const {
    if (is_polytope()) return polytope().max_vertex_norm();
    Eigen::SelfAdjointEigenSolver<Mat> eig(ellipsoid().q());
    return 1.0 / std::sqrt(eig.eigenvalues().minCoeff());
}

ConvexBody ConvexBody::polar() const {
    if (is_polytope()) {
        // Close the dual vertex set under negation: near-degenerate facets can be
        // dropped on one side of an antipodal pair by the hull's coplanar merge.
        std::vector<Vec> pts;
        for (const auto& f : polytope().facets()) {
            pts.push_back(f.normal / f.offset);
            pts.push_back(-f.normal / f.offset);
        }
        return ConvexBody(convex_hull(pts));
    }
    return ConvexBody(ellipsoid().polar());
}

ConvexBody ConvexBody::transform(const Mat& a) const {
    if (!a.allFinite() || !(std::abs(determinant_of_columns(a)) > 1e-14 * std::pow(a.norm(), a.rows()))) {
        throw InputError("transform: map is not invertible");
    }
    if (is_polytope()) return ConvexBody(normvol::transform(polytope(), a));
    return ConvexBody(ellipsoid().transform(a));
}

ConvexBody ConvexBody::scaled(double factor) const {
    return transform(Mat::Identity(dim(), dim()) * factor);
}

// ---------------------------------------------------------------------------

StarBody::StarBody(GridPtr grid, std::vector<double> rho) : grid_(std::move(grid)), rho_(std::move(rho)) {
    if (!grid_) throw InputError("star body: missing grid");
    if (rho_.size() != grid_->size()) throw InputError("star body: radial value count does not match the grid");
    for (double r : rho_) {
        if (!(r > 0.0) || !std::isfinite(r)) throw InputError("star body: radial values must be positive and finite");
    }
}

double StarBody::radial(const Vec& x) const {
    require_nonzero(x, "radial");
    if (x.size() != dim()) throw InputError("radial: dimension mismatch");
    const double r = x.norm();
    const Stencil s = grid_->locate(x / r);
    double value = 0.0;
    for (int k = 0; k < s.size; ++k) value += s.weight[static_cast<std::size_t>(k)] * rho_[s.index[static_cast<std::size_t>(k)]];
    return value / r;
}

double StarBody::volume() const {
    const int n = dim();
    const auto w = grid_->weights();
    std::vector<double> terms(rho_.size());
    for (std::size_t i = 0; i < rho_.size(); ++i) terms[i] = w[i] * std::pow(rho_[i], n);
    return ordered_sum(terms) / n;
}

bool StarBody::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < rho_.size(); ++i) {
        if (std::abs(rho_[i] - rho_[grid_->antipode(i)]) > tol * rho_[i]) return false;
    }
    return true;
}

StarBody StarBody::with_exact(ConvexBody body) const {
    StarBody out = *this;
    out.exact_ = std::move(body);
    return out;
}

StarBody StarBody::operator+(const StarBody& other) const {
    if (!grid_->same_as(other.grid())) throw InputError("radial sum: bodies live on different grids");
    std::vector<double> rho(rho_.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = rho_[i] + other.rho_[i];
    return StarBody(grid_, std::move(rho));
}

StarBody StarBody::dilated(double factor) const {
    if (!(factor > 0.0)) throw InputError("dilate: factor must be positive");
    std::vector<double> rho(rho_);
    for (double& r : rho) r *= factor;
    StarBody out(grid_, std::move(rho));
    if (exact_) out.exact_ = exact_->scaled(factor);
    return out;
}

// ---------------------------------------------------------------------------

int dim(const Body& body) {
    return std::visit([](const auto& b) { return b.dim(); }, body);
}

double radial(const Body& body, const Vec& x) {
    return std::visit([&](const auto& b) { return b.radial(x); }, body);
}

double volume(const ConvexBody& body) { return body.volume(); }
double volume(const StarBody& body) { return body.volume(); }
double volume(const Body& body) {
    return std::visit([](const auto& b) { return b.volume(); }, body);
}

StarBody sample_radial(const ConvexBody& body, const GridPtr& grid) {
    if (body.dim() != grid->dim()) throw InputError("sample_radial: dimension mismatch");
    std::vector<double> rho(grid->size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = body.radial(grid->node(i));
    return StarBody(grid, std::move(rho)).with_exact(body);
}

ConvexBody section(const ConvexBody& body, const Vec& normal) {
    require_nonzero(normal, "section");
    const Vec n = normal.normalized();
    const Basis basis = complement_basis(n);
    if (body.is_ellipsoid()) return ConvexBody(body.ellipsoid().section(basis));
    if (body.dim() == 2) {
        const double r = body.radial(basis.col(0));
        std::vector<Vec> pts{Vec::Constant(1, r), Vec::Constant(1, -r)};
        return ConvexBody(convex_hull(pts));
    }
    const auto facets = body.polytope().facets();
    std::vector<Vec> normals;
    std::vector<double> offsets;
    normals.reserve(facets.size());
    offsets.reserve(facets.size());
    for (const auto& f : facets) {
        Vec proj = basis.transpose() * f.normal;
        if (proj.norm() < 1e-14) continue;
        normals.push_back(std::move(proj));
        offsets.push_back(f.offset);
    }
    return ConvexBody(halfspace_intersection(normals, offsets));
}

StarBody section(const StarBody& body, const Vec& normal, int resolution) {
    require_nonzero(normal, "section");
    const Vec n = normal.normalized();
    const Basis basis = complement_basis(n);
    if (body.dim() == 2) {
        auto grid = make_sphere_grid(1, 2);
        return StarBody(grid, {body.radial(basis.col(0)), body.radial(-basis.col(0))});
    }
    auto grid = make_sphere_grid(2, resolution);
    std::vector<double> rho(grid->size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = body.radial(basis * grid->node(i));
    return StarBody(grid, std::move(rho));
}

double section_volume(const ConvexBody& body, const Vec& normal) {
    if (body.dim() == 2) {
        const Basis basis = complement_basis(normal.normalized());
        return 2.0 * body.radial(basis.col(0));
    }
    return section(body, normal).volume();
}

double section_volume(const StarBody& body, const Vec& normal, int resolution) {
    if (body.dim() == 2) {
        const Basis basis = complement_basis(normal.normalized());
        return body.radial(basis.col(0)) + body.radial(-basis.col(0));
    }
    const Basis basis = complement_basis(normal.normalized());
    const double step = 2.0 * std::numbers::pi / resolution;
    std::vector<double> terms(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k) {
        const double t = step * k;
        const double r = body.radial(basis * vec2(std::cos(t), std::sin(t)));
        terms[static_cast<std::size_t>(k)] = 0.5 * step * r * r;
    }
    return ordered_sum(terms);
}

ConvexBody shadow(const ConvexBody& body, const Vec& v) {
    require_nonzero(v, "shadow");
    const Basis basis = complement_basis(v.normalized());
    if (body.is_ellipsoid()) return ConvexBody(body.ellipsoid().shadow(basis));
    std::vector<Vec> pts;
    pts.reserve(body.polytope().vertices().size());
    for (const auto& x : body.polytope().vertices()) pts.push_back(basis.transpose() * x);
    return ConvexBody(convex_hull(pts));
}

double shadow_volume(const ConvexBody& body, const Vec& v) {
    if (body.dim() == 2) {
        const Basis basis = complement_basis(v.normalized());
        return 2.0 * body.support(basis.col(0));
    }
    return shadow(body, v).volume();
}

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, const GridPtr& grid) {
    if (a.dim() != b.dim()) throw InputError("hausdorff_distance: dimension mismatch");
    std::vector<Vec> dirs;
    if (a.dim() == 1) {
        dirs = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
    } else {
        for (const auto& u : grid->nodes()) dirs.push_back(u);
        for (const ConvexBody* body : {&a, &b}) {
            if (body->is_polytope()) {
                for (const auto& f : body->polytope().facets()) dirs.push_back(f.normal);
            }
        }
    }
    double worst = 0.0;
    for (const auto& u : dirs) worst = std::max(worst, std::abs(a.support(u) - b.support(u)));
    return worst;
}

double duality_check_quotient(const ConvexBody& b, const Vec& v) {
    require_nonzero(v, "duality_check_quotient");
    const Vec u = v.normalized();
    const ConvexBody lhs = shadow(b, u).polar();
    const ConvexBody rhs = section(b.polar(), u);
    return hausdorff_distance(lhs, rhs, b.dim() == 3 ? make_sphere_grid(2, 720) : make_sphere_grid(1, 2));
}

}  // namespace normvol
