#include "normvol/extremal.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normvol {

namespace {

/// One representative of each antipodal pair.
std::vector<Vec> antipodal_representatives(std::span<const Vec> points) {
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, p.norm());
    std::vector<Vec> reps;
    for (const auto& p : points) {
        bool seen = false;
        for (const auto& r : reps) {
            if ((p + r).norm() <= 1e-9 * scale || (p - r).norm() <= 1e-9 * scale) {
                seen = true;
                break;
            }
        }
        if (!seen) reps.push_back(p);
    }
    return reps;
}

double abs_det(const std::vector<const Vec*>& cols) {
    const int k = static_cast<int>(cols.size());
    Mat m(k, k);
    for (int j = 0; j < k; ++j) m.col(j) = *cols[static_cast<std::size_t>(j)];
    return std::abs(determinant_of_columns(m));
}

struct TupleBest {
    double value = -1.0;
    std::vector<std::size_t> index;
    bool certified = true;
};

/// Maximize score(tuple) over k-subsets of n items.
template <class Score>
TupleBest best_tuple(std::size_t n, int k, Score&& score) {
    TupleBest best;
    double count = 1.0;
    for (int i = 0; i < k; ++i) count *= static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
    if (count <= 4e6) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int depth, std::size_t start) -> void {
            if (depth == k) {
                const double v = score(idx);
                if (v > best.value) {
                    best.value = v;
                    best.index = idx;
                }
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                idx[static_cast<std::size_t>(depth)] = i;
                self(self, depth + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        return best;
    }
    // Alternating coordinate ascent from deterministic starts.
    best.certified = false;
    for (std::size_t start = 0; start < 16; ++start) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = (start * 7919 + static_cast<std::size_t>(j) * (n / static_cast<std::size_t>(k))) % n;
        double current = score(idx);
        for (int sweep = 0; sweep < 100; ++sweep) {
            bool improved = false;
            for (int slot = 0; slot < k; ++slot) {
                for (std::size_t cand = 0; cand < n; ++cand) {
                    auto trial = idx;
                    trial[static_cast<std::size_t>(slot)] = cand;
                    const double v = score(trial);
                    if (v > current * (1.0 + 1e-15)) {
                        current = v;
                        idx = trial;
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
        if (current > best.value) {
            best.value = current;
            best.index = idx;
        }
    }
    return best;
}

Mat inverse_sqrt(const Mat& q) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(q);
    return eig.eigenvectors() * eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

InscribedCrossPolytope max_inscribed_cross_polytope(const ConvexBody& body) {
    const int k = body.dim();
    InscribedCrossPolytope out;
    if (body.is_ellipsoid()) {
        const Mat a = inverse_sqrt(body.ellipsoid().q());
        for (int j = 0; j < k; ++j) out.directions.push_back(a.col(j));
        out.volume = std::pow(2.0, k) / factorial(k) * std::abs(determinant_of_columns(a));
        return out;
    }
    const auto reps = antipodal_representatives(body.polytope().vertices());
    auto best = best_tuple(reps.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<const Vec*> cols;
        for (auto i : idx) cols.push_back(&reps[i]);
        return abs_det(cols);
    });
    for (auto i : best.index) out.directions.push_back(reps[i]);
    out.volume = std::pow(2.0, k) / factorial(k) * best.value;
    out.certified = best.certified;
    return out;
}

CircumscribedParallelotope min_circumscribed_parallelotope(const ConvexBody& body) {
    const int k = body.dim();
    CircumscribedParallelotope out;
    if (body.is_ellipsoid()) {
        Eigen::SelfAdjointEigenSolver<Mat> eig(body.ellipsoid().q());
        for (int j = 0; j < k; ++j) out.normals.push_back(eig.eigenvectors().col(j));
        out.volume = std::pow(2.0, k) / std::sqrt(determinant_of_columns(body.ellipsoid().q()));
        return out;
    }
    std::vector<Vec> normals;
    std::vector<double> offsets;
    for (const auto& f : body.polytope().facets()) {
        bool seen = false;
        for (const auto& n : normals) {
            if ((n + f.normal).norm() < 1e-9 || (n - f.normal).norm() < 1e-9) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            normals.push_back(f.normal);
            offsets.push_back(f.offset);
        }
    }
    // Maximize the reciprocal volume |det| / prod h.
    auto best = best_tuple(normals.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<const Vec*> cols;
        double prod = 1.0;
        for (auto i : idx) {
            cols.push_back(&normals[i]);
            prod *= offsets[i];
        }
        return abs_det(cols) / prod;
    });
    for (auto i : best.index) out.normals.push_back(normals[i]);
    out.volume = std::pow(2.0, k) / best.value;
    out.certified = best.certified;
    return out;
}

namespace {

// Fedorov-Wynn with toward and away steps on the D-optimal design weights.
// Fast for few contact points; returns false if the cap is hit first.
bool loewner_fedorov_wynn(const std::vector<Vec>& pts, int k, double tol, int max_iterations, Mat& q, double& gap,
                          int& iterations) {
    const std::size_t m = pts.size();
    std::vector<double> u(m, 1.0 / static_cast<double>(m));
    std::vector<double> kappa(m);
    Mat minv;
    double kappa_max = 0.0;
    for (iterations = 0; iterations < max_iterations; ++iterations) {
        Mat moment = Mat::Zero(k, k);
        for (std::size_t i = 0; i < m; ++i) moment += u[i] * pts[i] * pts[i].transpose();
        minv = moment.inverse();
        std::size_t jmax = 0;
        std::size_t jmin = m;
        for (std::size_t i = 0; i < m; ++i) {
            kappa[i] = pts[i].dot(minv * pts[i]);
            if (kappa[i] > kappa[jmax]) jmax = i;
            if (u[i] > 0.0 && (jmin == m || kappa[i] < kappa[jmin])) jmin = i;
        }
        kappa_max = kappa[jmax];
        gap = std::pow(kappa_max / k, 0.5 * k) - 1.0;
        if (gap <= tol) {
            q = minv / kappa_max;
            return true;
        }
        const double up = kappa_max - k;
        const double down = k - kappa[jmin];
        std::size_t j = jmax;
        double alpha = 0.0;
        if (up >= down) {
            alpha = up / (k * (kappa_max - 1.0));
        } else {
            j = jmin;
            const double drop = -u[j] / (1.0 - u[j]);
            alpha = kappa[j] > 1.0 ? std::max((kappa[j] - k) / (k * (kappa[j] - 1.0)), drop) : drop;
        }
        for (double& w : u) w *= (1.0 - alpha);
        u[j] += alpha;
        if (u[j] < 1e-300) u[j] = 0.0;
    }
    return false;
}

}  // namespace

EllipsoidFit loewner_ellipsoid(const ConvexBody& body, double tol) {
    const int k = body.dim();
    if (body.is_ellipsoid()) return {body.ellipsoid(), 0.0, 0};
    auto pts = antipodal_representatives(body.polytope().vertices());
    const std::size_t m = pts.size();
    double scale = 0.0;
    for (const auto& x : pts) scale = std::max(scale, x.norm());
    for (auto& x : pts) x /= scale;
    if (k == 1) {
        const double a = std::abs(pts.front()[0]) * scale;
        return {Ellipsoid(Mat::Constant(1, 1, 1.0 / (a * a))), 0.0, 0};
    }
    {
        Mat q;
        double gap = 0.0;
        int iterations = 0;
        if (loewner_fedorov_wynn(pts, k, tol, 2000, q, gap, iterations)) {
            q /= scale * scale;
            return {Ellipsoid(Mat(0.5 * (q + q.transpose()))), std::max(gap, 0.0), iterations};
        }
    }

    // Many near-active points: E = {x : x^T M x <= 1}. Log-barrier path for
    //   min -log det M  s.t.  x_i^T M x_i <= 1,
    // Newton steps in the k(k+1)/2 entries of M. The duality gap in log det
    // after centering at parameter t is m / t.
    std::vector<Mat> basis;
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            Mat e = Mat::Zero(k, k);
            e(a, b) = 1.0;
            e(b, a) = 1.0;
            basis.push_back(e);
        }
    }
    const int d = static_cast<int>(basis.size());
    std::vector<Eigen::VectorXd> coeff(m, Eigen::VectorXd(d));
    for (std::size_t i = 0; i < m; ++i) {
        for (int p = 0; p < d; ++p) coeff[i][p] = pts[i].dot(basis[static_cast<std::size_t>(p)] * pts[i]);
    }
    auto slack = [&](const Mat& mm, std::vector<double>& s) {
        for (std::size_t i = 0; i < m; ++i) {
            s[i] = 1.0 - pts[i].dot(mm * pts[i]);
            if (!(s[i] > 0.0)) return false;
        }
        return true;
    };
    auto barrier = [&](const Mat& mm, double t, std::vector<double>& s, double& value) {
        Eigen::LLT<Mat> llt(mm);
        if (llt.info() != Eigen::Success || !slack(mm, s)) return false;
        const Mat l = llt.matrixL();
        double logdet = 0.0;
        for (int a = 0; a < k; ++a) logdet += 2.0 * std::log(l(a, a));
        value = -t * logdet;
        for (double si : s) value -= std::log(si);
        return true;
    };

    Mat mm = 0.5 * Mat::Identity(k, k);
    std::vector<double> s(m), trial_s(m);
    double t = 1.0;
    int newton_steps = 0;
    constexpr int max_newton = 5000;
    const double target = std::max(tol, 1e-14);
    for (;;) {
        for (int inner = 0; inner < 100; ++inner) {
            double value = 0.0;
            barrier(mm, t, s, value);
            const Mat minv = mm.inverse();
            std::vector<Mat> me(static_cast<std::size_t>(d));
            for (int p = 0; p < d; ++p) me[static_cast<std::size_t>(p)] = minv * basis[static_cast<std::size_t>(p)];
            Eigen::VectorXd grad(d);
            Eigen::MatrixXd hess(d, d);
            for (int p = 0; p < d; ++p) {
                grad[p] = -t * me[static_cast<std::size_t>(p)].trace();
                for (int q = p; q < d; ++q) {
                    hess(p, q) = t * (me[static_cast<std::size_t>(p)] * me[static_cast<std::size_t>(q)]).trace();
                }
            }
            for (std::size_t i = 0; i < m; ++i) {
                grad += coeff[i] / s[i];
                const double w = 1.0 / (s[i] * s[i]);
                for (int p = 0; p < d; ++p) {
                    for (int q = p; q < d; ++q) hess(p, q) += w * coeff[i][p] * coeff[i][q];
                }
            }
            for (int p = 0; p < d; ++p) {
                for (int q = 0; q < p; ++q) hess(p, q) = hess(q, p);
            }
            const Eigen::VectorXd step = -hess.ldlt().solve(grad);
            const double decrement = -grad.dot(step);
            if (++newton_steps > max_newton) {
                throw NumericError("loewner_ellipsoid: Newton iteration cap exceeded", decrement);
            }
            if (!(decrement > 2e-14 * std::max(1.0, std::abs(value)))) break;
            Mat dm = Mat::Zero(k, k);
            for (int p = 0; p < d; ++p) dm += step[p] * basis[static_cast<std::size_t>(p)];
            double alpha = 1.0;
            double next = 0.0;
            while (alpha > 1e-12) {
                if (barrier(mm + alpha * dm, t, trial_s, next) && next <= value - 0.25 * alpha * decrement) break;
                alpha *= 0.5;
            }
            if (alpha <= 1e-12) break;
            mm += alpha * dm;
            mm = 0.5 * (mm + mm.transpose());
        }
        if (static_cast<double>(m) / t <= target) break;
        t *= 16.0;
    }
    // Make the result contain every point exactly.
    double kappa_max = 0.0;
    for (const auto& x : pts) kappa_max = std::max(kappa_max, x.dot(mm * x));
    const Mat q = mm / (kappa_max * scale * scale);
    const double gap = std::expm1(0.5 * static_cast<double>(m) / t) + std::max(0.0, kappa_max - 1.0);
    return {Ellipsoid(Mat(0.5 * (q + q.transpose()))), gap, newton_steps};
}

EllipsoidFit john_ellipsoid(const ConvexBody& body, double tol) {
    if (body.is_ellipsoid()) return {body.ellipsoid(), 0.0, 0};
    EllipsoidFit fit = loewner_ellipsoid(body.polar(), tol);
    fit.ellipsoid = fit.ellipsoid.polar();
    return fit;
}

}  // namespace normvol
