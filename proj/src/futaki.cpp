#include "toricsol/futaki.hpp"

#include "toricsol/quadrature.hpp"

#include <cmath>
#include <limits>

namespace toricsol {

namespace {

WeightedVolume volume_on(const Triangulation& t, int n, const Vector& w, int order) {
    const auto m = static_cast<Eigen::Index>(n);
    Vector packed = integrate_many(
        t,
        [&](const Vector& x) {
            Vector out(1 + m + m * m);
            const double e = std::exp(-2.0 * w.dot(x));
            out[0] = e;
            out.segment(1, m) = e * x;
            Matrix xx = e * x * x.transpose();
            out.tail(m * m) = Eigen::Map<const Vector>(xx.data(), m * m);
            return out;
        },
        order);
    WeightedVolume v;
    v.value = packed[0];
    v.gradient = -2.0 * packed.segment(1, m);
    v.hessian = 4.0 * Eigen::Map<const Matrix>(packed.tail(m * m).data(), m, m);
    return v;
}

double disagreement(const WeightedVolume& a, const WeightedVolume& b) {
    return std::max(std::abs(a.value - b.value), (a.gradient - b.gradient).cwiseAbs().maxCoeff()) / a.value;
}

}  // namespace

WeightedVolume weighted_volume(const DelzantPolytope& p, const Vector& w, int order) {
    return volume_on(triangulate(p), p.dim(), w, order);
}

std::vector<double> futaki_defects(const DelzantPolytope& p, const Vector& w, int order) {
    const auto v = weighted_volume(p, w, order);
    std::vector<double> out{0.0};
    // f(x) = x_i vanishes at the privileged center.
    for (Eigen::Index i = 0; i < v.gradient.size(); ++i) out.push_back(std::abs(0.5 * v.gradient[i]) / v.value);
    return out;
}

SolitonData solve_soliton_vector(const DelzantPolytope& input, const SolverOptions& options) {
    const DelzantPolytope p = normalize_algebraic(input);
    const int n = p.dim();
    const auto tri = triangulate(p);
    int order = options.initial_order;

    auto evaluate = [&](const Vector& w) {
        while (true) {
            auto lo = volume_on(tri, n, w, order);
            auto hi = volume_on(tri, n, w, order + 4);
            if (disagreement(lo, hi) <= 0.1 * options.tol) return lo;
            if (order + 4 > options.max_order)
                throw Error(ErrorCode::NonConvergence, "quadrature did not settle below order " +
                                                           std::to_string(options.max_order));
            order += 4;
        }
    };

    SolitonData out;
    Vector w = Vector::Zero(n);
    auto current = evaluate(w);
    for (int it = 0;; ++it) {
        IterationRecord rec;
        rec.iteration = it;
        rec.volume = current.value;
        rec.gradient_ratio = current.gradient.norm() / current.value;
        rec.order = order;
        Eigen::SelfAdjointEigenSolver<Matrix> eig(current.hessian);
        rec.min_hessian_eigenvalue = eig.eigenvalues().minCoeff();
        if (rec.min_hessian_eigenvalue <= 0.0)
            throw Error(ErrorCode::NonConvergence, "weighted volume Hessian lost positive definiteness");
        if (rec.gradient_ratio <= options.tol) {
            out.iterations.push_back(rec);
            break;
        }
        if (it >= options.max_iterations) {
            out.iterations.push_back(rec);
            throw Error(ErrorCode::NonConvergence,
                        "Newton iteration did not reach |grad V|/V <= tol within " +
                            std::to_string(options.max_iterations) + " steps (last ratio " +
                            std::to_string(rec.gradient_ratio) + ")");
        }
        Vector step = -current.hessian.ldlt().solve(current.gradient);
        double t = 1.0;
        WeightedVolume trial;
        for (;;) {
            trial = evaluate(w + t * step);
            if (trial.value < current.value) break;
            // Near the minimum V is flat to rounding; accept a step that still
            // reduces the gradient.
            if (trial.value <= current.value * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()) &&
                trial.gradient.norm() < current.gradient.norm())
                break;
            if (++rec.halvings > 60) throw Error(ErrorCode::NonConvergence, "line search failed");
            t *= 0.5;
        }
        rec.step_length = t * step.norm();
        out.iterations.push_back(rec);
        w += t * step;
        current = trial;
    }

    out.a = -w;
    out.quadrature_order = order;
    out.futaki_residuals = futaki_defects(p, w, order);
    out.futaki_residual = 0.0;
    for (double r : out.futaki_residuals) out.futaki_residual = std::max(out.futaki_residual, r);
    out.lambda = einstein_constant(mean_scalar_curvature(p), n);
    return out;
}

double einstein_constant(double scal_mean, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    return scal_mean / (2.0 * n);
}

double mean_scalar_curvature(const DelzantPolytope& p) {
    if (p.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "boundary measure supports dimension 2 only");
    double boundary = 0.0;
    for (int r = 0; r < p.facet_count(); ++r) {
        std::vector<Vector> ends;
        for (const auto& v : p.vertices())
            for (int a : v.active)
                if (a == r) ends.push_back(v.point);
        boundary += (ends.at(0) - ends.at(1)).norm() / p.normals().row(r).norm();
    }
    return 2.0 * boundary / polygon_area(p);
}

}  // namespace toricsol
