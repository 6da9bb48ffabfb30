#include "toricsol/operators.hpp"

#include <array>
#include <cmath>

namespace toricsol {

Profile constant_profile(int n, double c) {
    return [n, c](const Vector&) { return ProfileJet{c, Vector::Zero(n), Matrix::Zero(n, n)}; };
}

Profile affine_profile(const Vector& b, double c) {
    return [b, c](const Vector& x) {
        const auto n = b.size();
        return ProfileJet{b.dot(x) + c, b, Matrix::Zero(n, n)};
    };
}

Profile product_profile(const Profile& u, const Profile& v) {
    return [u, v](const Vector& x) {
        const auto a = u(x), b = v(x);
        return ProfileJet{a.value * b.value, a.gradient * b.value + a.value * b.gradient,
                          a.hessian * b.value + a.gradient * b.gradient.transpose() +
                              b.gradient * a.gradient.transpose() + a.value * b.hessian};
    };
}

EquivariantFunction invariant(const Profile& u, int n) { return EquivariantFunction{IntVector::Zero(n), 1.0, u}; }

namespace {

void require_interior(const OperatorContext& ctx, const Vector& x) {
    if (!ctx.polytope.is_interior(x) || !ctx.potential->contains(x))
        throw Error(ErrorCode::BoundaryEvaluation, "operator evaluated outside the open polytope");
}

// sum_i dH_ij / dx_i
Vector divergence_of_H(const MetricStack& s) {
    const int n = s.dim();
    Vector d = Vector::Zero(n);
    for (int i = 0; i < n; ++i) d += s.dH[static_cast<size_t>(i)].row(i).transpose();
    return d;
}

Complex laplacian_core(const Vector& divH, const Matrix& H, const Matrix& G, const Vector& drift,
                       const IntVector& mode, const ProfileJet& u, bool weighted, int orientation) {
    // -sum_ij (dH_ij/dx_i du/dx_j + H_ij d2u/dx_i dx_j)
    double xs = -divH.dot(u.gradient) - (H.cwiseProduct(u.hessian)).sum();
    const Vector k = mode.cast<double>();
    double ts = k.dot(G * k) * u.value;
    if (weighted) {
        xs += 2.0 * drift.dot(H * u.gradient);
        if (orientation != 0) ts += 2.0 * orientation * drift.dot(k) * u.value;
    }
    return Complex(xs + ts, 0.0);
}

}  // namespace

Complex laplacian_from_stack(const MetricStack& s, const Vector& drift, const IntVector& mode, const ProfileJet& u,
                             bool weighted, int orientation) {
    return laplacian_core(divergence_of_H(s), s.H, s.G, drift, mode, u, weighted, orientation);
}

Complex apply_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x) {
    require_interior(ctx, x);
    const auto s = ctx.potential->evaluate(x);
    return f.coefficient * laplacian_from_stack(s, ctx.drift(), f.mode, f.profile(x), false, 0);
}

Complex apply_weighted_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x) {
    require_interior(ctx, x);
    const auto s = ctx.potential->evaluate(x);
    return f.coefficient * laplacian_from_stack(s, ctx.drift(), f.mode, f.profile(x), true, 0);
}

Complex apply_complex_weighted_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x,
                                         int orientation) {
    if (orientation != 1 && orientation != -1) throw Error(ErrorCode::InvalidArgument, "orientation must be +1 or -1");
    require_interior(ctx, x);
    const auto s = ctx.potential->evaluate(x);
    return f.coefficient * laplacian_from_stack(s, ctx.drift(), f.mode, f.profile(x), true, orientation);
}

double product_rule_residual(const OperatorContext& ctx, const Profile& u, const Profile& v, const Vector& x) {
    require_interior(ctx, x);
    const auto s = ctx.potential->evaluate(x);
    const IntVector zero = IntVector::Zero(ctx.dim());
    const auto ju = u(x), jv = v(x);
    const auto juv = product_profile(u, v)(x);
    const Vector w = ctx.drift();
    const double luv = laplacian_from_stack(s, w, zero, juv, true, 0).real();
    const double lu = laplacian_from_stack(s, w, zero, ju, true, 0).real();
    const double lv = laplacian_from_stack(s, w, zero, jv, true, 0).real();
    return luv - jv.value * lu - ju.value * lv + 2.0 * ju.gradient.dot(s.H * jv.gradient);
}

Gradients gradients(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x) {
    require_interior(ctx, x);
    const auto s = ctx.potential->evaluate(x);
    const auto u = f.profile(x);
    const Complex i(0.0, 1.0);
    const ComplexVector du_dx = f.coefficient * u.gradient.cast<Complex>();
    const ComplexVector du_dt = f.coefficient * i * u.value * f.mode.cast<double>().cast<Complex>();
    Gradients g;
    g.riemannian_x = s.H.cast<Complex>() * du_dx;
    g.riemannian_t = s.G.cast<Complex>() * du_dt;
    g.symplectic_x = -du_dt;
    g.symplectic_t = du_dx;
    return g;
}

double abreu_from_stack(const MetricStack& s) {
    const int n = s.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum += s.d2H(i, j)(i, j);
    return -sum;
}

double abreu_scalar_curvature(const OperatorContext& ctx, const Vector& x) {
    require_interior(ctx, x);
    return abreu_from_stack(ctx.potential->evaluate(x));
}

std::pair<Matrix, Matrix> ricci_and_lie_from_stack(const MetricStack& s, const Vector& w) {
    const int n = s.dim();
    Matrix ric = Matrix::Zero(n, n), lie = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            for (int i = 0; i < n; ++i) {
                ric(k, l) -= 0.5 * s.d2H(i, k)(l, i);
                lie(k, l) -= w[i] * s.dH[static_cast<size_t>(k)](i, l);
            }
        }
    }
    return {ric, lie};
}

std::pair<Matrix, Matrix> ricci_and_lie_components(const OperatorContext& ctx, const Vector& x) {
    require_interior(ctx, x);
    return ricci_and_lie_from_stack(ctx.potential->evaluate(x), ctx.drift());
}

double soliton_residual_from_stack(const MetricStack& s, const Vector& a, double scal_mean) {
    const double lap = -divergence_of_H(s).dot(a);
    return abreu_from_stack(s) - scal_mean + 2.0 * lap;
}

double soliton_residual(const OperatorContext& ctx, const Vector& x, double scal_mean) {
    require_interior(ctx, x);
    return soliton_residual_from_stack(ctx.potential->evaluate(x), ctx.a, scal_mean);
}

namespace {

constexpr std::array<double, 4> kOffsets{-2.0, -1.0, 1.0, 2.0};
constexpr std::array<double, 4> kFirst{1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};

// Fourth-order central first derivative along e_k.
template <class F>
auto d1(const F& f, const Vector& x, int k, double h) {
    Vector y = x;
    y[k] = x[k] + kOffsets[0] * h;
    auto acc = (kFirst[0] * f(y)).eval();
    for (size_t m = 1; m < 4; ++m) {
        y[k] = x[k] + kOffsets[m] * h;
        acc = (acc + kFirst[m] * f(y)).eval();
    }
    return (acc / h).eval();
}

double d1s(const std::function<double(const Vector&)>& f, const Vector& x, int k, double h) {
    Vector y = x;
    double acc = 0.0;
    for (size_t m = 0; m < 4; ++m) {
        y[k] = x[k] + kOffsets[m] * h;
        acc += kFirst[m] * f(y);
    }
    return acc / h;
}

// Fourth-order second derivative: d2/dx_i^2 on the five-point stencil,
// mixed ones as nested first differences.
double d2s(const std::function<double(const Vector&)>& f, const Vector& x, int i, int j, double h) {
    if (i == j) {
        Vector y = x;
        auto at = [&](double o) {
            y[i] = x[i] + o * h;
            return f(y);
        };
        return (-at(-2.0) + 16.0 * at(-1.0) - 30.0 * at(0.0) + 16.0 * at(1.0) - at(2.0)) / (12.0 * h * h);
    }
    double acc = 0.0;
    for (size_t a = 0; a < 4; ++a) {
        for (size_t b = 0; b < 4; ++b) {
            Vector y = x;
            y[i] += kOffsets[a] * h;
            y[j] += kOffsets[b] * h;
            acc += kFirst[a] * kFirst[b] * f(y);
        }
    }
    return acc / (h * h);
}

Matrix fd_hessian_of_values(const std::function<double(const Vector&)>& phi, const Vector& x, double h) {
    const auto n = x.size();
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) g(i, j) = g(j, i) = d2s(phi, x, static_cast<int>(i), static_cast<int>(j), h);
    return g;
}

}  // namespace

Complex finite_difference_oracle(const OperatorContext& ctx, const std::function<double(const Vector&)>& profile_value,
                                 const IntVector& mode, const Vector& x, OperatorId op, const FdOptions& options) {
    const int n = ctx.dim();
    const double margin = ctx.polytope.facet_values(x).minCoeff();
    const double h = options.outer_step * margin;
    const double inner = options.inner_step * margin;
    if (!(margin > 0.0) || !ctx.potential->contains(x))
        throw Error(ErrorCode::BoundaryEvaluation, "finite-difference stencil too close to the boundary");
    if (h < 1e-7 || inner < 1e-7) throw Error(ErrorCode::BoundaryEvaluation, "finite-difference step underflow");

    const auto& pot = *ctx.potential;
    std::function<Matrix(const Vector&)> G_at, H_at;
    if (pot.value(x).has_value()) {
        std::function<double(const Vector&)> phi = [&pot](const Vector& y) { return *pot.value(y); };
        G_at = [phi, inner](const Vector& y) { return fd_hessian_of_values(phi, y, inner); };
        H_at = [phi, inner](const Vector& y) { return Matrix(fd_hessian_of_values(phi, y, inner).inverse()); };
    } else {
        H_at = [&pot](const Vector& y) { return pot.inverse_hessian(y); };
        G_at = [&pot](const Vector& y) { return Matrix(pot.inverse_hessian(y).inverse()); };
    }

    if (op == OperatorId::AbreuCurvature) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::function<double(const Vector&)> hij = [&, i, j](const Vector& y) { return H_at(y)(i, j); };
                sum += d2s(hij, x, i, j, h);
            }
        }
        return Complex(-sum, 0.0);
    }

    Vector divH = Vector::Zero(n);
    for (int i = 0; i < n; ++i) divH += d1(H_at, x, i, h).row(i).transpose();
    ProfileJet u;
    u.value = profile_value(x);
    u.gradient.resize(n);
    u.hessian.resize(n, n);
    for (int i = 0; i < n; ++i) {
        u.gradient[i] = d1s(profile_value, x, i, h);
        for (int j = i; j < n; ++j) u.hessian(i, j) = u.hessian(j, i) = d2s(profile_value, x, i, j, h);
    }
    const bool weighted = op != OperatorId::Laplacian;
    const int orientation = op == OperatorId::ComplexWeightedLaplacian ? options.orientation : 0;
    return laplacian_core(divH, H_at(x), G_at(x), ctx.drift(), mode, u, weighted, orientation);
}

std::vector<Vector> interior_grid(const DelzantPolytope& p, int n, double margin) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points per axis");
    const int d = p.dim();
    const double delta = margin * p.vertex_spread();
    Vector lo = p.vertices().front().point, hi = lo;
    for (const auto& v : p.vertices()) {
        lo = lo.cwiseMin(v.point);
        hi = hi.cwiseMax(v.point);
    }
    std::vector<Vector> out;
    std::vector<int> idx(static_cast<size_t>(d), 0);
    while (true) {
        Vector x(d);
        for (int i = 0; i < d; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * idx[static_cast<size_t>(i)] / (n - 1);
        if ((p.facet_values(x).array() >= delta).all()) out.push_back(x);
        int i = 0;
        while (i < d && idx[static_cast<size_t>(i)] == n - 1) idx[static_cast<size_t>(i++)] = 0;
        if (i == d) break;
        ++idx[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace toricsol
