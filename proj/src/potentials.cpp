#include "toricsol/potentials.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace toricsol {

void invert_stack(const Matrix& m, const std::vector<Matrix>& dm, const std::vector<Matrix>& ddm, Matrix& n,
                  std::vector<Matrix>& dn, std::vector<Matrix>& ddn) {
    const int d = static_cast<int>(m.rows());
    n = m.inverse();
    dn.assign(dm.size(), Matrix());
    for (size_t k = 0; k < dm.size(); ++k) dn[k] = -n * dm[k] * n;
    ddn.assign(ddm.size(), Matrix());
    if (ddm.empty()) return;
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            const auto kl = static_cast<size_t>(k * d + l);
            ddn[kl] = -dn[static_cast<size_t>(l)] * dm[static_cast<size_t>(k)] * n - n * ddm[kl] * n -
                      n * dm[static_cast<size_t>(k)] * dn[static_cast<size_t>(l)];
        }
    }
}

namespace {

void require_positive_definite(const Matrix& g, const char* who) {
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorCode::LossOfConvexity, std::string(who) + ": Hessian is not positive definite");
}

}  // namespace

GuilleminPotential::GuilleminPotential(DelzantPolytope p) : poly_(std::move(p)) {}

Vector GuilleminPotential::checked_values(const Vector& x) const {
    Vector l = poly_.facet_values(x);
    if ((l.array() <= 0.0).any())
        throw Error(ErrorCode::BoundaryEvaluation, "Guillemin potential evaluated outside the open polytope");
    return l;
}

std::optional<double> GuilleminPotential::value(const Vector& x) const {
    Vector l = checked_values(x);
    return 0.5 * (l.array() * l.array().log()).sum();
}

Matrix GuilleminPotential::hessian(const Vector& x) const {
    Vector l = checked_values(x);
    const Matrix& nu = poly_.normals();
    return 0.5 * nu.transpose() * (1.0 / l.array()).matrix().asDiagonal() * nu;
}

MetricStack GuilleminPotential::evaluate(const Vector& x) const {
    Vector l = checked_values(x);
    const Matrix& nu = poly_.normals();
    const int n = poly_.dim();
    MetricStack s;
    s.value = 0.5 * (l.array() * l.array().log()).sum();
    s.gradient = 0.5 * nu.transpose() * (1.0 + l.array().log()).matrix();
    s.G = 0.5 * nu.transpose() * (1.0 / l.array()).matrix().asDiagonal() * nu;
    s.dG.assign(static_cast<size_t>(n), Matrix::Zero(n, n));
    s.ddG.assign(static_cast<size_t>(n * n), Matrix::Zero(n, n));
    for (int r = 0; r < poly_.facet_count(); ++r) {
        Vector v = nu.row(r).transpose();
        Matrix vv = v * v.transpose();
        const double lr = l[r];
        for (int k = 0; k < n; ++k) {
            s.dG[static_cast<size_t>(k)] -= 0.5 * v[k] / (lr * lr) * vv;
            for (int m = 0; m < n; ++m) s.ddG[static_cast<size_t>(k * n + m)] += v[k] * v[m] / (lr * lr * lr) * vv;
        }
    }
    invert_stack(s.G, s.dG, s.ddG, s.H, s.dH, s.ddH);
    return s;
}

PotentialPtr guillemin(const DelzantPolytope& p) { return std::make_shared<GuilleminPotential>(p); }

QuadraticPotential::QuadraticPotential(Matrix q) : q_(std::move(q)) {
    require_positive_definite(q_, "quadratic potential");
}

MetricStack QuadraticPotential::evaluate(const Vector& x) const {
    const int n = dim();
    MetricStack s;
    s.value = 0.5 * x.dot(q_ * x);
    s.gradient = q_ * x;
    s.G = q_;
    s.dG.assign(static_cast<size_t>(n), Matrix::Zero(n, n));
    s.ddG.assign(static_cast<size_t>(n * n), Matrix::Zero(n, n));
    invert_stack(s.G, s.dG, s.ddG, s.H, s.dH, s.ddH);
    return s;
}

PotentialPtr flat_model(int n) { return std::make_shared<QuadraticPotential>(Matrix::Identity(n, n)); }

FieldJet zero_field(int n) {
    FieldJet j;
    j.gradient = Vector::Zero(n);
    j.hessian = Matrix::Zero(n, n);
    j.third.assign(static_cast<size_t>(n), Matrix::Zero(n, n));
    j.fourth.assign(static_cast<size_t>(n * n), Matrix::Zero(n, n));
    return j;
}

PerturbedPotential::PerturbedPotential(PotentialPtr base, SmoothField h, const std::vector<Vector>& samples)
    : base_(std::move(base)), h_(std::move(h)) {
    for (const auto& x : samples) require_positive_definite(base_->hessian(x) + h_(x).hessian, "perturbed potential");
}

MetricStack PerturbedPotential::evaluate(const Vector& x) const {
    MetricStack s = base_->evaluate(x);
    const FieldJet j = h_(x);
    if (s.value) s.value = *s.value + j.value;
    s.gradient += j.gradient;
    s.G += j.hessian;
    require_positive_definite(s.G, "perturbed potential");
    for (size_t k = 0; k < s.dG.size(); ++k) s.dG[k] += j.third[k];
    for (size_t k = 0; k < s.ddG.size(); ++k) s.ddG[k] += j.fourth[k];
    invert_stack(s.G, s.dG, s.ddG, s.H, s.dH, s.ddH);
    return s;
}

std::optional<double> PerturbedPotential::value(const Vector& x) const {
    auto v = base_->value(x);
    if (!v) return std::nullopt;
    return *v + h_(x).value;
}

PotentialPtr perturbed(PotentialPtr base, SmoothField h, const std::vector<Vector>& samples) {
    return std::make_shared<PerturbedPotential>(std::move(base), std::move(h), samples);
}

Vector gradient_by_line_integral(const HessianField& G, const Vector& x, const Vector& x0, const DomainTest& inside) {
    if (inside && (!inside(x) || !inside(x0)))
        throw Error(ErrorCode::OutOfDomain, "line-integral segment leaves the interior");
    const Vector d = x - x0;
    const auto n = d.size();
    Vector out(n);
    if (d.norm() == 0.0) return Vector::Zero(n);
    using boost::math::quadrature::gauss_kronrod;
    // One non-adaptive pass; refine only components whose error estimate is
    // not small against the whole integrand.
    std::vector<double> err(static_cast<size_t>(n)), l1(static_cast<size_t>(n));
    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<size_t>(i);
        auto f = [&](double s) { return G(x0 + s * d).row(i).dot(d); };
        out[i] = gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 0, 0.0, &err[k], &l1[k]);
        scale += l1[k];
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<size_t>(i);
        if (err[k] <= 1e-14 * scale) continue;
        auto f = [&](double s) { return G(x0 + s * d).row(i).dot(d); };
        out[i] = gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 15, 1e-12);
    }
    return out;
}

}  // namespace toricsol
