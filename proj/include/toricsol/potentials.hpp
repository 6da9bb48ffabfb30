#pragma once

#include "toricsol/polytope.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toricsol {

/// Derivative data of a symplectic potential at one interior point.
/// dG[k] = dG/dx_k and ddG[k*n + l] = d2G/dx_k dx_l, likewise for H.
struct MetricStack {
    std::optional<double> value;
    Vector gradient;
    Matrix G, H;
    std::vector<Matrix> dG, dH;
    std::vector<Matrix> ddG, ddH;

    int dim() const { return static_cast<int>(G.rows()); }
    const Matrix& d2H(int k, int l) const { return ddH[static_cast<size_t>(k * dim() + l)]; }
    const Matrix& d2G(int k, int l) const { return ddG[static_cast<size_t>(k * dim() + l)]; }
};

/// Given M, dM, ddM, fills the inverse N = M^-1 with its first and second
/// derivatives.
void invert_stack(const Matrix& m, const std::vector<Matrix>& dm, const std::vector<Matrix>& ddm, Matrix& n,
                  std::vector<Matrix>& dn, std::vector<Matrix>& ddn);

class SymplecticPotential {
public:
    virtual ~SymplecticPotential() = default;

    virtual std::string name() const = 0;
    virtual int dim() const = 0;
    virtual bool contains(const Vector& x) const = 0;

    /// Full stack; raises BoundaryEvaluation outside the open domain.
    virtual MetricStack evaluate(const Vector& x) const = 0;

    /// G alone, cheaper than the full stack.
    virtual Matrix hessian(const Vector& x) const { return evaluate(x).G; }
    virtual Matrix inverse_hessian(const Vector& x) const { return hessian(x).inverse(); }

    /// phi itself when it has a closed form.
    virtual std::optional<double> value(const Vector&) const { return std::nullopt; }
};

using PotentialPtr = std::shared_ptr<const SymplecticPotential>;

/// phi_0 = 1/2 sum L_r log L_r.
class GuilleminPotential final : public SymplecticPotential {
public:
    explicit GuilleminPotential(DelzantPolytope p);

    std::string name() const override { return "guillemin"; }
    int dim() const override { return poly_.dim(); }
    bool contains(const Vector& x) const override { return poly_.is_interior(x); }
    MetricStack evaluate(const Vector& x) const override;
    Matrix hessian(const Vector& x) const override;
    std::optional<double> value(const Vector& x) const override;

    const DelzantPolytope& polytope() const { return poly_; }

private:
    Vector checked_values(const Vector& x) const;
    DelzantPolytope poly_;
};

PotentialPtr guillemin(const DelzantPolytope& p);

/// phi = 1/2 x^T Q x on all of R^n; Q = identity is the flat model.
class QuadraticPotential final : public SymplecticPotential {
public:
    explicit QuadraticPotential(Matrix q);

    std::string name() const override { return "quadratic"; }
    int dim() const override { return static_cast<int>(q_.rows()); }
    bool contains(const Vector&) const override { return true; }
    MetricStack evaluate(const Vector& x) const override;
    std::optional<double> value(const Vector& x) const override { return 0.5 * x.dot(q_ * x); }

private:
    Matrix q_;
};

PotentialPtr flat_model(int n);

/// A smooth field with derivatives through fourth order.
/// third[k] = d/dx_k of the Hessian, fourth[k*n + l] = d2/dx_k dx_l of it.
struct FieldJet {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;
    std::vector<Matrix> third;
    std::vector<Matrix> fourth;
};

using SmoothField = std::function<FieldJet(const Vector&)>;

FieldJet zero_field(int n);

/// base + h. Convexity is checked at every sample point on construction and
/// at every evaluation.
class PerturbedPotential final : public SymplecticPotential {
public:
    PerturbedPotential(PotentialPtr base, SmoothField h, const std::vector<Vector>& samples);

    std::string name() const override { return "perturbed " + base_->name(); }
    int dim() const override { return base_->dim(); }
    bool contains(const Vector& x) const override { return base_->contains(x); }
    MetricStack evaluate(const Vector& x) const override;
    std::optional<double> value(const Vector& x) const override;

private:
    PotentialPtr base_;
    SmoothField h_;
};

PotentialPtr perturbed(PotentialPtr base, SmoothField h, const std::vector<Vector>& samples);

using HessianField = std::function<Matrix(const Vector&)>;
using DomainTest = std::function<bool(const Vector&)>;

/// grad phi(x) - grad phi(x0) = int_0^1 G(x0 + s (x - x0)) (x - x0) ds,
/// by adaptive Gauss-Kronrod. Raises OutOfDomain if either end point lies
/// outside the (convex) domain.
Vector gradient_by_line_integral(const HessianField& G, const Vector& x, const Vector& x0,
                                 const DomainTest& inside = {});

}  // namespace toricsol
