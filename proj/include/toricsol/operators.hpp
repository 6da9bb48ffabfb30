#pragma once

#include "toricsol/polytope.hpp"
#include "toricsol/potentials.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace toricsol {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Value, gradient and Hessian of a profile at one point.
struct ProfileJet {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;
};

using Profile = std::function<ProfileJet(const Vector&)>;

/// coefficient * u(x) * exp(i <mode, t>); the phase is carried symbolically.
struct EquivariantFunction {
    IntVector mode;
    Complex coefficient{1.0, 0.0};
    Profile profile;
};

Profile constant_profile(int n, double c);
/// u(x) = <x, b> + c.
Profile affine_profile(const Vector& b, double c = 0.0);
Profile product_profile(const Profile& u, const Profile& v);
EquivariantFunction invariant(const Profile& u, int n);

/// Polytope, potential and soliton vector a. The weighted operators drift
/// along w = -a (see SolitonData).
struct OperatorContext {
    DelzantPolytope polytope;
    PotentialPtr potential;
    Vector a;

    Vector drift() const { return -a; }
    int dim() const { return polytope.dim(); }
};

/// Operator applied to u e^{i<k,t>}, phase stripped.
Complex apply_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x);
Complex apply_weighted_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x);
Complex apply_complex_weighted_laplacian(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x,
                                         int orientation = +1);

/// Same operators from a precomputed stack.
Complex laplacian_from_stack(const MetricStack& s, const Vector& drift, const IntVector& mode, const ProfileJet& u,
                             bool weighted, int orientation);

/// D(uv) - v Du - u Dv + 2 <grad u, H grad v> for the weighted Laplacian D.
double product_rule_residual(const OperatorContext& ctx, const Profile& u, const Profile& v, const Vector& x);

struct Gradients {
    ComplexVector riemannian_x, riemannian_t;
    ComplexVector symplectic_x, symplectic_t;
};

Gradients gradients(const OperatorContext& ctx, const EquivariantFunction& f, const Vector& x);

/// -sum_ij d2 H_ij / dx_i dx_j.
double abreu_scalar_curvature(const OperatorContext& ctx, const Vector& x);
double abreu_from_stack(const MetricStack& s);

/// Ricci components -1/2 sum_i d2 H_li / dx_i dx_k and Lie-derivative
/// components -sum_i w_i dH_il / dx_k.
std::pair<Matrix, Matrix> ricci_and_lie_components(const OperatorContext& ctx, const Vector& x);

/// Scal(x) - scal_mean + 2 Lap<x, a>(x), with Lap<x, a> = -sum a_j dH_ij/dx_i.
double soliton_residual(const OperatorContext& ctx, const Vector& x, double scal_mean);
double soliton_residual_from_stack(const MetricStack& s, const Vector& a, double scal_mean);
std::pair<Matrix, Matrix> ricci_and_lie_from_stack(const MetricStack& s, const Vector& drift);

enum class OperatorId { Laplacian, WeightedLaplacian, ComplexWeightedLaplacian, AbreuCurvature };

/// Steps are fractions of the smallest facet value at the evaluation point.
struct FdOptions {
    double outer_step = 0.02;  // differences of H and of the profile
    double inner_step = 0.02;  // differences of phi giving G
    int orientation = +1;
};

/// Recomputes an operator from potential values only (nested fourth-order
/// central differences), or from H values when the potential has no closed
/// form value. profile_value supplies u.
Complex finite_difference_oracle(const OperatorContext& ctx, const std::function<double(const Vector&)>& profile_value,
                                 const IntVector& mode, const Vector& x, OperatorId op, const FdOptions& options = {});

/// Tensor grid of n x n points clipped to facet values >= margin * spread.
std::vector<Vector> interior_grid(const DelzantPolytope& p, int n, double margin);

}  // namespace toricsol
