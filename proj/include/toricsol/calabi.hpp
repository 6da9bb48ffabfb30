#pragma once

#include "toricsol/polytope.hpp"
#include "toricsol/potentials.hpp"

#include <vector>

namespace toricsol {

/// Labelled Calabi trapezoid: the image of [alpha1, alpha2] x [beta1, beta2]
/// under (x, y) -> (x, xy) with normals C * (alpha_i, 0) and C * (beta_i, -1).
struct CalabiParameters {
    double alpha1 = 1.0, alpha2 = 3.0, beta1 = 0.0, beta2 = 1.0;
    double c_alpha1 = 1.0, c_alpha2 = -1.0 / 3.0, c_beta1 = -1.0, c_beta2 = 1.0;

    /// The record of the one-point blow-up of the projective plane.
    static CalabiParameters blowup() { return {}; }

    void validate() const;

    /// Constant value of B''.
    double m() const;

    /// Mean scalar curvature of any Calabi metric on the trapezoid.
    double scal_mean() const;
};

/// Moment polytope of the labelled trapezoid. Normals must be integral.
DelzantPolytope calabi_trapezoid(const CalabiParameters& params);

struct ProfileValue {
    double value = 0.0, d1 = 0.0, d2 = 0.0;
};

/// H at a point of the trapezoid with all first and second partials.
struct HMatrixJet {
    Matrix H;
    std::vector<Matrix> dH;   // [k]
    std::vector<Matrix> ddH;  // [k*2 + l]
};

/// Soliton of the Calabi ansatz. A solves
///   -A'' - 2 a1 A' - x Scal_mean = m,  A(alpha1) = 0,  A'(alpha1) = 2 / C_alpha1
/// and B(y) = (m / 2)(y - beta1)(y - beta2).
class CalabiSoliton {
public:
    CalabiSoliton(CalabiParameters params, double a1);

    /// Uses solve_a1 on the default bracket.
    static CalabiSoliton solve(const CalabiParameters& params);

    const CalabiParameters& params() const { return params_; }
    double a1() const { return a1_; }
    double m() const { return m_; }
    double scal_mean() const { return scal_mean_; }

    ProfileValue profile_A(double x) const;
    ProfileValue profile_B(double y) const;

    /// -A''(x) - 2 a1 A'(x) - x scal_mean - m.
    double ode_residual(double x, double scal_mean) const;
    /// B''(y) - m.
    double b_residual(double y) const;

    HMatrixJet h_matrix(const Eigen::Vector2d& mu) const;
    Matrix g_matrix(const Eigen::Vector2d& mu) const;
    bool in_open_trapezoid(const Eigen::Vector2d& mu) const;

private:
    // A = k1 + k2 exp(-2 a1 x) + c1 x + c2 x^2
    double k1_ = 0.0, k2_ = 0.0, c1_ = 0.0, c2_ = 0.0;
    CalabiParameters params_;
    double a1_;
    double m_;
    double scal_mean_;
};

/// a1^3 A(alpha2) as a function of a1, with A fixed by its alpha1 data. For
/// the blow-up record this is minus the transcendental equation for a1.
double terminal_defect(const CalabiParameters& params, double a1);

/// Nonzero root of terminal_defect in [lo, hi] by bisection and Newton
/// polish. Raises NoSignChange if the bracket does not straddle a root.
double solve_a1(const CalabiParameters& params, double lo = -0.5, double hi = -0.05);

/// mu -> mu - center.
Eigen::Vector2d to_algebraic_coordinates(const Eigen::Vector2d& mu,
                                         const Eigen::Vector2d& center = Eigen::Vector2d(2.0, 1.0));

/// The soliton metric on the normalized trapezoid. Gradient gauge:
/// grad phi(0) = 0, recovered by line integrals from the origin.
class CalabiPotential final : public SymplecticPotential {
public:
    CalabiPotential(CalabiSoliton soliton, Eigen::Vector2d center);

    std::string name() const override { return "calabi"; }
    int dim() const override { return 2; }
    bool contains(const Vector& x) const override;
    MetricStack evaluate(const Vector& x) const override;
    Matrix hessian(const Vector& x) const override;
    Matrix inverse_hessian(const Vector& x) const override;

    const CalabiSoliton& soliton() const { return soliton_; }
    const Eigen::Vector2d& center() const { return center_; }

private:
    Eigen::Vector2d to_mu(const Vector& x) const;
    CalabiSoliton soliton_;
    Eigen::Vector2d center_;
};

/// Calabi potential for a polytope whose normalization is the normalized
/// trapezoid of params. Raises InvalidArgument otherwise.
PotentialPtr calabi_potential(const DelzantPolytope& p, const CalabiParameters& params = CalabiParameters::blowup());

}  // namespace toricsol
