#pragma once

#include "toricsol/operators.hpp"
#include "toricsol/roots.hpp"

#include <vector>

namespace toricsol {

/// u(x) = (<x, b_rho> + 1) exp(-<alpha, grad phi(x)>) on mode mode_sign * alpha.
struct RootFunction {
    DemazureRoot root;
    int mode_sign = +1;
    Vector b_rho;
    double constant = 1.0;  // the "+1"; zero only for negative controls
    PotentialPtr potential;

    IntVector mode() const { return mode_sign * root.alpha; }
    ProfileJet profile_from_stack(const MetricStack& s, const Vector& x) const;
    ProfileJet profile(const Vector& x) const;
    double value(const Vector& x) const;
    EquivariantFunction function() const;
};

RootFunction build_root_function(const OperatorContext& ctx, const DemazureRoot& root, int mode_sign,
                                 double constant = 1.0);

/// exp(-1/2 <alpha, sum b_rho>) prod_rho L_rho^{e_rho} with e_rho = -1/2 <alpha, b_rho>
/// except e = 1/2 on the distinguished facet. Continuous on the closed polytope.
class BoundaryProductForm {
public:
    BoundaryProductForm(const DelzantPolytope& p, const DemazureRoot& root);

    double operator()(const Vector& x) const;
    const std::vector<double>& exponents() const { return exponents_; }
    double prefactor() const { return prefactor_; }

private:
    DelzantPolytope poly_;
    std::vector<double> exponents_;
    double prefactor_;
};

BoundaryProductForm boundary_product_form(const DelzantPolytope& p, const DemazureRoot& root);

struct EigenFit {
    double max_rel_residual = 0.0;  // max |(D - target) u| / max |u|
    double fitted_eigenvalue = 0.0;  // least squares D u = lambda u
};

/// Stacks at every grid point, computed once and shared by all checks.
std::vector<MetricStack> evaluate_stacks(const OperatorContext& ctx, const std::vector<Vector>& grid);

/// Complex weighted Laplacian with the given orientation against target * u.
EigenFit fit_eigenvalue(const OperatorContext& ctx, const EquivariantFunction& f, const std::vector<Vector>& grid,
                        const std::vector<MetricStack>& stacks, int orientation, double target);

EigenFit eigen_residual(const OperatorContext& ctx, const RootFunction& rf, const std::vector<Vector>& grid);
EigenFit eigen_residual(const OperatorContext& ctx, const RootFunction& rf, const std::vector<Vector>& grid,
                        const std::vector<MetricStack>& stacks);

/// Sign with fitted eigenvalue closest to 2; ties within 1e-9 go to +1.
int choose_mode_sign(const OperatorContext& ctx, const DemazureRoot& root, const std::vector<Vector>& grid,
                     const std::vector<MetricStack>& stacks);

struct AntiHolomorphicFit {
    double gamma_hat = 0.0;     // (D_{-J} - 2) u = gamma_hat u
    double fit_residual = 0.0;  // max |(D_{-J} - 2 - gamma_hat) u| / max |u|
};

AntiHolomorphicFit anti_holomorphic_eigenvalue(const OperatorContext& ctx, const RootFunction& rf,
                                               const std::vector<Vector>& grid);
AntiHolomorphicFit anti_holomorphic_eigenvalue(const OperatorContext& ctx, const RootFunction& rf,
                                               const std::vector<Vector>& grid, const std::vector<MetricStack>& stacks);

struct AffineBlock {
    int complex_dimension = 0;  // n; real dimension 2n
    std::vector<EigenFit> checks;  // one per coordinate function, mode 0
};

AffineBlock affine_block(const OperatorContext& ctx, const std::vector<Vector>& grid,
                         const std::vector<MetricStack>& stacks);

struct DecompositionBlock {
    double gamma = 0.0;
    std::vector<DemazureRoot> roots;
    bool contains_affine = false;
    int complex_dimension = 0;
};

struct SolitonDecomposition {
    int affine_dimension = 0;
    std::vector<DecompositionBlock> blocks;  // ascending gamma
    std::vector<double> gamma_values;
    int total_dimension = 0;
};

/// Groups roots by gamma = 2 <alpha, a> within tol; the affine block joins gamma = 0.
SolitonDecomposition assemble_decomposition(const OperatorContext& ctx, const RootSet& roots, double tol = 1e-9);

}  // namespace toricsol
