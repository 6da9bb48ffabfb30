#pragma once

#include "toricsol/polytope.hpp"

#include <vector>

namespace toricsol {

/// V(w) = int_P exp(-2<w,x>) dx with its gradient and Hessian in w.
struct WeightedVolume {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;
};

WeightedVolume weighted_volume(const DelzantPolytope& p, const Vector& w, int order = 10);

struct SolverOptions {
    double tol = 1e-10;
    int max_iterations = 50;
    int initial_order = 10;
    int max_order = 80;
};

struct IterationRecord {
    int iteration = 0;
    double volume = 0.0;
    double gradient_ratio = 0.0;  // |grad V| / V
    double step_length = 0.0;
    int halvings = 0;
    int order = 0;
    double min_hessian_eigenvalue = 0.0;
};

/// The soliton vector a in the sign convention of the scalar soliton
/// equation Scal - Scal_mean = -2 Lap<mu, a>. The Futaki weight and every
/// drift term use w = -a, so that int_P exp(-2<w,x>) x dx = 0.
struct SolitonData {
    Vector a;
    double lambda = 1.0;
    double futaki_residual = 0.0;
    std::vector<double> futaki_residuals;  // basis 1, x_1, ..., x_n
    int quadrature_order = 0;
    std::vector<IterationRecord> iterations;

    Vector drift() const { return -a; }
};

/// Damped Newton minimisation of V from w = 0. Non-algebraic input is
/// normalised first.
SolitonData solve_soliton_vector(const DelzantPolytope& p, const SolverOptions& options = {});

/// Affine-basis defects of the weighted barycenter condition at drift w.
std::vector<double> futaki_defects(const DelzantPolytope& p, const Vector& w, int order);

double einstein_constant(double scal_mean, int n);

/// Mean of the scalar curvature over P for any compatible metric:
/// 2 * (boundary measure) / volume, where a facet with normal nu carries
/// Lebesgue measure divided by |nu|. Dimension 2 only.
double mean_scalar_curvature(const DelzantPolytope& p);

}  // namespace toricsol
