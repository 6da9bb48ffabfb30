#include "toricsol/eigenbasis.hpp"

#include <algorithm>
#include <cmath>

namespace toricsol {

ProfileJet RootFunction::profile_from_stack(const MetricStack& s, const Vector& x) const {
    const Vector alpha = root.alpha.cast<double>();
    const int n = static_cast<int>(alpha.size());
    const double e = std::exp(-alpha.dot(s.gradient));
    const Vector ga = s.G * alpha;
    const Vector de = -ga * e;
    Matrix dde(n, n);
    for (int k = 0; k < n; ++k) dde.col(k) = (-(s.dG[static_cast<size_t>(k)] * alpha) + ga * ga[k]) * e;
    const double ell = b_rho.dot(x) + constant;
    ProfileJet u;
    u.value = ell * e;
    u.gradient = b_rho * e + ell * de;
    u.hessian = b_rho * de.transpose() + de * b_rho.transpose() + ell * dde;
    return u;
}

ProfileJet RootFunction::profile(const Vector& x) const { return profile_from_stack(potential->evaluate(x), x); }

double RootFunction::value(const Vector& x) const { return profile(x).value; }

EquivariantFunction RootFunction::function() const {
    RootFunction self = *this;
    return EquivariantFunction{mode(), 1.0, [self](const Vector& x) { return self.profile(x); }};
}

RootFunction build_root_function(const OperatorContext& ctx, const DemazureRoot& root, int mode_sign, double constant) {
    if (mode_sign != 1 && mode_sign != -1) throw Error(ErrorCode::InvalidArgument, "mode sign must be +1 or -1");
    RootFunction rf;
    rf.root = root;
    rf.mode_sign = mode_sign;
    rf.b_rho = ctx.polytope.facets().at(static_cast<size_t>(root.distinguished_facet)).normal.cast<double>();
    rf.constant = constant;
    rf.potential = ctx.potential;
    return rf;
}

BoundaryProductForm::BoundaryProductForm(const DelzantPolytope& p, const DemazureRoot& root) : poly_(p) {
    if (!p.is_algebraic()) throw Error(ErrorCode::InvalidArgument, "boundary product form needs the algebraic polytope");
    const Vector alpha = root.alpha.cast<double>();
    Vector sum = Vector::Zero(p.dim());
    for (int r = 0; r < p.facet_count(); ++r) {
        const double pair = static_cast<double>(root.pairings.at(static_cast<size_t>(r)));
        exponents_.push_back(r == root.distinguished_facet ? 1.0 - 0.5 * pair : -0.5 * pair);
        sum += p.normals().row(r).transpose();
    }
    prefactor_ = std::exp(-0.5 * alpha.dot(sum));
}

double BoundaryProductForm::operator()(const Vector& x) const {
    const Vector l = poly_.facet_values(x);
    double v = prefactor_;
    for (Eigen::Index r = 0; r < l.size(); ++r) {
        if (l[r] < -1e-12) throw Error(ErrorCode::OutOfDomain, "point lies outside the closed polytope");
        const double e = exponents_[static_cast<size_t>(r)];
        if (e == 0.0) continue;
        v *= std::pow(std::max(l[r], 0.0), e);
    }
    return v;
}

BoundaryProductForm boundary_product_form(const DelzantPolytope& p, const DemazureRoot& root) {
    return BoundaryProductForm(p, root);
}

std::vector<MetricStack> evaluate_stacks(const OperatorContext& ctx, const std::vector<Vector>& grid) {
    std::vector<MetricStack> out;
    out.reserve(grid.size());
    for (const auto& x : grid) {
        if (!ctx.polytope.is_interior(x))
            throw Error(ErrorCode::BoundaryEvaluation, "grid point outside the open polytope");
        out.push_back(ctx.potential->evaluate(x));
    }
    return out;
}

namespace {

struct Samples {
    std::vector<double> u, lu;
};

template <class JetOf>
Samples sample(const OperatorContext& ctx, const IntVector& mode, const std::vector<Vector>& grid,
               const std::vector<MetricStack>& stacks, int orientation, const JetOf& jet_of) {
    Samples s;
    const Vector w = ctx.drift();
    for (size_t i = 0; i < grid.size(); ++i) {
        const ProfileJet u = jet_of(stacks[i], grid[i]);
        s.u.push_back(u.value);
        s.lu.push_back(laplacian_from_stack(stacks[i], w, mode, u, true, orientation).real());
    }
    return s;
}

EigenFit fit(const Samples& s, double target) {
    double num = 0.0, den = 0.0, umax = 0.0, rmax = 0.0;
    for (size_t i = 0; i < s.u.size(); ++i) {
        num += s.lu[i] * s.u[i];
        den += s.u[i] * s.u[i];
        umax = std::max(umax, std::abs(s.u[i]));
        rmax = std::max(rmax, std::abs(s.lu[i] - target * s.u[i]));
    }
    EigenFit f;
    f.fitted_eigenvalue = den > 0.0 ? num / den : 0.0;
    f.max_rel_residual = umax > 0.0 ? rmax / umax : rmax;
    return f;
}

Samples sample_root(const OperatorContext& ctx, const RootFunction& rf, const std::vector<Vector>& grid,
                    const std::vector<MetricStack>& stacks, int orientation) {
    return sample(ctx, rf.mode(), grid, stacks, orientation,
                  [&rf](const MetricStack& s, const Vector& x) { return rf.profile_from_stack(s, x); });
}

}  // namespace

EigenFit fit_eigenvalue(const OperatorContext& ctx, const EquivariantFunction& f, const std::vector<Vector>& grid,
                        const std::vector<MetricStack>& stacks, int orientation, double target) {
    auto s = sample(ctx, f.mode, grid, stacks, orientation,
                    [&f](const MetricStack&, const Vector& x) { return f.profile(x); });
    return fit(s, target);
}

EigenFit eigen_residual(const OperatorContext& ctx, const RootFunction& rf, const std::vector<Vector>& grid,
                        const std::vector<MetricStack>& stacks) {
    return fit(sample_root(ctx, rf, grid, stacks, +1), 2.0);
}

EigenFit eigen_residual(const OperatorContext& ctx, const RootFunction& rf, const std::vector<Vector>& grid) {
    return eigen_residual(ctx, rf, grid, evaluate_stacks(ctx, grid));
}

int choose_mode_sign(const OperatorContext& ctx, const DemazureRoot& root, const std::vector<Vector>& grid,
                     const std::vector<MetricStack>& stacks) {
    const double plus =
        std::abs(eigen_residual(ctx, build_root_function(ctx, root, +1), grid, stacks).fitted_eigenvalue - 2.0);
    const double minus =
        std::abs(eigen_residual(ctx, build_root_function(ctx, root, -1), grid, stacks).fitted_eigenvalue - 2.0);
    return minus < plus - 1e-9 ? -1 : +1;
}

AntiHolomorphicFit anti_holomorphic_eigenvalue(const OperatorContext& ctx, const RootFunction& rf,
                                               const std::vector<Vector>& grid, const std::vector<MetricStack>& stacks) {
    auto s = sample_root(ctx, rf, grid, stacks, -1);
    const EigenFit f = fit(s, 2.0);
    AntiHolomorphicFit out;
    out.gamma_hat = f.fitted_eigenvalue - 2.0;
    double umax = 0.0, rmax = 0.0;
    for (size_t i = 0; i < s.u.size(); ++i) {
        umax = std::max(umax, std::abs(s.u[i]));
        rmax = std::max(rmax, std::abs(s.lu[i] - f.fitted_eigenvalue * s.u[i]));
    }
    out.fit_residual = umax > 0.0 ? rmax / umax : rmax;
    return out;
}

AntiHolomorphicFit anti_holomorphic_eigenvalue(const OperatorContext& ctx, const RootFunction& rf,
                                               const std::vector<Vector>& grid) {
    return anti_holomorphic_eigenvalue(ctx, rf, grid, evaluate_stacks(ctx, grid));
}

AffineBlock affine_block(const OperatorContext& ctx, const std::vector<Vector>& grid,
                         const std::vector<MetricStack>& stacks) {
    AffineBlock block;
    const int n = ctx.dim();
    block.complex_dimension = n;
    for (int i = 0; i < n; ++i) {
        const EquivariantFunction f = invariant(affine_profile(Vector::Unit(n, i)), n);
        block.checks.push_back(fit_eigenvalue(ctx, f, grid, stacks, +1, 2.0));
    }
    return block;
}

SolitonDecomposition assemble_decomposition(const OperatorContext& ctx, const RootSet& roots, double tol) {
    struct Entry {
        double gamma;
        DemazureRoot root;
    };
    std::vector<Entry> entries;
    for (const auto& r : roots.roots) {
        double g = 2.0 * r.alpha.cast<double>().dot(ctx.a);
        if (std::abs(g) <= tol) g = 0.0;
        entries.push_back({g, r});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) { return l.gamma < r.gamma; });

    SolitonDecomposition d;
    d.affine_dimension = ctx.dim();
    DecompositionBlock zero{0.0, {}, true, d.affine_dimension};
    d.blocks.push_back(zero);
    for (const auto& e : entries) {
        DecompositionBlock* target = nullptr;
        for (auto& b : d.blocks)
            if (std::abs(b.gamma - e.gamma) <= tol) target = &b;
        if (!target) {
            d.blocks.push_back(DecompositionBlock{e.gamma, {}, false, 0});
            target = &d.blocks.back();
        }
        target->roots.push_back(e.root);
        target->complex_dimension += 1;
    }
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](const DecompositionBlock& l, const DecompositionBlock& r) { return l.gamma < r.gamma; });
    for (const auto& b : d.blocks) {
        d.gamma_values.push_back(b.gamma);
        d.total_dimension += b.complex_dimension;
    }
    return d;
}

}  // namespace toricsol
