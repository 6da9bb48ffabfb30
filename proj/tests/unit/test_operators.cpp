#include "helpers.hpp"

#include "toricsol/calabi.hpp"
#include "toricsol/eigenbasis.hpp"
#include "toricsol/futaki.hpp"
#include "toricsol/operators.hpp"
#include "toricsol/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace toricsol;
using testing::load;
using testing::ivec2;
using testing::vec2;

namespace {

OperatorContext cp2_context() {
    const auto p = load("cp2");
    return {p, guillemin(p), Vector::Zero(2)};
}

OperatorContext blowup_context() {
    const auto p = load("blowup");
    return {p, calabi_potential(p), solve_soliton_vector(p).a};
}

OperatorContext flat_context() { return {load("square"), flat_model(2), Vector::Zero(2)}; }

Profile x1_squared() {
    return [](const Vector& x) {
        Matrix h = Matrix::Zero(2, 2);
        h(0, 0) = 2.0;
        return ProfileJet{x[0] * x[0], vec2(2 * x[0], 0), h};
    };
}

// smooth non-polynomial test profile
Profile wave() {
    return [](const Vector& x) {
        const double s = std::sin(x[0] - 0.5 * x[1]), c = std::cos(x[0] - 0.5 * x[1]);
        const Eigen::Vector2d g(1.0, -0.5);
        return ProfileJet{s, c * Vector(g), -s * Matrix(g * g.transpose())};
    };
}

}  // namespace

TEST_CASE("Laplacian examples") {
    const auto cp2 = cp2_context();
    const int n = 2;
    CHECK(std::abs(apply_laplacian(cp2, invariant(constant_profile(n, 3.0), n), vec2(0.1, 0.2))) == 0.0);
    CHECK(std::abs(apply_laplacian(cp2, invariant(affine_profile(vec2(1, 0)), n), vec2(0, 0))) <= 1e-14);

    const auto flat = flat_context();
    for (const Vector& x : {vec2(0, 0), vec2(0.3, -0.7)})
        CHECK(std::abs(apply_laplacian(flat, invariant(x1_squared(), n), x) - Complex(-2.0, 0.0)) <= 1e-15);

    // with a = 0 the weighted operator is the plain one
    const EquivariantFunction f{ivec2(1, -1), 1.0, wave()};
    for (const auto& x : testing::scattered_points(cp2.polytope, 10, 0.1)) {
        const auto plain = apply_laplacian(cp2, f, x);
        CHECK(std::abs(apply_weighted_laplacian(cp2, f, x) - plain) <= 1e-14);
        CHECK(std::abs(apply_complex_weighted_laplacian(cp2, f, x, -1) - plain) <= 1e-14);
    }

    try {
        apply_laplacian(cp2, f, vec2(2, 2));
        FAIL("expected BoundaryEvaluation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundaryEvaluation);
    }
    try {
        apply_complex_weighted_laplacian(cp2, f, vec2(0, 0), 0);
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("coordinate functions are eigenfunctions with eigenvalue 2") {
    for (const auto& ctx : {cp2_context(), blowup_context()}) {
        for (const auto& x : interior_grid(ctx.polytope, 9, 0.05)) {
            for (int i = 0; i < 2; ++i) {
                const auto f = invariant(affine_profile(Vector::Unit(2, i)), 2);
                CHECK(std::abs(apply_weighted_laplacian(ctx, f, x) - Complex(2.0 * x[i], 0.0)) <= 1e-6);
            }
        }
    }
}

TEST_CASE("mode identities for the exponential factor") {
    for (const auto& ctx : {cp2_context(), blowup_context()}) {
        const Vector w = ctx.drift();
        const auto roots = demazure_roots(ctx.polytope);
        for (const auto& root : roots.roots) {
            RootFunction e = build_root_function(ctx, root, +1);
            e.b_rho = Vector::Zero(2);
            const Vector alpha = root.alpha.cast<double>();
            const IntVector zero = IntVector::Zero(2);
            for (const auto& x : testing::scattered_points(ctx.polytope, 8, 0.1)) {
                const auto s = ctx.potential->evaluate(x);
                const double expected = alpha.dot(s.G * alpha) + 2.0 * alpha.dot(w);
                const EquivariantFunction one{root.alpha, 1.0, constant_profile(2, 1.0)};
                CHECK(std::abs(apply_complex_weighted_laplacian(ctx, one, x, +1).real() - expected) <= 1e-8);
                const auto ej = e.profile(x);
                const EquivariantFunction ez{zero, 1.0, [&](const Vector& y) { return e.profile(y); }};
                CHECK(std::abs(apply_complex_weighted_laplacian(ctx, ez, x, +1).real() + expected * ej.value) <=
                      1e-8 * std::abs(ej.value));
                const EquivariantFunction ea{root.alpha, 1.0, [&](const Vector& y) { return e.profile(y); }};
                CHECK(std::abs(apply_complex_weighted_laplacian(ctx, ea, x, +1)) <= 1e-8 * std::abs(ej.value));
            }
        }
    }
}

TEST_CASE("product rule") {
    for (const auto& ctx : {cp2_context(), blowup_context(), flat_context()}) {
        for (const auto& x : testing::scattered_points(ctx.polytope, 6, 0.1)) {
            CHECK(std::abs(product_rule_residual(ctx, wave(), x1_squared(), x)) <= 1e-8);
            CHECK(std::abs(product_rule_residual(ctx, affine_profile(vec2(1, 2), 1), wave(), x)) <= 1e-8);
            CHECK(std::abs(product_rule_residual(ctx, constant_profile(2, 2.0), wave(), x)) <= 1e-12);
        }
    }
}

TEST_CASE("conjugate orientation shifts by 4 <k, w>") {
    const auto ctx = blowup_context();
    const IntVector k = ivec2(-1, -1);
    const EquivariantFunction f{k, 1.0, wave()};
    for (const auto& x : testing::scattered_points(ctx.polytope, 8, 0.1)) {
        const Complex d = apply_complex_weighted_laplacian(ctx, f, x, +1) - apply_complex_weighted_laplacian(ctx, f, x, -1);
        CHECK(std::abs(d.real() - 4.0 * ctx.drift().dot(k.cast<double>()) * wave()(x).value) <= 1e-12);
        CHECK(std::abs((apply_complex_weighted_laplacian(ctx, f, x, +1) + apply_complex_weighted_laplacian(ctx, f, x, -1)) *
                           0.5 -
                       apply_weighted_laplacian(ctx, f, x)) <= 1e-12);
    }
}

TEST_CASE("gradients in the flat model") {
    const auto ctx = flat_context();
    const IntVector k = ivec2(2, -1);
    const EquivariantFunction f{k, Complex(0.0, 2.0), x1_squared()};
    const Vector x = vec2(0.5, 0.25);
    const auto g = gradients(ctx, f, x);
    const Complex c(0.0, 2.0), i(0.0, 1.0);
    CHECK(std::abs(g.riemannian_x[0] - c * 1.0) <= 1e-15);
    CHECK(std::abs(g.riemannian_x[1]) <= 1e-15);
    CHECK(std::abs(g.riemannian_t[0] - c * i * 0.25 * 2.0) <= 1e-15);
    CHECK(std::abs(g.riemannian_t[1] - c * i * 0.25 * -1.0) <= 1e-15);
    CHECK((g.symplectic_x + g.riemannian_t).norm() <= 1e-15);
    CHECK((g.symplectic_t - g.riemannian_x).norm() <= 1e-15);
}

TEST_CASE("scalar curvature") {
    const auto cp2 = cp2_context();
    for (const auto& x : interior_grid(cp2.polytope, 21, 0.02)) {
        CHECK(std::abs(abreu_scalar_curvature(cp2, x) - 4.0) <= 1e-10);
        const auto [ric, lie] = ricci_and_lie_components(cp2, x);
        CHECK((ric - Matrix::Identity(2, 2)).norm() <= 1e-10);
        CHECK(lie.norm() == 0.0);
        CHECK(std::abs(soliton_residual(cp2, x, 4.0)) <= 1e-10);
    }
    const auto flat = flat_context();
    CHECK(abreu_scalar_curvature(flat, vec2(0.2, 0.1)) == 0.0);
    CHECK(ricci_and_lie_components(flat, vec2(0.2, 0.1)).first.norm() == 0.0);

    const auto blowup = blowup_context();
    for (const auto& x : interior_grid(blowup.polytope, 11, 0.05)) {
        const auto [ric, lie] = ricci_and_lie_components(blowup, x);
        CHECK((ric - lie - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-6);
        CHECK(std::abs(soliton_residual(blowup, x, 4.0)) <= 1e-6);
    }

    // the Guillemin metric on the blow-up is not a soliton
    const OperatorContext wrong{blowup.polytope, guillemin(blowup.polytope), blowup.a};
    double worst = 0.0;
    for (const auto& x : interior_grid(wrong.polytope, 11, 0.05))
        worst = std::max(worst, std::abs(soliton_residual(wrong, x, 4.0)));
    CHECK(worst > 1e-2);
}

TEST_CASE("analytic operators agree with the finite-difference oracle") {
    SUBCASE("projective plane, potential values") {
        const auto ctx = cp2_context();
        const auto roots = demazure_roots(ctx.polytope);
        for (const auto& x : testing::scattered_points(ctx.polytope, 5, 0.3)) {
            for (const auto& root : roots.roots) {
                const RootFunction rf = build_root_function(ctx, root, +1);
                const auto s = ctx.potential->evaluate(x);
                const Complex exact = laplacian_from_stack(s, ctx.drift(), rf.mode(), rf.profile(x), true, +1);
                const Complex fd = finite_difference_oracle(
                    ctx, [&](const Vector& y) { return rf.value(y); }, rf.mode(), x, OperatorId::ComplexWeightedLaplacian);
                CHECK(std::abs(fd - exact) <= 1e-4 * std::abs(rf.value(x)));
            }
            CHECK(std::abs(finite_difference_oracle(ctx, {}, IntVector::Zero(2), x, OperatorId::AbreuCurvature).real() -
                           4.0) <= 1e-3);
        }
    }
    SUBCASE("blow-up, H values") {
        const auto ctx = blowup_context();
        const auto roots = demazure_roots(ctx.polytope);
        for (const auto& x : testing::scattered_points(ctx.polytope, 3, 0.3)) {
            for (const auto& root : roots.roots) {
                const RootFunction rf = build_root_function(ctx, root, +1);
                const auto s = ctx.potential->evaluate(x);
                const Complex exact = laplacian_from_stack(s, ctx.drift(), rf.mode(), rf.profile(x), true, +1);
                const Complex fd = finite_difference_oracle(
                    ctx, [&](const Vector& y) { return rf.value(y); }, rf.mode(), x, OperatorId::ComplexWeightedLaplacian);
                CHECK(std::abs(fd - exact) <= 1e-4 * std::abs(rf.value(x)));
            }
            CHECK(std::abs(finite_difference_oracle(ctx, {}, IntVector::Zero(2), x, OperatorId::AbreuCurvature).real() -
                           abreu_scalar_curvature(ctx, x)) <= 1e-3);
        }
    }
    SUBCASE("flat model is exact") {
        const auto ctx = flat_context();
        const Vector x = vec2(0.1, -0.2);
        const auto u = [](const Vector& y) { return y[0] * y[0]; };
        for (auto op : {OperatorId::Laplacian, OperatorId::WeightedLaplacian})
            CHECK(std::abs(finite_difference_oracle(ctx, u, IntVector::Zero(2), x, op) - Complex(-2.0, 0.0)) <= 1e-9);
    }
}

TEST_CASE("weighted Laplacian is symmetric for the weighted measure") {
    const auto ctx = blowup_context();
    const Vector w = ctx.drift();
    const auto nodes = quadrature_nodes(triangulate(ctx.polytope), 12);
    const Profile u = wave(), v = x1_squared();
    const IntVector zero = IntVector::Zero(2);
    double uv = 0.0, vu = 0.0, energy = 0.0;
    for (size_t i = 0; i < nodes.points.size(); ++i) {
        const auto& x = nodes.points[i];
        const auto s = ctx.potential->evaluate(x);
        const double weight = nodes.weights[i] * std::exp(-2.0 * w.dot(x));
        const auto ju = u(x), jv = v(x);
        uv += weight * laplacian_from_stack(s, w, zero, ju, true, 0).real() * jv.value;
        vu += weight * laplacian_from_stack(s, w, zero, jv, true, 0).real() * ju.value;
        energy += weight * ju.gradient.dot(s.H * jv.gradient);
    }
    CHECK(std::abs(uv - vu) <= 1e-6);
    CHECK(std::abs(uv - energy) <= 1e-6);
}

TEST_CASE("weighted mean of the scalar curvature") {
    const auto ctx = blowup_context();
    const Vector w = ctx.drift();
    const auto nodes = quadrature_nodes(triangulate(ctx.polytope), 14);
    double mass = 0.0, s_w = 0.0, aha = 0.0, s_plain = 0.0, vol = 0.0;
    for (size_t i = 0; i < nodes.points.size(); ++i) {
        const auto& x = nodes.points[i];
        const auto s = ctx.potential->evaluate(x);
        const double f = std::exp(-2.0 * w.dot(x));
        const double scal = abreu_from_stack(s);
        mass += nodes.weights[i] * f;
        s_w += nodes.weights[i] * f * scal;
        aha += nodes.weights[i] * f * ctx.a.dot(s.H * ctx.a);
        s_plain += nodes.weights[i] * scal;
        vol += nodes.weights[i];
    }
    const double weighted = s_w / mass;
    CHECK(std::abs(s_plain / vol - 4.0) <= 1e-4);
    CHECK(std::abs(weighted - (4.0 - 4.0 * aha / mass)) <= 1e-6);
    CHECK(std::abs(weighted - 4.0) > 0.1);

    // boundary form: 2 int_boundary f d sigma / int f - 4 <w H w>_w
    const auto v = testing::ccw(ctx.polytope);
    std::vector<double> gx, gw;
    gauss_legendre(20, gx, gw);
    double boundary = 0.0;
    for (size_t e = 0; e < v.size(); ++e) {
        const Eigen::Vector2d p0 = v[e], p1 = v[(e + 1) % v.size()];
        double nu = 0.0;
        for (const auto& fa : ctx.polytope.facets()) {
            const Vector n = fa.normal.cast<double>();
            const double off = fa.offset_value();
            if (std::abs(n.dot(Vector(p0)) + off) <= 1e-12 && std::abs(n.dot(Vector(p1)) + off) <= 1e-12) nu = n.norm();
        }
        REQUIRE(nu > 0.0);
        for (size_t q = 0; q < gx.size(); ++q) {
            const Eigen::Vector2d x = p0 + gx[q] * (p1 - p0);
            boundary += gw[q] * (p1 - p0).norm() / nu * std::exp(-2.0 * w.dot(Vector(x)));
        }
    }
    CHECK(std::abs(weighted - (2.0 * boundary / mass - 4.0 * aha / mass)) <= 1e-6);
}
