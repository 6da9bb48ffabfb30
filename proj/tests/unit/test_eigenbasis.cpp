#include "helpers.hpp"

#include "toricsol/calabi.hpp"
#include "toricsol/eigenbasis.hpp"
#include "toricsol/futaki.hpp"

#include <doctest.h>

#include <cmath>

using namespace toricsol;
using testing::ivec2;
using testing::load;
using testing::vec2;

namespace {

struct Setup {
    OperatorContext ctx;
    RootSet roots;
    std::vector<Vector> grid;
    std::vector<MetricStack> stacks;
};

Setup setup(const std::string& name, bool calabi) {
    const auto p = load(name);
    OperatorContext ctx{p, calabi ? calabi_potential(p) : guillemin(p), solve_soliton_vector(p).a};
    auto grid = interior_grid(p, 13, 0.05);
    auto stacks = evaluate_stacks(ctx, grid);
    return {ctx, demazure_roots(p), std::move(grid), std::move(stacks)};
}

// closed-form profiles on the projective plane, keyed by mode
double cp2_listed(const IntVector& mode, const Vector& x) {
    const double l1 = x[0] + 1, l2 = x[1] + 1, l3 = 1 - x[0] - x[1];
    if (mode == ivec2(-1, 0) || mode == ivec2(1, 0)) return std::sqrt(l1 * l3);
    if (mode == ivec2(-1, 1) || mode == ivec2(1, -1)) return std::sqrt(l1 * l2);
    if (mode == ivec2(0, -1) || mode == ivec2(0, 1)) return std::sqrt(l2 * l3);
    return NAN;
}

}  // namespace

TEST_CASE("projective plane root functions match the closed-form listing") {
    const auto s = setup("cp2", false);
    REQUIRE(s.roots.roots.size() == 6);
    for (const auto& root : s.roots.roots) {
        const RootFunction rf = build_root_function(s.ctx, root, choose_mode_sign(s.ctx, root, s.grid, s.stacks));
        CHECK(rf.mode() == root.alpha);
        const double c = rf.value(s.grid[0]) / cp2_listed(rf.mode(), s.grid[0]);
        REQUIRE(std::isfinite(c));
        for (const auto& x : s.grid) CHECK(std::abs(rf.value(x) - c * cp2_listed(rf.mode(), x)) <= 1e-10 * std::abs(c));
    }
}

TEST_CASE("boundary product form reproduces the Guillemin profile") {
    for (const char* name : {"cp2", "blowup", "square"}) {
        const auto s = setup(name, false);
        const auto& p = s.ctx.polytope;
        for (const auto& root : s.roots.roots) {
            const RootFunction rf = build_root_function(s.ctx, root, +1);
            const auto bp = boundary_product_form(p, root);
            for (const auto& x : s.grid) CHECK(std::abs(rf.value(x) - bp(x)) <= 1e-10 * std::max(1.0, std::abs(bp(x))));

            const auto& e = bp.exponents();
            REQUIRE(e.size() == p.facets().size());
            for (size_t r = 0; r < e.size(); ++r) {
                CHECK(e[r] >= 0.0);
                if (static_cast<int>(r) == root.distinguished_facet) CHECK(e[r] == 0.5);
                else CHECK(e[r] == -0.5 * static_cast<double>(root.pairings[r]));
            }
            for (const auto& v : p.vertices()) {
                const double at = bp(v.point);
                CHECK(std::isfinite(at));
                bool on_vanishing = false;
                for (int r : v.active) on_vanishing = on_vanishing || e[static_cast<size_t>(r)] > 0.0;
                if (on_vanishing) CHECK(at == 0.0);
                else CHECK(at > 0.0);
            }
            try {
                bp(vec2(10, 10));
                FAIL("expected OutOfDomain");
            } catch (const Error& err) {
                CHECK(err.code() == ErrorCode::OutOfDomain);
            }
        }
    }
}

TEST_CASE("root functions are eigenfunctions with eigenvalue 2") {
    for (const auto& [name, calabi] : {std::pair{"cp2", false}, std::pair{"blowup", true}, std::pair{"square", false}}) {
        const auto s = setup(name, calabi);
        for (const auto& root : s.roots.roots) {
            const int sign = choose_mode_sign(s.ctx, root, s.grid, s.stacks);
            CHECK(sign == +1);
            const RootFunction rf = build_root_function(s.ctx, root, sign);
            const auto fit = eigen_residual(s.ctx, rf, s.grid, s.stacks);
            CHECK(fit.max_rel_residual <= 1e-6);
            CHECK(std::abs(fit.fitted_eigenvalue - 2.0) <= 1e-6);

            const double pairing = root.alpha.cast<double>().dot(s.ctx.a);
            const auto wrong = eigen_residual(s.ctx, build_root_function(s.ctx, root, -sign), s.grid, s.stacks);
            CHECK(std::abs(wrong.fitted_eigenvalue - (2.0 + 4.0 * pairing)) <= 1e-6);

            const auto anti = anti_holomorphic_eigenvalue(s.ctx, rf, s.grid, s.stacks);
            CHECK(std::abs(anti.gamma_hat - 4.0 * pairing) <= 1e-6);
            CHECK(anti.fit_residual <= 1e-6);
        }
    }
}

TEST_CASE("dropping the constant term breaks the eigen equation") {
    const auto s = setup("cp2", false);
    for (const auto& root : s.roots.roots) {
        const auto fit = eigen_residual(s.ctx, build_root_function(s.ctx, root, +1, 0.0), s.grid, s.stacks);
        CHECK(fit.max_rel_residual > 1e-2);
    }
}

TEST_CASE("anti-holomorphic eigenvalues on the blow-up") {
    const auto s = setup("blowup", true);
    const double a1 = s.ctx.a[0];
    for (const auto& root : s.roots.roots) {
        const auto anti = anti_holomorphic_eigenvalue(s.ctx, build_root_function(s.ctx, root, +1), s.grid, s.stacks);
        if (contains_root(s.roots.semisimple, root.alpha)) CHECK(std::abs(anti.gamma_hat) <= 1e-6);
        else CHECK(std::abs(anti.gamma_hat + 4.0 * a1) <= 1e-6);
    }
}

TEST_CASE("soliton decompositions") {
    SUBCASE("projective plane") {
        const auto s = setup("cp2", false);
        const auto d = assemble_decomposition(s.ctx, s.roots);
        REQUIRE(d.blocks.size() == 1);
        CHECK(d.blocks[0].gamma == 0.0);
        CHECK(d.blocks[0].complex_dimension == 8);
        CHECK(d.blocks[0].contains_affine);
        CHECK(d.total_dimension == 8);
        CHECK(d.affine_dimension == 2);
    }
    SUBCASE("blow-up") {
        const auto s = setup("blowup", true);
        const auto d = assemble_decomposition(s.ctx, s.roots);
        REQUIRE(d.blocks.size() == 2);
        CHECK(std::abs(d.blocks[0].gamma) <= 1e-9);
        CHECK(d.blocks[0].complex_dimension == 4);
        CHECK(d.blocks[0].contains_affine);
        CHECK(std::abs(d.blocks[1].gamma + 2.0 * s.ctx.a[0]) <= 1e-12);
        CHECK(d.blocks[1].complex_dimension == 2);
        CHECK_FALSE(d.blocks[1].contains_affine);
        CHECK(d.total_dimension == 6);
        // the zero block is affine plus semisimple, the other the unipotent roots
        for (const auto& r : d.blocks[0].roots) CHECK(contains_root(s.roots.semisimple, r.alpha));
        for (const auto& r : d.blocks[1].roots) CHECK(contains_root(s.roots.unipotent, r.alpha));
        const auto dims = automorphism_dimensions(s.roots, 2);
        CHECK(d.total_dimension == dims.dim_eta);
        CHECK(d.blocks[0].complex_dimension == dims.dim_reductive);
    }
    SUBCASE("square") {
        const auto s = setup("square", false);
        const auto d = assemble_decomposition(s.ctx, s.roots);
        REQUIRE(d.blocks.size() == 1);
        CHECK(d.blocks[0].complex_dimension == 6);
    }
}

TEST_CASE("affine block") {
    for (const auto& [name, calabi] : {std::pair{"cp2", false}, std::pair{"blowup", true}}) {
        const auto s = setup(name, calabi);
        const auto block = affine_block(s.ctx, s.grid, s.stacks);
        CHECK(block.complex_dimension == 2);
        REQUIRE(block.checks.size() == 2);
        for (const auto& c : block.checks) {
            CHECK(c.max_rel_residual <= 1e-6);
            CHECK(std::abs(c.fitted_eigenvalue - 2.0) <= 1e-6);
        }
    }
}
