#include "toricsol/report.hpp"

#include "toricsol/eigenbasis.hpp"
#include "toricsol/futaki.hpp"
#include "toricsol/quadrature.hpp"
#include "toricsol/roots.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace toricsol {

namespace {

constexpr double kPointwise = 1e-6;
constexpr double kIdentity = 1e-8;
constexpr double kMean = 1e-4;
constexpr double kPairing = 1e-9;

nlohmann::json vec(const Vector& v) { return std::vector<double>(v.begin(), v.end()); }
nlohmann::json ivec(const IntVector& v) { return std::vector<int>(v.begin(), v.end()); }

void require_delzant(const DelzantPolytope& p) {
    const auto verdict = delzant_check(p);
    if (verdict.passed) return;
    const int k = verdict.failing_vertices.front();
    std::string at = "(";
    for (const auto& c : p.vertices()[static_cast<size_t>(k)].exact) at += (at.size() > 1 ? "," : "") + format_rational(c);
    throw Error(ErrorCode::NotDelzant, "vertex " + at + ") has normal determinant " +
                                           std::to_string(verdict.determinants[static_cast<size_t>(k)]));
}

nlohmann::json vertices_json(const DelzantPolytope& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : p.vertices()) out.push_back({{"point", vec(v.point)}, {"active_facets", v.active}});
    return out;
}

nlohmann::json root_json(const DemazureRoot& r, const RootSet& rs) {
    return {{"alpha", ivec(r.alpha)},
            {"rho_alpha", r.distinguished_facet},
            {"pairings", r.pairings},
            {"class", contains_root(rs.semisimple, r.alpha) ? "S" : "U"}};
}

nlohmann::json polytope_section(const DelzantPolytope& input, const DelzantPolytope& alg) {
    const auto center = privileged_center(input);
    const auto verdict = delzant_check(alg);
    std::vector<std::string> exact;
    for (const auto& c : center.exact_point) exact.push_back(format_rational(c));
    return {{"input", polytope_to_json(input)},
            {"privileged_center", {{"point", vec(center.point)}, {"exact", exact}, {"common_value", center.common_value}}},
            {"normalized", polytope_to_json(alg)},
            {"vertices", vertices_json(alg)},
            {"delzant", {{"passed", verdict.passed}, {"determinants", verdict.determinants}}}};
}

SolverOptions solver_options(const ReportConfig& c) {
    SolverOptions o;
    o.tol = c.tol;
    o.initial_order = c.order;
    o.max_iterations = c.max_iterations;
    return o;
}

nlohmann::json soliton_json(const SolitonData& s) {
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& it : s.iterations)
        iters.push_back({{"iteration", it.iteration},
                         {"volume", it.volume},
                         {"gradient_ratio", it.gradient_ratio},
                         {"step_length", it.step_length},
                         {"halvings", it.halvings},
                         {"quadrature_order", it.order},
                         {"min_hessian_eigenvalue", it.min_hessian_eigenvalue}});
    nlohmann::json defects = nlohmann::json::array();
    for (size_t i = 0; i < s.futaki_residuals.size(); ++i)
        defects.push_back({{"basis", i == 0 ? std::string("1") : "x" + std::to_string(i)},
                           {"defect", s.futaki_residuals[i]}});
    return {{"a", vec(s.a)},
            {"weight_vector", vec(s.drift())},
            {"lambda", s.lambda},
            {"futaki_residual", s.futaki_residual},
            {"futaki_defects", defects},
            {"quadrature_order", s.quadrature_order},
            {"iterations", iters}};
}

struct Check {
    std::string name;
    double value;
    double threshold;
    bool passed;
};

struct Checks {
    std::vector<Check> list;

    void add(const std::string& name, double value, double threshold) {
        list.push_back({name, value, threshold, std::isfinite(value) && value <= threshold});
    }
    const Check* first_failure() const {
        for (const auto& c : list)
            if (!c.passed) return &c;
        return nullptr;
    }
    nlohmann::json json() const {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : list)
            out.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}});
        return out;
    }
};

struct Verification {
    nlohmann::json report;
    Checks checks;
};

Verification run_verification(const DelzantPolytope& input, const ReportConfig& config) {
    require_delzant(input);
    const DelzantPolytope alg = normalize_algebraic(input);
    const RootSet rs = demazure_roots(alg);
    const auto dims = automorphism_dimensions(rs, alg.dim());
    const SolitonData sol = solve_soliton_vector(alg, solver_options(config));

    PotentialPtr pot;
    nlohmann::json extra = nlohmann::json::object();
    if (config.potential == PotentialKind::Calabi) {
        pot = calabi_potential(input);
        const auto& cp = static_cast<const CalabiPotential&>(*pot);
        extra = {{"a1", cp.soliton().a1()},
                 {"m", cp.soliton().m()},
                 {"scal_mean", cp.soliton().scal_mean()},
                 {"center", vec(Vector(cp.center()))}};
    } else {
        pot = guillemin(alg);
    }
    const OperatorContext ctx{alg, pot, sol.a};
    const Vector w = ctx.drift();
    const int n = alg.dim();
    const auto grid = interior_grid(alg, config.grid, config.margin);
    if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "interior grid is empty; lower --margin or raise --grid");
    for (const auto& x : grid)
        if (!pot->contains(x)) throw Error(ErrorCode::InvalidArgument, "grid point outside the potential's domain");
    const auto stacks = evaluate_stacks(ctx, grid);
    const double scal_mean = mean_scalar_curvature(alg);

    Checks checks;
    checks.add("futaki_residual", sol.futaki_residual, config.tol);
    if (config.potential == PotentialKind::Calabi)
        checks.add("calabi_a1_agreement", std::abs(extra["a1"].get<double>() - sol.a[0]) + std::abs(sol.a[1]), 1e-8);

    // Metric-level identities.
    double pde = 0.0, ricci = 0.0;
    for (const auto& s : stacks) {
        pde = std::max(pde, std::abs(soliton_residual_from_stack(s, sol.a, scal_mean)));
        auto [ric, lie] = ricci_and_lie_from_stack(s, w);
        ricci = std::max(ricci, (ric - lie - sol.lambda * Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    checks.add("soliton_pde", pde, kPointwise);

    const auto tri = triangulate(alg);
    const auto nodes = quadrature_nodes(tri, config.order);
    double s_int = 0.0, vol = 0.0, s_wint = 0.0, wvol = 0.0;
    for (size_t i = 0; i < nodes.points.size(); ++i) {
        const double scal = abreu_from_stack(pot->evaluate(nodes.points[i]));
        const double e = std::exp(-2.0 * w.dot(nodes.points[i]));
        s_int += nodes.weights[i] * scal;
        vol += nodes.weights[i];
        s_wint += nodes.weights[i] * scal * e;
        wvol += nodes.weights[i] * e;
    }
    const double abreu_mean = s_int / vol;
    checks.add("abreu_mean", std::abs(abreu_mean - scal_mean), kMean);
    checks.add("ricci_soliton_identity", ricci, kPointwise);

    nlohmann::json affine_rows = nlohmann::json::array();
    const auto affine = affine_block(ctx, grid, stacks);
    double affine_max = 0.0;
    for (int i = 0; i < n; ++i) {
        affine_rows.push_back({{"b", ivec(IntVector::Unit(n, i))},
                         {"max_rel_residual", affine.checks[static_cast<size_t>(i)].max_rel_residual},
                         {"lambda_hat", affine.checks[static_cast<size_t>(i)].fitted_eigenvalue}});
        affine_max = std::max(affine_max, affine.checks[static_cast<size_t>(i)].max_rel_residual);
    }
    checks.add("affine_eigen_residual", affine_max, kPointwise);

    // Mode-diagonal identities per root.
    double mode_id = 0.0, exp_id = 0.0, prod = 0.0, prule = 0.0;
    for (const auto& root : rs.roots) {
        RootFunction e = build_root_function(ctx, root, +1);
        e.b_rho = Vector::Zero(n);
        const Vector alpha = root.alpha.cast<double>();
        for (size_t i = 0; i < grid.size(); ++i) {
            const auto& s = stacks[i];
            const double expected = alpha.dot(s.G * alpha) + 2.0 * alpha.dot(w);
            const ProfileJet one{1.0, Vector::Zero(n), Matrix::Zero(n, n)};
            mode_id = std::max(mode_id, std::abs(laplacian_from_stack(s, w, root.alpha, one, true, +1).real() - expected));
            const ProfileJet ej = e.profile_from_stack(s, grid[i]);
            const double l0 = laplacian_from_stack(s, w, IntVector::Zero(n), ej, true, +1).real();
            exp_id = std::max(exp_id, std::abs(l0 + expected * ej.value) / std::abs(ej.value));
            const double la = laplacian_from_stack(s, w, root.alpha, ej, true, +1).real();
            prod = std::max(prod, std::abs(la) / std::abs(ej.value));

            const ProfileJet x1{grid[i][0], Vector::Unit(n, 0), Matrix::Zero(n, n)};
            const ProfileJet uv{x1.value * ej.value, x1.gradient * ej.value + x1.value * ej.gradient,
                                x1.gradient * ej.gradient.transpose() + ej.gradient * x1.gradient.transpose() +
                                    x1.value * ej.hessian};
            const IntVector zero = IntVector::Zero(n);
            const double r = laplacian_from_stack(s, w, zero, uv, true, 0).real() -
                             ej.value * laplacian_from_stack(s, w, zero, x1, true, 0).real() -
                             x1.value * l0 + 2.0 * x1.gradient.dot(s.H * ej.gradient);
            prule = std::max(prule, std::abs(r) / std::max(1.0, std::abs(uv.value)));
        }
    }
    checks.add("mode_identity", mode_id, kIdentity);
    checks.add("exponential_identity", exp_id, kIdentity);
    checks.add("holomorphic_product", prod, kIdentity);
    checks.add("product_rule", prule, kIdentity);

    // Root eigenfunctions.
    nlohmann::json per_root = nlohmann::json::array();
    double eig_max = 0.0, lam_max = 0.0, anti_max = 0.0, anti_fit = 0.0, semisimple = 0.0;
    for (const auto& root : rs.roots) {
        const int sign = choose_mode_sign(ctx, root, grid, stacks);
        const RootFunction rf = build_root_function(ctx, root, sign);
        const EigenFit fit = eigen_residual(ctx, rf, grid, stacks);
        const AntiHolomorphicFit anti = anti_holomorphic_eigenvalue(ctx, rf, grid, stacks);
        const double pairing = root.alpha.cast<double>().dot(sol.a);
        const double predicted = 4.0 * pairing;
        int realized = 0;
        if (std::abs(predicted) > kPointwise) realized = std::abs(anti.gamma_hat - predicted) <= std::abs(anti.gamma_hat + predicted) ? +1 : -1;
        eig_max = std::max(eig_max, fit.max_rel_residual);
        lam_max = std::max(lam_max, std::abs(fit.fitted_eigenvalue - 2.0));
        anti_max = std::max(anti_max, std::abs(std::abs(anti.gamma_hat) - std::abs(predicted)));
        anti_fit = std::max(anti_fit, anti.fit_residual);
        const bool is_s = contains_root(rs.semisimple, root.alpha);
        if (is_s) semisimple = std::max(semisimple, std::abs(pairing));
        per_root.push_back({{"alpha", ivec(root.alpha)},
                            {"rho_alpha", root.distinguished_facet},
                            {"class", is_s ? "S" : "U"},
                            {"mode_sign", sign},
                            {"lambda_hat", fit.fitted_eigenvalue},
                            {"max_rel_residual", fit.max_rel_residual},
                            {"pairing", pairing},
                            {"gamma", 2.0 * pairing},
                            {"gamma_hat", anti.gamma_hat},
                            {"gamma_hat_fit_residual", anti.fit_residual},
                            {"gamma_hat_sign_vs_4pairing", realized}});
    }
    checks.add("root_eigen_residual", eig_max, kPointwise);
    checks.add("root_eigenvalue", lam_max, kPointwise);
    checks.add("anti_holomorphic_magnitude", anti_max, kPointwise);
    checks.add("anti_holomorphic_fit", anti_fit, kPointwise);

    const auto decomposition = assemble_decomposition(ctx, rs, kPairing);
    double negative = 0.0;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : decomposition.blocks) {
        negative = std::max(negative, -b.gamma);
        nlohmann::json members = nlohmann::json::array();
        int s_count = 0, u_count = 0;
        for (const auto& r : b.roots) {
            members.push_back(ivec(r.alpha));
            (contains_root(rs.semisimple, r.alpha) ? s_count : u_count) += 1;
        }
        blocks.push_back({{"gamma", b.gamma},
                          {"complex_dimension", b.complex_dimension},
                          {"real_dimension", 2 * b.complex_dimension},
                          {"contains_affine", b.contains_affine},
                          {"roots", members},
                          {"semisimple_roots", s_count},
                          {"unipotent_roots", u_count}});
    }
    checks.add("spectrum_positivity", negative, kPairing);
    checks.add("semisimple_pairing", semisimple, kPairing);
    checks.add("decomposition_dimension", std::abs(decomposition.total_dimension - dims.dim_eta), 0.0);

    nlohmann::json affine_json = {{"complex_dimension", affine.complex_dimension},
                                  {"real_dimension", 2 * affine.complex_dimension},
                                  {"basis", "x_i and sqrt(-1) x_i, mode 0"},
                                  {"checks", affine_rows}};

    Verification v;
    v.report = polytope_section(input, alg);
    v.report["config"] = {{"tol", config.tol},
                          {"grid", config.grid},
                          {"margin", config.margin},
                          {"order", config.order},
                          {"potential", config.potential == PotentialKind::Calabi ? "calabi" : "guillemin"},
                          {"grid_points", grid.size()}};
    v.report["soliton"] = soliton_json(sol);
    v.report["scal_mean"] = scal_mean;
    if (!extra.empty()) v.report["calabi"] = extra;
    v.report["global_residuals"] = {{"soliton_pde", pde},
                                    {"abreu_mean", abreu_mean},
                                    {"abreu_weighted_mean", s_wint / wvol},
                                    {"ricci_soliton_identity", ricci},
                                    {"affine_eigen_residual", affine_max}};
    v.report["roots"] = per_root;
    v.report["decomposition"] = {{"affine_block", affine_json},
                                 {"blocks", blocks},
                                 {"gamma_values", decomposition.gamma_values},
                                 {"total_complex_dimension", decomposition.total_dimension},
                                 {"dim_eta", dims.dim_eta},
                                 {"dim_reductive", dims.dim_reductive},
                                 {"dim_unipotent", dims.dim_unipotent},
                                 {"note", "dimensions over C; real dimensions are twice these"}};
    v.checks = std::move(checks);
    return v;
}

CommandResult finish(nlohmann::json report, const Checks& checks) {
    CommandResult r;
    report["checks"] = checks.json();
    if (const Check* failed = checks.first_failure()) {
        r.status = StatusVerification;
        r.diagnostic = "check failed: " + failed->name;
        report["failed_check"] = failed->name;
    }
    report["status"] = r.status;
    r.report = std::move(report);
    return r;
}

}  // namespace

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonConvergence:
        case ErrorCode::NoSignChange: return StatusSolver;
        case ErrorCode::BoundaryEvaluation:
        case ErrorCode::LossOfConvexity: return StatusVerification;
        default: return StatusInput;
    }
}

CommandResult roots_report(const DelzantPolytope& p, const ReportConfig&) {
    require_delzant(p);
    const DelzantPolytope alg = normalize_algebraic(p);
    const RootSet rs = demazure_roots(alg);
    const auto dims = automorphism_dimensions(rs, alg.dim());
    nlohmann::json report = {{"command", "roots"}};
    report.update(polytope_section(p, alg));
    nlohmann::json roots = nlohmann::json::array(), s = nlohmann::json::array(), u = nlohmann::json::array();
    for (const auto& r : rs.roots) roots.push_back(root_json(r, rs));
    for (const auto& r : rs.semisimple) s.push_back(ivec(r.alpha));
    for (const auto& r : rs.unipotent) u.push_back(ivec(r.alpha));
    report["roots"] = roots;
    report["semisimple"] = s;
    report["unipotent"] = u;
    report["dimensions"] = {{"dim_eta", dims.dim_eta}, {"dim_reductive", dims.dim_reductive}, {"dim_unipotent", dims.dim_unipotent}};
    report["status"] = StatusOk;
    return CommandResult{StatusOk, report, ""};
}

CommandResult soliton_report(const DelzantPolytope& p, const ReportConfig& config) {
    require_delzant(p);
    const DelzantPolytope alg = normalize_algebraic(p);
    const SolitonData sol = solve_soliton_vector(alg, solver_options(config));
    nlohmann::json report = {{"command", "soliton"}};
    report.update(polytope_section(p, alg));
    report["config"] = {{"tol", config.tol}, {"order", config.order}, {"max_iterations", config.max_iterations}};
    report["soliton"] = soliton_json(sol);
    report["scal_mean"] = mean_scalar_curvature(alg);
    report["status"] = StatusOk;
    return CommandResult{StatusOk, report, ""};
}

CommandResult verify_report(const DelzantPolytope& p, const ReportConfig& config) {
    auto v = run_verification(p, config);
    nlohmann::json report = {{"command", "verify"}};
    report.update(v.report);
    return finish(std::move(report), v.checks);
}

CommandResult decompose_report(const DelzantPolytope& p, const ReportConfig& config) {
    auto v = run_verification(p, config);
    nlohmann::json report = {{"command", "decompose"},
                             {"input", v.report["input"]},
                             {"config", v.report["config"]},
                             {"a", v.report["soliton"]["a"]},
                             {"decomposition", v.report["decomposition"]}};
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : v.report["roots"])
        roots.push_back({{"alpha", r["alpha"]}, {"class", r["class"]}, {"gamma", r["gamma"]}, {"mode_sign", r["mode_sign"]}});
    report["roots"] = roots;
    return finish(std::move(report), v.checks);
}

CommandResult calabi_report(const CalabiParameters& params, double lo, double hi) {
    params.validate();
    const double a1 = solve_a1(params, lo, hi);
    const CalabiSoliton sol(params, a1);
    const double printed_scal_mean = -4.0;

    double ode = 0.0, ode_printed = 0.0, bres = 0.0, amin = INFINITY;
    const int samples = 50;
    for (int i = 0; i < samples; ++i) {
        const double x = params.alpha1 + (params.alpha2 - params.alpha1) * i / (samples - 1);
        const double y = params.beta1 + (params.beta2 - params.beta1) * i / (samples - 1);
        ode = std::max(ode, std::abs(sol.ode_residual(x, sol.scal_mean())));
        ode_printed = std::max(ode_printed, std::abs(sol.ode_residual(x, printed_scal_mean)));
        bres = std::max(bres, std::abs(sol.b_residual(y)));
        if (i > 0 && i < samples - 1) amin = std::min(amin, sol.profile_A(x).value);
    }
    const auto a_lo = sol.profile_A(params.alpha1), a_hi = sol.profile_A(params.alpha2);
    const auto b_lo = sol.profile_B(params.beta1), b_hi = sol.profile_B(params.beta2);

    Checks checks;
    checks.add("A(alpha1)", std::abs(a_lo.value), 1e-10);
    checks.add("A(alpha2)", std::abs(a_hi.value), 1e-10);
    checks.add("A'(alpha1) - 2/C_alpha1", std::abs(a_lo.d1 - 2.0 / params.c_alpha1), 1e-9);
    checks.add("|A'(alpha2)| - |2/C_alpha2|", std::abs(std::abs(a_hi.d1) - std::abs(2.0 / params.c_alpha2)), 1e-9);
    checks.add("B(beta1)", std::abs(b_lo.value), 1e-12);
    checks.add("B(beta2)", std::abs(b_hi.value), 1e-12);
    checks.add("|B'(beta1)| - |2/C_beta1|", std::abs(std::abs(b_lo.d1) - std::abs(2.0 / params.c_beta1)), 1e-9);
    checks.add("|B'(beta2)| - |2/C_beta2|", std::abs(std::abs(b_hi.d1) - std::abs(2.0 / params.c_beta2)), 1e-9);
    checks.add("ode_residual", ode, 1e-9);
    checks.add("b_residual", bres, 0.0);
    checks.add("A_positive_interior", amin > 0.0 ? 0.0 : -amin + 1.0, 0.0);

    nlohmann::json report = {
        {"command", "calabi"},
        {"parameters",
         {{"alpha1", params.alpha1}, {"alpha2", params.alpha2}, {"beta1", params.beta1}, {"beta2", params.beta2},
          {"C_alpha1", params.c_alpha1}, {"C_alpha2", params.c_alpha2}, {"C_beta1", params.c_beta1}, {"C_beta2", params.c_beta2}}},
        {"a1", a1},
        {"a", {a1, 0.0}},
        {"m", sol.m()},
        {"scal_mean", sol.scal_mean()},
        {"scal_mean_note",
         "the printed value -4 for the blow-up is inconsistent: the mean-curvature formula and "
         "lambda = Scal_mean / (2n) with lambda = 1 give +4, and only +4 solves the profile ODE"},
        {"terminal_defect", terminal_defect(params, a1)},
        {"boundary",
         {{"A(alpha1)", a_lo.value}, {"A(alpha2)", a_hi.value}, {"A'(alpha1)", a_lo.d1}, {"A'(alpha2)", a_hi.d1},
          {"B(beta1)", b_lo.value}, {"B(beta2)", b_hi.value}, {"B'(beta1)", b_lo.d1}, {"B'(beta2)", b_hi.d1},
          {"2/C", {2.0 / params.c_alpha1, 2.0 / params.c_alpha2, 2.0 / params.c_beta1, 2.0 / params.c_beta2}}}},
        {"ode_residual_max", ode},
        {"ode_residual_max_printed_scal_mean", ode_printed},
        {"b_residual_max", bres},
        {"A_min_interior", amin}};
    if (params.alpha1 == 1.0 && params.alpha2 == 3.0 && params.beta1 == 0.0 && params.beta2 == 1.0) {
        const double eq = (a1 * a1 - 0.5) * std::exp(-4.0 * a1) + 3.0 * a1 * a1 - 2.0 * a1 + 0.5;
        report["blowup_equation_residual"] = eq;
    }
    return finish(std::move(report), checks);
}

nlohmann::json round_numbers(const nlohmann::json& j) {
    if (j.is_number_float()) {
        const double d = j.get<double>();
        if (!std::isfinite(d)) return nullptr;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", d);
        double r = std::strtod(buf, nullptr);
        if (r == 0.0) r = 0.0;  // drop negative zero
        return r;
    }
    if (j.is_array()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& e : j) out.push_back(round_numbers(e));
        return out;
    }
    if (j.is_object()) {
        nlohmann::json out = nlohmann::json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_numbers(it.value());
        return out;
    }
    return j;
}

std::string render_json(const nlohmann::json& report) { return round_numbers(report).dump(2) + "\n"; }

namespace {

std::string scalar_text(const nlohmann::json& j) {
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", j.get<double>());
        return buf;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const nlohmann::json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
    return true;
}

std::string flat_text(const nlohmann::json& j);

bool is_flat_object(const nlohmann::json& j) {
    if (!j.is_object()) return false;
    for (const auto& e : j)
        if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
    return true;
}

std::string flat_text(const nlohmann::json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        s += (first ? "" : ", ") + flat_text(e);
        first = false;
    }
    return s + "]";
}

void text_tree(std::ostringstream& os, const nlohmann::json& j, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !is_flat(it.value()))) {
                os << pad << it.key() << ":\n";
                text_tree(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << flat_text(it.value()) << "\n";
            }
        }
    } else if (j.is_array() && !is_flat(j)) {
        for (const auto& e : j) {
            if (is_flat_object(e)) {
                os << pad << "-";
                for (auto it = e.begin(); it != e.end(); ++it) os << " " << it.key() << "=" << flat_text(it.value());
                os << "\n";
            } else {
                os << pad << "-\n";
                text_tree(os, e, indent + 2);
            }
        }
    } else {
        os << pad << flat_text(j) << "\n";
    }
}

}  // namespace

std::string render_text(const std::string& command, const nlohmann::json& report) {
    std::ostringstream os;
    os << "toricsol " << command << "\n";
    text_tree(os, round_numbers(report), 0);
    return os.str();
}

}  // namespace toricsol
