#include "toricsol/toricsol.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

struct Common {
    double tol = 1e-10;
    int grid = 21;
    double margin = 0.05;
    int order = 10;
    int max_iterations = 50;
    std::string format = "text";
    std::string potential = "guillemin";
};

toricsol_options to_options(const Common& c) {
    toricsol_options o = toricsol_default_options();
    o.tol = c.tol;
    o.grid = c.grid;
    o.margin = c.margin;
    o.order = c.order;
    o.max_iterations = c.max_iterations;
    o.format = c.format == "json" ? TORICSOL_FORMAT_JSON : TORICSOL_FORMAT_TEXT;
    o.potential = c.potential == "calabi" ? TORICSOL_POTENTIAL_CALABI : TORICSOL_POTENTIAL_GUILLEMIN;
    return o;
}

int emit(toricsol_status status, char* report) {
    if (report) {
        std::fputs(report, stdout);
        toricsol_string_free(report);
    }
    if (status != TORICSOL_OK) std::fprintf(stderr, "toricsol: %s\n", toricsol_last_error());
    return static_cast<int>(status);
}

using Command = toricsol_status (*)(const toricsol_polytope*, const toricsol_options*, char**);

int run_polytope_command(Command cmd, const std::string& path, const Common& c) {
    toricsol_polytope* p = nullptr;
    const toricsol_status load = toricsol_polytope_from_file(path.c_str(), &p);
    if (load != TORICSOL_OK) {
        std::fprintf(stderr, "toricsol: %s\n", toricsol_last_error());
        return static_cast<int>(load);
    }
    const toricsol_options o = to_options(c);
    char* report = nullptr;
    const toricsol_status status = cmd(p, &o, &report);
    toricsol_polytope_free(p);
    return emit(status, report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric Kahler-Ricci solitons: roots, soliton vector, potentials and eigenfunction checks"};
    app.set_version_flag("--version", std::string(toricsol_version()));
    app.require_subcommand(1);

    Common c;
    std::string path;
    auto add_common = [&c](CLI::App* sub) {
        sub->add_option("--tol", c.tol, "Futaki solver tolerance")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--order", c.order, "quadrature exactness degree")->capture_default_str()->check(CLI::Range(1, 80));
        sub->add_option("--max-iterations", c.max_iterations, "Newton iteration cap")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "report format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
    };
    auto add_verify = [&](CLI::App* sub) {
        add_common(sub);
        sub->add_option("--grid", c.grid, "grid points per axis")->capture_default_str()->check(CLI::Range(2, 1000));
        sub->add_option("--margin", c.margin, "interior margin as a fraction of the vertex spread")
            ->capture_default_str()
            ->check(CLI::Range(0.0, 0.5));
        sub->add_option("--potential", c.potential, "symplectic potential")
            ->capture_default_str()
            ->check(CLI::IsMember({"guillemin", "calabi"}));
    };

    auto* roots = app.add_subcommand("roots", "Demazure roots and the S/U split");
    auto* soliton = app.add_subcommand("soliton", "soliton vector from the Futaki condition");
    auto* verify = app.add_subcommand("verify", "full verification report");
    auto* decompose = app.add_subcommand("decompose", "eigenspace decomposition of the weighted Laplacian");
    for (auto* sub : {roots, soliton, verify, decompose})
        sub->add_option("polytope", path, "polytope JSON file")->required();
    add_common(roots);
    add_common(soliton);
    add_verify(verify);
    add_verify(decompose);

    auto* calabi = app.add_subcommand("calabi", "Calabi-ansatz soliton on a labelled trapezoid");
    toricsol_calabi_params cp = toricsol_default_calabi_params();
    add_common(calabi);
    calabi->add_option("--alpha1", cp.alpha1)->capture_default_str();
    calabi->add_option("--alpha2", cp.alpha2)->capture_default_str();
    calabi->add_option("--beta1", cp.beta1)->capture_default_str();
    calabi->add_option("--beta2", cp.beta2)->capture_default_str();
    calabi->add_option("--c-alpha1", cp.c_alpha1)->capture_default_str();
    calabi->add_option("--c-alpha2", cp.c_alpha2)->capture_default_str();
    calabi->add_option("--c-beta1", cp.c_beta1)->capture_default_str();
    calabi->add_option("--c-beta2", cp.c_beta2)->capture_default_str();
    calabi->add_option("--bracket-lo", cp.bracket_lo, "lower end of the a1 bracket")->capture_default_str();
    calabi->add_option("--bracket-hi", cp.bracket_hi, "upper end of the a1 bracket")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*roots) return run_polytope_command(toricsol_roots, path, c);
    if (*soliton) return run_polytope_command(toricsol_soliton, path, c);
    if (*verify) return run_polytope_command(toricsol_verify, path, c);
    if (*decompose) return run_polytope_command(toricsol_decompose, path, c);
    const toricsol_options o = to_options(c);
    char* report = nullptr;
    const toricsol_status status = toricsol_calabi(&cp, &o, &report);
    return emit(status, report);
}
