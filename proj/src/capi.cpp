#include "toricsol/toricsol.h"

#include "toricsol/report.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

struct toricsol_polytope {
    toricsol::DelzantPolytope poly;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

toricsol::ReportConfig config_from(const toricsol_options* o) {
    const toricsol_options opts = o ? *o : toricsol_default_options();
    toricsol::ReportConfig c;
    c.tol = opts.tol;
    c.grid = opts.grid;
    c.margin = opts.margin;
    c.order = opts.order;
    c.max_iterations = opts.max_iterations;
    c.potential = opts.potential == TORICSOL_POTENTIAL_CALABI ? toricsol::PotentialKind::Calabi
                                                                : toricsol::PotentialKind::Guillemin;
    return c;
}

void validate(const toricsol::ReportConfig& c) {
    using toricsol::Error;
    using toricsol::ErrorCode;
    if (!(c.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    if (c.grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must be at least 2");
    if (!(c.margin > 0.0 && c.margin < 0.5)) throw Error(ErrorCode::InvalidArgument, "margin must lie in (0, 0.5)");
    if (c.order < 1 || c.order > 80) throw Error(ErrorCode::InvalidArgument, "order must lie in [1, 80]");
    if (c.max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be positive");
}

template <class Fn>
toricsol_status run(const char* command, const toricsol_options* o, char** report, Fn&& fn) {
    if (!report) {
        last_error = "report pointer is null";
        return TORICSOL_INTERNAL;
    }
    const toricsol::CommandResult r = toricsol::guarded([&] {
        const auto config = config_from(o);
        validate(config);
        return fn(config);
    });
    const bool json = !o || o->format == TORICSOL_FORMAT_JSON;
    *report = duplicate(json ? toricsol::render_json(r.report) : toricsol::render_text(command, r.report));
    last_error = r.diagnostic;
    return static_cast<toricsol_status>(r.status);
}

toricsol_status load(const std::string& document, toricsol_polytope** out) {
    if (!out) {
        last_error = "output pointer is null";
        return TORICSOL_INTERNAL;
    }
    *out = nullptr;
    try {
        *out = new toricsol_polytope{toricsol::parse_polytope(document)};
        last_error.clear();
        return TORICSOL_OK;
    } catch (const toricsol::Error& e) {
        last_error = std::string(toricsol::to_string(e.code())) + ": " + e.what();
        return static_cast<toricsol_status>(toricsol::status_for(e.code()));
    } catch (const std::exception& e) {
        last_error = e.what();
        return TORICSOL_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* toricsol_version(void) { return "1.0.0"; }

toricsol_options toricsol_default_options(void) {
    const toricsol::ReportConfig c;
    return toricsol_options{c.tol, c.grid, c.margin, c.order, c.max_iterations, TORICSOL_POTENTIAL_GUILLEMIN,
                            TORICSOL_FORMAT_JSON};
}

toricsol_calabi_params toricsol_default_calabi_params(void) {
    const auto b = toricsol::CalabiParameters::blowup();
    return toricsol_calabi_params{b.alpha1,   b.alpha2,   b.beta1,   b.beta2, b.c_alpha1,
                                  b.c_alpha2, b.c_beta1, b.c_beta2, -0.5,    -0.05};
}

const char* toricsol_last_error(void) { return last_error.c_str(); }

toricsol_status toricsol_polytope_from_json(const char* document, toricsol_polytope** out) {
    if (!document) {
        last_error = "document is null";
        return TORICSOL_INPUT;
    }
    return load(document, out);
}

toricsol_status toricsol_polytope_from_file(const char* path, toricsol_polytope** out) {
    if (out) *out = nullptr;
    std::ifstream in(path ? path : "");
    if (!in) {
        last_error = std::string("MalformedDocument: cannot read ") + (path ? path : "(null)");
        return TORICSOL_INPUT;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load(buf.str(), out);
}

void toricsol_polytope_free(toricsol_polytope* p) { delete p; }

int toricsol_polytope_dim(const toricsol_polytope* p) { return p ? p->poly.dim() : 0; }

int toricsol_polytope_facet_count(const toricsol_polytope* p) { return p ? p->poly.facet_count() : 0; }

#define TORICSOL_COMMAND(fn, name, impl)                                                               \
    toricsol_status fn(const toricsol_polytope* p, const toricsol_options* o, char** report) {        \
        return run(name, o, report, [p](const toricsol::ReportConfig& c) {                             \
            if (!p) throw toricsol::Error(toricsol::ErrorCode::InvalidArgument, "polytope is null");   \
            return impl(p->poly, c);                                                                   \
        });                                                                                            \
    }

TORICSOL_COMMAND(toricsol_roots, "roots", toricsol::roots_report)
TORICSOL_COMMAND(toricsol_soliton, "soliton", toricsol::soliton_report)
TORICSOL_COMMAND(toricsol_verify, "verify", toricsol::verify_report)
TORICSOL_COMMAND(toricsol_decompose, "decompose", toricsol::decompose_report)

#undef TORICSOL_COMMAND

toricsol_status toricsol_calabi(const toricsol_calabi_params* params, const toricsol_options* o, char** report) {
    const toricsol_calabi_params q = params ? *params : toricsol_default_calabi_params();
    return run("calabi", o, report, [&q](const toricsol::ReportConfig&) {
        toricsol::CalabiParameters c;
        c.alpha1 = q.alpha1;
        c.alpha2 = q.alpha2;
        c.beta1 = q.beta1;
        c.beta2 = q.beta2;
        c.c_alpha1 = q.c_alpha1;
        c.c_alpha2 = q.c_alpha2;
        c.c_beta1 = q.c_beta1;
        c.c_beta2 = q.c_beta2;
        return toricsol::calabi_report(c, q.bracket_lo, q.bracket_hi);
    });
}

void toricsol_string_free(char* s) { std::free(s); }

}  // extern "C"
