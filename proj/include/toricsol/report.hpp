#pragma once

#include "toricsol/calabi.hpp"
#include "toricsol/polytope.hpp"

#include <json.hpp>

#include <string>

namespace toricsol {

enum class PotentialKind { Guillemin, Calabi };

struct ReportConfig {
    double tol = 1e-10;
    int grid = 21;
    double margin = 0.05;
    int order = 10;
    int max_iterations = 50;
    PotentialKind potential = PotentialKind::Guillemin;
};

/// Process exit statuses.
enum Status : int {
    StatusOk = 0,
    StatusInternal = 1,
    StatusInput = 2,
    StatusSolver = 3,
    StatusVerification = 4,
};

int status_for(ErrorCode code);

struct CommandResult {
    int status = StatusOk;
    nlohmann::json report;
    std::string diagnostic;  // first failed check or error message
};

CommandResult roots_report(const DelzantPolytope& p, const ReportConfig& config);
CommandResult soliton_report(const DelzantPolytope& p, const ReportConfig& config);
CommandResult verify_report(const DelzantPolytope& p, const ReportConfig& config);
CommandResult decompose_report(const DelzantPolytope& p, const ReportConfig& config);
CommandResult calabi_report(const CalabiParameters& params, double bracket_lo, double bracket_hi);

/// Runs fn, turning library errors into a failed CommandResult.
template <class Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        CommandResult r;
        r.status = status_for(e.code());
        r.diagnostic = std::string(to_string(e.code())) + ": " + e.what();
        r.report = {{"status", r.status}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
        return r;
    } catch (const std::exception& e) {
        CommandResult r;
        r.status = StatusInternal;
        r.diagnostic = e.what();
        r.report = {{"status", r.status}, {"error", {{"code", "Internal"}, {"message", e.what()}}}};
        return r;
    }
}

/// Every floating-point number rounded to 15 significant digits.
nlohmann::json round_numbers(const nlohmann::json& j);

std::string render_json(const nlohmann::json& report);
std::string render_text(const std::string& command, const nlohmann::json& report);

}  // namespace toricsol
