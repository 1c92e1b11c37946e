#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bvf/report.hpp"

namespace bvf {

enum class Command { transform, hilbert, radial, verify };

enum ExitStatus : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_data = 3,
    exit_check_failed = 4,
};

/// Parsed command line. Exactly one of family / csv is set for the
/// transform, hilbert and radial commands.
struct RunConfig {
    Command command = Command::verify;
    std::optional<std::string> family;
    std::map<std::string, double> family_params;
    std::optional<std::filesystem::path> csv;
    std::string decay = "vanishing";
    std::optional<double> a;
    std::optional<double> b;
    std::optional<std::size_t> n;
    std::optional<double> cutoff;
    std::optional<std::size_t> m;
    std::string method = "auto";
    int dim = 3;
    std::vector<double> radii;
    std::string suite = "all";
    std::string profile = "default";
    std::optional<std::filesystem::path> out;
};

/// Parses argv (argv[0] is the program name) and runs it. Usage errors
/// return exit_usage, bad input data exit_data, failed checks
/// exit_check_failed (after the report is written).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Grid size used by the real-line suites: fast 2^12, default 2^14, strict 2^15.
std::size_t profile_grid_size(std::string_view profile);

/// Runs the named suite (hardy, lemma-dc, hardy-littlewood, radial,
/// periodic or all). Checks may run in parallel, capped by BVF_THREADS;
/// the result order is fixed.
std::vector<VerificationReport> run_suite(std::string_view suite, std::string_view profile);

/// One line per check, `name status measured bound grid_n`, then `overall`.
std::string format_report(const std::vector<VerificationReport>& reports);
std::string format_report_csv(const std::vector<VerificationReport>& reports);

std::string verify_report_text(std::string_view suite, std::string_view profile);

}  // namespace bvf
