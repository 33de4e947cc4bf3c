#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irs/log_prob.hpp"
#include "irs/montecarlo.hpp"
#include "irs/sysmodel.hpp"

namespace irs::cli {

/// Bad command-line usage (unknown method, inconsistent grid, ...).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitValidationFailed = 1, kExitUsage = 2 };

enum class OutputFormat { Csv, Json };

/// Parses a comma-separated method list; unknown names are reported verbatim.
std::vector<Method> parse_methods(std::string_view list);

Scenario parse_scenario(std::string_view name);

/// start, start + step, ... up to and including stop (with 1e-9 step slack).
std::vector<double> db_grid(double start_db, double stop_db, double step_db);

struct SweepSpec {
    SystemConfig config;
    Scenario scenario = Scenario::NoDirectLink;
    double gamma_t_db_start = 0.0;
    double gamma_t_db_stop = 40.0;
    double gamma_t_db_step = 2.0;
    std::vector<Method> methods;
    std::optional<mc::McConfig> mc;  // required iff Method::MonteCarlo is selected

    void validate() const;
};

/// One row per grid point in ascending gamma_t: gamma_t_db followed by
/// <method>_log10_p_out for each method, the saddlepoint validity flags and
/// mc_std_err / mc_hits when Monte Carlo is selected.
void cmd_sweep(const SweepSpec& spec, OutputFormat format, std::ostream& out);

struct PointSpec {
    SystemConfig config;
    Scenario scenario = Scenario::NoDirectLink;
    double gamma_t_db = 20.0;
    Method method = Method::Chernoff;
    std::optional<mc::McConfig> mc;
};

/// A single evaluation with the method's diagnostics.
void cmd_point(const PointSpec& spec, OutputFormat format, std::ostream& out);

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Pass;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Cross-method checks on the gamma_t grid {10, 15, 20, 25, 30} dB using at
/// most `budget` Monte Carlo samples: Chernoff bound dominance, saddlepoint
/// tail agreement, diversity slope of the asymptotic curve and the
/// saddlepoint-versus-CLT ordering. Checks without enough Monte Carlo hits
/// are skipped rather than failed.
ValidationReport cmd_validate(const SystemConfig& config, Scenario scenario, std::uint64_t budget,
                              std::uint64_t seed = 1, unsigned workers = 0);

void print_report(const ValidationReport& report, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irs::cli
