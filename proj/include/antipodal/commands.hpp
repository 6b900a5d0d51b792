#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace antipodal {

inline constexpr const char* kToolVersion = "0.1.0";

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitNotConverged = 1,
    kExitInputError = 2,
};

/// psi, phi, phi(-u) and the odd gap at one point, as a JSON document.
int cmd_eval(const std::string& file, const std::vector<double>& coords, std::ostream& out, std::ostream& err);

/// CSV "theta,psi_1,phi_1,gap_1" with steps + 1 rows, theta uniform on
/// [-pi/4, 7pi/4]. dimension 1 only.
int cmd_sweep(const std::string& file, int steps, std::ostream& out, std::ostream& err);

struct SolveSettings {
    double tol = 1e-6;
    int starts = 64;
    std::optional<std::uint64_t> seed; // falls back to the file's seed
    int grid = 360;
    int max_iter = 3000;
};

/// Circle bisection for n = 1, multistart otherwise; prints the certificate.
int cmd_solve(const std::string& file, const SolveSettings& settings, std::ostream& out, std::ostream& err);

/// Recomputes the certificate at a given point.
int cmd_verify(const std::string& file, const std::vector<double>& coords, double tol, std::ostream& out,
               std::ostream& err);

/// Entry point behind the `antipodal` executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace antipodal
