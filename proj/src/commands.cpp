#include "antipodal/commands.hpp"

#include "antipodal/problem_io.hpp"
#include "antipodal/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace antipodal {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kAutoNormalizeTolerance = 1e-6;

SpherePoint point_from_coords(const std::vector<double>& coords, int n)
{
    if (static_cast<int>(coords.size()) != n + 1)
        throw InvalidArgument("point needs " + std::to_string(n + 1) + " coordinates, got " +
                              std::to_string(coords.size()));
    const double r = norm(coords);
    if (!std::isfinite(r) || std::fabs(r - 1.0) > kAutoNormalizeTolerance)
        throw InvalidArgument("point is not on the unit sphere (norm " + std::to_string(r) + ")");
    if (std::fabs(r - 1.0) <= SpherePoint::kUnitTolerance)
        return SpherePoint(coords);
    return SpherePoint::normalized(coords);
}

json vec_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

json report_header(const char* command, const Problem& prob)
{
    json j;
    j["tool"] = "antipodal";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["instance_digest"] = prob.digest;
    j["dimension"] = prob.instance.n();
    return j;
}

void add_certificate(json& j, const Certificate& c)
{
    j["method"] = std::string(to_string(c.method));
    j["point"] = vec_json(c.point.coords());
    j["epsilon"] = c.epsilon;
    j["residual"] = c.residual;
    j["tolerance"] = c.tolerance;
    j["converged"] = c.converged;
    j["exact_inner"] = c.exact_inner;
    j["iterations"] = c.iterations;
    json bodies = json::array();
    for (std::size_t i = 0; i < c.per_body.size(); ++i) {
        const BodySides& s = c.per_body[i];
        json b;
        b["plus_nonempty"] = s.plus_nonempty;
        b["minus_nonempty"] = s.minus_nonempty;
        b["plus_max"] = s.plus_max;
        b["plus_min"] = s.plus_min;
        b["minus_max"] = s.minus_max;
        b["minus_min"] = s.minus_min;
        b["phi"] = s.phi_plus;
        b["phi_antipode"] = s.phi_minus;
        b["case_two"] = static_cast<bool>(c.case_two_flags[i]);
        bodies.push_back(std::move(b));
    }
    j["bodies"] = std::move(bodies);
}

std::string format_g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_coords(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse coordinate \"" + item + "\"");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw InvalidArgument("cannot parse coordinate \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidArgument("empty point");
    return out;
}

} // namespace

int cmd_eval(const std::string& file, const std::vector<double>& coords, std::ostream& out, std::ostream& err)
{
    try {
        const Problem prob = parse_problem(file);
        const Instance& inst = prob.instance;
        const SpherePoint p = point_from_coords(coords, inst.n());
        const double eps = resolve_epsilon(inst);

        json j = report_header("eval", prob);
        j["point"] = vec_json(p.coords());
        j["epsilon"] = eps;
        j["psi"] = psi(inst, p).values;
        j["phi"] = phi(inst, p, eps).values;
        j["phi_antipode"] = phi_antipodal(inst, p, eps).values;
        j["odd_gap"] = odd_gap(inst, p, eps);
        out << j.dump(2) << '\n';
        return kExitSuccess;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_sweep(const std::string& file, int steps, std::ostream& out, std::ostream& err)
{
    try {
        const Problem prob = parse_problem(file);
        const Instance& inst = prob.instance;
        if (inst.n() != 1)
            throw InvalidArgument("sweep needs a one-dimensional problem");
        if (steps < 1)
            throw InvalidArgument("--steps must be positive");
        const double eps = resolve_epsilon(inst);
        const double pi = std::numbers::pi;

        out << "theta,psi_1,phi_1,gap_1\n";
        for (int k = 0; k <= steps; ++k) {
            const double theta = -pi / 4.0 + 2.0 * pi * k / steps;
            const SpherePoint p = circle_point(theta);
            out << format_g17(theta) << ',' << format_g17(psi(inst, p).values[0]) << ','
                << format_g17(phi(inst, p, eps).values[0]) << ',' << format_g17(odd_gap(inst, p, eps)[0])
                << '\n';
        }
        return kExitSuccess;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_solve(const std::string& file, const SolveSettings& settings, std::ostream& out, std::ostream& err)
{
    const auto t0 = Clock::now();
    std::optional<Problem> prob;
    try {
        prob.emplace(parse_problem(file));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    const Instance& inst = prob->instance;
    try {
        const Certificate cert = [&] {
            if (inst.n() == 1 && inst.all_linear())
                return solve_circle(inst, settings.grid, settings.tol);
            MultistartOptions opts;
            opts.starts = settings.starts;
            opts.seed = settings.seed.value_or(prob->seed);
            opts.tol = settings.tol;
            opts.max_iter = settings.max_iter;
            return solve_multistart(inst, opts);
        }();
        json j = report_header("solve", *prob);
        add_certificate(j, cert);
        j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
        out << j.dump(2) << '\n';
        if (!cert.converged)
            err << "not converged: residual " << cert.residual << " > " << cert.tolerance << '\n';
        return cert.converged ? kExitSuccess : kExitNotConverged;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_verify(const std::string& file, const std::vector<double>& coords, double tol, std::ostream& out,
               std::ostream& err)
{
    const auto t0 = Clock::now();
    try {
        const Problem prob = parse_problem(file);
        const SpherePoint p = point_from_coords(coords, prob.instance.n());
        const Certificate cert = verify(prob.instance, p, tol);
        json j = report_header("verify", prob);
        add_certificate(j, cert);
        j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
        out << j.dump(2) << '\n';
        return cert.converged ? kExitSuccess : kExitNotConverged;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Borsuk-Ulam certificates for hyperplane-clipped optimal-value maps"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string file, point_text, out_path;
    int steps = 3600;
    double verify_tol = 1e-6;
    SolveSettings solve;
    std::uint64_t seed = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate psi, phi, phi(-u) and the odd gap at a point");
    eval->add_option("file", file, "Problem JSON file")->required();
    eval->add_option("--point", point_text, "Comma-separated sphere coordinates (n+1 values)")->required();

    auto* sweep = app.add_subcommand("sweep", "Tabulate psi, phi and the odd gap around S^1 as CSV");
    sweep->add_option("file", file, "Problem JSON file")->required();
    sweep->add_option("--steps", steps, "Number of theta intervals")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "Write CSV here instead of stdout");

    auto* solve_cmd = app.add_subcommand("solve", "Search for a point with phi(u) = phi(-u)");
    solve_cmd->add_option("file", file, "Problem JSON file")->required();
    solve_cmd->add_option("--tol", solve.tol, "Residual tolerance");
    solve_cmd->add_option("--starts", solve.starts, "Random starts for n >= 2");
    auto* seed_opt = solve_cmd->add_option("--seed", seed, "Seed (defaults to the file's seed)");
    solve_cmd->add_option("--grid", solve.grid, "Grid intervals on [0, pi] for n = 1");
    solve_cmd->add_option("--max-iter", solve.max_iter, "Nelder-Mead iterations per start");

    auto* verify_cmd = app.add_subcommand("verify", "Recompute the certificate at a point");
    verify_cmd->add_option("file", file, "Problem JSON file")->required();
    verify_cmd->add_option("--point", point_text, "Comma-separated sphere coordinates (n+1 values)")->required();
    verify_cmd->add_option("--tol", verify_tol, "Residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (*eval)
            return cmd_eval(file, parse_coords(point_text), out, err);
        if (*sweep) {
            if (out_path.empty())
                return cmd_sweep(file, steps, out, err);
            std::ofstream csv(out_path);
            if (!csv) {
                err << "error: cannot write " << out_path << '\n';
                return kExitInputError;
            }
            return cmd_sweep(file, steps, csv, err);
        }
        if (*solve_cmd) {
            if (seed_opt->count() > 0)
                solve.seed = seed;
            return cmd_solve(file, solve, out, err);
        }
        return cmd_verify(file, parse_coords(point_text), verify_tol, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace antipodal
