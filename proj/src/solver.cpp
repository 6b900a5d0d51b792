#include "antipodal/solver.hpp"

#include "antipodal/detail/simplex_search.hpp"
#include "antipodal/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace antipodal {

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::CircleBisection:
        return "circle_bisection";
    case Method::Multistart:
        return "multistart";
    case Method::Verify:
        return "verify";
    }
    return "unknown";
}

namespace {

double residual_inf(const Instance& inst, const SpherePoint& p, double eps)
{
    return norm_inf(odd_gap(inst, p, eps));
}

} // namespace

Certificate verify(const Instance& inst, const SpherePoint& p, double tol)
{
    if (!inst.all_antipodal())
        throw InvalidArgument("certificates require antipodal objectives");
    if (p.n() != inst.n())
        throw DimensionError("sphere point dimension does not match instance");
    const double eps = resolve_epsilon(inst);
    if (!epsilon_admissible(eps, inst.norm_bound()))
        throw InvalidArgument("epsilon is too large for this instance");

    Certificate cert(p);
    cert.epsilon = eps;
    cert.per_body.resize(inst.size());
    cert.case_two_flags.assign(inst.size(), false);

    double widest_error = 0.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& a = inst.bodies()[i];
        const auto& f = inst.objectives()[i];
        BodySides& s = cert.per_body[i];

        s.plus_nonempty = feasibility(a, p).status == Feasibility::NonEmpty;
        s.minus_nonempty = feasibility(a, antipode(p)).status == Feasibility::NonEmpty;
        if (s.plus_nonempty) {
            const auto r = maxmin_side(a, f, p, Side::Plus, inst.black_box_budget());
            s.plus_max = r.max_value;
            s.plus_min = r.min_value;
            s.phi_plus = r.gap();
            s.exact = s.exact && r.exact;
            s.error_estimate = std::max(s.error_estimate, r.error_estimate);
        } else {
            s.phi_plus = empty_side_value(p.last(), eps);
        }
        if (s.minus_nonempty) {
            const auto r = maxmin_side(a, f, p, Side::Minus, inst.black_box_budget());
            s.minus_max = r.max_value;
            s.minus_min = r.min_value;
            s.phi_minus = r.gap();
            s.exact = s.exact && r.exact;
            s.error_estimate = std::max(s.error_estimate, r.error_estimate);
        } else {
            s.phi_minus = empty_side_value(-p.last(), eps);
        }
        cert.residual = std::max(cert.residual, std::fabs(s.phi_plus - s.phi_minus));
        cert.exact_inner = cert.exact_inner && s.exact;
        widest_error = std::max(widest_error, s.error_estimate);
    }

    cert.tolerance = cert.exact_inner ? tol : std::max(tol, 10.0 * widest_error);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const BodySides& s = cert.per_body[i];
        if (!s.plus_nonempty && s.minus_nonempty)
            cert.case_two_flags[i] = s.minus_gap() <= cert.tolerance;
        else if (s.plus_nonempty && !s.minus_nonempty)
            cert.case_two_flags[i] = s.plus_gap() <= cert.tolerance;
    }
    cert.converged = cert.residual <= cert.tolerance;
    return cert;
}

Certificate solve_circle(const Instance& inst, int grid, double tol)
{
    if (inst.n() != 1)
        throw InvalidArgument("circle solver needs a one-dimensional instance");
    if (!inst.all_linear())
        throw InvalidArgument("circle solver needs inner or bilinear objectives");
    if (grid < 16)
        throw InvalidArgument("circle solver grid must have at least 16 intervals");
    const double eps = resolve_epsilon(inst);
    auto g = [&](double theta) { return odd_gap(inst, circle_point(theta), eps)[0]; };

    const double pi = std::numbers::pi;
    std::vector<double> theta(static_cast<std::size_t>(grid) + 1), vals(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        theta[k] = pi * static_cast<double>(k) / grid;
        vals[k] = g(theta[k]);
    }

    double best_theta = theta[0];
    int iterations = 0;
    const bool tiny = std::all_of(vals.begin(), vals.end(), [](double v) { return std::fabs(v) < 1e-14; });
    if (!tiny) {
        // g(pi) = -g(0), so an exact zero or a sign change must occur.
        std::size_t k = 0;
        for (; k + 1 < theta.size(); ++k) {
            if (vals[k] == 0.0 || (vals[k] < 0.0) != (vals[k + 1] < 0.0) || vals[k + 1] == 0.0)
                break;
        }
        if (k + 1 == theta.size() || vals[k] == 0.0) {
            best_theta = theta[std::min(k, theta.size() - 1)];
        } else if (vals[k + 1] == 0.0) {
            best_theta = theta[k + 1];
        } else {
            double lo = theta[k], hi = theta[k + 1], glo = vals[k], ghi = vals[k + 1];
            while (hi - lo > tol && iterations < 200) {
                ++iterations;
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    glo = ghi = 0.0;
                    break;
                }
                if ((gm < 0.0) == (glo < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                    ghi = gm;
                }
            }
            best_theta = std::fabs(glo) <= std::fabs(ghi) ? lo : hi;
        }
    }

    Certificate cert = verify(inst, circle_point(best_theta), tol);
    cert.method = Method::CircleBisection;
    cert.iterations = iterations;
    return cert;
}

namespace {

struct LocalResult {
    SpherePoint point;
    double residual; // inf-norm
    int iterations;
};

constexpr int kIterationsPerChart = 60;
constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-15;

// Nelder-Mead on |g|² in a sequence of tangent charts, re-centred after each run.
LocalResult descend(const Instance& inst, const SpherePoint& start, double eps, double target, int max_iter)
{
    auto sq = [&](const SpherePoint& p) {
        double s = 0.0;
        for (double v : odd_gap(inst, p, eps))
            s += v * v;
        return s;
    };

    SpherePoint x = start;
    double fx = sq(x);
    double step = kInitialStep;
    int used = 0;
    while (used < max_iter && std::sqrt(fx) > target && step > kMinStep) {
        const auto basis = tangent_basis(x);
        auto chart = [&](std::span<const double> y) {
            Vector c(x.coords().begin(), x.coords().end());
            for (std::size_t k = 0; k < basis.size(); ++k)
                c = axpy(c, y[k], basis[k]);
            return SpherePoint::normalized(std::move(c));
        };
        auto objective = [&](std::span<const double> y) { return sq(chart(y)); };

        const int budget = std::min(kIterationsPerChart, max_iter - used);
        auto r = detail::nelder_mead(objective, Vector(basis.size(), 0.0), step, budget, step * 1e-3);
        used += std::max(r.iterations, 1);
        if (r.value < fx) {
            const double moved = norm(r.x);
            x = chart(r.x);
            fx = r.value;
            step = std::clamp(2.0 * moved, 0.05 * step, step);
        } else {
            step *= 0.1;
        }
    }
    return {x, norm_inf(odd_gap(inst, x, eps)), used};
}

} // namespace

Certificate solve_multistart(const Instance& inst, const MultistartOptions& opts)
{
    if (opts.starts < 8)
        throw InvalidArgument("multistart needs at least 8 starts");
    const int n = inst.n();
    const double eps = resolve_epsilon(inst);

    std::vector<SpherePoint> starts = sample_sphere(n, opts.starts, opts.seed);
    for (int axis = 0; axis <= n; ++axis)
        for (double sign : {1.0, -1.0}) {
            Vector c(static_cast<std::size_t>(n) + 1, 0.0);
            c[static_cast<std::size_t>(axis)] = sign;
            starts.emplace_back(std::move(c));
        }

    // Aim well below tol so the certificate clears it after re-evaluation.
    const double target = opts.tol * 1e-3;
    std::optional<LocalResult> best;
    int total_iterations = 0;
    for (const SpherePoint& s : starts) {
        LocalResult r = descend(inst, s, eps, target, opts.max_iter);
        total_iterations += r.iterations;
        // Strict comparison keeps the lowest start index on ties.
        if (!best || r.residual < best->residual)
            best = std::move(r);
    }

    Certificate cert = verify(inst, best->point, opts.tol);
    cert.method = Method::Multistart;
    cert.iterations = total_iterations;
    return cert;
}

std::pair<SpherePoint, double> brute_scan(const Instance& inst, int resolution)
{
    const int n = inst.n();
    if (n > 2)
        throw InvalidArgument("brute_scan supports n <= 2 only");
    if (resolution < 1 || resolution > 10'000'000)
        throw InvalidArgument("brute_scan resolution must lie in [1, 1e7]");
    const double eps = resolve_epsilon(inst);

    std::optional<std::pair<SpherePoint, double>> best;
    auto consider = [&](const SpherePoint& p) {
        const double r = residual_inf(inst, p, eps);
        if (!best || r < best->second)
            best.emplace(p, r);
    };

    if (n == 1) {
        for (int k = 0; k < resolution; ++k)
            consider(circle_point(2.0 * std::numbers::pi * k / resolution));
    } else {
        // Lattices of size R, R/2, R/4, ...: doubling R adds one lattice.
        for (int count = resolution;; count /= 2) {
            for (const SpherePoint& p : fibonacci_sphere(count))
                consider(p);
            if (count / 2 < 8)
                break;
        }
    }
    return *best;
}

double example1_psi(double theta)
{
    const double pi = std::numbers::pi;
    double t = std::fmod(theta + pi / 4.0, 2.0 * pi);
    if (t < 0.0)
        t += 2.0 * pi;
    const double th = t - pi / 4.0; // in [-pi/4, 7pi/4)
    const double c = std::cos(th), s = std::sin(th);
    if (th <= pi / 4.0)
        return std::fabs(c - s); // S = [tan, 1]
    if (th < 3.0 * pi / 4.0)
        return 0.0; // S empty
    if (th <= 5.0 * pi / 4.0)
        return std::fabs(c + s); // S = [-1, tan]
    return 2.0 * std::fabs(c); // S = [-1, 1]
}

Instance example1_instance()
{
    return Instance({ConvexBody::polytope({{-1.0}, {1.0}})}, {Objective::inner()});
}

} // namespace antipodal
