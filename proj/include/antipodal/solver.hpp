#pragma once

#include "antipodal/gapmap.hpp"
#include "antipodal/sphere.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace antipodal {

enum class Method { CircleBisection, Multistart, Verify };

std::string_view to_string(Method m);

/// Two-sided data for one body at a certificate point.
struct BodySides {
    double plus_max = 0.0;
    double plus_min = 0.0;
    double minus_max = 0.0;
    double minus_min = 0.0;
    bool plus_nonempty = false;
    bool minus_nonempty = false;
    /// phi_i(u) and phi_i(-u) as used in the residual.
    double phi_plus = 0.0;
    double phi_minus = 0.0;
    bool exact = true;
    double error_estimate = 0.0;

    double plus_gap() const { return plus_max - plus_min; }
    double minus_gap() const { return minus_max - minus_min; }
};

/// A sphere point u together with recomputed evidence that
/// phi(u) = phi(-u) holds to within `residual`.
struct Certificate {
    explicit Certificate(SpherePoint p) : point(std::move(p)) {}

    SpherePoint point;
    double residual = 0.0; // |phi(u) - phi(-u)|_inf
    std::vector<BodySides> per_body;
    /// Body i has one empty side and a (numerically) constant objective on
    /// the other: the degenerate alternative to equal gaps.
    std::vector<bool> case_two_flags;
    Method method = Method::Verify;
    bool exact_inner = true;
    double epsilon = 0.0;
    /// Requested tolerance, widened for sampled black-box gaps.
    double tolerance = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Recompute both sides of every body at p from scratch and package them.
/// Throws InvalidArgument if some objective is not antipodal.
Certificate verify(const Instance& inst, const SpherePoint& p, double tol);

/// n = 1 only: scan g(theta) = odd_gap on [0, pi] at `grid` + 1 points and
/// bisect the first sign change down to width `tol`.
Certificate solve_circle(const Instance& inst, int grid, double tol);

struct MultistartOptions {
    int starts = 64;
    std::uint64_t seed = 0;
    double tol = 1e-6;
    /// Nelder-Mead iterations allowed per start.
    int max_iter = 3000;
};

/// Minimise |odd_gap|² by Nelder-Mead in tangent-plane charts from seeded
/// random starts plus the 2(n+1) axis points; returns the best point found.
Certificate solve_multistart(const Instance& inst, const MultistartOptions& opts);

/// Exhaustive grid for n <= 2: a uniform theta grid on S^1 or nested
/// Fibonacci lattices on S^2. Returns the point with the smallest
/// |odd_gap|_inf and that residual.
std::pair<SpherePoint, double> brute_scan(const Instance& inst, int resolution);

/// psi in closed form for f(x, u) = u_1 x_1 over A = [-1, 1], theta on the circle.
double example1_psi(double theta);

/// The instance example1_psi describes.
Instance example1_instance();

} // namespace antipodal
