#pragma once

#include "antipodal/bodies.hpp"
#include "antipodal/objectives.hpp"
#include "antipodal/sphere.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace antipodal {

/// Max and min of an objective over a clipped body A ∩ {<w, x> >= b}.
struct MaxMinResult {
    double max_value = 0.0;
    double min_value = 0.0;
    Vector arg_max;
    Vector arg_min;
    bool exact = true;
    /// Zero for exact solvers; for sampled black boxes, the change in the gap
    /// between half and full budget.
    double error_estimate = 0.0;

    double gap() const { return max_value - min_value; }
};

/// Exact optimum of <c, x> over conv(vertices) ∩ {<u, x> >= b}.
///
/// In barycentric coordinates the feasible set is a simplex cut by one
/// half-space, so its vertices are the feasible pure vertices plus one point
/// on every simplex edge that crosses the plane. Enumerating those is exact
/// and O(m²). Throws InfeasibleError if no vertex satisfies <u, v> >= b - tol.
MaxMinResult maxmin_linear_polytope(const std::vector<Vector>& vertices, std::span<const double> c,
                                    std::span<const double> u, double b, double tol);

/// Exact optimum of <c, x> over B(center, r) ∩ {<u, x> >= b} in closed form.
/// Throws InfeasibleError when the intersection is empty (including u = 0
/// with b > 0).
MaxMinResult maxmin_linear_ball(std::span<const double> center, double r, std::span<const double> c,
                                std::span<const double> u, double b);

struct BlackBoxBudget {
    int samples = 4096;
    std::uint64_t seed = 0;
};

/// Approximate max/min of f(., p) over B ∩ {<w, x> >= b}: a shifted Halton
/// sample of the cap followed by Nelder-Mead polish from the best sample of
/// every dyadic prefix (so doubling the budget can only widen the gap).
MaxMinResult maxmin_blackbox_ball(const Ball& ball, const Objective& f, const SpherePoint& p,
                                  std::span<const double> w, double b, BlackBoxBudget budget);

/// Same, clipped to H_p^+. Requires budget.samples >= 64.
MaxMinResult maxmin_blackbox_ball(const Ball& ball, const Objective& f, const SpherePoint& p,
                                  int budget, std::uint64_t seed);

enum class Side { Plus, Minus };

/// Max/min of f(., p) over A ∩ H_p^side. Dispatches to the exact solvers for
/// linear objectives and to the sampler for black boxes (Ball only).
/// Throws InfeasibleError when that side is empty.
MaxMinResult maxmin_side(const ConvexBody& a, const Objective& f, const SpherePoint& p, Side side,
                         BlackBoxBudget budget = {});

/// (max, min) of <u, x> over A ∩ H_p^side: the support function and the
/// infimum support function of the clipped body.
std::pair<double, double> support_pair(const ConvexBody& a, const SpherePoint& p, Side side);

} // namespace antipodal
