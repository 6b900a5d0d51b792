#pragma once

#include "antipodal/linalg.hpp"

#include <functional>
#include <span>

namespace antipodal::detail {

struct SimplexSearchResult {
    Vector x;
    double value;
    int iterations;
};

/// Nelder-Mead minimisation of f starting from an axis-aligned simplex of
/// edge `step` at x0. Stops after max_iter iterations or once every vertex
/// lies within size_tol of the best one. Deterministic.
SimplexSearchResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                Vector x0, double step, int max_iter, double size_tol);

} // namespace antipodal::detail
