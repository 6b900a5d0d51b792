#include "antipodal/bodies.hpp"

#include "antipodal/detail/overloaded.hpp"
#include "antipodal/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace antipodal {

namespace {

using detail::Overloaded;

void check_finite(std::span<const double> v, const char* what)
{
    for (double x : v)
        if (!std::isfinite(x))
            throw InvalidArgument(std::string(what) + " has a non-finite coordinate");
}

} // namespace

ConvexBody ConvexBody::polytope(std::vector<Vector> vertices)
{
    if (vertices.empty())
        throw InvalidArgument("polytope needs at least one vertex");
    const std::size_t n = vertices.front().size();
    if (n == 0)
        throw InvalidArgument("polytope vertices must have positive length");
    std::vector<Vector> kept;
    kept.reserve(vertices.size());
    for (Vector& v : vertices) {
        if (v.size() != n)
            throw InvalidArgument("polytope vertices have inconsistent lengths");
        check_finite(v, "polytope vertex");
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Vector& w) {
            return distance(v, w) <= kDuplicateTolerance;
        });
        if (!dup)
            kept.push_back(std::move(v));
    }
    return ConvexBody(Polytope{std::move(kept)}, static_cast<int>(n));
}

ConvexBody ConvexBody::ball(Vector center, double radius)
{
    if (center.empty())
        throw InvalidArgument("ball center must have positive length");
    check_finite(center, "ball center");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidArgument("ball radius must be positive and finite");
    const int n = static_cast<int>(center.size());
    return ConvexBody(Ball{std::move(center), radius}, n);
}

double norm_bound(const ConvexBody& a)
{
    const double m = a.visit(Overloaded{
        [](const Polytope& p) {
            double best = 0.0;
            for (const Vector& v : p.vertices)
                best = std::max(best, norm(v));
            return best;
        },
        [](const Ball& b) { return norm(b.center) + b.radius; },
    });
    return std::max(m, 1e-9);
}

double support_value(const ConvexBody& a, std::span<const double> u)
{
    if (static_cast<int>(u.size()) != a.dim())
        throw DimensionError("direction length does not match body dimension");
    return a.visit(Overloaded{
        [&](const Polytope& p) {
            double best = -INFINITY;
            for (const Vector& v : p.vertices)
                best = std::max(best, dot(u, v));
            return best;
        },
        [&](const Ball& b) { return dot(u, b.center) + b.radius * norm(u); },
    });
}

double default_tolerance(const ConvexBody& a, const SpherePoint& p)
{
    return 1e-9 * (1.0 + std::fabs(p.last()) + norm_bound(a));
}

FeasibilityReport feasibility(const ConvexBody& a, const SpherePoint& p, double tol)
{
    if (a.dim() != p.n())
        throw DimensionError("body dimension " + std::to_string(a.dim()) +
                             " does not match sphere point dimension " + std::to_string(p.n()));
    const double s = support_value(a, p.head());
    const double margin = s - p.last();
    const auto status = s < p.last() - tol ? Feasibility::Empty : Feasibility::NonEmpty;
    return {status, s, margin};
}

FeasibilityReport feasibility(const ConvexBody& a, const SpherePoint& p)
{
    return feasibility(a, p, default_tolerance(a, p));
}

int interior_dimension(const ConvexBody& a)
{
    if (a.is_ball())
        return a.dim();
    const auto& verts = a.as_polytope().vertices;
    const std::size_t n = static_cast<std::size_t>(a.dim());
    if (verts.size() < 2)
        return 0;

    // Rows are v_j - v_1; full pivoting so the rank decision is made on the
    // largest remaining entry each step.
    std::vector<Vector> rows;
    for (std::size_t j = 1; j < verts.size(); ++j)
        rows.push_back(axpy(verts[j], -1.0, verts[0]));

    double scale = 0.0;
    for (const Vector& r : rows)
        scale = std::max(scale, norm_inf(r));
    const double threshold = 1e-9 * std::max(1.0, scale);

    std::vector<bool> col_used(n, false);
    int rank = 0;
    for (std::size_t k = 0; k < rows.size() && rank < static_cast<int>(n); ++k) {
        std::size_t pr = 0, pc = 0;
        double best = 0.0;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!col_used[c] && std::fabs(rows[r][c]) > best) {
                    best = std::fabs(rows[r][c]);
                    pr = r;
                    pc = c;
                }
        if (best <= threshold)
            break;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pr]);
        const Vector& pivot = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            const double f = rows[r][pc] / pivot[pc];
            for (std::size_t c = 0; c < n; ++c)
                rows[r][c] -= f * pivot[c];
        }
        col_used[pc] = true;
        ++rank;
    }
    return rank;
}

double cap_diameter_ball(const Ball& b, const SpherePoint& p)
{
    if (static_cast<int>(b.center.size()) != p.n())
        throw DimensionError("ball dimension does not match sphere point dimension");
    const double un = norm(p.head());
    if (un == 0.0)
        throw InvalidArgument("zero hyperplane normal: half-space is all of R^n or empty");
    const double d = (p.last() - dot(p.head(), b.center)) / un;
    const double tol = 1e-9 * (1.0 + std::fabs(p.last()) + norm(b.center) + b.radius);
    if (d > b.radius + tol / un)
        throw InfeasibleError("ball does not meet the half-space");
    if (d <= 0.0)
        return 2.0 * b.radius;
    return 2.0 * std::sqrt(std::max(0.0, b.radius * b.radius - d * d));
}

} // namespace antipodal
