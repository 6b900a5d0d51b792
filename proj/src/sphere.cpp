#include "antipodal/sphere.hpp"

#include "antipodal/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace antipodal {

SpherePoint::SpherePoint(Vector coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2)
        throw InvalidArgument("sphere point needs at least 2 coordinates");
    const double r = norm(coords_);
    if (!std::isfinite(r) || std::fabs(r - 1.0) > kUnitTolerance)
        throw InvalidArgument("sphere point is not unit length");
}

SpherePoint SpherePoint::normalized(Vector coords)
{
    if (coords.size() < 2)
        throw InvalidArgument("sphere point needs at least 2 coordinates");
    const double r = norm(coords);
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidArgument("cannot normalize a zero or non-finite vector");
    for (double& v : coords)
        v /= r;
    return SpherePoint(std::move(coords));
}

SpherePoint SpherePoint::north_pole(int n)
{
    Vector c(static_cast<std::size_t>(n) + 1, 0.0);
    c.back() = 1.0;
    return SpherePoint(std::move(c));
}

SpherePoint SpherePoint::south_pole(int n)
{
    Vector c(static_cast<std::size_t>(n) + 1, 0.0);
    c.back() = -1.0;
    return SpherePoint(std::move(c));
}

SpherePoint antipode(const SpherePoint& p)
{
    return SpherePoint(negated(p.coords()), SpherePoint::Unchecked{});
}

Halfspace Halfspace::normalized() const
{
    if (sense == Sense::Geq)
        return *this;
    return {negated(normal), -offset, Sense::Geq};
}

bool Halfspace::contains(std::span<const double> x, double tol) const
{
    const double v = dot(normal, x);
    return sense == Sense::Geq ? v >= offset - tol : v <= offset + tol;
}

HalfspacePair halfspaces(const SpherePoint& p)
{
    Vector u(p.head().begin(), p.head().end());
    return {{u, p.last(), Sense::Geq}, {u, p.last(), Sense::Leq}};
}

bool in_cap(const SpherePoint& p, EpsilonCap cap) { return p.last() > 1.0 - cap.epsilon; }

SpherePoint circle_point(double theta)
{
    // cos^2 + sin^2 is within a couple of ulps of 1, well inside the tolerance.
    return SpherePoint(Vector{std::cos(theta), std::sin(theta)});
}

std::vector<SpherePoint> sample_sphere(int n, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<SpherePoint> out;
    out.reserve(static_cast<std::size_t>(count));
    Vector v(static_cast<std::size_t>(n) + 1);
    while (static_cast<int>(out.size()) < count) {
        for (double& x : v)
            x = gauss(rng);
        if (norm(v) < 1e-8)
            continue;
        out.push_back(SpherePoint::normalized(v));
    }
    return out;
}

std::vector<SpherePoint> fibonacci_sphere(int count)
{
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<SpherePoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double frac = i / golden;
        frac -= std::floor(frac);
        const double phi = 2.0 * std::numbers::pi * frac;
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        out.push_back(SpherePoint::normalized({rho * std::cos(phi), rho * std::sin(phi), z}));
    }
    return out;
}

std::vector<Vector> tangent_basis(const SpherePoint& p)
{
    const auto x = p.coords();
    const std::size_t dim = x.size();
    std::vector<Vector> basis;
    basis.reserve(dim - 1);

    // Try axes in order of least alignment with p so the dropped one is the
    // most dependent.
    std::vector<std::size_t> order(dim);
    for (std::size_t i = 0; i < dim; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::fabs(x[a]) < std::fabs(x[b]); });

    for (std::size_t axis : order) {
        if (basis.size() == dim - 1)
            break;
        Vector e(dim, 0.0);
        e[axis] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            e = axpy(e, -dot(e, x), x);
            for (const Vector& b : basis)
                e = axpy(e, -dot(e, b), b);
        }
        const double len = norm(e);
        if (len < 1e-8)
            continue;
        for (double& v : e)
            v /= len;
        basis.push_back(std::move(e));
    }
    return basis;
}

SpherePoint geodesic_step(const SpherePoint& p, std::span<const double> direction, double angle)
{
    Vector c(p.coords().begin(), p.coords().end());
    const double ca = std::cos(angle), sa = std::sin(angle);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ca * c[i] + sa * direction[i];
    return SpherePoint::normalized(std::move(c));
}

} // namespace antipodal
