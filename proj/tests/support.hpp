#pragma once

// Test-only helpers: random instance generators and brute-force oracles.
// Nothing here calls into the solvers it is used to check.

#include "antipodal/bodies.hpp"
#include "antipodal/gapmap.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace antipodal::testing {

using Rng = std::mt19937_64;

inline Vector gaussian_vector(Rng& rng, int n, double sigma = 1.0)
{
    std::normal_distribution<double> g(0.0, sigma);
    Vector v(static_cast<std::size_t>(n));
    for (double& x : v)
        x = g(rng);
    return v;
}

inline Vector uniform_vector(Rng& rng, int n, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    Vector v(static_cast<std::size_t>(n));
    for (double& x : v)
        x = u(rng);
    return v;
}

inline Vector unit_vector(Rng& rng, int n)
{
    for (;;) {
        Vector v = gaussian_vector(rng, n);
        const double r = norm(v);
        if (r > 1e-8)
            return scaled(v, 1.0 / r);
    }
}

/// Convex hull of `count` standard Gaussian points, retried until full-dimensional.
inline ConvexBody gaussian_polytope(Rng& rng, int n, int count, double sigma = 1.0)
{
    for (;;) {
        std::vector<Vector> pts;
        for (int k = 0; k < count; ++k)
            pts.push_back(gaussian_vector(rng, n, sigma));
        ConvexBody body = ConvexBody::polytope(std::move(pts));
        if (interior_dimension(body) == n)
            return body;
    }
}

inline ConvexBody random_ball(Rng& rng, int n)
{
    std::uniform_real_distribution<double> r(0.4, 1.0);
    return ConvexBody::ball(gaussian_vector(rng, n, 0.4), r(rng));
}

/// Random orthogonal matrix from Gram-Schmidt of a Gaussian matrix.
inline Matrix random_orthogonal(Rng& rng, int n)
{
    std::vector<Vector> cols;
    while (static_cast<int>(cols.size()) < n) {
        Vector v = gaussian_vector(rng, n);
        for (const Vector& c : cols)
            v = axpy(v, -dot(v, c), c);
        const double len = norm(v);
        if (len > 1e-6)
            cols.push_back(scaled(v, 1.0 / len));
    }
    Matrix q(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            q(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    return q;
}

/// U diag(s) V with singular values in [1, max_cond]: condition number <= max_cond.
inline Matrix random_conditioned(Rng& rng, int n, double max_cond)
{
    const Matrix u = random_orthogonal(rng, n), v = random_orthogonal(rng, n);
    std::uniform_real_distribution<double> sv(1.0, max_cond);
    Vector s(static_cast<std::size_t>(n));
    for (double& x : s)
        x = sv(rng);
    s[0] = 1.0;
    Matrix q(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < q.size(); ++r)
        for (std::size_t c = 0; c < q.size(); ++c) {
            double acc = 0.0;
            for (std::size_t k = 0; k < q.size(); ++k)
                acc += u(r, k) * s[k] * v(k, c);
            q(r, c) = acc;
        }
    return q;
}

/// Random instance with n bodies: each body a Ball or Gaussian polytope, each
/// objective Inner or Bilinear.
inline Instance random_mixed_instance(Rng& rng, int n, bool force_bilinear = false)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<ConvexBody> bodies;
    std::vector<Objective> objectives;
    for (int i = 0; i < n; ++i) {
        bodies.push_back(coin(rng) ? random_ball(rng, n) : gaussian_polytope(rng, n, n + 4, 0.6));
        if (force_bilinear || coin(rng))
            objectives.push_back(Objective::bilinear(random_conditioned(rng, n, 5.0)));
        else
            objectives.push_back(Objective::inner());
    }
    return Instance(std::move(bodies), std::move(objectives));
}

// ---------------------------------------------------------------------------
// Oracles

struct GridExtremes {
    double max_value = -INFINITY;
    double min_value = INFINITY;
    bool any = false;
};

/// Brute force over barycentric weights lambda on a grid of the given step:
/// feasible points are sum lambda_j v_j with <u, x> >= b. For m <= 3 the full
/// simplex grid is scanned; for larger m every 2-face (vertex triple) is.
inline GridExtremes lambda_grid(const std::vector<Vector>& verts, std::span<const double> c,
                                std::span<const double> u, double b, double step)
{
    const std::size_t m = verts.size();
    std::vector<double> a(m), cv(m);
    for (std::size_t j = 0; j < m; ++j) {
        a[j] = dot(u, verts[j]);
        cv[j] = dot(c, verts[j]);
    }
    const int steps = static_cast<int>(std::lround(1.0 / step));
    GridExtremes out;
    auto offer = [&](double av, double value) {
        if (av >= b) {
            out.max_value = std::max(out.max_value, value);
            out.min_value = std::min(out.min_value, value);
            out.any = true;
        }
    };
    auto scan_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        for (int p = 0; p <= steps; ++p)
            for (int q = 0; p + q <= steps; ++q) {
                const double li = static_cast<double>(p) / steps;
                const double lj = static_cast<double>(q) / steps;
                const double lk = 1.0 - li - lj;
                offer(li * a[i] + lj * a[j] + lk * a[k], li * cv[i] + lj * cv[j] + lk * cv[k]);
            }
    };
    if (m == 1) {
        offer(a[0], cv[0]);
    } else if (m == 2) {
        for (int p = 0; p <= steps; ++p) {
            const double l = static_cast<double>(p) / steps;
            offer(l * a[0] + (1 - l) * a[1], l * cv[0] + (1 - l) * cv[1]);
        }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k)
                    scan_triple(i, j, k);
    }
    return out;
}

/// Uniform rejection sampling of B(center, r) ∩ {<u, x> >= b}: `samples`
/// accepted points of the clipped ball (proposals are capped at 1000x that).
inline GridExtremes ball_cap_samples(Rng& rng, std::span<const double> center, double r,
                                     std::span<const double> c, std::span<const double> u, double b, int samples)
{
    const int n = static_cast<int>(center.size());
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GridExtremes out;
    Vector y(static_cast<std::size_t>(n));
    long long accepted = 0;
    for (long long tries = 0; accepted < samples && tries < 1000LL * samples; ++tries) {
        double len2;
        do {
            len2 = 0.0;
            for (double& v : y) {
                v = unit(rng);
                len2 += v * v;
            }
        } while (len2 > 1.0);
        const Vector x = axpy(center, r, y);
        if (dot(u, x) >= b) {
            const double v = dot(c, x);
            out.max_value = std::max(out.max_value, v);
            out.min_value = std::min(out.min_value, v);
            out.any = true;
            ++accepted;
        }
    }
    return out;
}

/// Is x within tol of the segment [p, q]?
inline bool near_segment(std::span<const double> x, std::span<const double> p, std::span<const double> q, double tol)
{
    const Vector d = axpy(q, -1.0, p);
    const double dd = dot(d, d);
    double t = dd > 0.0 ? dot(axpy(x, -1.0, p), d) / dd : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(x, axpy(p, t, d)) <= tol;
}

/// x lies on some edge or vertex of conv(verts) (a sufficient containment witness).
inline bool on_vertex_segment(std::span<const double> x, const std::vector<Vector>& verts, double tol)
{
    for (std::size_t j = 0; j < verts.size(); ++j)
        for (std::size_t k = j; k < verts.size(); ++k)
            if (near_segment(x, verts[j], verts[k], tol))
                return true;
    return false;
}

} // namespace antipodal::testing
