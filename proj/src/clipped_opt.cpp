#include "antipodal/clipped_opt.hpp"

#include "antipodal/detail/simplex_search.hpp"
#include "antipodal/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace antipodal {

MaxMinResult maxmin_linear_polytope(const std::vector<Vector>& vertices, std::span<const double> c,
                                    std::span<const double> u, double b, double tol)
{
    const std::size_t m = vertices.size();
    std::vector<double> a(m), cv(m);
    for (std::size_t j = 0; j < m; ++j) {
        a[j] = dot(u, vertices[j]);
        cv[j] = dot(c, vertices[j]);
    }

    MaxMinResult res;
    bool any = false;
    std::size_t max_j = 0, max_k = 0, min_j = 0, min_k = 0;
    double max_t = 1.0, min_t = 1.0;

    auto offer = [&](double value, std::size_t j, std::size_t k, double t) {
        if (!any || value > res.max_value) {
            res.max_value = value;
            max_j = j, max_k = k, max_t = t;
        }
        if (!any || value < res.min_value) {
            res.min_value = value;
            min_j = j, min_k = k, min_t = t;
        }
        any = true;
    };

    for (std::size_t j = 0; j < m; ++j)
        if (a[j] >= b - tol)
            offer(cv[j], j, j, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        if (!(a[j] > b))
            continue;
        for (std::size_t k = 0; k < m; ++k) {
            if (!(a[k] < b))
                continue;
            const double t = (b - a[k]) / (a[j] - a[k]);
            offer(t * cv[j] + (1.0 - t) * cv[k], j, k, t);
        }
    }
    if (!any)
        throw InfeasibleError("polytope does not meet the half-space");

    auto point = [&](std::size_t j, std::size_t k, double t) {
        if (j == k)
            return vertices[j];
        Vector x(vertices[j].size());
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = t * vertices[j][i] + (1.0 - t) * vertices[k][i];
        return x;
    };
    res.arg_max = point(max_j, max_k, max_t);
    res.arg_min = point(min_j, min_k, min_t);
    res.exact = true;
    return res;
}

namespace {

struct Extremum {
    double value;
    Vector arg;
};

// max <c, x> over B(center, r) ∩ {<u, x> >= b}; feasibility already checked.
Extremum ball_max(std::span<const double> center, double r, std::span<const double> c,
                  std::span<const double> u, double b)
{
    const double cn = norm(c);
    Vector free_arg = cn > 0.0 ? axpy(center, r / cn, c) : Vector(center.begin(), center.end());
    const double un = norm(u);
    if (un == 0.0 || dot(u, free_arg) >= b)
        return {dot(c, center) + r * cn, std::move(free_arg)};

    // Constraint active: optimise over the disk B ∩ {<u, x> = b}.
    const double d = (b - dot(u, center)) / un;
    const double rr = std::sqrt(std::max(0.0, r * r - d * d));
    Vector foot = axpy(center, d / un, u);
    Vector perp = axpy(c, -dot(c, u) / (un * un), u);
    const double pn = norm(perp);
    const double value = dot(c, foot) + rr * pn;
    if (pn > 0.0)
        foot = axpy(foot, rr / pn, perp);
    return {value, std::move(foot)};
}

} // namespace

MaxMinResult maxmin_linear_ball(std::span<const double> center, double r, std::span<const double> c,
                                std::span<const double> u, double b)
{
    const double un = norm(u);
    if (un == 0.0) {
        if (b > 0.0)
            throw InfeasibleError("zero normal with positive offset: half-space is empty");
    } else {
        const double tol = 1e-9 * (1.0 + std::fabs(b) + norm(center) + r);
        if (dot(u, center) + r * un < b - tol)
            throw InfeasibleError("ball does not meet the half-space");
    }

    // min <c, x> = -max <-c, x>; keeps the two halves sign-symmetric.
    Extremum hi = ball_max(center, r, c, u, b);
    const Vector neg = negated(c);
    Extremum lo = ball_max(center, r, neg, u, b);

    MaxMinResult res;
    res.max_value = hi.value;
    res.min_value = -lo.value;
    res.arg_max = std::move(hi.arg);
    res.arg_min = std::move(lo.arg);
    res.exact = true;
    return res;
}

namespace {

std::vector<int> first_primes(std::size_t count)
{
    std::vector<int> primes;
    for (int k = 2; primes.size() < count; ++k)
        if (std::none_of(primes.begin(), primes.end(), [k](int p) { return k % p == 0; }))
            primes.push_back(k);
    return primes;
}

double radical_inverse(std::uint64_t i, int base)
{
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
        i /= static_cast<std::uint64_t>(base);
        f *= inv;
    }
    return r;
}

// Maps [0,1]^n onto the cap B ∩ {<w, x> >= b}: the first coordinate picks the
// height along w, the rest pick a point of the (n-1)-disk at that height.
class CapChart {
public:
    CapChart(const Ball& ball, std::span<const double> w, double b) : center_(ball.center), r_(ball.radius)
    {
        const std::size_t n = center_.size();
        const double wn = norm(w);
        axis_.assign(n, 0.0);
        if (wn > 0.0) {
            for (std::size_t i = 0; i < n; ++i)
                axis_[i] = w[i] / wn;
            const double d = (b - dot(w, center_)) / wn;
            s_lo_ = std::clamp(d, -r_, r_);
        } else {
            axis_[0] = 1.0;
            s_lo_ = -r_;
        }
        for (std::size_t e = 0; e < n && perp_.size() + 1 < n; ++e) {
            Vector v(n, 0.0);
            v[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                v = axpy(v, -dot(v, axis_), axis_);
                for (const Vector& q : perp_)
                    v = axpy(v, -dot(v, q), q);
            }
            const double len = norm(v);
            if (len > 1e-8)
                perp_.push_back(scaled(v, 1.0 / len));
        }
    }

    Vector map(std::span<const double> t) const
    {
        const double s = s_lo_ + t[0] * (r_ - s_lo_);
        const double rho = std::sqrt(std::max(0.0, r_ * r_ - s * s));
        Vector x = axpy(center_, s, axis_);
        const std::size_t k = perp_.size();
        if (k == 0)
            return x;
        Vector v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = 2.0 * t[i + 1] - 1.0;
        const double l2 = norm(v);
        if (l2 == 0.0)
            return x;
        // Square-to-disk radial map.
        const double scale = rho * norm_inf(v) / l2;
        for (std::size_t i = 0; i < k; ++i)
            x = axpy(x, scale * v[i], perp_[i]);
        return x;
    }

private:
    Vector center_;
    double r_;
    Vector axis_;
    double s_lo_ = 0.0;
    std::vector<Vector> perp_;
};

// Triangle-wave fold of R onto [0, 1] so the polish runs unconstrained.
double fold(double t)
{
    double m = std::fmod(t, 2.0);
    if (m < 0.0)
        m += 2.0;
    return m > 1.0 ? 2.0 - m : m;
}

constexpr int kPolishIterations = 200;
constexpr double kPolishSizeTol = 1e-10;
constexpr double kPolishStep = 0.05;
constexpr int kMinBudget = 64;

} // namespace

MaxMinResult maxmin_blackbox_ball(const Ball& ball, const Objective& f, const SpherePoint& p,
                                  std::span<const double> w, double b, BlackBoxBudget budget)
{
    const std::size_t n = ball.center.size();
    if (static_cast<int>(n) != p.n() || w.size() != n)
        throw DimensionError("black-box cap dimensions disagree");
    if (budget.samples < kMinBudget)
        throw InvalidArgument("black-box budget must be at least 64 samples");
    const double wn = norm(w);
    if (wn == 0.0) {
        if (b > 0.0)
            throw InfeasibleError("zero normal with positive offset: half-space is empty");
    } else {
        const double tol = 1e-9 * (1.0 + std::fabs(b) + norm(ball.center) + ball.radius);
        if (dot(w, ball.center) + ball.radius * wn < b - tol)
            throw InfeasibleError("ball does not meet the half-space");
    }

    const CapChart chart(ball, w, b);
    const auto primes = first_primes(n);
    Vector shift(n);
    {
        std::mt19937_64 rng(budget.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (double& s : shift)
            s = unit(rng);
    }

    const auto count = static_cast<std::size_t>(budget.samples);
    std::vector<Vector> params(count, Vector(n));
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double t = radical_inverse(i + 1, primes[k]) + shift[k];
            params[i][k] = t - std::floor(t);
        }
        values[i] = eval(f, chart.map(params[i]), p);
    }

    // Dyadic prefix chain {B, B/2, ...} down to the minimum budget. Doubling
    // B only adds a link, so the set of polish starts is nested.
    std::vector<std::size_t> prefixes;
    for (std::size_t s = count; s >= kMinBudget; s /= 2)
        prefixes.push_back(s);

    auto evaluate_folded = [&](std::span<const double> y) {
        Vector t(y.size());
        for (std::size_t k = 0; k < y.size(); ++k)
            t[k] = fold(y[k]);
        return std::pair{eval(f, chart.map(t), p), chart.map(t)};
    };

    struct Polished {
        double value;
        Vector arg;
    };
    // keyed by (start index, direction); sign = +1 for max, -1 for min
    std::map<std::pair<std::size_t, int>, Polished> cache;
    auto polish = [&](std::size_t start, int sign) -> const Polished& {
        auto key = std::pair{start, sign};
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
        auto objective = [&](std::span<const double> y) { return -sign * evaluate_folded(y).first; };
        auto r = detail::nelder_mead(objective, params[start], kPolishStep, kPolishIterations, kPolishSizeTol);
        auto [v, x] = evaluate_folded(r.x);
        return cache.emplace(key, Polished{v, std::move(x)}).first->second;
    };

    // Result restricted to the first `limit` samples and the polish starts of
    // prefixes no longer than `limit`.
    auto solve_prefix = [&](std::size_t limit) {
        MaxMinResult res;
        std::size_t imax = 0, imin = 0;
        for (std::size_t i = 1; i < limit; ++i) {
            if (values[i] > values[imax])
                imax = i;
            if (values[i] < values[imin])
                imin = i;
        }
        res.max_value = values[imax];
        res.min_value = values[imin];
        res.arg_max = chart.map(params[imax]);
        res.arg_min = chart.map(params[imin]);
        for (std::size_t s : prefixes) {
            if (s > limit)
                continue;
            std::size_t bmax = 0, bmin = 0;
            for (std::size_t i = 1; i < s; ++i) {
                if (values[i] > values[bmax])
                    bmax = i;
                if (values[i] < values[bmin])
                    bmin = i;
            }
            const Polished& hi = polish(bmax, +1);
            if (hi.value > res.max_value) {
                res.max_value = hi.value;
                res.arg_max = hi.arg;
            }
            const Polished& lo = polish(bmin, -1);
            if (lo.value < res.min_value) {
                res.min_value = lo.value;
                res.arg_min = lo.arg;
            }
        }
        return res;
    };

    MaxMinResult full = solve_prefix(count);
    double coarse_gap = 0.0;
    if (prefixes.size() > 1) {
        coarse_gap = solve_prefix(prefixes[1]).gap();
    } else {
        coarse_gap = *std::max_element(values.begin(), values.end()) -
                     *std::min_element(values.begin(), values.end());
    }
    full.exact = false;
    full.error_estimate = std::fabs(full.gap() - coarse_gap);
    return full;
}

MaxMinResult maxmin_blackbox_ball(const Ball& ball, const Objective& f, const SpherePoint& p, int budget,
                                  std::uint64_t seed)
{
    return maxmin_blackbox_ball(ball, f, p, p.head(), p.last(), BlackBoxBudget{budget, seed});
}

MaxMinResult maxmin_side(const ConvexBody& a, const Objective& f, const SpherePoint& p, Side side,
                         BlackBoxBudget budget)
{
    if (a.dim() != p.n())
        throw DimensionError("body dimension does not match sphere point dimension");
    const bool plus = side == Side::Plus;
    const auto fr = plus ? feasibility(a, p) : feasibility(a, antipode(p));
    if (fr.status == Feasibility::Empty)
        throw InfeasibleError(plus ? "A ∩ H+ is empty" : "A ∩ H- is empty");

    // H- = {<-u, x> >= -u_{n+1}}
    const Vector w = plus ? Vector(p.head().begin(), p.head().end()) : negated(p.head());
    const double b = plus ? p.last() : -p.last();

    if (auto c = f.linear_coefficients(p)) {
        if (a.is_polytope())
            return maxmin_linear_polytope(a.as_polytope().vertices, *c, w, b, default_tolerance(a, p));
        const Ball& ball = a.as_ball();
        return maxmin_linear_ball(ball.center, ball.radius, *c, w, b);
    }
    if (!a.is_ball())
        throw InvalidArgument("black-box objectives are only supported over balls");
    return maxmin_blackbox_ball(a.as_ball(), f, p, w, b, budget);
}

std::pair<double, double> support_pair(const ConvexBody& a, const SpherePoint& p, Side side)
{
    const auto r = maxmin_side(a, Objective::inner(), p, side);
    return {r.max_value, r.min_value};
}

} // namespace antipodal
