#include "antipodal/objectives.hpp"

#include "antipodal/detail/overloaded.hpp"
#include "antipodal/error.hpp"

#include <cmath>
#include <random>

namespace antipodal {

using detail::Overloaded;

double hadamard_ratio(const Matrix& q)
{
    double rows = 1.0;
    for (std::size_t r = 0; r < q.size(); ++r) {
        const double len = norm(q.row(r));
        if (len == 0.0)
            return 0.0;
        rows *= len;
    }
    return std::fabs(q.determinant()) / rows;
}

Objective Objective::bilinear(Matrix q)
{
    if (q.size() == 0)
        throw InvalidArgument("bilinear matrix must be non-empty");
    for (std::size_t r = 0; r < q.size(); ++r)
        for (double v : q.row(r))
            if (!std::isfinite(v))
                throw InvalidArgument("bilinear matrix has a non-finite entry");
    if (!(hadamard_ratio(q) > kSingularityThreshold))
        throw InvalidArgument("bilinear matrix is singular");
    return Objective(BilinearObjective{std::move(q)});
}

Objective Objective::black_box(std::function<double(std::span<const double>, const SpherePoint&)> f,
                               bool declared_antipodal)
{
    if (!f)
        throw InvalidArgument("black-box objective needs an evaluator");
    return Objective(BlackBoxObjective{std::move(f), declared_antipodal});
}

std::optional<Vector> Objective::linear_coefficients(const SpherePoint& p) const
{
    return std::visit(Overloaded{
                          [&](const InnerObjective&) -> std::optional<Vector> {
                              return Vector(p.head().begin(), p.head().end());
                          },
                          // <u, Qx> = <Qᵀu, x>
                          [&](const BilinearObjective& b) -> std::optional<Vector> {
                              if (static_cast<int>(b.q.size()) != p.n())
                                  throw DimensionError("bilinear matrix order does not match sphere point");
                              return b.q.apply_transpose(p.head());
                          },
                          [](const BlackBoxObjective&) -> std::optional<Vector> { return std::nullopt; },
                      },
                      kind_);
}

double eval(const Objective& f, std::span<const double> x, const SpherePoint& p)
{
    if (static_cast<int>(x.size()) != p.n())
        throw DimensionError("point length does not match sphere point dimension");
    if (f.is_black_box()) {
        const double v = f.as_black_box().evaluator(x, p);
        if (!std::isfinite(v))
            throw Error("black-box objective returned a non-finite value");
        return v;
    }
    if (f.is_bilinear()) {
        const auto& q = f.as_bilinear().q;
        if (static_cast<int>(q.size()) != p.n())
            throw DimensionError("bilinear matrix order does not match sphere point");
        return dot(p.head(), q.apply(x));
    }
    return dot(p.head(), x);
}

bool antipodality_check(const Objective& f, int n, std::uint64_t seed, int count)
{
    if (f.is_linear())
        return true;
    const auto points = sample_sphere(n, count, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vector x(static_cast<std::size_t>(n));
    for (const SpherePoint& p : points) {
        // Uniform in the ball of radius 2.
        double len = 0.0;
        do {
            for (double& v : x)
                v = gauss(rng);
            len = norm(x);
        } while (len < 1e-12);
        const double r = 2.0 * std::pow(unit(rng), 1.0 / n);
        for (double& v : x)
            v *= r / len;
        const double fp = eval(f, x, p);
        const double fm = eval(f, x, antipode(p));
        if (std::fabs(fm + fp) > 1e-9 * (1.0 + std::fabs(fp)))
            return false;
    }
    return true;
}

} // namespace antipodal
