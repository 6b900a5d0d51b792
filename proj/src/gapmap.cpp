#include "antipodal/gapmap.hpp"

#include "antipodal/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace antipodal {

namespace {

constexpr int kAntipodalProbeCount = 256;
constexpr std::uint64_t kAntipodalProbeSeed = 0x5eed;

} // namespace

Instance::Instance(std::vector<ConvexBody> bodies, std::vector<Objective> objectives, EpsilonPolicy policy,
                   BlackBoxBudget budget)
    : bodies_(std::move(bodies)), objectives_(std::move(objectives)), policy_(policy), budget_(budget)
{
    n_ = static_cast<int>(bodies_.size());
    if (n_ < 1)
        throw InvalidArgument("instance needs at least one body");
    if (objectives_.size() != bodies_.size())
        throw InvalidArgument("instance has " + std::to_string(bodies_.size()) + " bodies but " +
                              std::to_string(objectives_.size()) + " objectives");
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
        const auto& a = bodies_[i];
        if (a.dim() != n_)
            throw DimensionError("body " + std::to_string(i) + " has dimension " + std::to_string(a.dim()) +
                                 ", expected " + std::to_string(n_));
        if (interior_dimension(a) != n_)
            throw InvalidArgument("body " + std::to_string(i) + " has empty interior");
        const auto& f = objectives_[i];
        if (f.is_bilinear() && static_cast<int>(f.as_bilinear().q.size()) != n_)
            throw DimensionError("objective " + std::to_string(i) + " matrix order does not match dimension");
        if (f.is_black_box()) {
            if (!a.is_ball())
                throw InvalidArgument("objective " + std::to_string(i) +
                                      ": black-box objectives require a ball body");
            if (!f.as_black_box().declared_antipodal ||
                !antipodality_check(f, n_, kAntipodalProbeSeed, kAntipodalProbeCount))
                all_antipodal_ = false;
        }
    }
    if (policy_.fixed) {
        const double eps = *policy_.fixed;
        if (!(eps > 0.0 && eps < 1.0))
            throw InvalidArgument("epsilon must lie in (0, 1)");
    }
    if (budget_.samples < 64)
        throw InvalidArgument("black-box budget must be at least 64 samples");
}

bool Instance::all_linear() const
{
    return std::all_of(objectives_.begin(), objectives_.end(), [](const Objective& f) { return f.is_linear(); });
}

double Instance::norm_bound() const
{
    double m = 0.0;
    for (const auto& a : bodies_)
        m = std::max(m, antipodal::norm_bound(a));
    return m;
}

bool epsilon_admissible(double eps, double m)
{
    return eps > 0.0 && eps < 1.0 && std::sqrt(2.0 * eps - eps * eps) * m < 1.0 - eps;
}

double epsilon_auto(double m)
{
    auto ok = [m](double eps) { return std::sqrt(2.0 * eps - eps * eps) * m <= 0.9 * (1.0 - eps); };
    double lo = 0.0, hi = 0.5;
    if (ok(hi)) {
        lo = hi;
    } else {
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? lo : hi) = mid;
        }
        // Only reachable for astronomically large M.
        while (lo == 0.0) {
            hi *= 0.5;
            if (ok(hi))
                lo = hi;
        }
    }
    return std::min(0.05, lo);
}

double epsilon_auto(const Instance& inst) { return epsilon_auto(inst.norm_bound()); }

double resolve_epsilon(const Instance& inst)
{
    return inst.epsilon_policy().fixed ? *inst.epsilon_policy().fixed : epsilon_auto(inst);
}

namespace {

void require_admissible(const Instance& inst, double eps)
{
    if (!epsilon_admissible(eps, inst.norm_bound()))
        throw InvalidArgument("epsilon " + std::to_string(eps) +
                              " is too large: the cap would meet a body's half-space");
}

// Gap of body i on one side of p, or nullopt when that side is empty.
std::optional<MaxMinResult> side_gap(const Instance& inst, std::size_t i, const SpherePoint& p, Side side)
{
    const auto& a = inst.bodies()[i];
    const auto fr = side == Side::Plus ? feasibility(a, p) : feasibility(a, antipode(p));
    if (fr.status == Feasibility::Empty)
        return std::nullopt;
    return maxmin_side(a, inst.objectives()[i], p, side, inst.black_box_budget());
}

} // namespace

double empty_side_value(double height, double eps)
{
    // (1 - height) - eps is exactly -eps at the pole.
    return height > 1.0 - eps ? ((1.0 - height) - eps) / eps : 0.0;
}

GapVector psi(const Instance& inst, const SpherePoint& p)
{
    GapVector g{std::vector<double>(inst.size(), 0.0), std::vector<bool>(inst.size(), true)};
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (auto r = side_gap(inst, i, p, Side::Plus)) {
            g.values[i] = r->gap();
            g.per_entry_exact[i] = r->exact;
        }
    return g;
}

GapVector phi(const Instance& inst, const SpherePoint& p, double eps)
{
    require_admissible(inst, eps);
    GapVector g{std::vector<double>(inst.size(), 0.0), std::vector<bool>(inst.size(), true)};
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (auto r = side_gap(inst, i, p, Side::Plus)) {
            g.values[i] = r->gap();
            g.per_entry_exact[i] = r->exact;
        } else {
            g.values[i] = empty_side_value(p.last(), eps);
        }
    }
    return g;
}

GapVector phi_antipodal(const Instance& inst, const SpherePoint& p, double eps)
{
    if (!inst.all_antipodal())
        throw InvalidArgument("phi(-u) from the minus side requires antipodal objectives");
    require_admissible(inst, eps);
    GapVector g{std::vector<double>(inst.size(), 0.0), std::vector<bool>(inst.size(), true)};
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (auto r = side_gap(inst, i, p, Side::Minus)) {
            g.values[i] = r->gap();
            g.per_entry_exact[i] = r->exact;
        } else {
            g.values[i] = empty_side_value(-p.last(), eps);
        }
    }
    return g;
}

std::vector<double> odd_gap(const Instance& inst, const SpherePoint& p, double eps)
{
    const GapVector plus = phi(inst, p, eps);
    const GapVector minus = phi_antipodal(inst, p, eps);
    std::vector<double> out(inst.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = plus.values[i] - minus.values[i];
    return out;
}

} // namespace antipodal
