#pragma once

#include "antipodal/bodies.hpp"
#include "antipodal/clipped_opt.hpp"
#include "antipodal/objectives.hpp"
#include "antipodal/sphere.hpp"

#include <optional>
#include <vector>

namespace antipodal {

/// Either pick epsilon automatically or use a fixed value.
struct EpsilonPolicy {
    std::optional<double> fixed;

    static EpsilonPolicy automatic() { return {}; }
    static EpsilonPolicy fixed_value(double eps) { return {eps}; }
};

/// n bodies in R^n, each paired with an objective.
class Instance {
public:
    /// Validates sizes and dimensions, rejects lower-dimensional polytopes and
    /// probes black-box objectives for antipodality (recorded, not enforced).
    Instance(std::vector<ConvexBody> bodies, std::vector<Objective> objectives,
             EpsilonPolicy policy = EpsilonPolicy::automatic(), BlackBoxBudget budget = {});

    int n() const { return n_; }
    std::size_t size() const { return bodies_.size(); }
    const std::vector<ConvexBody>& bodies() const { return bodies_; }
    const std::vector<Objective>& objectives() const { return objectives_; }
    const EpsilonPolicy& epsilon_policy() const { return policy_; }
    const BlackBoxBudget& black_box_budget() const { return budget_; }

    /// Every objective is antipodal in u (linear ones trivially, black boxes
    /// when declared and confirmed by sampling).
    bool all_antipodal() const { return all_antipodal_; }
    bool all_linear() const;

    /// max_i norm_bound(A_i)
    double norm_bound() const;

private:
    int n_;
    std::vector<ConvexBody> bodies_;
    std::vector<Objective> objectives_;
    EpsilonPolicy policy_;
    BlackBoxBudget budget_;
    bool all_antipodal_ = true;
};

/// Values of psi or phi at one sphere point, one entry per body.
struct GapVector {
    std::vector<double> values;
    std::vector<bool> per_entry_exact;
};

/// Does sqrt(2 eps - eps²) * M < 1 - eps hold? (Every A_i ∩ H_u^+ is then
/// empty on the cap.)
bool epsilon_admissible(double eps, double m);

/// min(0.05, largest eps in (0, 0.5] with sqrt(2 eps - eps²) M <= 0.9 (1 - eps)).
double epsilon_auto(double norm_bound);
double epsilon_auto(const Instance& inst);

/// phi entry for an empty side whose (effective) last coordinate is `height`:
/// (1 - eps - height) / eps inside the cap, 0 outside. Exactly -1 at height 1.
double empty_side_value(double height, double eps);

/// Fixed value if the policy has one, otherwise epsilon_auto.
double resolve_epsilon(const Instance& inst);

/// max f_i - min f_i over A_i ∩ H_p^+, or 0 where that set is empty.
GapVector psi(const Instance& inst, const SpherePoint& p);

/// psi with the empty-side entries replaced by (1 - eps - u_{n+1}) / eps
/// inside the eps-cap. Throws InvalidArgument for an inadmissible eps.
GapVector phi(const Instance& inst, const SpherePoint& p, double eps);

/// phi(-p) evaluated from the H_p^- side with objectives at p. Requires
/// antipodal objectives (throws InvalidArgument otherwise).
GapVector phi_antipodal(const Instance& inst, const SpherePoint& p, double eps);

/// phi(p) - phi(-p). Odd in p.
std::vector<double> odd_gap(const Instance& inst, const SpherePoint& p, double eps);

} // namespace antipodal
