#pragma once

#include "antipodal/linalg.hpp"
#include "antipodal/sphere.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

namespace antipodal {

/// f(x, u) = <u, x>
struct InnerObjective {};

/// f(x, u) = <u, Q x> with Q nonsingular.
struct BilinearObjective {
    Matrix q;
};

/// Arbitrary continuous f(x, u). The evaluator must be pure and safe to call
/// concurrently.
struct BlackBoxObjective {
    std::function<double(std::span<const double>, const SpherePoint&)> evaluator;
    bool declared_antipodal = false;
};

class Objective {
public:
    static constexpr double kSingularityThreshold = 1e-9;

    static Objective inner() { return Objective(InnerObjective{}); }
    /// Throws InvalidArgument when Q is singular (see hadamard_ratio).
    static Objective bilinear(Matrix q);
    static Objective black_box(std::function<double(std::span<const double>, const SpherePoint&)> f,
                               bool declared_antipodal);

    bool is_inner() const { return std::holds_alternative<InnerObjective>(kind_); }
    bool is_bilinear() const { return std::holds_alternative<BilinearObjective>(kind_); }
    bool is_black_box() const { return std::holds_alternative<BlackBoxObjective>(kind_); }
    /// Inner and Bilinear are linear in x and solved exactly.
    bool is_linear() const { return !is_black_box(); }

    const BilinearObjective& as_bilinear() const { return std::get<BilinearObjective>(kind_); }
    const BlackBoxObjective& as_black_box() const { return std::get<BlackBoxObjective>(kind_); }

    /// For linear objectives, the vector c with f(x, p) = <c, x>; nullopt for black boxes.
    std::optional<Vector> linear_coefficients(const SpherePoint& p) const;

private:
    using Kind = std::variant<InnerObjective, BilinearObjective, BlackBoxObjective>;
    explicit Objective(Kind k) : kind_(std::move(k)) {}

    Kind kind_;
};

/// |det Q| / prod_i |row_i|, in [0, 1]; zero for a zero row.
double hadamard_ratio(const Matrix& q);

/// f(x, p). Throws DimensionError on length mismatch and Error on a
/// non-finite black-box value.
double eval(const Objective& f, std::span<const double> x, const SpherePoint& p);

/// Does f(x, -p) = -f(x, p) hold? Linear objectives answer true outright;
/// black boxes are probed at `count` random (x, p) with |x| <= 2.
bool antipodality_check(const Objective& f, int n, std::uint64_t seed, int count);

} // namespace antipodal
