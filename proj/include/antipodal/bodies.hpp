#pragma once

#include "antipodal/linalg.hpp"
#include "antipodal/sphere.hpp"

#include <variant>
#include <vector>

namespace antipodal {

/// Convex polytope given by a vertex list (its convex hull). Interior or
/// redundant points are allowed; exact duplicates within 1e-12 are dropped.
struct Polytope {
    std::vector<Vector> vertices;
};

/// Closed Euclidean ball.
struct Ball {
    Vector center;
    double radius;
};

/// A compact convex body in R^n.
class ConvexBody {
public:
    static constexpr double kDuplicateTolerance = 1e-12;

    /// Throws InvalidArgument on an empty list or ragged vertex lengths.
    static ConvexBody polytope(std::vector<Vector> vertices);
    /// Throws InvalidArgument unless radius > 0 and finite.
    static ConvexBody ball(Vector center, double radius);

    int dim() const { return dim_; }
    bool is_polytope() const { return std::holds_alternative<Polytope>(shape_); }
    bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
    const Polytope& as_polytope() const { return std::get<Polytope>(shape_); }
    const Ball& as_ball() const { return std::get<Ball>(shape_); }

    template <typename Visitor>
    decltype(auto) visit(Visitor&& v) const { return std::visit(std::forward<Visitor>(v), shape_); }

private:
    ConvexBody(std::variant<Polytope, Ball> shape, int dim) : shape_(std::move(shape)), dim_(dim) {}

    std::variant<Polytope, Ball> shape_;
    int dim_;
};

enum class Feasibility { Empty, NonEmpty };

struct FeasibilityReport {
    Feasibility status;
    double support_value; // max over A of <u, x>
    double margin;        // support_value - u_{n+1}
};

/// Upper bound on |x| over A, floored at 1e-9.
double norm_bound(const ConvexBody& a);

/// max over A of <u, x>.
double support_value(const ConvexBody& a, std::span<const double> u);

/// 1e-9 * (1 + |u_{n+1}| + norm_bound(A)).
double default_tolerance(const ConvexBody& a, const SpherePoint& p);

/// Is A ∩ H_p^+ nonempty? Empty iff support_value < u_{n+1} - tol.
/// Throws DimensionError if A.dim() != p.n().
FeasibilityReport feasibility(const ConvexBody& a, const SpherePoint& p, double tol);
FeasibilityReport feasibility(const ConvexBody& a, const SpherePoint& p);

/// Affine dimension of A (rank of v_j - v_1 under full-pivot elimination).
int interior_dimension(const ConvexBody& a);

/// Diameter of B ∩ H_p^+.
///
/// Throws InvalidArgument when the head of p is zero (the half-space is then
/// all of R^n or empty; callers handle that case) and InfeasibleError when
/// the intersection is empty.
double cap_diameter_ball(const Ball& b, const SpherePoint& p);

} // namespace antipodal
