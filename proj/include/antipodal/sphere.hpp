#pragma once

#include "antipodal/linalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace antipodal {

/// Point of the unit sphere S^n ⊂ R^{n+1}.
///
/// The first n coordinates are the normal ("head") of the hyperplane the
/// point indexes; the last coordinate is its offset. Construction rejects
/// vectors whose norm differs from 1 by more than kUnitTolerance.
class SpherePoint {
public:
    static constexpr double kUnitTolerance = 1e-12;

    /// Takes coords as-is; throws InvalidArgument unless | |coords| - 1 | <= 1e-12.
    explicit SpherePoint(Vector coords);

    /// Rescales coords onto the sphere. Throws InvalidArgument for a zero vector.
    static SpherePoint normalized(Vector coords);

    static SpherePoint north_pole(int n);
    static SpherePoint south_pole(int n);

    int n() const { return static_cast<int>(coords_.size()) - 1; }
    std::span<const double> coords() const { return coords_; }
    std::span<const double> head() const { return {coords_.data(), coords_.size() - 1}; }
    double last() const { return coords_.back(); }

    bool operator==(const SpherePoint&) const = default;

private:
    struct Unchecked {};
    SpherePoint(Vector coords, Unchecked) : coords_(std::move(coords)) {}
    friend SpherePoint antipode(const SpherePoint& p);

    Vector coords_;
};

/// -p. Exact: negation never rounds, so antipode(antipode(p)) == p bitwise.
SpherePoint antipode(const SpherePoint& p);

enum class Sense { Geq, Leq };

/// {x : <normal, x> >= offset} (Geq) or {x : <normal, x> <= offset} (Leq).
struct Halfspace {
    Vector normal;
    double offset = 0.0;
    Sense sense = Sense::Geq;

    /// Same set rewritten in Geq form.
    Halfspace normalized() const;
    bool contains(std::span<const double> x, double tol = 0.0) const;

    bool operator==(const Halfspace&) const = default;
};

struct HalfspacePair {
    Halfspace plus;  // <u, x> >= u_{n+1}
    Halfspace minus; // <u, x> <= u_{n+1}
};

HalfspacePair halfspaces(const SpherePoint& p);

/// Open neighbourhood {u : u_{n+1} > 1 - epsilon} of the north pole.
struct EpsilonCap {
    double epsilon;
};

bool in_cap(const SpherePoint& p, EpsilonCap cap);

/// (cos theta, sin theta) on S^1.
SpherePoint circle_point(double theta);

/// Gaussian-direction samples on S^n, deterministic for a fixed seed.
std::vector<SpherePoint> sample_sphere(int n, int count, std::uint64_t seed);

/// Spherical Fibonacci lattice with `count` points on S^2.
std::vector<SpherePoint> fibonacci_sphere(int count);

/// Orthonormal basis of the tangent space at p (n vectors of length n+1),
/// Gram-Schmidt of the coordinate axes against p.
std::vector<Vector> tangent_basis(const SpherePoint& p);

/// Point at geodesic distance `angle` from p along the unit tangent `direction`.
SpherePoint geodesic_step(const SpherePoint& p, std::span<const double> direction, double angle);

} // namespace antipodal
