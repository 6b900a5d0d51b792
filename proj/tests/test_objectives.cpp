#include "antipodal/error.hpp"
#include "antipodal/objectives.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace antipodal;
using namespace antipodal::testing;

TEST_CASE("inner objective")
{
    CHECK(eval(Objective::inner(), std::vector<double>{0.7}, circle_point(0.0)) == 0.7);
    Rng rng(1);
    for (int k = 0; k < 100; ++k)
        CHECK(eval(Objective::inner(), gaussian_vector(rng, 3), SpherePoint::north_pole(3)) == 0.0);
    CHECK_THROWS_AS(eval(Objective::inner(), std::vector<double>{1.0, 2.0}, circle_point(0.0)), DimensionError);
}

TEST_CASE("bilinear with the identity matches inner")
{
    const Objective id = Objective::bilinear(Matrix::identity(3));
    Rng rng(2);
    const auto pts = sample_sphere(3, 1000, 2);
    for (const SpherePoint& p : pts) {
        const Vector x = gaussian_vector(rng, 3);
        CHECK(eval(id, x, p) == doctest::Approx(eval(Objective::inner(), x, p)).epsilon(1e-14));
    }
}

TEST_CASE("bilinear scaling and linear coefficients")
{
    Rng rng(3);
    Matrix cq = Matrix::identity(2);
    cq(0, 0) = cq(1, 1) = 2.5;
    const Objective scaledq = Objective::bilinear(cq);
    for (const SpherePoint& p : sample_sphere(2, 200, 3)) {
        const Vector x = gaussian_vector(rng, 2);
        CHECK(eval(scaledq, x, p) == doctest::Approx(2.5 * eval(Objective::inner(), x, p)).epsilon(1e-14));
    }

    Matrix q(2);
    q(0, 0) = 1.0;
    q(0, 1) = 2.0;
    q(1, 0) = -1.0;
    q(1, 1) = 0.5;
    const SpherePoint p = SpherePoint::normalized({0.3, -0.4, 0.2});
    const auto c = Objective::bilinear(q).linear_coefficients(p);
    REQUIRE(c);
    const Vector x{0.7, -1.1};
    CHECK(dot(*c, x) == doctest::Approx(eval(Objective::bilinear(q), x, p)).epsilon(1e-14));
}

TEST_CASE("singular matrices are rejected")
{
    Matrix q(2);
    q(0, 0) = 1.0;
    q(0, 1) = 2.0;
    q(1, 0) = 2.0;
    q(1, 1) = 4.0;
    CHECK(hadamard_ratio(q) < 1e-12);
    CHECK_THROWS_AS(Objective::bilinear(q), InvalidArgument);
    CHECK_THROWS_AS(Objective::bilinear(Matrix(2)), InvalidArgument);
    CHECK(hadamard_ratio(Matrix::identity(4)) == doctest::Approx(1.0));

    Matrix tiny = Matrix::identity(2);
    tiny(0, 0) = tiny(1, 1) = 1e-6; // row scaling must not matter
    CHECK(hadamard_ratio(tiny) == doctest::Approx(1.0));
}

TEST_CASE("linear objectives are exactly odd in u")
{
    Rng rng(4);
    const Objective bil = Objective::bilinear(random_conditioned(rng, 3, 10.0));
    for (const SpherePoint& p : sample_sphere(3, 1000, 4)) {
        const Vector x = gaussian_vector(rng, 3);
        CHECK(eval(Objective::inner(), x, antipode(p)) == -eval(Objective::inner(), x, p));
        CHECK(eval(bil, x, antipode(p)) == -eval(bil, x, p));
    }
    CHECK(antipodality_check(bil, 3, 0, 10));
    CHECK(antipodality_check(Objective::inner(), 3, 0, 10));
}

TEST_CASE("black-box antipodality is checked by sampling")
{
    const auto odd = Objective::black_box(
        [](std::span<const double> x, const SpherePoint& p) { return p.coords()[0] * x[0] * x[0] * x[0]; }, true);
    const auto even = Objective::black_box(
        [](std::span<const double> x, const SpherePoint& p) { return p.coords()[0] * p.coords()[0] * x[0]; }, true);
    CHECK(antipodality_check(odd, 2, 7, 1000));
    CHECK_FALSE(antipodality_check(even, 2, 7, 1000));
}

TEST_CASE("black-box values must be finite")
{
    const auto bad = Objective::black_box([](std::span<const double>, const SpherePoint&) { return NAN; }, true);
    CHECK_THROWS_AS(eval(bad, std::vector<double>{0.0}, circle_point(0.0)), Error);
    CHECK_FALSE(bad.linear_coefficients(circle_point(0.0)).has_value());
}
