#include <ldist/hyperbolic.hpp>

#include <doctest.h>

#include "helpers.hpp"

using namespace ldist;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2M1 = std::sqrt(2.0) - 1.0;
} // namespace

TEST_SUITE("hyperbolic") {

TEST_CASE("disk distance: closed form against the density integral") {
    CHECK(hyperbolic_distance_disk(Complex(0.0), Complex(0.0)) == 0.0);
    CHECK(hyperbolic_distance_disk(Complex(0.0), Complex(0.5)) ==
          doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
    CHECK(hyperbolic_distance_disk(Complex(0.0), Complex(0.5)) ==
          doctest::Approx(hyperbolic_distance_disk(Complex(0.0), Complex(-0.5))));

    // radial integral of 1/(1-t^2) is the independent oracle
    const double oracle = testutil::simpson_oracle(
        [](double t) { return 1.0 / (1.0 - t * t); }, 0.0, 0.5, 1e-13);
    CHECK(hyperbolic_distance_disk(Complex(0.0), Complex(0.5)) ==
          doctest::Approx(oracle).epsilon(1e-10));

    CHECK_THROWS_AS(hyperbolic_distance_disk(Complex(1.0), Complex(0.0)), std::domain_error);
}

TEST_CASE("distance is a Moebius invariant of the disk") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        // disk automorphism z -> (z - a)/(1 - conj(a) z)
        const Complex a = testutil::random_disk_point(rng, 0.8);
        const MoebiusMap aut(1.0, -a, -std::conj(a), 1.0);
        const Complex z1 = testutil::random_disk_point(rng, 0.9);
        const Complex z2 = testutil::random_disk_point(rng, 0.9);
        CHECK(hyperbolic_distance_disk(aut(z1).value(), aut(z2).value()) ==
              doctest::Approx(hyperbolic_distance_disk(z1, z2)).epsilon(1e-10));
    }
}

TEST_CASE("symmetric disk geodesic: carrier, endpoints, orthogonality") {
    const Geodesic g = symmetric_geodesic_disk(0.8);
    CHECK(g.carrier.center().real() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(g.carrier.radius() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(std::abs(g.endpoints[0] - Complex(0.8, 0.6)) < 1e-14);
    CHECK(std::abs(g.endpoints[1] - Complex(0.8, -0.6)) < 1e-14);
    CHECK(std::norm(g.carrier.center()) - g.carrier.radius() * g.carrier.radius() ==
          doctest::Approx(1.0).epsilon(1e-14));

    // through sqrt(2)-1: same carrier as x^2+y^2-2*sqrt(2)*x+1 = 0
    const Geodesic g0 = symmetric_geodesic_disk(std::sqrt(0.5));
    CHECK(std::abs(g0.carrier.signed_value(Complex(kSqrt2M1, 0.0))) < 1e-14);
    CHECK(g0.carrier.center().real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(symmetric_geodesic_disk(0.0), std::domain_error);
    CHECK_THROWS_AS(symmetric_geodesic_disk(1.0), std::domain_error);
}

TEST_CASE("half-plane geodesic: carrier and real endpoints") {
    const Geodesic s = symmetric_geodesic_half_plane(0.8);
    CHECK(s.carrier.center().real() == doctest::Approx(-1.25).epsilon(1e-14));
    CHECK(s.carrier.radius() == doctest::Approx(0.75).epsilon(1e-14));
    // real roots (-1 +- sqrt(1-alpha^2))/alpha
    CHECK(s.endpoints[0].real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(s.endpoints[1].real() == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("the half-plane map carries disk geodesics to half-plane geodesics") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unif(0.05, 0.999);
    const MoebiusMap g = MoebiusMap::disk_to_half_plane();
    for (int i = 0; i < 50; ++i) {
        const double alpha = unif(rng);
        const GeneralizedCircle img = image_circle(g, symmetric_geodesic_disk(alpha).carrier);
        CHECK(approx_equal(img, symmetric_geodesic_half_plane(alpha).carrier, 1e-10));
    }
}

TEST_CASE("alpha and p correspondence") {
    CHECK(alpha_from_p(0.5) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(p_from_alpha(std::sqrt(0.5)) == doctest::Approx(kSqrt2M1).epsilon(1e-14));
    CHECK(p_from_alpha(alpha_from_p(0.73)) == doctest::Approx(0.73).epsilon(1e-14));
    CHECK_THROWS_AS(alpha_from_p(1.0), std::domain_error);
    CHECK_THROWS_AS(p_from_alpha(-0.1), std::domain_error);

    // strictly increasing mutually inverse pair on a 1000-point grid
    double prev_a = 0.0, prev_p = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double x = i / 1000.0;
        const double a = alpha_from_p(x), pp = p_from_alpha(x);
        CHECK(a > prev_a);
        CHECK(pp > prev_p);
        CHECK(p_from_alpha(a) == doctest::Approx(x).epsilon(1e-12));
        CHECK(alpha_from_p(pp) == doctest::Approx(x).epsilon(1e-12));
        prev_a = a;
        prev_p = pp;
    }
}

TEST_CASE("side_of: the pole sits on the geodesic through it") {
    const HalfPlaneRegion omega = omega_region(0.8);
    CHECK(side_of(omega, Complex(0.0)) == Side::inside);
    CHECK(side_of(omega, Complex(0.5)) == Side::boundary); // p_from_alpha(0.8)
    CHECK(side_of(omega, Complex(0.95)) == Side::outside);
    CHECK_THROWS_AS(side_of(omega, Complex(1.3)), std::domain_error);

    const HalfPlaneRegion omega1 = omega1_region(0.8);
    CHECK(side_of(omega1, Complex(0.0, 1.0)) == Side::inside);
    CHECK(side_of(omega1, Complex(-0.8, 0.6)) == Side::boundary); // g(p) lies on sigma
    CHECK_THROWS_AS(side_of(omega1, Complex(0.0, -1.0)), std::domain_error);

    const HalfPlaneRegion omega0 = omega0_region();
    CHECK(side_of(omega0, Complex(0.0)) == Side::outside);
    CHECK(side_of(omega0, Complex(0.9, 0.0)) == Side::inside);
}

TEST_CASE("rotation sector: formula, limits, and intersection argument") {
    CHECK(rotation_sector_max_angle(0.9) ==
          doctest::Approx(0.7798270604695975).epsilon(1e-12));
    CHECK(rotation_sector_max_angle(1.0 - 1e-12) == doctest::Approx(kPi / 4.0).epsilon(1e-9));
    CHECK(rotation_sector_max_angle(kSqrt2M1) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK_THROWS_AS(rotation_sector_max_angle(0.3), std::domain_error);

    for (double p : {0.5, 0.7, 0.9, 0.99}) {
        const auto [upper, lower] = circle_geodesic_intersection(p);
        CHECK(rotation_sector_max_angle(p) ==
              doctest::Approx(std::arg(upper)).epsilon(1e-12));
        CHECK(std::abs(std::abs(upper) - p) < 1e-12);
        CHECK(std::abs(std::abs(lower) - p) < 1e-12);
        // membership identity (1+p^2)^2 + (6p^2-p^4-1) = 8p^2
        const double x = upper.real(), y = upper.imag();
        CHECK(std::abs(x * x + y * y - p * p) < 1e-12);
        CHECK(std::abs(x * x + y * y - 2.0 * std::sqrt(2.0) * x + 1.0) < 1e-12);
    }

    // tangency at the left end of the admissible range
    const auto [a, b] = circle_geodesic_intersection(kSqrt2M1);
    CHECK(std::abs(a.imag()) < 1e-7);
    CHECK(a.real() == doctest::Approx((1.0 + kSqrt2M1 * kSqrt2M1) / (2.0 * std::sqrt(2.0))));
}

TEST_CASE("geodesic from boundary points agrees with the symmetric builder") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.05, 0.995);
    for (int i = 0; i < 30; ++i) {
        const double alpha = unif(rng);
        const double s = std::sqrt(1.0 - alpha * alpha);
        const Geodesic g = geodesic_from_boundary_points(Complex(alpha, s), Complex(alpha, -s));
        CHECK(approx_equal(g.carrier, symmetric_geodesic_disk(alpha).carrier, 1e-10));
    }
    // antipodal endpoints give a diameter line
    const Geodesic d = geodesic_from_boundary_points(Complex(0.0, 1.0), Complex(0.0, -1.0));
    CHECK(d.carrier.is_line());
    CHECK(std::abs(d.carrier.signed_value(Complex(0.0, 0.3))) < 1e-14);

    CHECK_THROWS_AS(geodesic_from_boundary_points(Complex(1.0, 0.0), Complex(1.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(geodesic_from_boundary_points(Complex(0.5, 0.0), Complex(0.0, 1.0)),
                    std::domain_error);
}

TEST_CASE("every symmetric carrier is orthogonal to the unit circle") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unif(0.01, 0.999);
    for (int i = 0; i < 100; ++i) {
        const Geodesic g = symmetric_geodesic_disk(unif(rng));
        CHECK(std::norm(g.carrier.center()) - g.carrier.radius() * g.carrier.radius() ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

} // TEST_SUITE
