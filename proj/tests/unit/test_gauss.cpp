#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ehvi/gauss.hpp"
#include "../support/oracles.hpp"
#include "../support/properties.hpp"

using namespace ehvi;
using ehvi::testing::phi_integral_quadrature;

TEST_CASE("std_normal_pdf") {
    CHECK(std_normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(std_normal_pdf(40.0) < 1e-300);
    CHECK(std_normal_pdf(-40.0) < 1e-300);
    for (double x : {0.1, 0.7, 1.9, 3.3, 7.5}) CHECK(std_normal_pdf(x) == std_normal_pdf(-x));
}

TEST_CASE("std_normal_cdf") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    // 0.84134474606854294858... (40-digit mpmath reference)
    CHECK(std::abs(std_normal_cdf(1.0) - 0.8413447460685429) <= 1e-14 * 0.8413447460685429);
    CHECK(std_normal_cdf(-kInf) == 0.0);
    CHECK(std_normal_cdf(kInf) == 1.0);
    // Lower tail keeps relative precision: Phi(-8) = 6.22096057427178e-16
    CHECK(std::abs(std_normal_cdf(-8.0) / 6.22096057427178e-16 - 1.0) < 1e-13);
    double prev = 0.0;
    for (double x = -9.0; x <= 9.0; x += 0.01) {
        const double v = std_normal_cdf(x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("psi") {
    CHECK(psi(0.0, 0.0, 1.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(psi(-kInf, 5.0, 2.0) == 0.0);
    // Oracle: adaptive quadrature of Phi over (-inf, 1] (1.0833154705876863 to 40 digits).
    const double quad = phi_integral_quadrature(-kInf, 1.0, 0.0, 1.0, 1e-12);
    CHECK(std::abs(quad - 1.0833154705876863) < 1e-10);
    CHECK(std::abs(psi(1.0, 0.0, 1.0) - quad) < 1e-10);
    CHECK(std::abs(psi(10.0, 0.0, 1.0) - 10.0) < 1e-12);
    CHECK_THROWS_AS(psi(1.0, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(psi(1.0, 0.0, -1.0), ParameterError);
    // Scaling: psi(a, mu, sigma) = sigma * psi((a - mu) / sigma, 0, 1)
    CHECK(psi(3.0, 1.0, 2.0) == doctest::Approx(2.0 * psi(1.0, 0.0, 1.0)).epsilon(1e-15));
}

TEST_CASE("box_integral") {
    const GaussianBelief std2({0, 0}, {1, 1});
    // Oracle: tensor-product quadrature of Phi over the unit box.
    const double side = phi_integral_quadrature(0.0, 1.0, 0.0, 1.0, 1e-13);
    const double expected = side * side;
    CHECK(std::abs(expected - 0.46836666344571007) < 1e-9);
    CHECK(std::abs(box_integral(HyperBox{{0, 0}, {1, 1}}, std2) - expected) < 1e-9);

    const GaussianBelief far({-100, -100}, {1, 1});
    CHECK(std::abs(box_integral(HyperBox{{5, 5}, {6, 7}}, far) - 2.0) < 1e-12);
    CHECK(box_integral(HyperBox{{1, 0}, {1, 5}}, std2) == 0.0);
    CHECK(box_integral(HyperBox{{-kInf, -kInf}, {0, 0}}, std2) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)));

    CHECK_THROWS_AS(box_integral(HyperBox{{0, 0, 0}, {1, 1, 1}}, std2), DimensionError);
    CHECK_THROWS_AS(box_integral(HyperBox{{0, 0}, {1}}, std2), DimensionError);
    CHECK_THROWS_AS(box_integral(HyperBox{{2, 0}, {1, 1}}, std2), ParameterError);
    CHECK_THROWS_AS(box_integral(HyperBox{{0, 0}, {kInf, 1}}, std2), ParameterError);
}

TEST_CASE("full_region_integral") {
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(full_region_integral(ObjectiveVector{0, 0}, GaussianBelief({0, 0}, {1, 1})) ==
          doctest::Approx(1.0 / two_pi).epsilon(1e-15));
    CHECK(full_region_integral(ObjectiveVector{0, 0, 0}, GaussianBelief({0, 0, 0}, {1, 1, 1})) ==
          doctest::Approx(std::pow(two_pi, -1.5)).epsilon(1e-15));
    // Saturation: psi(t) -> t, so the integral approaches t^2.
    const double t = 50.0;
    CHECK(full_region_integral(ObjectiveVector{t, t}, GaussianBelief({0, 0}, {1, 1})) == doctest::Approx(t * t));
    const ProblemFrame frame({0, 0}, Orientation::maximize);
    CHECK(full_region_integral(frame, to_internal(frame, GaussianBelief({0, 0}, {1, 1}))) ==
          doctest::Approx(1.0 / two_pi));
}

TEST_CASE("belief validation") {
    CHECK_THROWS_AS(GaussianBelief({0, 0}, {1}), DimensionError);
    CHECK_THROWS_AS(GaussianBelief({0, 0}, {1, 0}), ParameterError);
    CHECK_THROWS_AS(GaussianBelief({0, kInf}, {1, 1}), ParameterError);
    const ProblemFrame maxi({0, 0}, Orientation::maximize);
    const GaussianBelief b = to_internal(maxi, GaussianBelief({10, 2}, {2.5, 1}));
    CHECK(b.mean() == ObjectiveVector{-10, -2});
    CHECK(b.stddev() == ObjectiveVector{2.5, 1});
}

TEST_CASE("property: psi monotone with derivative Phi") {
    const auto rep = ehvi::testing::psi_properties(1000);
    INFO(rep.first_failure);
    CHECK(rep.ok());
}

TEST_CASE("property: box integral additivity, monotonicity, volume bound") {
    const auto rep = ehvi::testing::box_integral_properties(1000);
    INFO(rep.first_failure);
    CHECK(rep.ok());
}
