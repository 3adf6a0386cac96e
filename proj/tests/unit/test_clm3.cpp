#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ehvi/clm3.hpp"
#include "ehvi/grid.hpp"
#include "ehvi/wfg.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace ehvi;
using ehvi::testing::random_instance;
using ehvi::testing::rel_close;

TEST_CASE("Staircase single insert is one box") {
    Staircase s(4, 5, 1, 1.5, 2, 0.5);
    const double delta = s.insert(1, 2);
    const double expected = (psi(4, 1, 1.5) - psi(1, 1, 1.5)) * (psi(5, 2, 0.5) - psi(2, 2, 0.5));
    CHECK(delta == doctest::Approx(expected).epsilon(1e-15));
    CHECK(s.running_integral() == delta);
    CHECK(s.insert(1, 2) == 0.0);
    CHECK(s.insert(2, 3) == 0.0);
    CHECK(s.steps().size() == 1);
    CHECK_THROWS_AS(s.insert(4, 1), ReferenceBoundError);
    CHECK_THROWS_AS(s.insert(1, 6), ReferenceBoundError);
}

TEST_CASE("Staircase removes covered steps") {
    Staircase s(10, 10, 0, 1, 0, 1);
    s.insert(1, 5);
    s.insert(3, 3);
    s.insert(5, 1);
    CHECK(s.steps().size() == 3);
    s.insert(1, 1);
    CHECK(s.steps().size() == 1);
    CHECK(s.insertions() == 4);
    CHECK(s.removals() == 3);
    CHECK(s.map_operations() == 7);
    const double whole = (psi(10, 0, 1) - psi(1, 0, 1)) * (psi(10, 0, 1) - psi(1, 0, 1));
    CHECK(rel_close(s.running_integral(), whole, 1e-13));
}

TEST_CASE("ehvi_clm3 special cases") {
    const GaussianBelief std3({0, 0, 0}, {1, 1, 1});
    CHECK(ehvi_clm3(validate_front(ProblemFrame({0, 0, 0}), {}), std3).value ==
          doctest::Approx(std::pow(2.0 * std::numbers::pi, -1.5)).epsilon(1e-14));

    const GaussianBelief belief({0.5, 1, -0.5}, {1, 0.6, 2});
    const ObjectiveVector a{0, 0.5, -1}, r{2, 2, 2};
    const Front one = validate_front(ProblemFrame(r), {a});
    double product = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
        product *= psi(r[j], belief.mean()[j], belief.stddev()[j]) - psi(a[j], belief.mean()[j], belief.stddev()[j]);
    }
    CHECK(std::abs(full_region_integral(r, belief) - ehvi_clm3(one, belief).value - product) < 1e-12);

    CHECK_THROWS_AS(ehvi_clm3(validate_front(ProblemFrame({0, 0}), {}), GaussianBelief({0, 0}, {1, 1})),
                    UnsupportedDimensionError);
}

TEST_CASE("ehvi_clm3 trace") {
    const Front front = validate_front(ProblemFrame({4, 4, 4}), {{1, 2, 3}, {2, 1, 3}, {3, 3, 1}});
    SweepTrace trace;
    const EhviResult res = ehvi_clm3(front, GaussianBelief({2, 2, 2}, {1, 1, 1}), &trace);
    CHECK(trace.levels == std::vector<double>{1, 3});
    CHECK(trace.slices.size() == 2);
    CHECK(trace.running.size() == 2);
    CHECK(trace.running[1] >= trace.running[0]);
    CHECK(res.work == trace.map_operations);
    CHECK(res.work <= 6);
}

TEST_CASE("ehvi_clm3 matches grid and wfg") {
    for (std::size_t n : {1, 2, 10, 50, 100}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto inst = random_instance(3, n, seed);
            const EhviResult c = ehvi_clm3(inst.front, inst.belief);
            CHECK(rel_close(c.value, ehvi_grid(inst.front, inst.belief).value, 1e-10));
            CHECK(rel_close(c.value, ehvi_wfg(inst.front, inst.belief).value, 1e-10));
            CHECK(c.work <= 2 * n);
        }
    }
}

TEST_CASE("ehvi_clm3 with shared third coordinates") {
    const Front front =
        validate_front(ProblemFrame({5, 5, 5}), {{1, 4, 2}, {2, 3, 2}, {3, 2, 2}, {4, 1, 2}, {0.5, 4.5, 3}, {2, 2, 4}});
    const GaussianBelief belief({2, 2, 2.5}, {1.2, 0.8, 1});
    CHECK(rel_close(ehvi_clm3(front, belief).value, ehvi_grid(front, belief).value, 1e-12));
}

TEST_CASE("property: staircase incremental integral") {
    const auto rep = ehvi::testing::staircase_properties(1000);
    INFO(rep.first_failure);
    CHECK(rep.ok());
}
