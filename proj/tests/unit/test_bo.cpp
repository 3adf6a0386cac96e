#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ehvi/bo.hpp"
#include "ehvi/wfg.hpp"

using namespace ehvi;

TEST_CASE("select_argmax breaks ties by index") {
    const std::vector<double> v{0.0, 2.0, 1.0, 2.0};
    CHECK(select_argmax(v) == 1);
    const std::vector<double> zeros(5, 0.0);
    CHECK(select_argmax(zeros) == 0);
}

TEST_CASE("synthetic problems") {
    CHECK_THROWS_AS(synthetic_problem("nope"), ParameterError);
    CHECK_THROWS_AS(synthetic_problem("zdt2", 1), ParameterError);
    for (const auto& name : synthetic_problem_names()) {
        const ProblemInstance p = synthetic_problem(name, 32);
        CHECK(p.candidates.size() == 1024);
        CHECK(p.candidates.input_dimension() == 2);
        std::vector<ObjectiveVector> all = p.candidates.objective_values;
        CHECK(p.pareto_set == nondominated_filter(all));
        CHECK(p.reference_hypervolume == hypervolume(nondominated_filter(all), p.reference));
        CHECK(p.reference_hypervolume > 0.0);
    }
}

TEST_CASE("candidate_permutation") {
    const auto a = candidate_permutation(50, 3);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 50; ++i) CHECK(sorted[i] == i);
    CHECK(candidate_permutation(50, 3) == a);
    CHECK(candidate_permutation(50, 4) != a);
}

TEST_CASE("BoState single candidate and exhaustion") {
    const ProblemInstance p = synthetic_problem("zdt2", 2);
    BoState state(p);
    CHECK_THROWS_AS(state.step(), ParameterError);
    state.observe(0);
    state.observe(1);
    state.observe(2);
    CHECK(state.unexplored() == 1);
    const BoRunRecord& rec = state.step();
    CHECK(rec.candidate == 3);
    CHECK(state.unexplored() == 0);
    CHECK_THROWS_AS(state.step(), ExhaustedError);
}

TEST_CASE("acquisition is backend independent") {
    const ProblemInstance p = synthetic_problem("three_anchor", 10);
    const auto perm = candidate_permutation(p.candidates.size(), 1);
    BoState grid(p, Algorithm::grid), wfg(p, Algorithm::wfg), clm(p, Algorithm::clm3);
    for (std::size_t i = 0; i < 8; ++i) {
        grid.observe(perm[i]);
        wfg.observe(perm[i]);
        clm.observe(perm[i]);
    }
    for (int s = 0; s < 3; ++s) {
        std::vector<std::size_t> ig, iw, ic;
        const auto ag = grid.acquisition(ig), aw = wfg.acquisition(iw), ac = clm.acquisition(ic);
        CHECK(ig == iw);
        CHECK(ig == ic);
        for (std::size_t k = 0; k < ag.size(); ++k) {
            CHECK(ag[k] == doctest::Approx(aw[k]).epsilon(1e-10));
            CHECK(ag[k] == doctest::Approx(ac[k]).epsilon(1e-10));
        }
        const std::size_t cg = grid.step().candidate;
        CHECK(wfg.step().candidate == cg);
        CHECK(clm.step().candidate == cg);
    }
}

TEST_CASE("runs share their initial design and never lose hypervolume") {
    const ProblemInstance p = synthetic_problem("three_anchor", 12);
    const auto bo = run_bo(p, BoConfig{10, 5, 7, Algorithm::automatic});
    const auto rnd = run_random(p, 15, 7);
    REQUIRE(bo.size() == 15);
    REQUIRE(rnd.size() == 15);
    for (std::size_t i = 0; i < 10; ++i) CHECK(bo[i].candidate == rnd[i].candidate);
    for (std::size_t i = 1; i < bo.size(); ++i) {
        CHECK(bo[i].hypervolume >= bo[i - 1].hypervolume);
        CHECK(rnd[i].hypervolume >= rnd[i - 1].hypervolume);
    }
    CHECK(bo.back().hypervolume <= p.reference_hypervolume);
    std::vector<std::size_t> seen;
    for (const auto& r : bo) seen.push_back(r.candidate);
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

    const auto zero = run_bo(p, BoConfig{10, 0, 7, Algorithm::automatic});
    const auto same = run_random(p, 10, 7);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(zero[i].candidate == same[i].candidate);
        CHECK(zero[i].hypervolume == same[i].hypervolume);
    }
}
