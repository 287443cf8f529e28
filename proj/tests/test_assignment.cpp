#include <cmath>
#include <random>

#include "doctest.h"
#include "mtmc/assignment.hpp"
#include "oracles.hpp"

using namespace mtmc;

namespace {

WeightMatrix from_grid(const oracle::Grid& g) {
    WeightMatrix w(g.size(), g.empty() ? 0 : g[0].size());
    for (std::size_t r = 0; r < w.rows(); ++r) {
        for (std::size_t c = 0; c < w.cols(); ++c) w(r, c) = g[r][c];
    }
    return w;
}

// Weights on a 1/16 grid so every partial sum is exact.
oracle::Grid random_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double forbidden_rate) {
    std::uniform_int_distribution<int> value(-160, 160);
    std::bernoulli_distribution forbid(forbidden_rate);
    oracle::Grid g(rows, std::vector<double>(cols));
    for (auto& row : g) {
        for (double& x : row) x = forbid(rng) ? -kInf : value(rng) / 16.0;
    }
    return g;
}

}  // namespace

TEST_CASE("small matchings") {
    CHECK(solve_max_weight_matching(from_grid({{2.0}})) == Matching{{0, 0}});

    const auto w = from_grid({{2, 1}, {1, 2}});
    const auto m = solve_max_weight_matching(w);
    CHECK(m == Matching{{0, 0}, {1, 1}});
    CHECK(matching_weight(w, m) == 4.0);

    CHECK(solve_max_weight_matching(from_grid({{-kInf, -kInf}, {-kInf, -kInf}})).empty());
    CHECK(solve_max_weight_matching(from_grid({{-1, 3}})) == Matching{{0, 1}});
    CHECK(solve_max_weight_matching(WeightMatrix{}).empty());
    CHECK(solve_max_weight_matching(WeightMatrix(3, 0)).empty());
}

TEST_CASE("negative and zero edges are left unmatched") {
    CHECK(solve_max_weight_matching(from_grid({{-0.5, -2}, {-1, -3}})).empty());
    // A zero-weight edge ties with leaving the row free; the empty list is
    // lexicographically smaller.
    CHECK(solve_max_weight_matching(from_grid({{0.0}})).empty());
}

TEST_CASE("ties resolve to the lexicographically smallest pair list") {
    CHECK(solve_max_weight_matching(from_grid({{1, 1}, {1, 1}})) == Matching{{0, 0}, {1, 1}});
    CHECK(solve_max_weight_matching(from_grid({{1, 1, 1}})) == Matching{{0, 0}});
    CHECK(solve_max_weight_matching(from_grid({{0, 5}, {5, 0}})) == Matching{{0, 1}, {1, 0}});
}

TEST_CASE("rejects +inf and NaN") {
    CHECK_THROWS_AS(solve_max_weight_matching(from_grid({{kInf}})), ValidationError);
    CHECK_THROWS_AS(solve_max_weight_matching(from_grid({{1.0, NAN}})), ValidationError);
}

TEST_CASE("agrees with brute force on random rectangular matrices") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_grid(rng, size(rng), size(rng), 0.2);
        const auto w = from_grid(g);
        const auto expected = oracle::brute_force_matching(g);
        const auto got = solve_max_weight_matching(w);
        INFO("trial " << trial);
        CHECK(matching_weight(w, got) == expected.weight);
        CHECK(got == Matching(expected.pairs.begin(), expected.pairs.end()));
    }
}

TEST_CASE("dense ties are handled") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> value(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        oracle::Grid g(5, std::vector<double>(5));
        for (auto& row : g) {
            for (double& x : row) x = value(rng);
        }
        const auto expected = oracle::brute_force_matching(g);
        const auto got = solve_max_weight_matching(from_grid(g));
        CHECK(got == Matching(expected.pairs.begin(), expected.pairs.end()));
    }
}

TEST_CASE("continuous weights reach the optimum") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> value(-3.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        oracle::Grid g(6, std::vector<double>(7));
        for (auto& row : g) {
            for (double& x : row) x = value(rng);
        }
        const auto expected = oracle::brute_force_matching(g);
        const auto w = from_grid(g);
        CHECK(matching_weight(w, solve_max_weight_matching(w)) == doctest::Approx(expected.weight).epsilon(1e-12));
    }
}
