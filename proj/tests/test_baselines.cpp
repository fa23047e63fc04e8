#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hnnsa/annealing.hpp"
#include "hnnsa/baselines.hpp"
#include "hnnsa/builtin.hpp"

using namespace hnnsa;

namespace {

// Every segment reversal, built explicitly and measured from scratch.
bool is_two_opt_optimal(const DistanceMatrix& m, const Tour& t) {
    const double base = tour_length(m, t);
    const auto n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<std::size_t> order(t.begin(), t.end());
            std::reverse(order.begin() + a, order.begin() + b + 1);
            if (tour_length(m, Tour(order)) < base - 1e-9) return false;
        }
    }
    return true;
}

// Every way to cut three edges and glue the two inner pieces back, measured
// from scratch.
bool is_three_opt_optimal(const DistanceMatrix& m, const Tour& t) {
    const double base = tour_length(m, t);
    const auto n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::vector<std::size_t> head(t.begin(), t.begin() + i + 1);
                const std::vector<std::size_t> s1(t.begin() + i + 1, t.begin() + j + 1);
                const std::vector<std::size_t> s2(t.begin() + j + 1, t.begin() + k + 1);
                const std::vector<std::size_t> tail(t.begin() + k + 1, t.end());
                for (int mask = 0; mask < 8; ++mask) {
                    auto x = s1, y = s2;
                    if (mask & 1) std::reverse(x.begin(), x.end());
                    if (mask & 2) std::reverse(y.begin(), y.end());
                    for (bool swap : {false, true}) {
                        std::vector<std::size_t> order = head;
                        const auto& p = swap ? y : x;
                        const auto& q = swap ? x : y;
                        order.insert(order.end(), p.begin(), p.end());
                        order.insert(order.end(), q.begin(), q.end());
                        order.insert(order.end(), tail.begin(), tail.end());
                        if (tour_length(m, Tour(order)) < base - 1e-9) return false;
                    }
                }
            }
    return true;
}

}  // namespace

TEST_CASE("greedy_nearest_neighbor") {
    SUBCASE("4-city matrix from A") {
        const auto m = distance_matrix(*builtin_instance("matrix4"));
        const auto t = greedy_nearest_neighbor(m, 0);
        CHECK(t == Tour({0, 2, 1, 3}));
        CHECK(tour_length(m, t) == 71.0);
    }
    SUBCASE("three cities") {
        const auto m = distance_matrix(generate_random_instance(3, 9, 1.0));
        for (std::size_t s = 0; s < 3; ++s) CHECK(tour_length(m, greedy_nearest_neighbor(m, s)) == doctest::Approx(tour_length(m, Tour::identity(3))));
    }
    SUBCASE("ties go to the lowest index") {
        std::vector<double> d(25, 1.0);
        for (int x = 0; x < 5; ++x) d[x * 5 + x] = 0.0;
        CHECK(greedy_nearest_neighbor(DistanceMatrix(5, d), 2) == Tour({2, 0, 1, 3, 4}));
    }
    SUBCASE("start out of range") {
        CHECK_THROWS_AS(greedy_nearest_neighbor(distance_matrix(*builtin_instance("matrix4")), 4), Error);
    }
}

TEST_CASE("two_opt") {
    SUBCASE("uncrosses the unit square") {
        Instance sq("sq", {{"a", 0, 0}, {"b", 1, 0}, {"c", 0, 1}, {"d", 1, 1}});
        const auto m = distance_matrix(sq);
        const Tour crossing({0, 3, 1, 2});
        CHECK(tour_length(m, crossing) == doctest::Approx(2 + 2 * std::sqrt(2.0)));
        CHECK(tour_length(m, two_opt(m, crossing)) == doctest::Approx(4.0));
    }
    SUBCASE("fixed point") {
        const auto m = distance_matrix(generate_random_instance(12, 2, 1.0));
        const auto once = two_opt(m, Tour::identity(12));
        CHECK(two_opt(m, once) == once);
    }
}

TEST_CASE("three_opt") {
    SUBCASE("beats 2-opt somewhere at n=8") {
        bool found = false;
        for (std::uint64_t seed = 0; seed < 500 && !found; ++seed) {
            const auto m = distance_matrix(generate_random_instance(8, seed, 1.0));
            Rng rng(seed);
            const auto t2 = two_opt(m, random_tour(8, rng));
            const auto t3 = three_opt(m, t2);
            if (tour_length(m, t3) < tour_length(m, t2) - 1e-9) {
                found = true;
                CHECK(is_two_opt_optimal(m, t2));
                CHECK(tour_length(m, t3) >= brute_force_optimum(m).length - 1e-9);
            }
        }
        CHECK(found);
    }
    SUBCASE("fixed point") {
        const auto m = distance_matrix(generate_random_instance(10, 4, 1.0));
        const auto once = three_opt(m, Tour::identity(10));
        CHECK(three_opt(m, once) == once);
    }
    SUBCASE("small tours fall back to 2-opt") {
        const auto m = distance_matrix(*builtin_instance("matrix4"));
        CHECK(three_opt(m, Tour({0, 1, 3, 2})) == two_opt(m, Tour({0, 1, 3, 2})));
    }
    SUBCASE("against the optimum on 9-city instances") {
        int equal = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto m = distance_matrix(generate_random_instance(9, 1000 + seed, 1.0));
            const double opt = brute_force_optimum(m).length;
            const auto t = three_opt(m, greedy_nearest_neighbor(m, 0));
            CHECK(tour_length(m, t) >= opt - 1e-9);
            CHECK(is_three_opt_optimal(m, t));
            equal += tour_length(m, t) <= opt + 1e-9;
        }
        MESSAGE("3-opt reached the optimum on " << equal << "/50 instances");
    }
}

TEST_CASE("local search sandwich on random 10-city instances") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto m = distance_matrix(generate_random_instance(10, seed, 1.0));
        const double opt = brute_force_optimum(m).length;
        const auto greedy = greedy_nearest_neighbor(m, 0);
        const auto t2 = two_opt(m, greedy);
        CHECK(tour_length(m, t2) >= opt - 1e-9);
        CHECK(tour_length(m, t2) <= tour_length(m, greedy) + 1e-12);
        CHECK(is_two_opt_optimal(m, t2));
    }
}
