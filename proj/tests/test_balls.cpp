#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pomset/balls.hpp"
#include "pomset/error.hpp"

using namespace pomset;

namespace {

Ideal ideal(const Space& sp, std::vector<int> counts) { return Ideal::of(sp.pomset(), Mset(std::move(counts), sp.height())); }

std::uint64_t count_sphere(const Space& sp, const Ideal& i) {
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < sp.size(); ++x)
        if (ideal_generated(sp.pomset(), sp.support(sp.at(x))) == i) ++n;
    return n;
}

}  // namespace

TEST_CASE("radius-1 ball in Z_5^2 under the antichain") {
    const Space sp(5, Pomset::antichain(2, 2), {1, 1});
    CHECK(radius_ball_size(sp, 1) == 5);
    std::vector<Vector> members;
    const BallSpec ball{sp.zero(), 1};
    for (std::uint64_t x = 0; x < sp.size(); ++x)
        if (ball.contains(sp, sp.at(x))) members.push_back(sp.at(x));
    CHECK(members == std::vector<Vector>{{0, 0}, {0, 1}, {0, 4}, {1, 0}, {4, 0}});
    CHECK(ball.size(sp) == 5);
    CHECK(radius_ball_size(sp, 0) == 1);
    CHECK(radius_ball_size(sp, 4) == 25);
    CHECK_THROWS_AS(radius_ball_size(sp, 5), InvalidInput);
    CHECK_THROWS_AS(radius_ball_size(sp, -1), InvalidInput);
}

TEST_CASE("I-ball sizes") {
    const Space sp(6, Pomset::antichain(2, 3), {2, 1});
    CHECK(ideal_ball_size(sp, ideal(sp, {1, 3})) == 54);
    CHECK(ideal_ball_size(sp, ideal(sp, {2, 2})) == 125);
    CHECK(ideal_ball_size(sp, ideal(sp, {0, 0})) == 1);
    CHECK(ideal_ball_size(sp, ideal(sp, {3, 3})) == 216);
    CHECK(in_ideal_ball(sp, {2, 1, 0}, {3, 0, 0}, Mset({2, 2}, 3)));
    CHECK(in_ideal_ball(sp, {2, 1, 0}, {0, 3, 0}, Mset({2, 2}, 3)));
    CHECK(in_ideal_ball(sp, {2, 1, 0}, {3, 3, 0}, Mset({2, 2}, 3)));
    CHECK_FALSE(in_ideal_ball(sp, {2, 1, 0}, {3, 3, 0}, Mset({1, 3}, 3)));
    const Space other(5, Pomset::antichain(2, 2), {2, 1});
    CHECK_THROWS_AS(ideal_ball_size(sp, ideal(other, {1, 1})), ShapeError);
}

TEST_CASE("even-m spheres at full count of a maximal block") {
    for (int k : {1, 2, 3}) {
        const Space sp(6, Pomset::antichain(1, 3), {k});
        const Ideal full = ideal(sp, {3});
        const std::uint64_t expected = checked_pow(6, k) - checked_pow(5, k);
        CHECK(ideal_sphere_size(sp, full) == expected);
        CHECK(count_sphere(sp, full) == expected);
    }
    // k = 2 and k = 3 give 11 and 91.
    CHECK(ideal_sphere_size(Space(6, Pomset::antichain(1, 3), {2}), ideal(Space(6, Pomset::antichain(1, 3), {2}), {3})) == 11);
    const Space k3(6, Pomset::antichain(1, 3), {3});
    CHECK(ideal_sphere_size(k3, ideal(k3, {3})) == 91);
}

TEST_CASE("spheres by enumeration, odd and even moduli") {
    const std::vector<std::pair<int, int>> vee = {{0, 1}, {0, 2}};
    const std::vector<Space> spaces = {
        Space(5, Pomset(3, 2, vee), {1, 1, 1}),
        Space(4, Pomset(3, 2, vee), {1, 2, 1}),
        Space(6, Pomset::chain(2, 3), {2, 1}),
        Space(7, Pomset::antichain(2, 3), {1, 2}),
    };
    for (const Space& sp : spaces) {
        std::uint64_t sum = 0;
        for (const Ideal& i : all_ideals(sp.pomset())) {
            CHECK(ideal_sphere_size(sp, i) == count_sphere(sp, i));
            sum += ideal_sphere_size(sp, i);
        }
        CHECK(sum == sp.size());
    }
    const Space sp(5, Pomset::antichain(1, 2), {1});
    CHECK(ideal_sphere_size(sp, ideal(sp, {0})) == 1);
}

TEST_CASE("enumerated balls are sorted and translate") {
    const Space sp(6, Pomset::antichain(2, 3), {2, 1});
    const Ideal i = ideal(sp, {1, 3});
    const auto at_zero = enumerate_ideal_ball(sp, sp.zero(), i);
    CHECK(at_zero.size() == 54);
    CHECK(std::is_sorted(at_zero.begin(), at_zero.end()));
    const Vector c = {3, 1, 2};
    auto shifted = enumerate_ideal_ball(sp, c, i);
    CHECK(std::is_sorted(shifted.begin(), shifted.end()));
    std::vector<Vector> expected;
    for (const Vector& v : at_zero) expected.push_back(sp.add(c, v));
    std::sort(expected.begin(), expected.end());
    CHECK(shifted == expected);
    CHECK_THROWS_AS(enumerate_ideal_ball(sp, sp.zero(), i, 10), BudgetExceeded);
}

TEST_CASE("partition centers") {
    const Space sp(6, Pomset::antichain(2, 3), {2, 1});
    const auto centers = partition_centers(sp, ideal(sp, {1, 3}));
    CHECK(centers == std::vector<Vector>{{0, 0, 0}, {0, 3, 0}, {3, 0, 0}, {3, 3, 0}});
    CHECK(partition_center_count(sp, ideal(sp, {1, 3})) == 4);
    CHECK(partition_center_count(sp, ideal(sp, {0, 0})) == 216);
    CHECK_THROWS_AS(partition_centers(sp, ideal(sp, {2, 0})), PartitionImpossible);
    CHECK_THROWS_AS(partition_center_count(sp, ideal(sp, {2, 3})), PartitionImpossible);

    const Space z9(9, Pomset::antichain(2, 4), {1, 1});
    const auto d = partition_centers(z9, ideal(z9, {4, 1}));
    CHECK(d == std::vector<Vector>{{0, 0}, {0, 3}, {0, 6}});
}
