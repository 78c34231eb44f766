#include "pinnacle/errors.hpp"
#include "pinnacle/orderings.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pinnacle;

TEST_CASE("admissibility") {
    CHECK(is_admissible_pinnacle_set(PinnacleProblem(7, {7, 5, 3})));
    CHECK(is_admissible_pinnacle_set(PinnacleProblem(4, {})));
    CHECK_FALSE(is_admissible_pinnacle_set(PinnacleProblem(5, {4, 3})));
    CHECK_FALSE(is_admissible_pinnacle_set(PinnacleProblem(5, {2})));
    CHECK_FALSE(is_admissible_pinnacle_set(PinnacleProblem(9, {9, 7, 4, 3})));
    CHECK(is_admissible_pinnacle_set(PinnacleProblem(9, {9, 7, 3})));
}

TEST_CASE("ceiling profiles") {
    CHECK(maximal_dyck_type(PinnacleProblem(7, {7, 5, 3})).heights() == std::vector<int>{0, 0, 0});
    CHECK(maximal_dyck_type(PinnacleProblem(8, {8, 6, 5})).heights() == std::vector<int>{0, 1, 2});
    CHECK(maximal_dyck_type(PinnacleProblem(8, {8, 6, 5})).dyck_path().to_string() == "UUUDDD");
    CHECK(maximal_dyck_type(PinnacleProblem(7, {7, 5, 3})).dyck_path().to_string() == "UDUDUD");
    CHECK_THROWS_AS(maximal_dyck_type(PinnacleProblem(5, {})), std::domain_error);
    CHECK_THROWS_AS(maximal_dyck_type(PinnacleProblem(5, {4, 3})), std::domain_error);
    CHECK_THROWS_AS(CeilingProfile({1}), std::invalid_argument);
    CHECK_THROWS_AS(CeilingProfile({0, 2}), std::invalid_argument);
    CHECK(all_ceiling_profiles(3).size() == 5);
    CHECK(all_ceiling_profiles(6).size() == 132);
}

TEST_CASE("ordering counts") {
    CHECK(order_count(PinnacleProblem(7, {7, 5, 3})) == 4);
    CHECK(order_count(PinnacleProblem(8, {8, 6, 5})) == 6);
    CHECK(order_count(PinnacleProblem(3, {3})) == 1);
    CHECK(order_count_via_motzkin(PinnacleProblem(7, {7, 5, 3})) == 4);
    CHECK(order_count_under(CeilingProfile({0, 1, 2})) == 6);
    CHECK(order_count_under(CeilingProfile({0})) == 1);
    CHECK_THROWS_AS(order_count(PinnacleProblem(5, {})), std::domain_error);
    CHECK_THROWS_AS(order_count(PinnacleProblem(5, {4, 3})), std::domain_error);
}

TEST_CASE("single orderings") {
    const PinnacleProblem p(8, {8, 6, 5});
    CHECK(is_admissible_ordering(Permutation{2, 3, 1}, p));
    CHECK(is_maximally_admissible(p));
    const PinnacleProblem q(7, {7, 5, 3});
    CHECK_FALSE(is_maximally_admissible(q));
    CHECK(is_admissible_ordering(Permutation{1, 2, 3}, q));
    CHECK_FALSE(is_admissible_ordering(Permutation{2, 1, 3}, q));
    CHECK_THROWS_AS(is_admissible_ordering(Permutation{2, 1}, q), std::invalid_argument);
}

TEST_CASE("alpha") {
    const std::vector<long> expected{1, 1, 2, 3, 6, 10, 21, 38};
    for (int k = 1; k <= 8; ++k)
        CHECK(alpha(k) == expected[static_cast<std::size_t>(k - 1)]);
    for (int k = 1; k <= 5; ++k)
        CHECK(alpha(k, AlphaMode::Oracle) == alpha(k, AlphaMode::Ceiling));
    CHECK_THROWS_AS(alpha(0), std::invalid_argument);
}
