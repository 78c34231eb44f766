#include "pinnacle/counting.hpp"
#include "pinnacle/generation.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace pinnacle;

namespace {

std::vector<Permutation> drain(PermutationGenerator gen) {
    std::vector<Permutation> out;
    while (auto p = gen.next())
        out.push_back(*p);
    return out;
}

std::set<Permutation> all_outputs(const LatticePath& m, int n) {
    std::set<Permutation> out;
    for (const auto& seq : all_choice_sequences(m))
        out.insert(construct_from_choices(m, seq, n));
    return out;
}

}  // namespace

TEST_CASE("choice counts") {
    CHECK(choice_count(Step::Up, 3) == 1);
    CHECK(choice_count(Step::Horizontal, 0) == 2);
    CHECK(choice_count(Step::Horizontal, 2) == 6);
    CHECK(choice_count(Step::Down, 1) == 2);
    CHECK(choice_count(Step::Down, 3) == 12);
    CHECK(std::holds_alternative<std::monostate>(choice_at(Step::Up, 0, 0)));
    CHECK(choice_at(Step::Horizontal, 1, 3) == StepChoice{AttachChoice{1, Side::Right}});
    CHECK(choice_at(Step::Down, 1, 0) == StepChoice{JoinChoice{1, 0}});
    CHECK(choice_at(Step::Down, 1, 1) == StepChoice{JoinChoice{0, 1}});
    CHECK_THROWS_AS(choice_at(Step::Down, 1, 2), std::out_of_range);
}

TEST_CASE("construction from choices") {
    CHECK(construct_from_choices(LatticePath{}, {}, 1) == Permutation{1});
    CHECK(all_outputs(LatticePath::parse("HH"), 3) ==
          std::set<Permutation>{Permutation{1, 2, 3}, Permutation{3, 2, 1}, Permutation{2, 1, 3}, Permutation{3, 1, 2}});
    CHECK(all_outputs(LatticePath::parse("UD"), 3) == std::set<Permutation>{Permutation{1, 3, 2}, Permutation{2, 3, 1}});
    const auto m = LatticePath::parse("UHD");
    CHECK(all_choice_sequences(m).size() == 8);
    for (const auto& seq : all_choice_sequences(m))
        CHECK(motzkin_type(cyclic_completion(construct_from_choices(m, seq, 4))) == m);
}

TEST_CASE("invalid constructions") {
    const auto ud = LatticePath::parse("UD");
    CHECK_THROWS_AS(construct_from_choices(ud, {std::monostate{}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(construct_from_choices(ud, {std::monostate{}, JoinChoice{0, 0}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(construct_from_choices(ud, {std::monostate{}, JoinChoice{0, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(construct_from_choices(ud, {AttachChoice{0, Side::Left}, JoinChoice{0, 1}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_from_choices(LatticePath::parse("UU"), {std::monostate{}, std::monostate{}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_from_choices(ud, {std::monostate{}, JoinChoice{0, 1}}, 4), std::invalid_argument);
}

TEST_CASE("generation streams") {
    CHECK(drain(generate_all(PinnacleProblem(4, {4}))).size() == 12);
    CHECK(drain(generate_all(PinnacleProblem(5, {4, 3}))).empty());
    CHECK(drain(generate_all(PinnacleProblem(3, {}))).size() == 4);
    const auto s3 = drain(generate_all(PinnacleProblem(3, {3})));
    CHECK(s3 == std::vector<Permutation>{Permutation{1, 3, 2}, Permutation{2, 3, 1}});
    CHECK(drain(generate_all(PinnacleProblem(1, {}))) == std::vector<Permutation>{Permutation{1}});
}

TEST_CASE("generation is a prefix-sampleable stream") {
    const PinnacleProblem prob(40, {39, 30, 22, 10, 4});
    PermutationGenerator gen(prob);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.next();
        REQUIRE(p.has_value());
        CHECK(pinnacle_set(*p) == prob.as_set());
    }
}

TEST_CASE("listing admissible orderings") {
    CHECK(list_admissible_orderings(PinnacleProblem(7, {7, 5, 3})) ==
          std::vector<Permutation>{Permutation{1, 2, 3}, Permutation{1, 3, 2}, Permutation{2, 3, 1},
                                   Permutation{3, 2, 1}});
    CHECK(list_admissible_orderings(PinnacleProblem(8, {8, 6, 5})).size() == 6);
    CHECK(list_admissible_orderings(PinnacleProblem(5, {4})) == std::vector<Permutation>{Permutation{1}});
    CHECK_THROWS_AS(list_admissible_orderings(PinnacleProblem(5, {4, 3})), std::domain_error);
}
