#include "doctest.h"

#include <algorithm>

#include "eqschub/partition.hpp"

using namespace eqschub;

TEST_CASE("partition parsing, printing, and validation") {
    CHECK(partition::parse("4,2,1").parts() == std::vector<int>{4, 2, 1});
    CHECK(partition::parse("0").empty());
    CHECK(partition::parse("").empty());
    CHECK(partition::parse("3,3,0").parts() == std::vector<int>{3, 3});
    CHECK(partition({4, 2, 1}).str() == "4,2,1");
    CHECK(partition({}).str() == "0");
    CHECK(partition({4, 2, 1}).bracket() == "[4,2,1]");
    CHECK(partition({}).bracket() == "[]");
    CHECK_THROWS_AS(partition({1, 2}), usage_error);
    CHECK_THROWS_AS(partition({2, -1}), usage_error);
    CHECK_THROWS_AS(partition::parse("1,2"), usage_error);
    CHECK_THROWS_AS(partition::parse("a"), usage_error);
}

TEST_CASE("weight, length, parts, and containment") {
    const partition lam({4, 2, 1});
    CHECK(lam.weight() == 7);
    CHECK(lam.length() == 3);
    CHECK(lam.part(1) == 4);
    CHECK(lam.part(3) == 1);
    CHECK(lam.part(4) == 0);
    CHECK(partition({2, 1}).contains(partition({1, 1})));
    CHECK(!partition({2, 1}).contains(partition({1, 1, 1})));
    CHECK(lam.fits(3, 4));
    CHECK(!lam.fits(2, 4));
    CHECK(!lam.fits(3, 3));
}

TEST_CASE("conjugation transposes the diagram") {
    CHECK(partition({4, 2, 1}).conjugate() == partition({3, 2, 1, 1}));
    CHECK(partition({}).conjugate() == partition({}));
    CHECK(partition({1, 1, 1}).conjugate() == partition({3}));
    for (const partition& lam :
         {partition({5, 3, 3, 1}), partition({2, 2}), partition({6}), partition({})})
        CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("canonical order sorts by weight, then reverse-lexicographically") {
    const std::vector<partition> got = enumerate_weight_at_most(2, 3);
    const std::vector<partition> want = {partition({}),     partition({1}), partition({2}),
                                         partition({1, 1}), partition({3}), partition({2, 1})};
    CHECK(got == want);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(partition({2}) < partition({1, 1}));
    CHECK(partition({1}) < partition({2}));
}

TEST_CASE("rectangle enumeration matches the binomial count") {
    const grassmann_shape g24(2, 4);
    const std::vector<partition> rect = enumerate_rectangle(g24);
    CHECK(rect.size() == 6);
    CHECK(rect == std::vector<partition>{partition({}), partition({1}), partition({2}),
                                         partition({1, 1}), partition({2, 1}), partition({2, 2})});
    CHECK(enumerate_rectangle(grassmann_shape(2, 5)).size() == 10);
    CHECK(enumerate_rectangle(grassmann_shape(3, 6)).size() == 20);
    CHECK(enumerate_rectangle(grassmann_shape(1, 2)).size() == 2);
    for (const partition& lam : rect) CHECK(g24.holds(lam));
}

TEST_CASE("shape validation and accessors") {
    CHECK_THROWS_AS(grassmann_shape(0, 2), usage_error);
    CHECK_THROWS_AS(grassmann_shape(2, 2), usage_error);
    CHECK_THROWS_AS(grassmann_shape(3, 2), usage_error);
    const grassmann_shape g(2, 5);
    CHECK(g.cols() == 3);
    CHECK(g.str() == "Gr(2,5)");
    CHECK(g.grade().q_grade == 5);
    CHECK(!g.holds(partition({4})));
    CHECK(g.holds(partition({3, 3})));
    CHECK(!g.holds(partition({1, 1, 1})));
}

TEST_CASE("one-box additions respect the bounding box") {
    auto got = add_one_box(partition({2, 1}), 2, 2);
    CHECK(got == std::vector<partition>{partition({2, 2})});
    got = add_one_box(partition({1}), 2, 2);
    CHECK(got == std::vector<partition>{partition({2}), partition({1, 1})});
    got = add_one_box(partition({}), 3, 3);
    CHECK(got == std::vector<partition>{partition({1})});
    got = add_one_box(partition({2, 2}), 2, 2);
    CHECK(got.empty());
    // uncapped columns used by the factorial rule
    got = add_one_box(partition({2, 1}), 2, 100);
    CHECK(got == std::vector<partition>{partition({3, 1}), partition({2, 2})});
}

TEST_CASE("rim removal defines the quantum term exactly at full first row and length") {
    CHECK(rim_minus(partition({4, 2, 1}), grassmann_shape(3, 7)) == partition({1}));
    CHECK(rim_minus(partition({2, 1}), grassmann_shape(2, 4)) == partition({}));
    CHECK(rim_minus(partition({2, 2}), grassmann_shape(2, 4)) == partition({1}));
    CHECK(!rim_minus(partition({2}), grassmann_shape(2, 4)).has_value());
    CHECK(!rim_minus(partition({1, 1}), grassmann_shape(2, 4)).has_value());
    CHECK(!rim_minus(partition({}), grassmann_shape(1, 2)).has_value());
    CHECK(rim_minus(partition({1}), grassmann_shape(1, 2)) == partition({}));
}

TEST_CASE("bounded enumeration lists exactly the contained partitions") {
    for (const auto& [rows, weight] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 6}}) {
        const auto all = enumerate_weight_at_most(rows, weight);
        for (const partition& lam : all) {
            CHECK(lam.length() <= rows);
            CHECK(lam.weight() <= weight);
        }
        // no duplicates
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(!(all[i - 1] == all[i]));
    }
    CHECK(enumerate_weight_at_most(3, 6).size() == 23);
}
