#include <catch2/catch_amalgamated.hpp>

#include "gradmat/group.hpp"

using namespace gradmat;

TEST_CASE("construction and factors") {
    FiniteAbelianGroup g({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.rank() == 2);
    CHECK(FiniteAbelianGroup(std::vector<std::int64_t>{}).order() == 1);
    CHECK_THROWS_AS(FiniteAbelianGroup({0}), invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({2, -3}), invalid_argument);
}

TEST_CASE("element arithmetic") {
    auto g = FiniteAbelianGroup::cyclic(4);
    GroupElement a{{3}}, b{{2}};
    CHECK(g.combine(a, b) == GroupElement{{1}});
    CHECK(g.combine(a, b, true) == GroupElement{{1}});
    CHECK(g.inverse(a) == GroupElement{{1}});
    CHECK(g.reduce(GroupElement{{-1}}) == GroupElement{{3}});
    CHECK(g.identity().is_identity());
    CHECK_THROWS_AS(g.combine(a, GroupElement{{1, 1}}), invalid_argument);
}

TEST_CASE("enumeration is lexicographic with identity first") {
    FiniteAbelianGroup g({2, 2});
    auto e = g.elements();
    REQUIRE(e.size() == 4);
    CHECK(e[0] == g.identity());
    CHECK(e[1] == GroupElement{{0, 1}});
    CHECK(e[2] == GroupElement{{1, 0}});
    CHECK(e[3] == GroupElement{{1, 1}});
    for (std::int64_t i = 0; i < 4; ++i) {
        CHECK(g.index_of(e[static_cast<std::size_t>(i)]) == i);
        CHECK(g.element_at(i) == e[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("element orders") {
    FiniteAbelianGroup g({2, 4});
    CHECK(g.element_order(g.identity()) == 1);
    CHECK(g.element_order(GroupElement{{1, 0}}) == 2);
    CHECK(g.element_order(GroupElement{{0, 1}}) == 4);
    CHECK(g.element_order(GroupElement{{1, 2}}) == 2);
}

TEST_CASE("group axioms hold on all pairs for a sample group") {
    FiniteAbelianGroup g({2, 3});
    auto e = g.elements();
    for (const auto& a : e) {
        CHECK(g.combine(a, g.inverse(a)).is_identity());
        for (const auto& b : e) {
            CHECK(g.combine(a, b) == g.combine(b, a));
            CHECK(g.contains(g.combine(a, b)));
        }
    }
}
