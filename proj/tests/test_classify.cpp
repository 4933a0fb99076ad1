#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "gradmat/classify.hpp"

using namespace gradmat;

TEST_CASE("composition enumeration") {
    auto c = enumerate_compositions(2, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0].parts == std::vector<std::int64_t>{0, 2});
    CHECK(c[1].parts == std::vector<std::int64_t>{1, 1});
    CHECK(c[2].parts == std::vector<std::int64_t>{2, 0});
    CHECK(enumerate_compositions(1, 5).size() == 1);
    CHECK(enumerate_compositions(4, 2).size() == 10);
    CHECK(binomial(5, 3) == 10);
    CHECK_THROWS_AS(enumerate_compositions(0, 2), invalid_argument);
    CHECK_THROWS_AS(enumerate_compositions(30, 30, 1000), resource_limit);
}

TEST_CASE("profiles of degree tuples") {
    CHECK(profile_of_tuple({GroupElement{{0}}, GroupElement{{1}}}, 2).parts ==
          std::vector<std::int64_t>{1, 1});
    CHECK(profile_of_tuple({GroupElement{{0}}, GroupElement{{0}}}, 2).parts ==
          std::vector<std::int64_t>{2, 0});
    CHECK(profile_of_tuple({GroupElement{{1}}, GroupElement{{1}}, GroupElement{{3}}}, 4).parts ==
          std::vector<std::int64_t>{0, 2, 0, 1});
    CHECK_THROWS_AS(profile_of_tuple({GroupElement{{5}}}, 4), invalid_argument);
}

TEST_CASE("divisor lattice") {
    auto lat = divisor_lattice(4, 2);
    CHECK(lat.d == std::vector<std::int64_t>{2, 4});
    CHECK(lat.d0.at(4) == std::vector<std::int64_t>{2});
    CHECK(lat.d0.at(2).empty());
    CHECK(divisor_lattice(2, 3).d == std::vector<std::int64_t>{2});
    CHECK(divisor_lattice(5, 10).d == std::vector<std::int64_t>{1, 5});
    // n is always a member
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t m = 1; m <= 6; ++m)
            CHECK(divisor_lattice(n, m).d.back() == n);
}

TEST_CASE("a_size and b_size") {
    CHECK(a_size(4, 2, 2) == 2);
    CHECK(a_size(4, 2, 4) == 10);
    CHECK(a_size(2, 2, 1) == 1);
    CHECK_THROWS_AS(a_size(4, 2, 1), invalid_argument);
    CHECK(b_size(4, 2, 4) == 8);
    CHECK(b_size(4, 2, 2) == 2);
    CHECK(b_size(2, 3, 2) == 4);
    CHECK(b_size(2, 2, 2) == 2);
    CHECK(b_size(2, 2, 1) == 1);
}

TEST_CASE("counting formula instances") {
    CHECK(count_good_formula(2, 2) == 2);
    CHECK(count_good_formula(2, 3) == 2);
    CHECK(count_good_formula(4, 2) == 3);
}

TEST_CASE("orbit oracle") {
    auto oc = count_good_orbits(2, 2);
    CHECK(oc.count == 2);
    REQUIRE(oc.representatives.size() == 2);
    CHECK(oc.representatives[0].parts == std::vector<std::int64_t>{0, 2});
    CHECK(oc.representatives[1].parts == std::vector<std::int64_t>{1, 1});
    CHECK(count_good_orbits(4, 2).count == 3);
    CHECK(count_good_orbits(1, 9).count == 1);
}

TEST_CASE("formula agrees with the oracle on a grid") {
    for (std::int64_t n = 1; n <= 10; ++n)
        for (std::int64_t m = 1; m <= 6; ++m)
            CHECK(count_good_formula(n, m) == count_good_orbits(n, m).count);
}

TEST_CASE("the B_d partition the compositions") {
    for (std::int64_t n = 1; n <= 10; ++n)
        for (std::int64_t m = 1; m <= 6; ++m) {
            auto lat = divisor_lattice(n, m);
            BigInt total = 0;
            for (auto d : lat.d) {
                BigInt b = b_size(n, m, d);
                CHECK(b % d == 0);
                total += b;
            }
            CHECK(total == binomial(m + n - 1, n - 1));
        }
}

TEST_CASE("orbit-length histogram matches |B_d|/d") {
    for (std::int64_t n : {2, 4, 6}) {
        for (std::int64_t m : {2, 3, 4}) {
            auto oc = count_good_orbits(n, m);
            auto lat = divisor_lattice(n, m);
            for (auto d : lat.d) {
                BigInt expect = b_size(n, m, d) / d;
                auto it = oc.by_orbit_length.find(d);
                BigInt got = it == oc.by_orbit_length.end() ? BigInt(0) : it->second;
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("intersections of the A_d collapse to the gcd") {
    // enumerate A_d as composition sets and compare
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t m = 1; m <= 5; ++m) {
            auto lat = divisor_lattice(n, m);
            auto all = enumerate_compositions(n, m);
            auto fixed_by = [&](std::int64_t d) {
                std::set<std::vector<std::int64_t>> s;
                for (const auto& c : all) {
                    bool ok = true;
                    for (std::int64_t i = 0; i < n && ok; ++i)
                        if (c.parts[static_cast<std::size_t>(i)] !=
                            c.parts[static_cast<std::size_t>((i + d) % n)])
                            ok = false;
                    if (ok) s.insert(c.parts);
                }
                return s;
            };
            for (auto d1 : lat.d)
                for (auto d2 : lat.d) {
                    auto a1 = fixed_by(d1), a2 = fixed_by(d2);
                    std::set<std::vector<std::int64_t>> both;
                    std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(),
                                          std::inserter(both, both.begin()));
                    CHECK(both == fixed_by(std::gcd(d1, d2)));
                }
        }
}

TEST_CASE("prime-power closed form") {
    CHECK(count_prime_power(2, 1, 2) == 2);
    CHECK(count_prime_power(3, 1, 3) == 4);
    CHECK(count_prime_power(2, 2, 2) == 3);
    CHECK_THROWS_AS(count_prime_power(4, 1, 2), invalid_argument);
    for (std::int64_t p : {2, 3})
        for (std::int64_t r = 1; r <= 3; ++r) {
            std::int64_t n = 1;
            for (std::int64_t i = 0; i < r; ++i) n *= p;
            for (std::int64_t m = 1; m <= 6; ++m)
                CHECK(count_prime_power(p, r, m) == count_good_formula(n, m));
        }
}

TEST_CASE("minimal rotation canonical form") {
    CHECK(minimal_rotation({2, 0, 1}) == std::vector<std::int64_t>{0, 1, 2});
    CHECK(minimal_rotation({1, 1}) == std::vector<std::int64_t>{1, 1});
    CHECK(minimal_rotation({3}) == std::vector<std::int64_t>{3});
}
