#include <catch2/catch_amalgamated.hpp>

#include "gradmat/algebra.hpp"

using namespace gradmat;

namespace {

// k[X]/(X^2 - alpha) over the given field
CommutativeAlgebra quadratic(const Field& k, std::int64_t alpha) {
    Scalar o = Scalar::one(k), z = Scalar::zero(k), a = Scalar::make(k, alpha);
    return CommutativeAlgebra(k, {{{o, z}, {z, o}}, {{z, o}, {a, z}}}, {o, z});
}

} // namespace

TEST_CASE("valid structure constants are accepted") {
    Field q = Field::rationals();
    auto l = quadratic(q, 2);
    CHECK(l.dim() == 2);
    auto x = l.basis_element(1);
    auto x2 = l.multiply(x, x);
    CHECK(x2[0] == Scalar::make(q, 2));
    CHECK(x2[1].is_zero());
}

TEST_CASE("non-commutative tables are rejected with the offending pair") {
    Field q = Field::rationals();
    Scalar o = Scalar::one(q), z = Scalar::zero(q);
    try {
        CommutativeAlgebra bad(q, {{{o, z}, {z, o}}, {{o, z}, {o, z}}}, {o, z});
        FAIL("expected invalid_algebra");
    } catch (const invalid_algebra& e) {
        CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    }
}

TEST_CASE("bad unit is rejected") {
    Field q = Field::rationals();
    Scalar o = Scalar::one(q), z = Scalar::zero(q);
    CHECK_THROWS_AS(
        CommutativeAlgebra(q, {{{o, z}, {z, o}}, {{z, o}, {z, z}}}, {z, o}),
        invalid_algebra);
}

TEST_CASE("non-associative tables are rejected") {
    Field q = Field::rationals();
    Scalar o = Scalar::one(q), z = Scalar::zero(q);
    // b1*b1 = b0 but b1*b0 = 0 breaks associativity via the unit axiom or
    // the triple check; either way construction must fail
    CHECK_THROWS_AS(
        CommutativeAlgebra(q, {{{o, z}, {z, z}}, {{z, z}, {o, z}}}, {o, z}),
        invalid_algebra);
}

TEST_CASE("ragged tables are rejected") {
    Field q = Field::rationals();
    Scalar o = Scalar::one(q), z = Scalar::zero(q);
    CHECK_THROWS_AS(CommutativeAlgebra(q, {{{o, z}}}, {o, z}), invalid_algebra);
    CHECK_THROWS_AS(CommutativeAlgebra(q, {}, {}), invalid_algebra);
}

TEST_CASE("left multiplication is the regular representation") {
    Field f = Field::prime(5);
    auto l = quadratic(f, 3);
    auto x = l.basis_element(1);
    Matrix lx = l.left_multiplication(x);
    // columns: x*1 = x, x*x = 3
    CHECK(lx == Matrix::lit(f, {{0, 3}, {1, 0}}));
    // representation property: L_{ab} = L_a L_b for basis elements
    for (std::int64_t i = 0; i < 2; ++i)
        for (std::int64_t j = 0; j < 2; ++j)
            CHECK(l.left_multiplication(
                      l.multiply(l.basis_element(i), l.basis_element(j))) ==
                  l.left_multiplication(l.basis_element(i)) *
                      l.left_multiplication(l.basis_element(j)));
}
