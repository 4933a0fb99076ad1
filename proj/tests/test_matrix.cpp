#include <catch2/catch_amalgamated.hpp>

#include "gradmat/matrix.hpp"

using namespace gradmat;

TEST_CASE("field descriptors") {
    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("GF(7)").order() == 7);
    CHECK(Field::parse("GF(9)").characteristic() == 3);
    CHECK(Field::parse("GF(9)").degree() == 2);
    CHECK_THROWS_AS(Field::parse("GF(6)"), invalid_argument);
    CHECK_THROWS_AS(Field::parse("R"), invalid_argument);
    CHECK_THROWS_AS(Field::finite(4, 1), invalid_argument);
}

TEST_CASE("deterministic irreducible moduli") {
    // first monic irreducibles in lexicographic (c_0, ..., c_{d-1}) order
    CHECK(Field::finite(2, 2).modulus() == polygf::Poly{1, 1, 1}); // x^2+x+1
    CHECK(Field::finite(3, 2).modulus() == polygf::Poly{1, 0, 1}); // x^2+1
    CHECK(polygf::is_irreducible(Field::finite(2, 4).modulus(), 2));
}

TEST_CASE("rational scalars are normalized") {
    Field q = Field::rationals();
    Scalar a = Scalar::rational(BigRat(2, 4));
    Scalar b = Scalar::rational(BigRat(1, 2));
    CHECK(a == b);
    CHECK(a.to_string() == "1/2");
    CHECK((a + b).to_string() == "1");
    CHECK((a - b).is_zero());
    CHECK((a / b).is_one());
    CHECK(Scalar::parse(q, "-3/6") == Scalar::rational(BigRat(-1, 2)));
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    Scalar a = Scalar::make(f, 3), b = Scalar::make(f, 5);
    CHECK((a * b) == Scalar::make(f, 1));
    CHECK(a.inverse() == b);
    CHECK((-a) == Scalar::make(f, 4));
    CHECK(a.to_string() == "3 mod 7");
    CHECK(Scalar::parse(f, "10 mod 7") == a);
}

TEST_CASE("extension field arithmetic in GF(4)") {
    Field f = Field::finite(2, 2);
    Scalar w = Scalar::from_index(f, 2); // x
    Scalar w2 = w * w;                   // x^2 = x + 1
    CHECK(w2 == Scalar::from_coeffs(f, {1, 1}));
    CHECK((w * w2).is_one()); // x^3 = 1
    CHECK(w.inverse() == w2);
    CHECK(w.to_string() == "0,1 mod 2^2");
    CHECK(Scalar::parse(f, "0,1 mod 2^2") == w);
    // enumeration round-trip
    for (std::int64_t i = 0; i < 4; ++i) CHECK(Scalar::from_index(f, i).to_index() == i);
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar a = Scalar::make(Field::prime(3), 1);
    Scalar b = Scalar::make(Field::prime(5), 1);
    CHECK_THROWS_AS(a + b, invalid_argument);
}

TEST_CASE("matrix arithmetic") {
    Field q = Field::rationals();
    Matrix a = Matrix::lit(q, {{1, 2}, {3, 4}});
    Matrix b = Matrix::lit(q, {{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::lit(q, {{2, 1}, {4, 3}}));
    CHECK(a.transposed() == Matrix::lit(q, {{1, 3}, {2, 4}}));
    CHECK((a - a).is_zero());
    CHECK(Matrix::identity(q, 2) * a == a);
    CHECK_THROWS_AS(a * Matrix::identity(q, 3), invalid_argument);
}

TEST_CASE("rref, rank, solve, kernel, inverse") {
    Field q = Field::rationals();
    Matrix a = Matrix::lit(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);
    auto ker = kernel(a);
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker) {
        // A v = 0
        for (std::int64_t i = 0; i < 3; ++i) {
            Scalar acc = Scalar::zero(q);
            for (std::int64_t j = 0; j < 3; ++j) acc = acc + a.at(i, j) * v[static_cast<std::size_t>(j)];
            CHECK(acc.is_zero());
        }
    }
    Matrix inv_target = Matrix::lit(q, {{2, 1}, {1, 1}});
    CHECK(inverse(inv_target) * inv_target == Matrix::identity(q, 2));
    CHECK_FALSE(try_inverse(Matrix::lit(q, {{1, 2}, {2, 4}})).has_value());
    auto sol = solve(Matrix::lit(q, {{1, 1}, {1, -1}}), {Scalar::make(q, 2), Scalar::zero(q)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Scalar::one(q));
    CHECK((*sol)[1] == Scalar::one(q));
    CHECK_FALSE(solve(Matrix::lit(q, {{1, 1}, {2, 2}}),
                      {Scalar::one(q), Scalar::make(q, 3)}).has_value());
}

TEST_CASE("span solving distinguishes dependent bases from non-membership") {
    Field q = Field::rationals();
    Matrix e11 = Matrix::unit(q, 2, 0, 0), e22 = Matrix::unit(q, 2, 1, 1);
    Matrix target = Matrix::identity(q, 2);
    auto r = span_solve({e11, e22}, target);
    REQUIRE(r.status == SpanStatus::InSpan);
    CHECK(r.coords[0].is_one());
    CHECK(r.coords[1].is_one());
    CHECK(span_solve({e11, e22}, Matrix::unit(q, 2, 0, 1)).status == SpanStatus::NotInSpan);
    CHECK(span_solve({e11, e11.scaled(Scalar::make(q, 2))}, target).status ==
          SpanStatus::InvalidBasis);
}

TEST_CASE("product containment over a finite field") {
    Field f = Field::prime(3);
    Matrix e12 = Matrix::unit(f, 2, 0, 1), e21 = Matrix::unit(f, 2, 1, 0);
    Matrix e11 = Matrix::unit(f, 2, 0, 0), e22 = Matrix::unit(f, 2, 1, 1);
    CHECK(subspace_contains_products({e12, e21}, {e12, e21}, {e11, e22}));
    CHECK_FALSE(subspace_contains_products({e12, e21}, {e12, e21}, {e11}));
}
