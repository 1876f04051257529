#include <doctest.h>

#include <random>

#include "liecomp/linalg.hpp"

using namespace liecomp;

TEST_CASE("quadratic nonresidues") {
    CHECK(quadratic_nonresidue(3) == 2);
    CHECK(quadratic_nonresidue(5) == 2);
    CHECK(quadratic_nonresidue(7) == 3);
    CHECK_THROWS_AS(quadratic_nonresidue(2), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_nonresidue(9), std::invalid_argument);
}

TEST_CASE("nonresidue is not a square by enumeration") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const std::uint32_t r = quadratic_nonresidue(p);
        for (std::uint32_t x = 0; x < p; ++x) CHECK((x * x) % p != r);
    }
}

TEST_CASE("field parsing") {
    CHECK(parse_field("Q") == FieldSpec::rationals());
    CHECK(parse_field("7") == FieldSpec::prime(7));
    CHECK(parse_field("3^2") == FieldSpec::quadratic(3));
    CHECK(parse_field("9") == FieldSpec::quadratic(3));
    CHECK(parse_field("25") == FieldSpec::quadratic(5));
    CHECK(FieldSpec::quadratic(3).nonresidue == 2);
    CHECK(FieldSpec::quadratic(3).name() == "GF(3^2)");
    CHECK_THROWS(parse_field("4"));
    CHECK_THROWS(parse_field("6"));
    CHECK_THROWS(parse_field("2^2"));
    CHECK_THROWS(parse_field("x"));
}

TEST_CASE("arithmetic outside a scope is refused") {
    CHECK_THROWS_AS(Zp(3), std::logic_error);
    CHECK_NOTHROW(Zp(0));
}

TEST_CASE("GF(9) has x^2 = -1") {
    FieldScope scope(FieldSpec::quadratic(3));
    const Fp2 x = Fp2::from_residues(0, 1);
    CHECK(x * x == Fp2(-1));
    CHECK(FieldTraits<Fp2>::elements().size() == 9);
    CHECK(is_square(Fp2(2)));
    for (const Fp2& a : FieldTraits<Fp2>::elements()) {
        CHECK(FieldTraits<Fp2>::parse(to_string(a)) == a);
        if (!is_zero(a)) CHECK(a * inverse(a) == Fp2(1));
    }
}

TEST_CASE("squares and square roots") {
    {
        FieldScope scope(FieldSpec::prime(5));
        CHECK(is_square(Zp(4)));
        CHECK_FALSE(is_square(Zp(2)));
        const auto r = square_root(Zp(4));
        REQUIRE(r);
        CHECK(*r * *r == Zp(4));
    }
    {
        FieldScope scope(FieldSpec::prime(3));
        CHECK_FALSE(is_square(Zp(2)));
    }
    CHECK(is_square(Rational(9, 4)));
    CHECK_FALSE(is_square(Rational(2)));
    CHECK_FALSE(is_square(Rational(-1)));
}

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(3, -6)) == "-1/2");
    CHECK(FieldTraits<Rational>::parse("-3/2") == Rational(-3, 2));
    CHECK(FieldTraits<Rational>::parse("4/2") == Rational(2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(inverse(Rational(0)));
}

TEST_CASE("reduction mod p") {
    FieldScope scope(FieldSpec::prime(7));
    CHECK(*reduce_mod_p(Rational(1, 2)) == Zp(4));
    CHECK_FALSE(reduce_mod_p(Rational(1, 7)).has_value());
    CHECK(*reduce_mod_p(Rational(-3)) == Zp(4));
}

template <class S>
void check_field_axioms(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const S a = random_scalar<S>(rng), b = random_scalar<S>(rng), c = random_scalar<S>(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a - a == S(0));
        REQUIRE(a + (-a) == S(0));
        if (!is_zero(a)) {
            REQUIRE(a * inverse(a) == S(1));
            REQUIRE((b / a) * a == b);
        }
        REQUIRE(FieldTraits<S>::parse(to_string(a)) == a);
    }
}

TEST_CASE("field axioms on random scalars") {
    check_field_axioms<Rational>(300, 1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        FieldScope scope(FieldSpec::prime(p));
        check_field_axioms<Zp>(300, p);
    }
    for (std::uint32_t p : {3u, 5u, 7u}) {
        FieldScope scope(FieldSpec::quadratic(p));
        check_field_axioms<Fp2>(300, 100 + p);
    }
}
