#include <doctest.h>

#include "../common/support.hpp"

using namespace liecomp;
using namespace liecomp::testing;

TEST_CASE("classify examples") {
    const auto j = classify(symplectic_gram<Rational>(4));
    CHECK(j.alternating);
    CHECK(j.nondegenerate);
    CHECK(j.even_dim);

    FieldScope scope(FieldSpec::prime(2));
    const auto d = classify(identity<Zp>(2));
    CHECK(d.symmetric);
    CHECK_FALSE(d.alternating);
    CHECK(d.nondegenerate);
    CHECK(d.char_divides_m);
}

TEST_CASE("classify rejects bad shapes") {
    CHECK_THROWS_AS(classify(Mat<Rational>(2, 3)), FormError);
    CHECK_THROWS_AS(classify(identity<Rational>(1)), FormError);
    CHECK_THROWS_AS(symplectic_gram<Rational>(3), FormError);
}

TEST_CASE("discriminant") {
    CHECK(discriminant_is_square(classify(identity<Rational>(4))));
    CHECK_FALSE(discriminant_is_square(
        classify(diagonal_gram<Rational>({Rational(1), Rational(1), Rational(1), Rational(2)}))));
    FieldScope scope(FieldSpec::prime(5));
    CHECK_FALSE(discriminant_is_square(classify(diagonal_gram<Zp>({Zp(1), Zp(1), Zp(1), Zp(2)}))));
    CHECK(discriminant_is_square(classify(diagonal_gram<Zp>({Zp(1), Zp(1), Zp(1), Zp(4)}))));
}

TEST_CASE("symplectic basis reaches J exactly") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(11);
            for (int t = 0; t < 200; ++t) {
                const Index m = 2 * (1 + t % 3);
                const Mat<S> a = random_alternating_form<S>(m, rng);
                const auto r = symplectic_basis(a);
                INFO(f.name(), " trial ", t);
                REQUIRE(Mat<S>(r.transform.transpose() * a * r.transform) == symplectic_gram<S>(m));
                REQUIRE(r.normal_form == symplectic_gram<S>(m));
                REQUIRE(!is_zero(determinant<S>(r.transform)));
            }
        });
}

TEST_CASE("diagonalization is a congruence to a diagonal matrix") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(12);
            for (int t = 0; t < 200; ++t) {
                const Index m = 2 + t % 3;
                const Mat<S> a = random_symmetric_form<S>(m, rng);
                const auto r = diagonalize_symmetric(a);
                const Mat<S> d = r.transform.transpose() * a * r.transform;
                INFO(f.name(), " trial ", t);
                REQUIRE(d == r.normal_form);
                for (Index i = 0; i < m; ++i)
                    for (Index j = 0; j < m; ++j)
                        if (i != j) REQUIRE(is_zero(d(i, j)));
                REQUIRE(!is_zero(determinant<S>(r.transform)));
            }
        });
}

TEST_CASE("alternating forms are refused by diagonalization in characteristic 2") {
    FieldScope scope(FieldSpec::prime(2));
    CHECK_THROWS(diagonalize_symmetric(symplectic_gram<Zp>(2)));
}
