#include <doctest.h>

#include <random>

#include "liecomp/linalg.hpp"
#include "liecomp/matrix_io.hpp"

using namespace liecomp;

namespace {

template <class S>
Mat<S> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = static_cast<Index>(rows.begin()->size());
    Mat<S> m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = S(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    {
        const auto r = rref<Rational>(from_rows<Rational>({{1, 2}, {2, 4}}));
        CHECK(r.rank == 1);
        CHECK(r.matrix.row(0) == from_rows<Rational>({{1, 2}}));
    }
    {
        FieldScope scope(FieldSpec::prime(5));
        const auto r = rref<Zp>(identity<Zp>(3));
        CHECK(r.rank == 3);
        CHECK(r.pivots == std::vector<Index>{0, 1, 2});
    }
    {
        FieldScope scope(FieldSpec::prime(2));
        const auto r = rref<Zp>(from_rows<Zp>({{0, 1}, {1, 0}}));
        CHECK(r.rank == 2);
        CHECK(r.matrix == identity<Zp>(2));
    }
}

TEST_CASE("kernel examples") {
    {
        FieldScope scope(FieldSpec::prime(2));
        const auto k = kernel<Zp>(from_rows<Zp>({{1, 1}}));
        CHECK(k.dim() == 1);
        CHECK(k.basis() == from_rows<Zp>({{1, 1}}));
    }
    CHECK(kernel<Rational>(identity<Rational>(2)).dim() == 0);
    const Mat<Rational> m = from_rows<Rational>({{1, 2, 3}});
    const auto k = kernel<Rational>(m);
    CHECK(k.dim() == 2);
    for (Index i = 0; i < k.dim(); ++i) CHECK(all_zero<Rational>(m * k.vector(i)));
}

TEST_CASE("kron examples") {
    const Mat<Rational> e11 = unit_matrix<Rational>(2, 0, 0);
    Mat<Rational> expected = Mat<Rational>::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = Rational(1);
    CHECK(kron<Rational>(e11, identity<Rational>(2)) == expected);
    CHECK(kron<Rational>(identity<Rational>(2), identity<Rational>(3)) == identity<Rational>(6));
}

TEST_CASE("vec identity against direct products") {
    FieldScope scope(FieldSpec::prime(7));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Mat<Zp> a = random_matrix<Zp>(2, 2, rng), x = random_matrix<Zp>(2, 2, rng), b = random_matrix<Zp>(2, 2, rng);
        const Mat<Zp> lhs = a * x * b;
        REQUIRE(vec<Zp>(lhs) == kron<Zp>(b.transpose(), a) * vec<Zp>(x));
    }
    const Mat<Zp> x = random_matrix<Zp>(2, 3, rng);
    CHECK(commutation_matrix<Zp>(2, 3) * vec<Zp>(x) == vec<Zp>(Mat<Zp>(x.transpose())));
}

TEST_CASE("subspace lattice examples") {
    Mat<Rational> e1 = Mat<Rational>::Zero(1, 3), e2 = Mat<Rational>::Zero(1, 3);
    e1(0, 0) = Rational(1);
    e2(0, 1) = Rational(1);
    const auto s = subspace_sum(Subspace<Rational>::span(e1), Subspace<Rational>::span(e2));
    CHECK(s.dim() == 2);
    CHECK(subspace_contains(s, Subspace<Rational>::span(e1)));
    CHECK_FALSE(subspace_contains(Subspace<Rational>::span(e1), s));
    CHECK_THROWS(subspace_sum(Subspace<Rational>(3), Subspace<Rational>(4)));
}

TEST_CASE("solve, invert, determinant") {
    const Mat<Rational> a = from_rows<Rational>({{2, 1}, {1, 1}});
    const auto inv = invert<Rational>(a);
    REQUIRE(inv);
    CHECK(a * *inv == identity<Rational>(2));
    CHECK(determinant<Rational>(a) == Rational(1));
    CHECK_FALSE(invert<Rational>(from_rows<Rational>({{1, 2}, {2, 4}})).has_value());
    Vec<Rational> b(2);
    b << Rational(3), Rational(2);
    const auto x = solve<Rational>(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    Vec<Rational> c(2);
    c << Rational(1), Rational(1);
    CHECK_FALSE(solve<Rational>(from_rows<Rational>({{1, 2}, {2, 4}}), c).has_value());
}

TEST_CASE("coordinate system round trip") {
    FieldScope scope(FieldSpec::prime(5));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Mat<Zp> rows = random_matrix<Zp>(3, 6, rng);
        if (rank<Zp>(rows) != 3) continue;
        CoordinateSystem<Zp> cs(rows);
        const Vec<Zp> c = random_vector<Zp>(3, rng);
        const Vec<Zp> v = rows.transpose() * c;
        REQUIRE(*cs.coordinates(v) == c);
    }
}

TEST_CASE("matrix text round trip") {
    const std::string q = "2 2 Q\n1/2 -3\n0 7/5\n";
    CHECK(format_matrix<Rational>(parse_matrix<Rational>(q)) == q);
    {
        FieldScope scope(FieldSpec::quadratic(3));
        const std::string t = "1 3 3^2\n1+2*x 0+1*x 2+0*x\n";
        const auto m = parse_matrix<Fp2>(t);
        CHECK(m(0, 1) * m(0, 1) == Fp2(-1));
        CHECK(format_matrix<Fp2>(m) == t);
    }
    {
        FieldScope scope(FieldSpec::prime(5));
        std::mt19937_64 rng(9);
        const Mat<Zp> m = random_matrix<Zp>(4, 3, rng);
        CHECK(parse_matrix<Zp>(format_matrix<Zp>(m)) == m);
    }
    std::mt19937_64 rng(10);
    const Mat<Rational> m = random_matrix<Rational>(3, 3, rng);
    CHECK(parse_matrix<Rational>(format_matrix<Rational>(m)) == m);
}

TEST_CASE("matrix text errors name the line") {
    try {
        parse_matrix<Rational>("2 2 Q\n1 2\n3\n");
        FAIL("no error");
    } catch (const MatrixParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_matrix<Rational>("1 2 Q\n1 a/b\n");
        FAIL("no error");
    } catch (const MatrixParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.txt"), MatrixParseError);
}

template <class S>
void linalg_properties(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int t = 0; t < trials; ++t) {
        const Index r = dim(rng), c = dim(rng);
        Mat<S> m = random_matrix<S>(r, c, rng);
        if (t % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * random_scalar<S>(rng);
        const auto once = rref<S>(m);
        REQUIRE(rref<S>(once.matrix).matrix == once.matrix);
        REQUIRE(once.rank + kernel<S>(m).dim() == c);
        // canonicity under row operations
        Mat<S> g = random_matrix<S>(r, r, rng);
        if (invert<S>(g)) REQUIRE(rref<S>(Mat<S>(g * m)).matrix == once.matrix);
        const auto k = kernel<S>(m);
        for (Index i = 0; i < k.dim(); ++i) REQUIRE(all_zero<S>(Mat<S>(m * k.vector(i))));
        // modular law
        const auto u = Subspace<S>::span(random_matrix<S>(dim(rng) % 4 + 1, 6, rng));
        const auto w = Subspace<S>::span(random_matrix<S>(dim(rng) % 4 + 1, 6, rng));
        const auto sum = subspace_sum(u, w);
        const auto meet = subspace_intersect(u, w);
        REQUIRE(sum.dim() + meet.dim() == u.dim() + w.dim());
        REQUIRE(subspace_intersect(u, u) == u);
        REQUIRE(subspace_contains(u, meet));
        REQUIRE(subspace_contains(w, meet));
        REQUIRE(subspace_contains(sum, u));
    }
}

TEST_CASE("linear algebra properties per field") {
    linalg_properties<Rational>(200, 11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        FieldScope scope(FieldSpec::prime(p));
        linalg_properties<Zp>(200, p);
    }
    for (std::uint32_t p : {3u, 5u}) {
        FieldScope scope(FieldSpec::quadratic(p));
        linalg_properties<Fp2>(200, 50 + p);
    }
}
