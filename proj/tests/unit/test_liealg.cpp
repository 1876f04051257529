#include <doctest.h>

#include "../common/support.hpp"

using namespace liecomp;
using namespace liecomp::testing;

namespace {

Index binom2(Index n) { return n * (n - 1) / 2; }

template <class S>
std::vector<Index> derived_dims(const MatLieAlg<S>& l) {
    std::vector<Index> out;
    for (const auto& t : derived_series(l)) out.push_back(t.dim());
    return out;
}

}  // namespace

TEST_CASE("dimensions of L(f) and M(f)") {
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)})
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            for (Index m : {2, 4, 6}) {
                CHECK(skew_adjoint_algebra<S>(symplectic_gram<S>(m)).dim() == binom2(m + 1));
                CHECK(self_adjoint_module<S>(symplectic_gram<S>(m)).dim() == binom2(m));
                CHECK(self_adjoint_module<S>(identity<S>(m)).dim() == binom2(m + 1));
            }
        });
    {
        FieldScope scope(FieldSpec::prime(7));
        const auto l = skew_adjoint_algebra<Zp>(identity<Zp>(3));
        CHECK(l.dim() == 3);
        CHECK(l.space == alternating_matrices<Zp>(3).space);
    }
    FieldScope scope(FieldSpec::prime(2));
    CHECK(skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(4)).space ==
          self_adjoint_module<Zp>(symplectic_gram<Zp>(4)).space);
}

TEST_CASE("bracket of unit matrices") {
    const Mat<Rational> e12 = unit_matrix<Rational>(2, 0, 1), e21 = unit_matrix<Rational>(2, 1, 0);
    CHECK(bracket<Rational>(e12, e21) == Mat<Rational>(unit_matrix<Rational>(2, 0, 0) - unit_matrix<Rational>(2, 1, 1)));
}

TEST_CASE("derived series") {
    FieldScope scope(FieldSpec::prime(2));
    CHECK(derived_dims(skew_adjoint_algebra<Zp>(identity<Zp>(2))) == std::vector<Index>{3, 1, 0});
    CHECK(derived_dims(skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(4))) == std::vector<Index>{10, 6, 5, 1, 0});
    std::vector<Mat<Zp>> diag{unit_matrix<Zp>(3, 0, 0), unit_matrix<Zp>(3, 1, 1)};
    CHECK(derived(matrix_span<Zp>(3, diag)).dim() == 0);
}

TEST_CASE("trace-form complements") {
    const auto gl = gl_algebra<Rational>(3);
    CHECK(trace_orthogonal_complement(scalar_algebra<Rational>(3).space, gl.space, 3) == sl_algebra<Rational>(3).space);
    FieldScope scope(FieldSpec::prime(7));
    CHECK(trace_orthogonal_complement(alternating_matrices<Zp>(3).space, gl_algebra<Zp>(3).space, 3) ==
          symmetric_matrices<Zp>(3).space);
}

TEST_CASE("adjoint star") {
    std::mt19937_64 rng(3);
    const Mat<Rational> x = random_matrix<Rational>(3, 3, rng);
    CHECK(adjoint_star<Rational>(x, identity<Rational>(3)) == Mat<Rational>(x.transpose()));
    CHECK_THROWS_AS(adjoint_star<Rational>(x, Mat<Rational>::Zero(3, 3)), std::invalid_argument);

    FieldScope scope(FieldSpec::prime(5));
    for (int t = 0; t < 200; ++t) {
        const Index m = 2 + 2 * (t % 2);
        const Mat<Zp> a = t % 4 < 2 ? random_alternating_form<Zp>(m, rng) : random_symmetric_form<Zp>(m, rng);
        const Mat<Zp> z = random_matrix<Zp>(m, m, rng);
        const Mat<Zp> zs = adjoint_star<Zp>(z, a);
        REQUIRE(adjoint_star<Zp>(zs, a) == z);
        // z = (z - z*)/2 + (z + z*)/2 with the halves in L(A) and M(A).
        const Zp half = inverse(Zp(2));
        REQUIRE(skew_adjoint_algebra<Zp>(a).space.contains(vec<Zp>(Mat<Zp>((z - zs) * half))));
        REQUIRE(self_adjoint_module<Zp>(a).space.contains(vec<Zp>(Mat<Zp>((z + zs) * half))));
    }
}

TEST_CASE("Heisenberg algebras") {
    const auto h1 = heisenberg<Rational>(1);
    CHECK(h1.dim() == 3);
    std::vector<Vec<Rational>> brackets;
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) brackets.push_back(h1.ad[static_cast<std::size_t>(i)].col(j));
    const auto d = Subspace<Rational>::span(brackets, 3);
    CHECK(d.dim() == 1);
    CHECK(d.contains(Vec<Rational>::Unit(3, 2)));
    const auto c = center(heisenberg<Rational>(2));
    CHECK(c.dim() == 1);
    CHECK(c.contains(Vec<Rational>::Unit(5, 4)));
}

TEST_CASE("quotients") {
    FieldScope scope(FieldSpec::prime(2));
    const auto l = skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(4));
    CHECK(quotient_algebra(l, l).structure.dim() == 0);
    const auto l2 = derived_series(l)[2];
    const auto q = quotient_algebra(l, l2);
    CHECK(q.structure.dim() == 5);
    CHECK(center(q.structure).dim() == 1);
    const auto gl = gl_algebra<Zp>(2);
    CHECK_THROWS_AS(quotient_algebra(gl, MatLieAlg<Zp>{2, Subspace<Zp>::span(std::vector<Vec<Zp>>{vec<Zp>(unit_matrix<Zp>(2, 0, 1))}, 4), ""}),
                    std::invalid_argument);
}

TEST_CASE("simplicity of sl(2)") {
    {
        FieldScope scope(FieldSpec::prime(5));
        CHECK(is_simple(sl_algebra<Zp>(2)).verdict == Verdict::yes);
    }
    FieldScope scope(FieldSpec::prime(2));
    CHECK(is_simple(sl_algebra<Zp>(2)).verdict == Verdict::no);
}

TEST_CASE("trace form is invariant and L(f) is closed") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(21);
            for (int t = 0; t < 200; ++t) {
                const Index m = 2 + t % 3;
                const Mat<S> x = random_matrix<S>(m, m, rng), y = random_matrix<S>(m, m, rng),
                             z = random_matrix<S>(m, m, rng);
                INFO(f.name(), " trial ", t);
                REQUIRE(trace_of<S>(Mat<S>(bracket<S>(x, y) * z)) == trace_of<S>(Mat<S>(x * bracket<S>(y, z))));
            }
            for (int t = 0; t < 50; ++t) {
                const Index m = 2 + 2 * (t % 2);
                const auto l = skew_adjoint_algebra<S>(random_alternating_form<S>(m, rng));
                const Mat<S> x = random_element(l, rng), y = random_element(l, rng);
                REQUIRE(l.space.contains(vec<S>(bracket<S>(x, y))));
            }
        });
}
