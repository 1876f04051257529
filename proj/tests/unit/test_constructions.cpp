#include <doctest.h>

#include "../common/support.hpp"
#include "liecomp/constructions.hpp"

using namespace liecomp;
using namespace liecomp::testing;

namespace {

template <class S>
Subspace<S> image(const Mat<S>& t, const Subspace<S>& u) {
    std::vector<Vec<S>> out;
    for (Index i = 0; i < u.dim(); ++i) out.push_back(t * u.vector(i));
    return Subspace<S>::span(out, t.rows());
}

template <class S>
Index action_rank(const LieModule<S>& mod) {
    std::vector<Vec<S>> vs;
    for (const auto& a : mod.actions) vs.push_back(vec<S>(a));
    return Subspace<S>::span(vs, mod.dim * mod.dim).dim();
}

}  // namespace

TEST_CASE("Gamma images for a skew form") {
    FieldScope scope(FieldSpec::prime(5));
    const Mat<Zp> j = symplectic_gram<Zp>(4);
    const auto l = skew_adjoint_algebra<Zp>(j);
    const auto ts = tensor_square<Zp>(j, l.basis());
    CHECK(image(ts.gamma, ts.sym) == l.space);
    CHECK(image(ts.gamma, ts.alt) == self_adjoint_module<Zp>(j).space);
    CHECK_FALSE(ts.delta_kernel);
}

TEST_CASE("Gamma image for a symmetric form in characteristic 2") {
    FieldScope scope(FieldSpec::prime(2));
    const Mat<Zp> a = identity<Zp>(3);
    const auto l = skew_adjoint_algebra<Zp>(a);
    const auto ts = tensor_square<Zp>(a, l.basis());
    CHECK(image(ts.gamma, ts.sym) == l.space);
    CHECK(l.space == self_adjoint_module<Zp>(a).space);
}

TEST_CASE("Omega on a dual pair") {
    std::mt19937_64 rng(8);
    const Mat<Rational> a = random_symmetric_form<Rational>(3, rng);
    const auto ts = tensor_square<Rational>(a, {});
    const Mat<Rational> ainv = *invert<Rational>(a);
    for (Index i = 0; i < 3; ++i)
        for (Index k = 0; k < 3; ++k) {
            const Vec<Rational> w = ainv.col(k);
            const Vec<Rational> t = tensor_of<Rational>(Vec<Rational>::Unit(3, i), w);
            CHECK((ts.omega * t)(0) == Rational(i == k ? 1 : 0));
        }
    CHECK_THROWS_AS(tensor_square<Rational>(Mat<Rational>::Zero(2, 2), {}), std::invalid_argument);
}

TEST_CASE("Gamma and Omega are equivariant") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(51);
            for (int t = 0; t < 200; ++t) {
                const Index m = 2 + t % 3;
                const Mat<S> a = m % 2 == 0 && t % 2 == 0 ? random_alternating_form<S>(m, rng)
                                                          : random_symmetric_form<S>(m, rng);
                const auto l = skew_adjoint_algebra<S>(a);
                const std::vector<Mat<S>> xs{random_element(l, rng), random_element(l, rng)};
                const auto ts = tensor_square<S>(a, xs);
                const auto gl = adjoint_module(xs, Subspace<S>::full(m * m), m);
                INFO(f.name(), " trial ", t);
                REQUIRE(is_homomorphism(ts.module, gl, ts.gamma));
                for (const auto& act : ts.module.actions) REQUIRE(all_zero<S>(Mat<S>(ts.omega * act)));
                // Omega is the trace of Gamma.
                for (Index k = 0; k < m * m; ++k)
                    REQUIRE(ts.omega(0, k) == trace_of<S>(unvec<S>(Vec<S>(ts.gamma.col(k)), m, m)));
            }
        });
}

TEST_CASE("star map") {
    FieldScope scope(FieldSpec::prime(7));
    const Mat<Zp> s = unit_matrix<Zp>(4, 0, 1) - unit_matrix<Zp>(4, 1, 0);
    CHECK(star_map<Zp>(s) == Mat<Zp>(unit_matrix<Zp>(4, 2, 3) - unit_matrix<Zp>(4, 3, 2)));
    std::mt19937_64 rng(9);
    auto alt = [&] {
        Mat<Zp> x = random_matrix<Zp>(4, 4, rng);
        return Mat<Zp>(x - x.transpose());
    };
    for (int t = 0; t < 200; ++t) {
        const Mat<Zp> a = alt(), b = alt();
        REQUIRE(trace_of<Zp>(Mat<Zp>(star_map<Zp>(a) * b)) == trace_of<Zp>(Mat<Zp>(star_map<Zp>(b) * a)));
        REQUIRE(star_map<Zp>(star_map<Zp>(a)) == a);
    }
    CHECK_THROWS_AS(star_map<Zp>(identity<Zp>(4)), std::invalid_argument);
}

TEST_CASE("block duality") {
    {
        FieldScope scope(FieldSpec::prime(5));
        CHECK(block_duality_check<Zp>(2, 3));
    }
    {
        FieldScope scope(FieldSpec::prime(7));
        CHECK(block_duality_check<Zp>(3, 3));
    }
    CHECK(block_duality_check<Rational>(1, 1));
}

TEST_CASE("block modules") {
    {
        FieldScope scope(FieldSpec::prime(2));
        const auto bm = block_modules<Zp>(3, sl_algebra<Zp>(3).basis());
        CHECK(bm.t.dim == 3);
        CHECK(certify_irreducible(bm.t).verdict == Verdict::yes);
    }
    {
        FieldScope scope(FieldSpec::prime(3));
        const auto bm = block_modules<Zp>(3, sl_algebra<Zp>(3).basis());
        CHECK(bm.s.dim == 6);
        CHECK(certify_irreducible(bm.s).verdict == Verdict::yes);
    }
    FieldScope scope(FieldSpec::prime(5));
    const auto bm = block_modules<Zp>(2, sl_algebra<Zp>(2).basis());
    CHECK(bm.t.dim == 1);
    CHECK(is_trivial(bm.t));
}

TEST_CASE("truncated polynomial modules") {
    {
        FieldScope scope(FieldSpec::prime(3));
        const auto u = heisenberg_poly_module<Zp>(1, 3, Zp(1));
        CHECK(u.dim == 3);
        CHECK(action_rank(u) == 3);
        CHECK(certify_irreducible(u).verdict == Verdict::yes);
        CHECK_THROWS(heisenberg_poly_module<Zp>(1, 3, Zp(0)));
    }
    FieldScope scope(FieldSpec::prime(2));
    const auto u = heisenberg_poly_module<Zp>(2, 2, Zp(1));
    CHECK(u.dim == 4);
    CHECK(action_rank(u) == 5);
    CHECK(certify_irreducible(u).verdict == Verdict::yes);
    CHECK(heisenberg_poly_module<Zp>(1, 2, Zp(1)).dim == 2);
}
