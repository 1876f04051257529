#include <doctest.h>

#include <algorithm>

#include "../common/support.hpp"
#include "liecomp/constructions.hpp"

using namespace liecomp;
using namespace liecomp::testing;

namespace {

template <class S>
LieModule<S> gl_under(const MatLieAlg<S>& l) {
    return adjoint_module(lie_generators(l), Subspace<S>::full(l.m * l.m), l.m);
}

template <class S>
std::vector<std::vector<std::string>> weight_values(const std::vector<Weight<S>>& ws) {
    std::vector<std::vector<std::string>> out;
    for (const auto& w : ws) {
        std::vector<std::string> v;
        for (const auto& x : w.values) v.push_back(to_string(x));
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("adjoint module on an invariant subspace") {
    FieldScope scope(FieldSpec::prime(2));
    const auto l = skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(4));
    const auto l2 = derived_series(l)[2];
    CHECK(adjoint_module(lie_generators(l), l2.space, 4).dim == 5);
    CHECK_THROWS_AS(adjoint_module(lie_generators(l), Subspace<Zp>::span(std::vector<Vec<Zp>>{vec<Zp>(unit_matrix<Zp>(4, 0, 0))}, 16), 4),
                    std::invalid_argument);
}

TEST_CASE("spin examples") {
    FieldScope scope(FieldSpec::prime(7));
    const auto sl3 = sl_algebra<Zp>(3);
    const auto bm = block_modules<Zp>(3, sl3.basis());
    const Mat<Zp> s = unit_matrix<Zp>(3, 0, 1) - unit_matrix<Zp>(3, 1, 0);
    const Vec<Zp> seed = bm.t_space.coordinates(vec<Zp>(s));
    CHECK(spin(bm.t, {seed}).is_full());
    CHECK(spin(bm.t, {Vec<Zp>::Zero(bm.t.dim)}).is_zero_space());
    std::vector<Vec<Zp>> all;
    for (Index i = 0; i < bm.t.dim; ++i) all.push_back(Vec<Zp>::Unit(bm.t.dim, i));
    CHECK(spin(bm.t, all).is_full());
}

TEST_CASE("small lattices") {
    {
        FieldScope scope(FieldSpec::prime(5));
        const auto gl = gl_under(skew_adjoint_algebra<Zp>(identity<Zp>(2)));
        const auto m0 = subspace_intersect(self_adjoint_module<Zp>(identity<Zp>(2)).space, sl_algebra<Zp>(2).space);
        const auto mod = restrict_module(gl, m0);
        const auto r = certify_irreducible(mod);
        CHECK(r.verdict == Verdict::no);
        const Zp i(2);
        Mat<Zp> x(2, 2), y(2, 2);
        x << Zp(1), i, i, Zp(-1);
        y << Zp(-1), i, i, Zp(1);
        const auto lat = submodule_lattice(mod);
        REQUIRE(lat);
        std::vector<Subspace<Zp>> proper;
        for (const auto& u : *lat)
            if (u.dim() == 1) proper.push_back(u);
        REQUIRE(proper.size() == 2);
        for (const auto& w : {x, y}) {
            const auto want = Subspace<Zp>::span(std::vector<Vec<Zp>>{m0.coordinates(vec<Zp>(w))}, 2);
            CHECK(std::count(proper.begin(), proper.end(), want) == 1);
        }
    }
    {
        FieldScope scope(FieldSpec::quadratic(3));
        const auto gl = gl_under(skew_adjoint_algebra<Fp2>(identity<Fp2>(3)));
        const auto m0 =
            subspace_intersect(self_adjoint_module<Fp2>(identity<Fp2>(3)).space, sl_algebra<Fp2>(3).space);
        CHECK(certify_irreducible(restrict_module(gl, m0)).verdict == Verdict::no);
    }
    LieModule<Rational> one{1, {"x"}, {Mat<Rational>::Zero(1, 1)}};
    CHECK(certify_irreducible_mod_p(one, 2).verdict == Verdict::yes);
    FieldScope scope(FieldSpec::prime(3));
    LieModule<Zp> triv{1, {"x"}, {Mat<Zp>::Zero(1, 1)}};
    CHECK(certify_irreducible(triv).verdict == Verdict::yes);
}

TEST_CASE("composition series examples") {
    {
        FieldScope scope(FieldSpec::prime(3));
        const auto cs = composition_series(gl_under(sl_algebra<Zp>(3)));
        CHECK(cs.certified);
        CHECK(cs.factor_dims == std::vector<Index>{1, 7, 1});
    }
    FieldScope scope(FieldSpec::prime(2));
    const auto c2 = composition_series(gl_under(skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(2))));
    CHECK(c2.length() == 4);
    CHECK(std::all_of(c2.factor_trivial.begin(), c2.factor_trivial.end(), [](bool b) { return b; }));
    const auto c6 = composition_series(gl_under(skew_adjoint_algebra<Zp>(symplectic_gram<Zp>(6))));
    CHECK(c6.certified);
    CHECK(c6.length() == 10);
    std::vector<Index> nontrivial;
    for (std::size_t i = 0; i < c6.length(); ++i)
        if (!c6.factor_trivial[i]) nontrivial.push_back(c6.factor_dims[i]);
    // L2 and sl/L, both of dimension 14.
    CHECK(nontrivial == std::vector<Index>{14, 14});
}

TEST_CASE("certify_series rejects non-chains") {
    FieldScope scope(FieldSpec::prime(5));
    const auto mod = gl_under(sl_algebra<Zp>(2));
    const auto good = certify_series(mod, {Subspace<Zp>(4), sl_algebra<Zp>(2).space, Subspace<Zp>::full(4)});
    CHECK(good.certified);
    CHECK(good.factor_dims == std::vector<Index>{3, 1});
    const auto wrong = certify_series(mod, {Subspace<Zp>(4), Subspace<Zp>::full(4)});
    CHECK_FALSE(wrong.certified);
    const auto e12 = Subspace<Zp>::span(std::vector<Vec<Zp>>{vec<Zp>(unit_matrix<Zp>(2, 0, 1))}, 4);
    CHECK_FALSE(certify_series(mod, {Subspace<Zp>(4), e12, Subspace<Zp>::full(4)}).certified);
}

TEST_CASE("duals and Hom spaces") {
    LieModule<Rational> triv{2, {"x"}, {Mat<Rational>::Zero(2, 2)}};
    CHECK(is_trivial(dual_module(triv)));
    const auto v = natural_module(sl_algebra<Rational>(2).basis());
    CHECK(hom_space(v, dual_module(v)).dim() == 1);
    {
        FieldScope scope(FieldSpec::prime(7));
        const auto bm = block_modules<Zp>(3, sl_algebra<Zp>(3).basis());
        CHECK(hom_space(bm.t, dual_module(bm.t)).dim() == 0);
        const auto b4 = block_modules<Zp>(4, sl_algebra<Zp>(4).basis());
        CHECK(hom_space(b4.t, dual_module(b4.t)).dim() >= 1);
    }
}

TEST_CASE("weights") {
    const Mat<Rational> h = unit_matrix<Rational>(2, 0, 0) - unit_matrix<Rational>(2, 1, 1);
    CHECK(weight_values(weights<Rational>({h})) == std::vector<std::vector<std::string>>{{"-1"}, {"1"}});
    FieldScope scope(FieldSpec::prime(7));
    std::vector<Mat<Zp>> diag;
    for (Index i = 0; i < 3; ++i) diag.push_back(unit_matrix<Zp>(3, i, i));
    const auto bm = block_modules<Zp>(3, diag);
    using W = std::vector<std::vector<std::string>>;
    CHECK(weight_values(weights(bm.t.actions)) == W{{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
    CHECK(weight_values(weights(bm.c.actions)) == W{{"0", "6", "6"}, {"6", "0", "6"}, {"6", "6", "0"}});
}

TEST_CASE("spin is idempotent and invariant") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(31);
            for (int t = 0; t < 200; ++t) {
                const Index n = 2 + t % 4;
                const auto mod = random_module<S>(n, 1 + t % 2, t % 3 != 0, rng);
                const std::vector<Vec<S>> seeds{random_vector<S>(n, rng)};
                const auto u = spin(mod, seeds);
                std::vector<Vec<S>> basis;
                for (Index i = 0; i < u.dim(); ++i) basis.push_back(u.vector(i));
                INFO(f.name(), " trial ", t);
                REQUIRE(spin(mod, basis) == u);
                REQUIRE(is_invariant(mod, u));
                REQUIRE(u.contains(seeds[0]));
            }
        });
}

TEST_CASE("hom_space agrees with the Kronecker system and intertwines") {
    for (const auto& f : property_fields())
        dispatch_field(f, [&](auto tag) {
            using S = typename decltype(tag)::type;
            std::mt19937_64 rng(41);
            for (int t = 0; t < 200; ++t) {
                const Index n = 1 + t % 4;
                const auto m1 = random_module<S>(n, 2, t % 2 == 0, rng);
                // A conjugate, sometimes with a scalar shift so that Hom can be larger.
                const Mat<S> p = random_invertible<S>(n, rng), pinv = *invert<S>(p);
                LieModule<S> m2 = m1;
                for (auto& a : m2.actions) a = p * a * pinv;
                if (t % 5 == 0) {
                    m2.actions[0] = Mat<S>::Zero(n, n);
                    m2.actions[1] = Mat<S>::Zero(n, n);
                }
                const auto h = hom_space(m1, m2);
                INFO(f.name(), " trial ", t);
                REQUIRE(h == hom_by_kronecker(m1, m2));
                for (Index i = 0; i < h.dim(); ++i) REQUIRE(is_homomorphism(m1, m2, unvec<S>(h.vector(i), n, n)));
                if (t % 5 != 0) REQUIRE(h.contains(vec<S>(p)));
            }
        });
}

TEST_CASE("certify_irreducible matches enumeration of all subspaces") {
    auto run = [](auto tag, Index max_dim, int trials, std::uint64_t seed) {
        using S = typename decltype(tag)::type;
        std::mt19937_64 rng(seed);
        for (int t = 0; t < trials; ++t) {
            const Index n = 1 + t % max_dim;
            const auto mod = random_module<S>(n, 1 + static_cast<std::size_t>(t % 3), t % 4 == 0, rng);
            const auto r = certify_irreducible(mod);
            INFO("trial ", t);
            REQUIRE(r.verdict != Verdict::budget_exceeded);
            REQUIRE((r.verdict == Verdict::yes) == irreducible_by_enumeration(mod));
            if (r.witness) REQUIRE(is_invariant(mod, *r.witness));
        }
    };
    {
        FieldScope scope(FieldSpec::prime(2));
        run(std::type_identity<Zp>{}, 4, 300, 5);
    }
    FieldScope scope(FieldSpec::prime(3));
    run(std::type_identity<Zp>{}, 3, 300, 6);
}
