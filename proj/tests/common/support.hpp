// Helpers shared by the unit tests and the acceptance binary.
#ifndef LIECOMP_TEST_SUPPORT_HPP
#define LIECOMP_TEST_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "liecomp/forms.hpp"
#include "liecomp/repmod.hpp"

namespace liecomp::testing {

inline const std::vector<FieldSpec>& property_fields() {
    static const std::vector<FieldSpec> f{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                          FieldSpec::prime(5), FieldSpec::quadratic(3)};
    return f;
}

inline const std::vector<FieldSpec>& odd_fields() {
    static const std::vector<FieldSpec> f{FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5),
                                          FieldSpec::quadratic(3)};
    return f;
}

template <class S>
Mat<S> random_element(const MatLieAlg<S>& l, std::mt19937_64& rng) {
    Mat<S> x = Mat<S>::Zero(l.m, l.m);
    for (const auto& b : l.basis()) x += b * random_scalar<S>(rng);
    return x;
}

template <class S>
Mat<S> random_invertible(Index n, std::mt19937_64& rng) {
    for (;;) {
        Mat<S> p = random_matrix<S>(n, n, rng);
        if (!is_zero(determinant<S>(p))) return p;
    }
}

/// Nondegenerate alternating m x m Gram matrix (m even).
template <class S>
Mat<S> random_alternating_form(Index m, std::mt19937_64& rng) {
    for (;;) {
        Mat<S> a = Mat<S>::Zero(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j) {
                a(i, j) = random_scalar<S>(rng);
                a(j, i) = -a(i, j);
            }
        if (!is_zero(determinant<S>(a))) return a;
    }
}

/// Nondegenerate symmetric Gram matrix; in characteristic 2 with a nonzero diagonal.
template <class S>
Mat<S> random_symmetric_form(Index m, std::mt19937_64& rng) {
    for (;;) {
        Mat<S> a(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = i; j < m; ++j) a(i, j) = a(j, i) = random_scalar<S>(rng);
        bool diag = false;
        for (Index i = 0; i < m; ++i) diag = diag || !is_zero(a(i, i));
        if (diag && !is_zero(determinant<S>(a))) return a;
    }
}

/// Module of dimension n for k random generators, optionally block upper triangular.
template <class S>
LieModule<S> random_module(Index n, std::size_t k, bool triangular, std::mt19937_64& rng) {
    LieModule<S> mod;
    mod.dim = n;
    const Index cut = n > 1 ? 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(n - 1)) : n;
    for (std::size_t g = 0; g < k; ++g) {
        Mat<S> a = random_matrix<S>(n, n, rng);
        if (triangular)
            for (Index i = cut; i < n; ++i)
                for (Index j = 0; j < cut; ++j) a(i, j) = S(0);
        mod.actions.push_back(a);
        mod.labels.push_back("g" + std::to_string(g));
    }
    return mod;
}

/// Every nonzero proper subspace of F_q^n, built by spanning tuples of vectors
/// and de-duplicating canonical bases. Finite fields, tiny n only.
template <class S>
std::vector<Subspace<S>> all_proper_subspaces(Index n) {
    const std::vector<S> elems = FieldTraits<S>::elements();
    const std::uint64_t q = elems.size();
    std::vector<Vec<S>> points;
    std::uint64_t total = 1;
    for (Index i = 0; i < n; ++i) total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
        Vec<S> v(n);
        std::uint64_t c = code;
        for (Index i = 0; i < n; ++i) {
            v(i) = elems[c % q];
            c /= q;
        }
        points.push_back(v);
    }
    std::set<std::string> seen;
    std::vector<Subspace<S>> out;
    std::vector<std::size_t> pick;
    auto key = [](const Subspace<S>& u) {
        std::string s = std::to_string(u.dim()) + ":";
        for (Index i = 0; i < u.dim(); ++i)
            for (Index j = 0; j < u.ambient_dim(); ++j) s += to_string(u.basis()(i, j)) + ",";
        return s;
    };
    // Tuples of up to n-1 points in increasing index order.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) {
            std::vector<Vec<S>> vs;
            for (auto i : pick) vs.push_back(points[i]);
            const auto u = Subspace<S>::span(vs, n);
            if (u.dim() == static_cast<Index>(pick.size()) && u.dim() < n && seen.insert(key(u)).second)
                out.push_back(u);
            if (u.dim() != static_cast<Index>(pick.size())) return;
        }
        if (static_cast<Index>(pick.size()) + 1 >= n) return;
        for (std::size_t i = start; i < points.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Irreducibility by testing invariance of every proper nonzero subspace.
template <class S>
bool irreducible_by_enumeration(const LieModule<S>& mod) {
    if (mod.dim == 0) return false;
    for (const auto& u : all_proper_subspaces<S>(mod.dim)) {
        bool invariant = true;
        for (const auto& a : mod.actions)
            for (Index i = 0; i < u.dim() && invariant; ++i) invariant = u.contains(Vec<S>(a * u.vector(i)));
        if (invariant) return false;
    }
    return true;
}

/// Hom space by the Kronecker system, independent of the spin-word method.
template <class S>
Subspace<S> hom_by_kronecker(const LieModule<S>& m1, const LieModule<S>& m2) {
    const Index n1 = m1.dim, n2 = m2.dim, n = n1 * n2;
    Mat<S> sys = Mat<S>::Zero(static_cast<Index>(m1.actions.size()) * n, n);
    for (std::size_t k = 0; k < m1.actions.size(); ++k)
        sys.middleRows(static_cast<Index>(k) * n, n) =
            kron<S>(Mat<S>(m1.actions[k].transpose()), identity<S>(n2)) - kron<S>(identity<S>(n1), m2.actions[k]);
    return kernel<S>(sys);
}

}  // namespace liecomp::testing

#endif  // LIECOMP_TEST_SUPPORT_HPP
