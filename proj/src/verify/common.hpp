// Shared helpers for the runners.
#ifndef LIECOMP_VERIFY_COMMON_HPP
#define LIECOMP_VERIFY_COMMON_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "liecomp/constructions.hpp"
#include "liecomp/forms.hpp"
#include "liecomp/matrix_io.hpp"
#include "liecomp/repmod.hpp"
#include "liecomp/verify.hpp"

namespace liecomp::vdetail {

inline Index binom2(Index n) { return n * (n - 1) / 2; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string str(const T& v) {
    if constexpr (std::is_same_v<T, bool>) return yes_no(v);
    else if constexpr (std::is_convertible_v<T, std::string>) return std::string(v);
    else return std::to_string(v);
}

inline std::string join(const std::vector<Index>& v, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

class ReportBuilder {
public:
    ReportBuilder(std::string id, const FieldSpec& f, Index m) {
        r_.case_id = std::move(id);
        r_.field = f;
        r_.m = m;
    }

    void add(std::string label, const std::string& key, std::string expected, std::string computed, bool pass,
             std::string method = "direct") {
        r_.claims.push_back(Claim{std::move(label), r_.case_id + "/" + key, std::move(expected), std::move(computed),
                                  pass, std::move(method)});
    }

    template <class T>
    void eq(std::string label, const std::string& key, const T& expected, const T& computed,
            std::string method = "direct") {
        add(std::move(label), key, str(expected), str(computed), expected == computed, std::move(method));
    }

    void holds(std::string label, const std::string& key, bool computed, std::string method = "direct") {
        eq(std::move(label), key, true, computed, std::move(method));
    }

    void ladder(std::vector<Index> dims) { r_.ladder = std::move(dims); }
    Report take() { return std::move(r_); }

private:
    Report r_;
};

template <class S>
std::string method_of(const Irreducibility<S>& r) {
    return r.method;
}

template <class S>
std::vector<Index> chain_dims(const std::vector<Subspace<S>>& chain) {
    std::vector<Index> d;
    for (const auto& c : chain) d.push_back(c.dim());
    return d;
}

template <class S>
std::string series_methods(const CompSeries<S>& cs) {
    std::set<std::string> ms(cs.methods.begin(), cs.methods.end());
    std::string out;
    for (const auto& m : ms) out += (out.empty() ? "" : "; ") + m;
    return out.empty() ? "direct" : out;
}

template <class S>
std::vector<Index> nontrivial_dims(const CompSeries<S>& cs) {
    std::set<Index> d;
    for (std::size_t i = 0; i < cs.length(); ++i)
        if (!cs.factor_trivial[i]) d.insert(cs.factor_dims[i]);
    return {d.begin(), d.end()};
}

template <class S>
Index trivial_count(const CompSeries<S>& cs) {
    Index k = 0;
    for (std::size_t i = 0; i < cs.length(); ++i) k += cs.factor_trivial[i] ? 1 : 0;
    return k;
}

/// Matrices -> subspace of vec(gl(m)).
template <class S>
Subspace<S> span_of(const std::vector<Mat<S>>& mats, Index m) {
    std::vector<Vec<S>> v;
    for (const auto& x : mats) v.push_back(vec<S>(x));
    return Subspace<S>::span(v, m * m);
}

/// Image of a subspace under a linear map (matrix acting on columns).
template <class S>
Subspace<S> image_of(const Mat<S>& map, const Subspace<S>& u) {
    if (u.dim() == 0) return Subspace<S>(map.rows());
    return Subspace<S>::span(Mat<S>(u.basis() * map.transpose()));
}

/// P^{-1} X P applied to every basis element.
template <class S>
MatLieAlg<S> conjugate(const MatLieAlg<S>& l, const Mat<S>& p) {
    const Mat<S> pinv = *invert<S>(p);
    std::vector<Mat<S>> mats;
    for (const auto& x : l.basis()) mats.push_back(pinv * x * p);
    return matrix_span<S>(l.m, mats, l.label);
}

template <class S>
bool is_invertible(const Mat<S>& t) {
    return t.rows() == t.cols() && rank<S>(t) == t.rows();
}

/// Some element of the Hom space (vec of T, T of shape n2 x n1) is invertible.
template <class S>
bool has_isomorphism(const Subspace<S>& homs, Index n2, Index n1) {
    if (n1 != n2 || homs.dim() == 0) return false;
    for (Index i = 0; i < homs.dim(); ++i)
        if (is_invertible<S>(unvec<S>(homs.vector(i), n2, n1))) return true;
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        Vec<S> c = homs.basis().transpose() * random_vector<S>(homs.dim(), rng);
        if (is_invertible<S>(unvec<S>(c, n2, n1))) return true;
    }
    return false;
}

/// Modules are isomorphic when the Hom space contains an invertible map.
template <class S>
bool isomorphic(const LieModule<S>& a, const LieModule<S>& b) {
    if (a.dim != b.dim) return false;
    return has_isomorphism(hom_space(a, b), b.dim, a.dim);
}

/// Random subspaces strictly between lower and upper, one of each dimension.
template <class S>
std::vector<Subspace<S>> random_flag(const Subspace<S>& lower, const Subspace<S>& upper, std::mt19937_64& rng) {
    std::vector<Subspace<S>> out;
    Subspace<S> cur = lower;
    while (cur.dim() + 1 < upper.dim()) {
        Vec<S> v = upper.basis().transpose() * random_vector<S>(upper.dim(), rng);
        if (cur.contains(v)) continue;
        cur = subspace_sum(cur, Subspace<S>::span(std::vector<Vec<S>>{v}, cur.ambient_dim()));
        out.push_back(cur);
    }
    return out;
}

/// Fixed points of all actions.
template <class S>
Subspace<S> fixed_points(const LieModule<S>& mod) {
    Mat<S> stack(static_cast<Index>(mod.actions.size()) * mod.dim, mod.dim);
    for (std::size_t g = 0; g < mod.actions.size(); ++g)
        stack.middleRows(static_cast<Index>(g) * mod.dim, mod.dim) = mod.actions[g];
    if (mod.actions.empty()) return Subspace<S>::full(mod.dim);
    return kernel<S>(stack);
}

/// Matrices {[[A,B],[C,D]]} for n x n blocks given per-block generator lists.
template <class S>
Mat<S> block2(const Mat<S>& a, const Mat<S>& b, const Mat<S>& c, const Mat<S>& d) {
    const Index n = a.rows();
    Mat<S> x(2 * n, 2 * n);
    x << a, b, c, d;
    return x;
}

template <class S>
std::vector<Mat<S>> symmetric_basis(Index n) {
    std::vector<Mat<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            Mat<S> x = unit_matrix<S>(n, i, j);
            if (i != j) x += unit_matrix<S>(n, j, i);
            out.push_back(x);
        }
    return out;
}

template <class S>
std::vector<Mat<S>> alternating_basis(Index n) {
    std::vector<Mat<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) out.push_back(unit_matrix<S>(n, i, j) - unit_matrix<S>(n, j, i));
    return out;
}

/// span{[[A,B],[C,sA']] : A in `as`, B in `bs`, C in `cs`}, sign s = +-1.
template <class S>
Subspace<S> block_form_space(Index n, const std::vector<Mat<S>>& as, const std::vector<Mat<S>>& bs,
                             const std::vector<Mat<S>>& cs, const S& sign) {
    const Mat<S> z = Mat<S>::Zero(n, n);
    std::vector<Mat<S>> mats;
    for (const auto& a : as) mats.push_back(block2<S>(a, z, z, Mat<S>(a.transpose() * sign)));
    for (const auto& b : bs) mats.push_back(block2<S>(z, b, z, z));
    for (const auto& c : cs) mats.push_back(block2<S>(z, z, c, z));
    return span_of(mats, 2 * n);
}

template <class S>
std::vector<Mat<S>> gl_basis(Index n) {
    std::vector<Mat<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out.push_back(unit_matrix<S>(n, i, j));
    return out;
}

template <class S>
std::vector<Mat<S>> sl_basis(Index n) {
    std::vector<Mat<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i != j) out.push_back(unit_matrix<S>(n, i, j));
    for (Index i = 0; i + 1 < n; ++i) out.push_back(unit_matrix<S>(n, i, i) - unit_matrix<S>(n, i + 1, i + 1));
    return out;
}

/// {A : d_i A_ij = d_j A_ji}, optionally with zero diagonal.
template <class S>
Subspace<S> weighted_symmetric_space(const std::vector<S>& d, bool zero_diagonal) {
    const Index m = static_cast<Index>(d.size());
    std::vector<Mat<S>> mats;
    for (Index i = 0; i < m; ++i) {
        if (!zero_diagonal) mats.push_back(unit_matrix<S>(m, i, i));
        for (Index j = i + 1; j < m; ++j) {
            // A_ij = d_j, A_ji = d_i solves d_i A_ij = d_j A_ji.
            Mat<S> x = Mat<S>::Zero(m, m);
            x(i, j) = d[static_cast<std::size_t>(j)];
            x(j, i) = d[static_cast<std::size_t>(i)];
            mats.push_back(x);
        }
    }
    return span_of(mats, m);
}

template <class S>
Subspace<S> traceless_part(const Subspace<S>& u, Index m) {
    return subspace_intersect(u, sl_algebra<S>(m).space);
}

/// Trace-form orthogonality of two subspaces of vec(gl(m)).
template <class S>
bool trace_orthogonal(const Subspace<S>& a, const Subspace<S>& b, Index m) {
    for (Index i = 0; i < a.dim(); ++i) {
        const Mat<S> x = unvec<S>(a.vector(i), m, m);
        for (Index j = 0; j < b.dim(); ++j)
            if (!is_zero(trace_of<S>(Mat<S>(sparse_product<S>(x, unvec<S>(b.vector(j), m, m)))))) return false;
    }
    return true;
}

/// The characteristic, or 0.
template <class S>
std::uint32_t characteristic() {
    return FieldTraits<S>::current().characteristic;
}

/// Irreducibility with the field-appropriate method.
template <class S>
Irreducibility<S> certify(const LieModule<S>& mod, std::uint64_t budget, std::uint64_t avoid) {
    if constexpr (std::is_same_v<S, Rational>) return certify_irreducible_mod_p(mod, avoid, budget);
    else {
        (void)avoid;
        return certify_irreducible(mod, budget);
    }
}

/// Lie algebra simplicity with avoid = 2m over Q.
template <class S>
Certificate simple_structure(const LieStructure<S>& l, std::uint64_t budget, Index m) {
    return is_simple(l, budget, 2 * static_cast<std::uint64_t>(m));
}

/// Sum over isomorphism types G of dim Hom(G, Q) / dim End(G) equals 1 at each
/// step: every quotient by a chain term has a simple socle, so the chain is the
/// only composition series.
template <class S>
bool is_uniserial(const LieModule<S>& mod, const std::vector<Subspace<S>>& chain) {
    std::vector<LieModule<S>> factors;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) factors.push_back(subquotient(mod, chain[i], chain[i + 1]));
    std::vector<LieModule<S>> types;
    std::vector<Index> ends;
    for (const auto& f : factors) {
        bool seen = false;
        for (const auto& t : types) seen = seen || isomorphic(f, t);
        if (!seen) {
            types.push_back(f);
            ends.push_back(hom_space(f, f).dim());
        }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const LieModule<S> q = quotient_module(mod, chain[i]);
        Index socle_count_num = 0;
        for (std::size_t t = 0; t < types.size(); ++t) {
            const Index h = hom_space(types[t], q).dim();
            if (h % ends[t] != 0) return false;
            socle_count_num += h / ends[t];
        }
        if (socle_count_num != 1) return false;
    }
    return true;
}

template <class S>
std::vector<S> parse_diagonal(const std::vector<std::string>& tokens) {
    std::vector<S> d;
    for (const auto& t : tokens) d.push_back(FieldTraits<S>::parse(t));
    return d;
}

}  // namespace liecomp::vdetail

#endif  // LIECOMP_VERIFY_COMMON_HPP
