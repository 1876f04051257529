// Matrix Lie algebras inside gl(m), stored as subspaces of F^{m^2} through
// vec(), together with abstract algebras given by structure constants.
#ifndef LIECOMP_LIEALG_HPP
#define LIECOMP_LIEALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liecomp/linalg.hpp"

namespace liecomp {

enum class Verdict { yes, no, budget_exceeded, refused };

std::string to_string(Verdict v);

/// Default cap on the number of 1-dimensional subspaces enumerated by a certificate.
inline constexpr std::uint64_t default_budget = 1'000'000;

struct Certificate {
    Verdict verdict = Verdict::refused;
    std::string method;
};

template <class S>
struct MatLieAlg {
    Index m = 0;
    Subspace<S> space;
    std::string label;

    Index dim() const { return space.dim(); }
    Mat<S> element(Index i) const { return unvec<S>(space.vector(i), m, m); }
    std::vector<Mat<S>> basis() const {
        std::vector<Mat<S>> out;
        for (Index i = 0; i < dim(); ++i) out.push_back(element(i));
        return out;
    }
    bool contains(const Mat<S>& x) const { return space.contains(vec<S>(x)); }
};

template <class S>
MatLieAlg<S> matrix_span(Index m, const std::vector<Mat<S>>& mats, std::string label = {});

template <class S>
MatLieAlg<S> gl_algebra(Index m);
template <class S>
MatLieAlg<S> sl_algebra(Index m);
/// s = span{I_m}.
template <class S>
MatLieAlg<S> scalar_algebra(Index m);
/// Alt(m): A' = -A with zero diagonal.
template <class S>
MatLieAlg<S> alternating_matrices(Index m);
/// Sym(m).
template <class S>
MatLieAlg<S> symmetric_matrices(Index m);

/// L(A) = {X : X'A + AX = 0}. Checked closed under brackets.
template <class S>
MatLieAlg<S> skew_adjoint_algebra(const Mat<S>& a);

/// M(A) = {Y : Y'A - AY = 0}.
template <class S>
MatLieAlg<S> self_adjoint_module(const Mat<S>& a);

template <class S>
Mat<S> bracket(const Mat<S>& x, const Mat<S>& y) {
    return sparse_product(x, y) - sparse_product(y, x);
}

/// span{[u, w] : u in U, w in W}.
template <class S>
MatLieAlg<S> bracket_span(const MatLieAlg<S>& u, const MatLieAlg<S>& w);

template <class S>
MatLieAlg<S> derived(const MatLieAlg<S>& l);

/// L, L^(1), L^(2), ... until a term repeats or reaches zero (the last term is included once).
template <class S>
std::vector<MatLieAlg<S>> derived_series(const MatLieAlg<S>& l);

template <class S>
bool is_bracket_closed(const MatLieAlg<S>& l);

/// [L, I] contained in I.
template <class S>
bool is_ideal(const MatLieAlg<S>& ideal, const MatLieAlg<S>& l);

/// phi(x, y) = tr(xy) on the given matrices.
template <class S>
Mat<S> trace_form_gram(const std::vector<Mat<S>>& basis);

/// {x in within : tr(xu) = 0 for all u in U}.
template <class S>
Subspace<S> trace_orthogonal_complement(const Subspace<S>& u, const Subspace<S>& within, Index m);

/// A^{-1} X' A. Throws std::invalid_argument when A is singular.
template <class S>
Mat<S> adjoint_star(const Mat<S>& x, const Mat<S>& a);

/// A subset of the basis of L that generates L as a Lie algebra.
template <class S>
std::vector<Mat<S>> lie_generators(const MatLieAlg<S>& l);

/// Lie algebra by structure constants: column j of ad[i] holds [e_i, e_j].
template <class S>
struct LieStructure {
    std::vector<std::string> names;
    std::vector<Mat<S>> ad;

    Index dim() const { return static_cast<Index>(ad.size()); }
    Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
        Vec<S> out = Vec<S>::Zero(dim());
        for (Index i = 0; i < dim(); ++i)
            if (!is_zero(x(i))) out += (ad[static_cast<std::size_t>(i)] * y) * x(i);
        return out;
    }
};

/// Structure constants of L relative to the given basis of L.
template <class S>
LieStructure<S> structure_constants(const std::vector<Mat<S>>& basis);

/// h(n): u_1..u_n, v_1..v_n, z with [u_i, v_i] = z.
template <class S>
LieStructure<S> heisenberg(Index n);

/// Basis of the center.
template <class S>
Subspace<S> center(const LieStructure<S>& l);

template <class S>
struct QuotientAlgebra {
    LieStructure<S> structure;
    std::vector<Mat<S>> representatives;
};

/// L/I on the given coset representatives (completed from the basis of L when
/// fewer than dim L - dim I are supplied). Throws std::invalid_argument when I
/// is not an ideal of L or the representatives are dependent modulo I.
template <class S>
QuotientAlgebra<S> quotient_algebra(const MatLieAlg<S>& l, const MatLieAlg<S>& ideal,
                                    const std::vector<Mat<S>>& representatives = {});

/// `map` sends basis vector i of q to column i (coordinates in h). True when
/// it is bijective and preserves every bracket of basis vectors.
template <class S>
bool lie_isomorphic_by_structure(const LieStructure<S>& q, const LieStructure<S>& h, const Mat<S>& map);

/// Simple means dim > 1 and the adjoint module is irreducible. Over Q the
/// adjoint module is reduced modulo two primes not dividing `avoid`.
template <class S>
Certificate is_simple(const LieStructure<S>& l, std::uint64_t budget = default_budget, std::uint64_t avoid = 2);

template <class S>
Certificate is_simple(const MatLieAlg<S>& l, std::uint64_t budget = default_budget);

}  // namespace liecomp

#endif  // LIECOMP_LIEALG_HPP
