// Modules built from a bilinear form and from block matrices: the tensor
// square with its maps to gl(V) and F, the 4x4 star map, the block modules
// Z, A, S, T, B, C, and truncated polynomial modules of the Heisenberg algebra.
#ifndef LIECOMP_CONSTRUCTIONS_HPP
#define LIECOMP_CONSTRUCTIONS_HPP

#include <optional>

#include "liecomp/repmod.hpp"

namespace liecomp {

/// V (x) V with e_i (x) e_j at index i*m + j.
template <class S>
struct TensorSquare {
    LieModule<S> module;             // x acts as x(x)1 + 1(x)x
    Mat<S> gamma;                    // m^2 x m^2; column i*m+j is vec(Gamma(e_i (x) e_j))
    Mat<S> omega;                    // 1 x m^2
    Subspace<S> sym;                 // S^2
    Subspace<S> alt;                 // span of v(x)w - w(x)v
    std::optional<Subspace<S>> delta_kernel;  // char 2, alternating form: ker of Delta : v(x)w + w(x)v -> f(v,w)
};

/// Gamma(v (x) w)(u) = f(v, u) w and Omega(v (x) w) = f(v, w) for f(v, w) = v' A w.
/// `elements` are the acting matrices (normally a basis of L(f)). Throws
/// std::invalid_argument when A is singular.
template <class S>
TensorSquare<S> tensor_square(const Mat<S>& gram, const std::vector<Mat<S>>& elements);

/// v (x) w as a vector of length m^2.
template <class S>
Vec<S> tensor_of(const Vec<S>& v, const Vec<S>& w);

/// The involution on 4x4 alternating matrices pairing the entries
/// (12,34), (13,24), (14,23) with the sign pattern a->f, b->-e, c->d.
/// Throws std::invalid_argument unless s is 4x4 alternating.
template <class S>
Mat<S> star_map(const Mat<S>& s);

/// Z = M_{r x n} with (a, b).s = as - sb, A = M_{n x r} with (a, b).t = bt - ta,
/// phi_t(s) = tr(ts). Checks that phi : A -> Z* is an isomorphism of modules
/// over gl(r) + gl(n); for r = n in odd characteristic also checks phi(B) = ann(T)
/// and phi(C) = ann(S) under a -> (a, -a').
template <class S>
bool block_duality_check(Index r, Index n);

/// gl(n) or sl(n) acting through a -> (a, -a') on the symmetric (S) and
/// alternating (T) parts of M_n via s -> as + sa', and on the symmetric (B)
/// and alternating (C) parts of M_n via t -> -a't - ta.
template <class S>
struct BlockModules {
    LieModule<S> z, a, s, t, b, c;
    Subspace<S> s_space, t_space, b_space, c_space;  // inside vec(M_n)
};

template <class S>
BlockModules<S> block_modules(Index n, const std::vector<Mat<S>>& elements);

/// F[X_1..X_n]/(X_i^l) for h(n) with generators u_1..u_n, v_1..v_n, z:
/// u_i -> d/dX_i, v_i -> alpha X_i, z -> alpha. Monomial X^e sits at index
/// sum e_i l^(i-1). Requires characteristic l; throws on alpha = 0.
template <class S>
LieModule<S> heisenberg_poly_module(Index n, std::uint32_t l, const S& alpha);

}  // namespace liecomp

#endif  // LIECOMP_CONSTRUCTIONS_HPP
