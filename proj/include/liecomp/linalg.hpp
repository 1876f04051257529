// Dense exact linear algebra over the scalar types of field.hpp.
//
// Vectors are Eigen column vectors. A Subspace stores the rows of its reduced
// row echelon basis, so two subspaces are equal exactly when their bases are.
// vec() stacks columns: vec(A X B) = kron(B', A) vec(X).
#ifndef LIECOMP_LINALG_HPP
#define LIECOMP_LINALG_HPP

#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "liecomp/field.hpp"

namespace liecomp {

using Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct Rref {
    Mat<S> matrix;
    Index rank = 0;
    std::vector<Index> pivots;
};

template <class S>
Rref<S> rref(const Mat<S>& m);

template <class S>
Index rank(const Mat<S>& m);

template <class S>
bool all_zero(const Mat<S>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <class S>
Mat<S> identity(Index n) {
    Mat<S> id = Mat<S>::Zero(n, n);
    for (Index i = 0; i < n; ++i) id(i, i) = S(1);
    return id;
}

/// e_ij in gl(m).
template <class S>
Mat<S> unit_matrix(Index m, Index i, Index j) {
    Mat<S> e = Mat<S>::Zero(m, m);
    e(i, j) = S(1);
    return e;
}

template <class S>
Vec<S> vec(const Mat<S>& a) {
    return Eigen::Map<const Vec<S>>(a.data(), a.size());
}

template <class S>
Mat<S> unvec(const Vec<S>& v, Index rows, Index cols) {
    return Eigen::Map<const Mat<S>>(v.data(), rows, cols);
}

/// x y, skipping zero entries of x and y.
template <class S>
Mat<S> sparse_product(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> out = Mat<S>::Zero(x.rows(), y.cols());
    for (Index k = 0; k < x.cols(); ++k)
        for (Index i = 0; i < x.rows(); ++i) {
            if (is_zero(x(i, k))) continue;
            for (Index j = 0; j < y.cols(); ++j)
                if (!is_zero(y(k, j))) out(i, j) += x(i, k) * y(k, j);
        }
    return out;
}

template <class S>
Vec<S> sparse_apply(const Mat<S>& a, const Vec<S>& v) {
    Vec<S> out = Vec<S>::Zero(a.rows());
    for (Index k = 0; k < a.cols(); ++k) {
        if (is_zero(v(k))) continue;
        for (Index i = 0; i < a.rows(); ++i)
            if (!is_zero(a(i, k))) out(i) += a(i, k) * v(k);
    }
    return out;
}

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b);

/// K with K vec(X) = vec(X') for X of shape rows x cols.
template <class S>
Mat<S> commutation_matrix(Index rows, Index cols);

template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b);

template <class S>
std::optional<Mat<S>> invert(const Mat<S>& a);

template <class S>
S determinant(const Mat<S>& a);

template <class S>
S trace_of(const Mat<S>& a) {
    S t(0);
    for (Index i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

template <class S>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Index ambient) : basis_(0, ambient) {}

    /// Row space of `rows`.
    static Subspace span(const Mat<S>& rows);
    static Subspace span(const std::vector<Vec<S>>& vectors, Index ambient);
    static Subspace full(Index ambient);

    Index ambient_dim() const { return basis_.cols(); }
    Index dim() const { return basis_.rows(); }
    bool is_zero_space() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    /// Canonical RREF basis, one vector per row.
    const Mat<S>& basis() const { return basis_; }
    Vec<S> vector(Index i) const { return basis_.row(i).transpose(); }
    const std::vector<Index>& pivots() const { return pivots_; }
    /// Columns without a pivot; the images of e_j for these j form a basis of the quotient.
    std::vector<Index> free_columns() const;

    /// v minus its projection along the pivot columns. Zero iff v lies in the subspace.
    Vec<S> reduce(const Vec<S>& v) const;
    bool contains(const Vec<S>& v) const;
    /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
    Vec<S> coordinates(const Vec<S>& v) const;
    /// Coordinates of v + U in the quotient basis indexed by free_columns().
    Vec<S> quotient_coordinates(const Vec<S>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Mat<S> basis_;
    std::vector<Index> pivots_;
};

template <class S>
Subspace<S> kernel(const Mat<S>& m);

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& u, const Subspace<S>& w);

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& u, const Subspace<S>& w);

/// True when w is contained in u.
template <class S>
bool subspace_contains(const Subspace<S>& u, const Subspace<S>& w);

/// {y : <x, y> = 0 for all x in u} under the standard dot product.
template <class S>
Subspace<S> annihilator(const Subspace<S>& u);

/// Expresses vectors in terms of a fixed independent (not necessarily echelon) list.
template <class S>
class CoordinateSystem {
public:
    /// `rows` must have independent rows.
    explicit CoordinateSystem(const Mat<S>& rows);
    Index dim() const { return rows_.rows(); }
    const Mat<S>& rows() const { return rows_; }
    const Subspace<S>& space() const { return space_; }
    /// c with c' rows = v, or nullopt when v is outside the span.
    std::optional<Vec<S>> coordinates(const Vec<S>& v) const;

private:
    Mat<S> rows_;
    Subspace<S> space_;
    Mat<S> to_given_;  // RREF coordinates -> coordinates in rows_
};

template <class S>
S random_scalar(std::mt19937_64& rng);
template <>
Rational random_scalar<Rational>(std::mt19937_64& rng);
template <>
Zp random_scalar<Zp>(std::mt19937_64& rng);
template <>
Fp2 random_scalar<Fp2>(std::mt19937_64& rng);

template <class S>
Mat<S> random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
    Mat<S> m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = random_scalar<S>(rng);
    return m;
}

template <class S>
Vec<S> random_vector(Index n, std::mt19937_64& rng) {
    Vec<S> v(n);
    for (Index i = 0; i < n; ++i) v(i) = random_scalar<S>(rng);
    return v;
}

/// First nonzero entry scaled to 1; zero vectors are returned unchanged.
template <class S>
Vec<S> normalize_leading(const Vec<S>& v);

}  // namespace liecomp

#endif  // LIECOMP_LINALG_HPP
