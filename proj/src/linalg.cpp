#include "liecomp/linalg.hpp"

#include <stdexcept>

namespace liecomp {

namespace {

template <class S>
using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// In-place RREF; returns pivot columns. Rows past the rank end up zero.
template <class S>
std::vector<Index> reduce_rows(RowMat<S>& w, Index pivot_limit) {
    std::vector<Index> pivots;
    const Index rows = w.rows();
    const Index cols = w.cols();
    Index r = 0;
    for (Index c = 0; c < pivot_limit && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(w(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) w.row(p).swap(w.row(r));
        const Index len = cols - c;
        if (w(r, c) != S(1)) {
            const S inv = inverse(w(r, c));
            for (Index k = c; k < cols; ++k) w(r, k) *= inv;
        }
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(w(i, c))) continue;
            const S f = w(i, c);
            auto target = w.row(i).tail(len);
            auto source = w.row(r).tail(len);
            for (Index k = 0; k < len; ++k)
                if (!is_zero(source(k))) target(k) -= f * source(k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

template <class S>
Rref<S> rref(const Mat<S>& m) {
    RowMat<S> w = m;
    Rref<S> out;
    out.pivots = reduce_rows(w, w.cols());
    out.rank = static_cast<Index>(out.pivots.size());
    out.matrix = w;
    return out;
}

template <class S>
Index rank(const Mat<S>& m) {
    RowMat<S> w = m;
    return static_cast<Index>(reduce_rows(w, w.cols()).size());
}

template <class S>
Subspace<S> kernel(const Mat<S>& m) {
    const Index n = m.cols();
    RowMat<S> w = m;
    const auto pivots = reduce_rows(w, n);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free;
    for (Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Mat<S> k = Mat<S>::Zero(static_cast<Index>(free.size()), n);
    for (std::size_t t = 0; t < free.size(); ++t) {
        const Index f = free[t];
        const auto row = static_cast<Index>(t);
        k(row, f) = S(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) k(row, pivots[i]) = -w(static_cast<Index>(i), f);
    }
    return Subspace<S>::span(k);
}

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out = Mat<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i) {
            if (is_zero(a(i, j))) continue;
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
        }
    return out;
}

template <class S>
Mat<S> commutation_matrix(Index rows, Index cols) {
    // X(i,j) sits at j*rows+i in vec(X) and at i*cols+j in vec(X').
    Mat<S> k = Mat<S>::Zero(rows * cols, rows * cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) k(i * cols + j, j * rows + i) = S(1);
    return k;
}

template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    const Index n = a.cols();
    RowMat<S> w(a.rows(), n + 1);
    w.leftCols(n) = a;
    w.col(n) = b;
    const auto pivots = reduce_rows(w, n);
    for (Index i = static_cast<Index>(pivots.size()); i < w.rows(); ++i)
        if (!is_zero(w(i, n))) return std::nullopt;
    Vec<S> x = Vec<S>::Zero(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = w(static_cast<Index>(i), n);
    return x;
}

template <class S>
std::optional<Mat<S>> invert(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: non-square matrix");
    const Index n = a.rows();
    RowMat<S> w(n, 2 * n);
    w.leftCols(n) = a;
    w.rightCols(n) = identity<S>(n);
    const auto pivots = reduce_rows(w, n);
    if (static_cast<Index>(pivots.size()) != n) return std::nullopt;
    return Mat<S>(w.rightCols(n));
}

template <class S>
S determinant(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
    RowMat<S> w = a;
    const Index n = w.rows();
    S det(1);
    for (Index c = 0; c < n; ++c) {
        Index p = c;
        while (p < n && is_zero(w(p, c))) ++p;
        if (p == n) return S(0);
        if (p != c) {
            w.row(p).swap(w.row(c));
            det = -det;
        }
        det *= w(c, c);
        const S inv = inverse(w(c, c));
        for (Index i = c + 1; i < n; ++i) {
            if (is_zero(w(i, c))) continue;
            const S f = w(i, c) * inv;
            for (Index k = c; k < n; ++k) w(i, k) -= f * w(c, k);
        }
    }
    return det;
}

// --- Subspace --------------------------------------------------------------

template <class S>
Subspace<S> Subspace<S>::span(const Mat<S>& rows) {
    RowMat<S> w = rows;
    Subspace out;
    out.pivots_ = reduce_rows(w, w.cols());
    out.basis_ = w.topRows(static_cast<Index>(out.pivots_.size()));
    return out;
}

template <class S>
Subspace<S> Subspace<S>::span(const std::vector<Vec<S>>& vectors, Index ambient) {
    Mat<S> rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw std::invalid_argument("span: ambient mismatch");
        rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(rows);
}

template <class S>
Subspace<S> Subspace<S>::full(Index ambient) {
    Subspace out;
    out.basis_ = identity<S>(ambient);
    for (Index i = 0; i < ambient; ++i) out.pivots_.push_back(i);
    return out;
}

template <class S>
std::vector<Index> Subspace<S>::free_columns() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index c = 0; c < ambient_dim(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

template <class S>
Vec<S> Subspace<S>::reduce(const Vec<S>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace: ambient mismatch");
    Vec<S> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const S c = r(pivots_[i]);
        if (is_zero(c)) continue;
        const auto row = basis_.row(static_cast<Index>(i));
        for (Index k = pivots_[i]; k < r.size(); ++k)
            if (!is_zero(row(k))) r(k) -= c * row(k);
    }
    return r;
}

template <class S>
bool Subspace<S>::contains(const Vec<S>& v) const {
    return all_zero<S>(reduce(v));
}

template <class S>
Vec<S> Subspace<S>::coordinates(const Vec<S>& v) const {
    Vec<S> c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c(static_cast<Index>(i)) = v(pivots_[i]);
    return c;
}

template <class S>
Vec<S> Subspace<S>::quotient_coordinates(const Vec<S>& v) const {
    const Vec<S> r = reduce(v);
    const auto free = free_columns();
    Vec<S> c(static_cast<Index>(free.size()));
    for (std::size_t i = 0; i < free.size(); ++i) c(static_cast<Index>(i)) = r(free[i]);
    return c;
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& u, const Subspace<S>& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    Mat<S> stacked(u.dim() + w.dim(), u.ambient_dim());
    stacked << u.basis(), w.basis();
    return Subspace<S>::span(stacked);
}

template <class S>
Subspace<S> annihilator(const Subspace<S>& u) {
    if (u.is_zero_space()) return Subspace<S>::full(u.ambient_dim());
    return kernel<S>(u.basis());
}

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& u, const Subspace<S>& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
    return annihilator(subspace_sum(annihilator(u), annihilator(w)));
}

template <class S>
bool subspace_contains(const Subspace<S>& u, const Subspace<S>& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_contains: ambient mismatch");
    for (Index i = 0; i < w.dim(); ++i)
        if (!u.contains(w.vector(i))) return false;
    return true;
}

template <class S>
CoordinateSystem<S>::CoordinateSystem(const Mat<S>& rows) : rows_(rows) {
    const Index k = rows.rows();
    const Index n = rows.cols();
    RowMat<S> w(k, n + k);
    w.leftCols(n) = rows;
    w.rightCols(k) = identity<S>(k);
    const auto pivots = reduce_rows(w, n);
    if (static_cast<Index>(pivots.size()) != k) throw std::invalid_argument("CoordinateSystem: dependent rows");
    space_ = Subspace<S>::span(rows);
    // RREF row i equals sum_j E(i,j) rows_(j).
    to_given_ = w.rightCols(k);
}

template <class S>
std::optional<Vec<S>> CoordinateSystem<S>::coordinates(const Vec<S>& v) const {
    if (!space_.contains(v)) return std::nullopt;
    const Vec<S> d = space_.coordinates(v);
    return Vec<S>(to_given_.transpose() * d);
}

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

template <>
Zp random_scalar<Zp>(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, Zp::modulus() - 1);
    return Zp::from_residue(d(rng));
}

template <>
Fp2 random_scalar<Fp2>(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, Zp::modulus() - 1);
    const std::uint32_t a = d(rng);
    return Fp2::from_residues(a, d(rng));
}

template <class S>
Vec<S> normalize_leading(const Vec<S>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) {
            if (v(i) == S(1)) return v;
            const S inv = inverse(v(i));
            Vec<S> out = v;
            for (Index k = i; k < v.size(); ++k) out(k) *= inv;
            return out;
        }
    return v;
}

#define LIECOMP_INSTANTIATE_LINALG(S)                                                     \
    template Rref<S> rref<S>(const Mat<S>&);                                              \
    template Index rank<S>(const Mat<S>&);                                                \
    template Subspace<S> kernel<S>(const Mat<S>&);                                        \
    template Mat<S> kron<S>(const Mat<S>&, const Mat<S>&);                                \
    template Mat<S> commutation_matrix<S>(Index, Index);                                  \
    template std::optional<Vec<S>> solve<S>(const Mat<S>&, const Vec<S>&);                \
    template std::optional<Mat<S>> invert<S>(const Mat<S>&);                              \
    template S determinant<S>(const Mat<S>&);                                             \
    template class Subspace<S>;                                                           \
    template Subspace<S> subspace_sum<S>(const Subspace<S>&, const Subspace<S>&);         \
    template Subspace<S> subspace_intersect<S>(const Subspace<S>&, const Subspace<S>&);   \
    template bool subspace_contains<S>(const Subspace<S>&, const Subspace<S>&);           \
    template Subspace<S> annihilator<S>(const Subspace<S>&);                              \
    template class CoordinateSystem<S>;                                                   \
    template Vec<S> normalize_leading<S>(const Vec<S>&);

LIECOMP_INSTANTIATE_LINALG(Rational)
LIECOMP_INSTANTIATE_LINALG(Zp)
LIECOMP_INSTANTIATE_LINALG(Fp2)

}  // namespace liecomp
