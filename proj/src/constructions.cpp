#include "liecomp/constructions.hpp"

#include <stdexcept>

namespace liecomp {

template <class S>
Vec<S> tensor_of(const Vec<S>& v, const Vec<S>& w) {
    const Index m = v.size();
    Vec<S> out(m * m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) out(i * m + j) = v(i) * w(j);
    return out;
}

template <class S>
TensorSquare<S> tensor_square(const Mat<S>& gram, const std::vector<Mat<S>>& elements) {
    const Index m = gram.rows();
    if (gram.cols() != m || rank<S>(gram) != m) throw std::invalid_argument("tensor_square: form is degenerate");
    const Index n = m * m;
    TensorSquare<S> out;
    const Mat<S> id = identity<S>(m);
    out.module.dim = n;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        out.module.labels.push_back("x" + std::to_string(k + 1));
        out.module.actions.push_back(kron<S>(elements[k], id) + kron<S>(id, elements[k]));
    }
    out.gamma = Mat<S>::Zero(n, n);
    out.omega = Mat<S>::Zero(1, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            Mat<S> g = Mat<S>::Zero(m, m);
            g.row(j) = gram.row(i);  // e_j e_i' A
            out.gamma.col(i * m + j) = vec<S>(g);
            out.omega(0, i * m + j) = gram(i, j);
        }
    std::vector<Vec<S>> sym, alt;
    for (Index i = 0; i < m; ++i)
        for (Index j = i; j < m; ++j) {
            Vec<S> s = Vec<S>::Zero(n);
            s(i * m + j) += S(1);
            s(j * m + i) += S(1);
            if (i == j) s(i * m + i) = S(1);
            sym.push_back(s);
            if (i == j) continue;
            Vec<S> a = Vec<S>::Zero(n);
            a(i * m + j) = S(1);
            a(j * m + i) = S(-1);
            alt.push_back(a);
        }
    out.sym = Subspace<S>::span(sym, n);
    out.alt = Subspace<S>::span(alt, n);
    const FieldSpec f = FieldTraits<S>::current();
    bool alternating = true;
    for (Index i = 0; i < m && alternating; ++i) {
        alternating = is_zero(gram(i, i));
        for (Index j = 0; j < m && alternating; ++j) alternating = gram(i, j) == -gram(j, i);
    }
    if (f.characteristic == 2 && alternating) {
        // Delta(v (x) w + w (x) v) = f(v, w): read off the i < j coefficient only,
        // since Omega itself vanishes on alternating tensors here.
        Mat<S> delta = Mat<S>::Zero(1, m * m);
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j) delta(0, i * m + j) = gram(i, j);
        out.delta_kernel = subspace_intersect(out.alt, kernel<S>(delta));
    }
    return out;
}

template <class S>
Mat<S> star_map(const Mat<S>& s) {
    if (s.rows() != 4 || s.cols() != 4) throw std::invalid_argument("star_map: expected a 4x4 matrix");
    for (Index i = 0; i < 4; ++i) {
        if (!is_zero(s(i, i))) throw std::invalid_argument("star_map: matrix is not alternating");
        for (Index j = 0; j < 4; ++j)
            if (s(i, j) != -s(j, i)) throw std::invalid_argument("star_map: matrix is not alternating");
    }
    const S a = s(0, 1), b = s(0, 2), c = s(0, 3), d = s(1, 2), e = s(1, 3), f = s(2, 3);
    Mat<S> t = Mat<S>::Zero(4, 4);
    t(0, 1) = f;
    t(0, 2) = -e;
    t(0, 3) = d;
    t(1, 2) = c;
    t(1, 3) = -b;
    t(2, 3) = a;
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < i; ++j) t(i, j) = -t(j, i);
    return t;
}

namespace {

template <class S>
std::vector<Vec<S>> symmetric_vecs(Index n) {
    std::vector<Vec<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            Mat<S> x = unit_matrix<S>(n, i, j);
            if (i != j) x += unit_matrix<S>(n, j, i);
            out.push_back(vec<S>(x));
        }
    return out;
}

template <class S>
std::vector<Vec<S>> alternating_vecs(Index n) {
    std::vector<Vec<S>> out;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) out.push_back(vec<S>(Mat<S>(unit_matrix<S>(n, i, j) - unit_matrix<S>(n, j, i))));
    return out;
}

}  // namespace

template <class S>
bool block_duality_check(Index r, Index n) {
    if (r < 1 || n < 1) throw std::invalid_argument("block_duality_check: sizes must be positive");
    const Mat<S> ir = identity<S>(r), in = identity<S>(n);
    LieModule<S> z{r * n, {}, {}}, a{n * r, {}, {}};
    auto add = [&](const Mat<S>& x, const Mat<S>& y) {  // generator (x, y) of gl(r) + gl(n)
        z.actions.push_back(Mat<S>(kron<S>(in, x) - kron<S>(Mat<S>(y.transpose()), ir)));
        a.actions.push_back(Mat<S>(kron<S>(ir, y) - kron<S>(Mat<S>(x.transpose()), in)));
    };
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j) add(unit_matrix<S>(r, i, j), Mat<S>::Zero(n, n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) add(Mat<S>::Zero(r, r), unit_matrix<S>(n, i, j));
    z.labels = a.labels = std::vector<std::string>(z.actions.size());
    const Mat<S> phi = commutation_matrix<S>(n, r);  // vec(t) -> vec(t'), the functional s -> tr(ts)
    if (!is_homomorphism(a, dual_module(z), phi) || rank<S>(phi) != r * n) return false;

    if (r != n || FieldTraits<S>::current().characteristic == 2) return true;
    const Subspace<S> sym = Subspace<S>::span(symmetric_vecs<S>(n), n * n);
    const Subspace<S> alt = Subspace<S>::span(alternating_vecs<S>(n), n * n);
    auto image = [&](const Subspace<S>& u) {
        return u.dim() == 0 ? Subspace<S>(n * n) : Subspace<S>::span(Mat<S>(u.basis() * phi.transpose()));
    };
    return image(sym) == annihilator(alt) && image(alt) == annihilator(sym);
}

template <class S>
BlockModules<S> block_modules(Index n, const std::vector<Mat<S>>& elements) {
    BlockModules<S> out;
    const Mat<S> id = identity<S>(n);
    out.z.dim = out.a.dim = n * n;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        const Mat<S>& x = elements[k];
        const Mat<S> xt = x.transpose();
        out.z.labels.push_back("x" + std::to_string(k + 1));
        out.z.actions.push_back(Mat<S>(kron<S>(id, x) + kron<S>(x, id)));  // s -> xs + sx'
        out.a.actions.push_back(Mat<S>(-kron<S>(id, xt) - kron<S>(xt, id)));  // t -> -x't - tx
    }
    out.a.labels = out.z.labels;
    out.s_space = out.b_space = Subspace<S>::span(symmetric_vecs<S>(n), n * n);
    out.t_space = out.c_space = n > 1 ? Subspace<S>::span(alternating_vecs<S>(n), n * n) : Subspace<S>(n * n);
    out.s = restrict_module(out.z, out.s_space);
    out.t = restrict_module(out.z, out.t_space);
    out.b = restrict_module(out.a, out.b_space);
    out.c = restrict_module(out.a, out.c_space);
    return out;
}

template <class S>
LieModule<S> heisenberg_poly_module(Index n, std::uint32_t l, const S& alpha) {
    if (is_zero(alpha)) throw std::invalid_argument("heisenberg_poly_module: alpha must be nonzero");
    if (FieldTraits<S>::current().characteristic != l)
        throw std::invalid_argument("heisenberg_poly_module: field characteristic must equal l");
    Index dim = 1;
    for (Index i = 0; i < n; ++i) dim *= static_cast<Index>(l);
    const Index ll = static_cast<Index>(l);
    LieModule<S> out;
    out.dim = dim;
    std::vector<Mat<S>> us, vs;
    Index stride = 1;
    for (Index i = 0; i < n; ++i, stride *= ll) {
        Mat<S> u = Mat<S>::Zero(dim, dim), v = Mat<S>::Zero(dim, dim);
        for (Index idx = 0; idx < dim; ++idx) {
            const Index e = (idx / stride) % ll;
            if (e > 0) u(idx - stride, idx) = S(static_cast<long>(e));
            if (e + 1 < ll) v(idx + stride, idx) = alpha;
        }
        us.push_back(u);
        vs.push_back(v);
    }
    for (Index i = 0; i < n; ++i) {
        out.labels.push_back("u" + std::to_string(i + 1));
        out.actions.push_back(us[static_cast<std::size_t>(i)]);
    }
    for (Index i = 0; i < n; ++i) {
        out.labels.push_back("v" + std::to_string(i + 1));
        out.actions.push_back(vs[static_cast<std::size_t>(i)]);
    }
    out.labels.push_back("z");
    out.actions.push_back(identity<S>(dim) * alpha);
    return out;
}

#define LIECOMP_INSTANTIATE_CONSTRUCTIONS(S)                                                     \
    template Vec<S> tensor_of<S>(const Vec<S>&, const Vec<S>&);                                  \
    template TensorSquare<S> tensor_square<S>(const Mat<S>&, const std::vector<Mat<S>>&);        \
    template Mat<S> star_map<S>(const Mat<S>&);                                                  \
    template bool block_duality_check<S>(Index, Index);                                          \
    template BlockModules<S> block_modules<S>(Index, const std::vector<Mat<S>>&);                \
    template LieModule<S> heisenberg_poly_module<S>(Index, std::uint32_t, const S&);

LIECOMP_INSTANTIATE_CONSTRUCTIONS(Rational)
LIECOMP_INSTANTIATE_CONSTRUCTIONS(Zp)
LIECOMP_INSTANTIATE_CONSTRUCTIONS(Fp2)

}  // namespace liecomp
