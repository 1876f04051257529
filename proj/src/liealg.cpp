#include "liecomp/liealg.hpp"

#include <stdexcept>

#include "liecomp/repmod.hpp"
#include "internal/echelon.hpp"

namespace liecomp {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::budget_exceeded: return "budget-exceeded";
        case Verdict::refused: return "refused";
    }
    return "?";
}


template <class S>
MatLieAlg<S> matrix_span(Index m, const std::vector<Mat<S>>& mats, std::string label) {
    std::vector<Vec<S>> vs;
    for (const auto& x : mats) {
        if (x.rows() != m || x.cols() != m) throw std::invalid_argument("matrix_span: shape mismatch");
        vs.push_back(vec<S>(x));
    }
    return MatLieAlg<S>{m, Subspace<S>::span(vs, m * m), std::move(label)};
}

template <class S>
MatLieAlg<S> gl_algebra(Index m) {
    return MatLieAlg<S>{m, Subspace<S>::full(m * m), "gl(" + std::to_string(m) + ")"};
}

template <class S>
MatLieAlg<S> sl_algebra(Index m) {
    Mat<S> tr(1, m * m);
    tr.setZero();
    for (Index i = 0; i < m; ++i) tr(0, i * m + i) = S(1);
    return MatLieAlg<S>{m, kernel<S>(tr), "sl(" + std::to_string(m) + ")"};
}

template <class S>
MatLieAlg<S> scalar_algebra(Index m) {
    return matrix_span<S>(m, {identity<S>(m)}, "s");
}

template <class S>
MatLieAlg<S> alternating_matrices(Index m) {
    std::vector<Mat<S>> mats;
    for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j) mats.push_back(unit_matrix<S>(m, i, j) - unit_matrix<S>(m, j, i));
    auto out = matrix_span<S>(m, mats, "Alt(" + std::to_string(m) + ")");
    if (mats.empty()) out.space = Subspace<S>(m * m);
    return out;
}

template <class S>
MatLieAlg<S> symmetric_matrices(Index m) {
    std::vector<Mat<S>> mats;
    for (Index i = 0; i < m; ++i)
        for (Index j = i; j < m; ++j)
            mats.push_back(i == j ? unit_matrix<S>(m, i, i) : Mat<S>(unit_matrix<S>(m, i, j) + unit_matrix<S>(m, j, i)));
    return matrix_span<S>(m, mats, "Sym(" + std::to_string(m) + ")");
}

namespace {

// vec(X'A + sign * AX) as a matrix acting on vec(X).
template <class S>
Mat<S> adjoint_operator(const Mat<S>& a, const S& sign) {
    if (a.rows() != a.cols()) throw std::invalid_argument("form matrix must be square");
    const Index m = a.rows();
    const Mat<S> id = identity<S>(m);
    return Mat<S>(sparse_product<S>(kron<S>(a.transpose(), id), commutation_matrix<S>(m, m))) + kron<S>(id, a) * sign;
}

}  // namespace

template <class S>
MatLieAlg<S> skew_adjoint_algebra(const Mat<S>& a) {
    MatLieAlg<S> l{a.rows(), kernel<S>(adjoint_operator<S>(a, S(1))), "L(A)"};
    if (!is_bracket_closed(l)) throw std::logic_error("skew_adjoint_algebra: result not closed");
    return l;
}

template <class S>
MatLieAlg<S> self_adjoint_module(const Mat<S>& a) {
    return MatLieAlg<S>{a.rows(), kernel<S>(adjoint_operator<S>(a, S(-1))), "M(A)"};
}

template <class S>
MatLieAlg<S> bracket_span(const MatLieAlg<S>& u, const MatLieAlg<S>& w) {
    const Index m = u.m;
    detail::EchelonBuilder<S> b(m * m);
    const auto ub = u.basis();
    const auto wb = w.basis();
    const bool same = u.space == w.space;
    for (std::size_t i = 0; i < ub.size(); ++i)
        for (std::size_t j = same ? i + 1 : 0; j < wb.size(); ++j) b.add(vec<S>(bracket<S>(ub[i], wb[j])));
    return MatLieAlg<S>{m, b.space(), {}};
}

template <class S>
MatLieAlg<S> derived(const MatLieAlg<S>& l) {
    auto d = bracket_span(l, l);
    d.label = l.label.empty() ? std::string{} : "[" + l.label + "," + l.label + "]";
    return d;
}

template <class S>
std::vector<MatLieAlg<S>> derived_series(const MatLieAlg<S>& l) {
    std::vector<MatLieAlg<S>> out{l};
    while (out.back().dim() > 0) {
        auto next = derived(out.back());
        if (next.space == out.back().space) break;
        out.push_back(std::move(next));
    }
    return out;
}

template <class S>
bool is_bracket_closed(const MatLieAlg<S>& l) {
    const auto b = l.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!l.space.contains(vec<S>(bracket<S>(b[i], b[j])))) return false;
    return true;
}

template <class S>
bool is_ideal(const MatLieAlg<S>& ideal, const MatLieAlg<S>& l) {
    if (!subspace_contains(l.space, ideal.space)) return false;
    const auto ib = ideal.basis();
    for (const auto& x : l.basis())
        for (const auto& y : ib)
            if (!ideal.space.contains(vec<S>(bracket<S>(x, y)))) return false;
    return true;
}

template <class S>
Mat<S> trace_form_gram(const std::vector<Mat<S>>& basis) {
    const auto d = static_cast<Index>(basis.size());
    Mat<S> g(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = i; j < d; ++j) {
            const auto& x = basis[static_cast<std::size_t>(i)];
            const auto& y = basis[static_cast<std::size_t>(j)];
            // tr(xy) = sum x_ab y_ba
            S t(0);
            for (Index a = 0; a < x.rows(); ++a)
                for (Index c = 0; c < x.cols(); ++c)
                    if (!is_zero(x(a, c)) && !is_zero(y(c, a))) t += x(a, c) * y(c, a);
            g(i, j) = t;
            g(j, i) = t;
        }
    return g;
}

template <class S>
Subspace<S> trace_orthogonal_complement(const Subspace<S>& u, const Subspace<S>& within, Index m) {
    if (within.dim() == 0) return within;
    // tr(XU) = vec(X) . vec(U')
    Mat<S> c(u.dim(), m * m);
    for (Index i = 0; i < u.dim(); ++i) {
        const Mat<S> ui = unvec<S>(u.vector(i), m, m);
        c.row(i) = vec<S>(Mat<S>(ui.transpose())).transpose();
    }
    const Mat<S> bt = within.basis().transpose();
    const Subspace<S> coeffs = kernel<S>(Mat<S>(c * bt));
    if (coeffs.dim() == 0) return Subspace<S>(m * m);
    return Subspace<S>::span(Mat<S>(coeffs.basis() * within.basis()));
}

template <class S>
Mat<S> adjoint_star(const Mat<S>& x, const Mat<S>& a) {
    const auto inv = invert<S>(a);
    if (!inv) throw std::invalid_argument("adjoint_star: singular form");
    return *inv * x.transpose() * a;
}

template <class S>
std::vector<Mat<S>> lie_generators(const MatLieAlg<S>& l) {
    const Index n = l.m * l.m;
    std::vector<Mat<S>> gens;
    detail::EchelonBuilder<S> span(n);
    std::vector<Mat<S>> elems;  // elements of span, as matrices
    for (Index i = 0; i < l.dim() && span.dim() < l.dim(); ++i) {
        const Mat<S> b = l.element(i);
        if (!span.add(vec<S>(b))) continue;
        gens.push_back(b);
        elems.push_back(b);
        // close the span under ad of every generator
        std::vector<std::size_t> seen(gens.size(), 0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                for (; seen[g] < elems.size(); ++seen[g]) {
                    Mat<S> c = bracket<S>(gens[g], elems[seen[g]]);
                    if (span.add(vec<S>(c))) {
                        elems.push_back(std::move(c));
                        grew = true;
                    }
                }
            }
        }
    }
    return gens;
}

template <class S>
LieStructure<S> structure_constants(const std::vector<Mat<S>>& basis) {
    LieStructure<S> out;
    if (basis.empty()) return out;
    const Index m = basis.front().rows();
    const auto d = static_cast<Index>(basis.size());
    Mat<S> rows(d, m * m);
    for (Index i = 0; i < d; ++i) rows.row(i) = vec<S>(basis[static_cast<std::size_t>(i)]).transpose();
    const CoordinateSystem<S> cs(rows);
    for (Index i = 0; i < d; ++i) {
        Mat<S> ad(d, d);
        for (Index j = 0; j < d; ++j) {
            const auto c = cs.coordinates(vec<S>(bracket<S>(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)])));
            if (!c) throw std::invalid_argument("structure_constants: basis does not span a subalgebra");
            ad.col(j) = *c;
        }
        out.ad.push_back(ad);
        out.names.push_back("e" + std::to_string(i + 1));
    }
    return out;
}

template <class S>
LieStructure<S> heisenberg(Index n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n must be positive");
    const Index d = 2 * n + 1;
    LieStructure<S> h;
    for (Index i = 0; i < n; ++i) h.names.push_back("u" + std::to_string(i + 1));
    for (Index i = 0; i < n; ++i) h.names.push_back("v" + std::to_string(i + 1));
    h.names.push_back("z");
    h.ad.assign(static_cast<std::size_t>(d), Mat<S>::Zero(d, d));
    for (Index i = 0; i < n; ++i) {
        h.ad[static_cast<std::size_t>(i)](2 * n, n + i) = S(1);
        h.ad[static_cast<std::size_t>(n + i)](2 * n, i) = S(-1);
    }
    return h;
}

template <class S>
Subspace<S> center(const LieStructure<S>& l) {
    const Index d = l.dim();
    if (d == 0) return Subspace<S>(0);
    // x central iff sum_i x_i ad_i(:, j) = 0 for every j
    Mat<S> c(d * d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) c.block(j * d, i, d, 1) = l.ad[static_cast<std::size_t>(i)].col(j);
    return kernel<S>(c);
}

template <class S>
QuotientAlgebra<S> quotient_algebra(const MatLieAlg<S>& l, const MatLieAlg<S>& ideal,
                                    const std::vector<Mat<S>>& representatives) {
    if (!is_ideal(ideal, l)) throw std::invalid_argument("quotient_algebra: not an ideal");
    const Index n = l.m * l.m;
    detail::EchelonBuilder<S> span(n);
    for (Index i = 0; i < ideal.dim(); ++i) span.add(ideal.space.vector(i));
    QuotientAlgebra<S> out;
    for (const auto& r : representatives) {
        if (!l.contains(r)) throw std::invalid_argument("quotient_algebra: representative outside L");
        if (!span.add(vec<S>(r))) throw std::invalid_argument("quotient_algebra: dependent representatives");
        out.representatives.push_back(r);
    }
    for (Index i = 0; i < l.dim() && span.dim() < l.dim(); ++i) {
        const Mat<S> b = l.element(i);
        if (span.add(vec<S>(b))) out.representatives.push_back(b);
    }
    const auto k = static_cast<Index>(out.representatives.size());
    Mat<S> rows(k + ideal.dim(), n);
    for (Index i = 0; i < k; ++i) rows.row(i) = vec<S>(out.representatives[static_cast<std::size_t>(i)]).transpose();
    rows.bottomRows(ideal.dim()) = ideal.space.basis();
    const CoordinateSystem<S> cs(rows);
    for (Index i = 0; i < k; ++i) {
        Mat<S> ad(k, k);
        for (Index j = 0; j < k; ++j) {
            const auto c = cs.coordinates(vec<S>(bracket<S>(out.representatives[static_cast<std::size_t>(i)],
                                                              out.representatives[static_cast<std::size_t>(j)])));
            if (!c) throw std::logic_error("quotient_algebra: L not closed");
            ad.col(j) = c->head(k);
        }
        out.structure.ad.push_back(ad);
        out.structure.names.push_back("r" + std::to_string(i + 1));
    }
    return out;
}

template <class S>
bool lie_isomorphic_by_structure(const LieStructure<S>& q, const LieStructure<S>& h, const Mat<S>& map) {
    if (q.dim() != h.dim() || map.rows() != h.dim() || map.cols() != q.dim()) return false;
    if (rank<S>(map) != q.dim()) return false;
    for (Index i = 0; i < q.dim(); ++i)
        for (Index j = 0; j < q.dim(); ++j) {
            const Vec<S> lhs = map * q.ad[static_cast<std::size_t>(i)].col(j);
            const Vec<S> rhs = h.bracket(map.col(i), map.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

template <class S>
Certificate is_simple(const LieStructure<S>& l, std::uint64_t budget, std::uint64_t avoid) {
    if (l.dim() <= 1) return {Verdict::no, "dimension"};
    const LieModule<S> ad = adjoint_module(l);
    Irreducibility<S> r;
    if constexpr (std::is_same_v<S, Rational>) {
        r = certify_irreducible_mod_p(ad, avoid, budget);
    } else {
        (void)avoid;
        r = certify_irreducible(ad, budget);
    }
    return {r.verdict, r.method};
}

template <class S>
Certificate is_simple(const MatLieAlg<S>& l, std::uint64_t budget) {
    if (l.dim() <= 1) return {Verdict::no, "dimension"};
    const auto gens = lie_generators(l);
    const LieModule<S> ad = adjoint_module(gens, l.space, l.m);
    Irreducibility<S> r;
    if constexpr (std::is_same_v<S, Rational>) {
        r = certify_irreducible_mod_p(ad, 2 * static_cast<std::uint64_t>(l.m), budget);
    } else {
        r = certify_irreducible(ad, budget);
    }
    return {r.verdict, r.method};
}

#define LIECOMP_INSTANTIATE_LIEALG(S)                                                                          \
    template MatLieAlg<S> matrix_span<S>(Index, const std::vector<Mat<S>>&, std::string);                      \
    template MatLieAlg<S> gl_algebra<S>(Index);                                                                \
    template MatLieAlg<S> sl_algebra<S>(Index);                                                                \
    template MatLieAlg<S> scalar_algebra<S>(Index);                                                            \
    template MatLieAlg<S> alternating_matrices<S>(Index);                                                      \
    template MatLieAlg<S> symmetric_matrices<S>(Index);                                                        \
    template MatLieAlg<S> skew_adjoint_algebra<S>(const Mat<S>&);                                              \
    template MatLieAlg<S> self_adjoint_module<S>(const Mat<S>&);                                               \
    template MatLieAlg<S> bracket_span<S>(const MatLieAlg<S>&, const MatLieAlg<S>&);                           \
    template MatLieAlg<S> derived<S>(const MatLieAlg<S>&);                                                     \
    template std::vector<MatLieAlg<S>> derived_series<S>(const MatLieAlg<S>&);                                 \
    template bool is_bracket_closed<S>(const MatLieAlg<S>&);                                                   \
    template bool is_ideal<S>(const MatLieAlg<S>&, const MatLieAlg<S>&);                                       \
    template Mat<S> trace_form_gram<S>(const std::vector<Mat<S>>&);                                            \
    template Subspace<S> trace_orthogonal_complement<S>(const Subspace<S>&, const Subspace<S>&, Index);        \
    template Mat<S> adjoint_star<S>(const Mat<S>&, const Mat<S>&);                                             \
    template std::vector<Mat<S>> lie_generators<S>(const MatLieAlg<S>&);                                       \
    template LieStructure<S> structure_constants<S>(const std::vector<Mat<S>>&);                               \
    template LieStructure<S> heisenberg<S>(Index);                                                             \
    template Subspace<S> center<S>(const LieStructure<S>&);                                                    \
    template QuotientAlgebra<S> quotient_algebra<S>(const MatLieAlg<S>&, const MatLieAlg<S>&,                  \
                                                    const std::vector<Mat<S>>&);                               \
    template bool lie_isomorphic_by_structure<S>(const LieStructure<S>&, const LieStructure<S>&, const Mat<S>&); \
    template Certificate is_simple<S>(const LieStructure<S>&, std::uint64_t, std::uint64_t);                   \
    template Certificate is_simple<S>(const MatLieAlg<S>&, std::uint64_t);

LIECOMP_INSTANTIATE_LIEALG(Rational)
LIECOMP_INSTANTIATE_LIEALG(Zp)
LIECOMP_INSTANTIATE_LIEALG(Fp2)

}  // namespace liecomp
