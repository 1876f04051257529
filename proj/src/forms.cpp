#include "liecomp/forms.hpp"

namespace liecomp {

namespace {

template <class S>
S pair(const Mat<S>& a, const Vec<S>& x, const Vec<S>& y) {
    return (x.transpose() * a * y)(0, 0);
}

template <class S>
std::vector<Vec<S>> standard_basis(Index m) {
    std::vector<Vec<S>> out;
    for (Index i = 0; i < m; ++i) {
        Vec<S> e = Vec<S>::Zero(m);
        e(i) = S(1);
        out.push_back(e);
    }
    return out;
}

template <class S>
Mat<S> columns(const std::vector<Vec<S>>& cols, Index m) {
    Mat<S> out(m, static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Index>(i)) = cols[i];
    return out;
}

}  // namespace

template <class S>
BilForm<S> classify(const Mat<S>& gram) {
    if (gram.rows() != gram.cols()) throw FormError("Gram matrix must be square");
    if (gram.rows() < 2) throw FormError("forms need dimension at least 2");
    BilForm<S> f;
    f.gram = gram;
    const Mat<S> t = gram.transpose();
    f.symmetric = t == gram;
    bool zero_diag = true;
    for (Index i = 0; i < gram.rows(); ++i) zero_diag = zero_diag && is_zero(gram(i, i));
    f.alternating = zero_diag && Mat<S>(-t) == gram;
    f.nondegenerate = rank<S>(gram) == gram.rows();
    const Index m = gram.rows();
    const std::uint32_t ell = FieldTraits<S>::current().characteristic;
    f.even_dim = m % 2 == 0;
    f.char_divides_m = ell != 0 && m % ell == 0;
    f.char_divides_2m = ell != 0 && (2 * m) % ell == 0;
    return f;
}

template <class S>
CongruenceResult<S> symplectic_basis(const Mat<S>& gram) {
    const BilForm<S> f = classify(gram);
    if (!f.alternating) throw FormError("symplectic_basis: form is not alternating");
    if (!f.nondegenerate) throw FormError("symplectic_basis: form is degenerate");
    const Index m = gram.rows();
    std::vector<Vec<S>> rest = standard_basis<S>(m);
    std::vector<Vec<S>> us, vs;
    while (!rest.empty()) {
        const Vec<S> u = rest.front();
        std::size_t partner = 0;
        for (std::size_t k = 1; k < rest.size() && partner == 0; ++k)
            if (!is_zero(pair(gram, u, rest[k]))) partner = k;
        if (partner == 0) throw std::logic_error("symplectic_basis: no hyperbolic partner");
        const Vec<S> v = rest[partner] * inverse(pair(gram, u, rest[partner]));
        std::vector<Vec<S>> next;
        for (std::size_t k = 1; k < rest.size(); ++k) {
            if (k == partner) continue;
            const Vec<S>& w = rest[k];
            // w - f(w,v) u + f(w,u) v is orthogonal to u and v
            next.push_back(w - u * pair(gram, w, v) + v * pair(gram, w, u));
        }
        us.push_back(u);
        vs.push_back(v);
        rest = std::move(next);
    }
    std::vector<Vec<S>> cols = us;
    cols.insert(cols.end(), vs.begin(), vs.end());
    CongruenceResult<S> out;
    out.transform = columns(cols, m);
    out.normal_form = out.transform.transpose() * gram * out.transform;
    if (out.normal_form != symplectic_gram<S>(m)) throw std::logic_error("symplectic_basis: normal form check failed");
    return out;
}

template <class S>
CongruenceResult<S> diagonalize_symmetric(const Mat<S>& gram) {
    const BilForm<S> f = classify(gram);
    if (!f.symmetric) throw FormError("diagonalize_symmetric: form is not symmetric");
    const bool char2 = FieldTraits<S>::current().characteristic == 2;
    if (char2 && f.alternating && !all_zero<S>(gram))
        throw FormError("diagonalize_symmetric: alternating form in characteristic 2 has no diagonal form");
    const Index m = gram.rows();
    std::vector<Vec<S>> rest = standard_basis<S>(m);
    std::vector<Vec<S>> chosen;
    while (!rest.empty()) {
        std::optional<std::size_t> pick;
        for (std::size_t k = 0; k < rest.size() && !pick; ++k)
            if (!is_zero(pair(gram, rest[k], rest[k]))) pick = k;
        Vec<S> v;
        if (pick) {
            v = rest[*pick];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*pick));
        } else {
            std::optional<std::pair<std::size_t, std::size_t>> hyp;
            for (std::size_t a = 0; a < rest.size() && !hyp; ++a)
                for (std::size_t b = a + 1; b < rest.size() && !hyp; ++b)
                    if (!is_zero(pair(gram, rest[a], rest[b]))) hyp = std::make_pair(a, b);
            if (!hyp) break;  // the remaining part is totally isotropic: zero tail
            if (!char2) {
                // f(a+b, a+b) = 2 f(a,b) != 0
                v = rest[hyp->first] + rest[hyp->second];
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(hyp->first));
            } else {
                // Alternating remainder in characteristic 2: fold in the last diagonal vector w.
                // Every vector with a nonzero w-coefficient is anisotropic, and the complement
                // of w + a stays non-alternating.
                if (chosen.empty()) throw FormError("diagonalize_symmetric: alternating remainder in characteristic 2");
                const Vec<S> w = chosen.back();
                chosen.pop_back();
                v = w + rest[hyp->first];
                rest.push_back(w);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(hyp->first));
            }
        }
        const S d = pair(gram, v, v);
        const S dinv = inverse(d);
        for (auto& w : rest) w = w - v * (pair(gram, w, v) * dinv);
        chosen.push_back(v);
    }
    std::vector<Vec<S>> cols = chosen;
    cols.insert(cols.end(), rest.begin(), rest.end());
    CongruenceResult<S> out;
    out.transform = columns(cols, m);
    out.normal_form = out.transform.transpose() * gram * out.transform;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
            if (i != j && !is_zero(out.normal_form(i, j))) throw std::logic_error("diagonalize_symmetric: result not diagonal");
    if (rank<S>(out.transform) != m) throw std::logic_error("diagonalize_symmetric: singular transform");
    return out;
}

template <class S>
bool discriminant_is_square(const BilForm<S>& form) {
    if (!form.nondegenerate) throw FormError("discriminant_is_square: form is degenerate");
    return is_square(determinant<S>(form.gram));
}

#define LIECOMP_INSTANTIATE_FORMS(S)                                               \
    template BilForm<S> classify<S>(const Mat<S>&);                                \
    template CongruenceResult<S> symplectic_basis<S>(const Mat<S>&);               \
    template CongruenceResult<S> diagonalize_symmetric<S>(const Mat<S>&);          \
    template bool discriminant_is_square<S>(const BilForm<S>&);

LIECOMP_INSTANTIATE_FORMS(Rational)
LIECOMP_INSTANTIATE_FORMS(Zp)
LIECOMP_INSTANTIATE_FORMS(Fp2)

}  // namespace liecomp
