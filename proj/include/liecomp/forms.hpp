// Bilinear forms given by Gram matrices: classification and congruence
// normal forms. f(x, y) = x' A y.
#ifndef LIECOMP_FORMS_HPP
#define LIECOMP_FORMS_HPP

#include <stdexcept>
#include <vector>

#include "liecomp/linalg.hpp"

namespace liecomp {

template <class S>
struct BilForm {
    Mat<S> gram;
    bool symmetric = false;
    bool alternating = false;
    bool nondegenerate = false;
    bool even_dim = false;
    bool char_divides_m = false;
    bool char_divides_2m = false;

    Index dim() const { return gram.rows(); }
};

template <class S>
struct CongruenceResult {
    Mat<S> transform;    // S
    Mat<S> normal_form;  // S' A S
};

class FormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws FormError for non-square input or m < 2.
template <class S>
BilForm<S> classify(const Mat<S>& gram);

/// Transform to exactly J = [[0, I_n], [-I_n, 0]].
template <class S>
CongruenceResult<S> symplectic_basis(const Mat<S>& gram);

/// Diagonal normal form; degenerate forms get a zero tail. In characteristic 2
/// an alternating input (or alternating nonzero part) is rejected.
template <class S>
CongruenceResult<S> diagonalize_symmetric(const Mat<S>& gram);

template <class S>
bool discriminant_is_square(const BilForm<S>& form);

template <class S>
Mat<S> symplectic_gram(Index m) {
    if (m % 2 != 0) throw FormError("alternating Gram matrix needs even dimension");
    const Index n = m / 2;
    Mat<S> j = Mat<S>::Zero(m, m);
    for (Index i = 0; i < n; ++i) {
        j(i, n + i) = S(1);
        j(n + i, i) = S(-1);
    }
    return j;
}

template <class S>
Mat<S> diagonal_gram(const std::vector<S>& d) {
    const auto m = static_cast<Index>(d.size());
    Mat<S> a = Mat<S>::Zero(m, m);
    for (Index i = 0; i < m; ++i) a(i, i) = d[static_cast<std::size_t>(i)];
    return a;
}

}  // namespace liecomp

#endif  // LIECOMP_FORMS_HPP
