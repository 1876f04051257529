#ifndef LIECOMP_VERIFY_RUNNERS_HPP
#define LIECOMP_VERIFY_RUNNERS_HPP

#include "verify/common.hpp"

namespace liecomp::vdetail {

enum class FormNeed { alternating, symmetric };

/// The Gram matrix selected by the case (defaults: J, or the identity).
template <class S>
Mat<S> resolve_gram(const CaseSpec& spec, FormNeed need) {
    FormKind kind = spec.form;
    if (kind == FormKind::automatic) kind = need == FormNeed::alternating ? FormKind::alternating : FormKind::diagonal;
    Mat<S> a;
    switch (kind) {
        case FormKind::alternating:
            if (spec.m < 2 || spec.m % 2 != 0)
                throw HypothesisError("an alternating form needs even m >= 2 (got m=" + std::to_string(spec.m) + ")");
            a = symplectic_gram<S>(spec.m);
            break;
        case FormKind::diagonal: {
            std::vector<S> d;
            if (spec.diagonal.empty()) d.assign(static_cast<std::size_t>(spec.m), S(1));
            else d = parse_diagonal<S>(spec.diagonal);
            if (static_cast<Index>(d.size()) != spec.m)
                throw HypothesisError("diag form has " + std::to_string(d.size()) + " entries but m=" +
                                      std::to_string(spec.m));
            a = diagonal_gram<S>(d);
            break;
        }
        case FormKind::custom:
            if (!spec.gram) throw HypothesisError("custom form without a Gram matrix");
            a = materialize<S>(*spec.gram);
            if (a.rows() != a.cols()) throw HypothesisError("Gram matrix is not square");
            if (spec.m != 0 && a.rows() != spec.m)
                throw HypothesisError("Gram matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                      " but m=" + std::to_string(spec.m));
            break;
        case FormKind::automatic: break;
    }
    if (a.rows() < 2) throw HypothesisError("m must be at least 2");
    const BilForm<S> f = classify(a);
    if (!f.nondegenerate) throw HypothesisError("form is degenerate");
    if (need == FormNeed::alternating && !f.alternating) throw HypothesisError("form is not alternating");
    if (need == FormNeed::symmetric && !f.symmetric) throw HypothesisError("form is not symmetric");
    return a;
}

template <class S>
Report run_thm_1_1(const CaseSpec& spec);
template <class S>
Report run_thm_1_2(const CaseSpec& spec);
template <class S>
Report run_thm_1_3(const CaseSpec& spec);
template <class S>
Report run_thm_1_4(const CaseSpec& spec);
template <class S>
Report run_sl_series(const CaseSpec& spec);
template <class S>
Report run_sp_so_embedding(const CaseSpec& spec);
template <class S>
Report run_sl4_so6(const CaseSpec& spec);
template <class S>
Report run_block_irreducibles(const CaseSpec& spec);
template <class S>
Report run_heisenberg(const CaseSpec& spec);

}  // namespace liecomp::vdetail

#endif
